"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q[x]/Phi_N(x), as an integer numerator vector over one positive common
denominator.  The representation is canonical (gcd-reduced), so equality
and hashing are syntactic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence

from mpmath.ctx_iv import MPIntervalContext

from .errors import DivisionByZero, PrecisionExhausted

MIN_PRECISION_BITS = 64
MAX_PRECISION_BITS = 4096


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def units_mod(n: int) -> list[int]:
    """Ascending representatives of (Z/n)^x (``[1]`` for n == 1)."""
    if n == 1:
        return [1]
    return [h for h in range(1, n) if gcd(h, n) == 1]


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, low degree first; den must be monic
    rem = list(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [0], rem
    quot = [0] * (len(rem) - dd)
    for shift in range(len(rem) - 1 - dd, -1, -1):
        c = rem[shift + dd]
        quot[shift] = c
        if c:
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    rem = rem[:dd] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    return tuple(poly)


class _FieldData:
    """Per-order tables: x^k mod Phi_N for 0 <= k < max(N, 2*phi - 1)."""

    __slots__ = ("order", "degree", "powers", "units")

    def __init__(self, order: int):
        self.order = order
        phi_poly = cyclotomic_polynomial(order)
        self.degree = deg = len(phi_poly) - 1
        powers = []
        cur = [1] + [0] * (deg - 1)
        for _ in range(max(order, 2 * deg - 1)):
            powers.append(tuple(cur))
            # multiply by x, then reduce the overflow coefficient
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(deg):
                    cur[i] -= top * phi_poly[i]
        self.powers = tuple(powers)
        self.units = units_mod(order)


@lru_cache(maxsize=None)
def field_data(order: int) -> _FieldData:
    return _FieldData(order)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num, den = [-c for c in num], -den
    g = gcd(den, *num)
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


def _reduce(prod: Sequence[int], fd: _FieldData) -> list[int]:
    deg = fd.degree
    out = list(prod[:deg]) + [0] * max(0, deg - len(prod))
    powers = fd.powers
    for k in range(deg, len(prod)):
        c = prod[k]
        if c:
            for i, p in enumerate(powers[k]):
                if p:
                    out[i] += c * p
    return out


class CyclotomicNumber:
    """An element of Q(zeta_N) with an exact canonical representation."""

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, coefficients: Iterable = ()):
        if order < 1:
            raise ValueError("order must be a positive integer")
        fd = field_data(order)
        coeffs = [Fraction(c) for c in coefficients]
        if len(coeffs) > fd.degree:
            # accept any polynomial in zeta and reduce it
            den = lcm(*(c.denominator for c in coeffs))
            num = _reduce([c.numerator * (den // c.denominator) for c in coeffs], fd)
        else:
            coeffs += [Fraction(0)] * (fd.degree - len(coeffs))
            den = lcm(*(c.denominator for c in coeffs))
            num = [c.numerator * (den // c.denominator) for c in coeffs]
        self.order = order
        self._num, self._den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, num: Sequence[int], den: int) -> "CyclotomicNumber":
        obj = cls.__new__(cls)
        obj.order = order
        obj._num, obj._den = _normalize(list(num), den)
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, value, order: int) -> "CyclotomicNumber":
        q = Fraction(value)
        deg = field_data(order).degree
        return cls._raw(order, [q.numerator] + [0] * (deg - 1), q.denominator)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerator_vector(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def is_integral(self) -> bool:
        """True when the power-basis coefficients are integers (element of Z[zeta])."""
        return self._den == 1

    # arithmetic

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch {self.order} vs {other.order}; embed into a common field first"
                )
            return other
        if isinstance(other, (int, Rational)):
            return CyclotomicNumber.from_rational(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self._den, other._den
        den = da * db // gcd(da, db)
        fa, fb = den // da, den // db
        return CyclotomicNumber._raw(
            self.order, [a * fa + b * fb for a, b in zip(self._num, other._num)], den
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.order, [-c for c in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        fd = field_data(self.order)
        a, b = self._num, other._num
        prod = [0] * (2 * fd.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber._raw(self.order, _reduce(prod, fd), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.from_rational(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def galois(self, h: int) -> "CyclotomicNumber":
        """Image under the automorphism zeta -> zeta^h (gcd(h, N) = 1)."""
        fd = field_data(self.order)
        n = self.order
        out = [0] * fd.degree
        for k, c in enumerate(self._num):
            if c:
                for i, p in enumerate(fd.powers[(h * k) % n]):
                    out[i] += c * p
        return CyclotomicNumber._raw(n, out, self._den)

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation on the embedding zeta -> exp(2 pi i / N)."""
        return self.galois(-1)

    def norm(self) -> Fraction:
        fd = field_data(self.order)
        prod = self
        for h in fd.units:
            if h != 1:
                prod = prod * self.galois(h)
        return prod.to_fraction()

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / self.to_fraction(), self.order)
        # a^-1 = (product of the other conjugates) / norm(a)
        fd = field_data(self.order)
        cofactor = CyclotomicNumber.from_rational(1, self.order)
        for h in fd.units:
            if h != 1:
                cofactor = cofactor * self.galois(h)
        nrm = (self * cofactor).to_fraction()
        return cofactor * (1 / nrm)

    def embed(self, order: int) -> "CyclotomicNumber":
        """The same number viewed in Q(zeta_order); requires self.order | order."""
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        fd = field_data(order)
        out = [0] * fd.degree
        for k, c in enumerate(self._num):
            if c:
                for i, p in enumerate(fd.powers[(k * step) % order]):
                    out[i] += c * p
        return CyclotomicNumber._raw(order, out, self._den)

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self._num == other._num and self._den == other._den
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.to_fraction() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((self.order, self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, {self})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append(str(c) if k == 0 else f"({c})*z^{k}")
        return " + ".join(terms) or "0"


def root_of_unity(k: int, order: int) -> CyclotomicNumber:
    """zeta_order ** k, reduced modulo Phi_order."""
    fd = field_data(order)
    return CyclotomicNumber._raw(order, fd.powers[k % order], 1)


def exp_2pi_i(q: Fraction, order: int) -> CyclotomicNumber:
    """exp(2 pi i q) inside Q(zeta_order); q * order must be an integer."""
    q = Fraction(q)
    k = q * order
    if k.denominator != 1:
        raise ValueError(f"exp(2 pi i {q}) is not in Q(zeta_{order})")
    return root_of_unity(int(k), order)


def _interval_context(bits: int) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = bits
    return ctx


def complex_embed(a: CyclotomicNumber, precision_bits: int = 128):
    """Complex interval enclosing the image of ``a`` under zeta -> exp(2 pi i / N).

    Returns an ``mpmath`` interval complex (``.real`` and ``.imag`` are real
    intervals with endpoints ``.a`` / ``.b``).  A private interval context is
    used per call, so no global precision state is touched.
    """
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")
    ctx = _interval_context(precision_bits + 16)
    re = ctx.mpf(0)
    im = ctx.mpf(0)
    two_pi = 2 * ctx.pi
    for k, c in enumerate(a._num):
        if c:
            theta = two_pi * ctx.mpf(k) / a.order
            coeff = ctx.mpf(c)
            re += coeff * ctx.cos(theta)
            im += coeff * ctx.sin(theta)
    den = ctx.mpf(a._den)
    return ctx.mpc(re / den, im / den)


def certified_real_sign(a: CyclotomicNumber) -> int:
    """Sign (-1, 0, 1) of a real element of Q(zeta_N).

    Zero is decided exactly; otherwise the interval enclosure is refined by
    doubling the precision from 64 up to 4096 bits.
    """
    if a != a.conjugate():
        raise ValueError(f"{a!r} is not real")
    if a.is_zero():
        return 0
    if a.is_rational():
        return 1 if a.to_fraction() > 0 else -1
    bits = MIN_PRECISION_BITS
    while bits <= MAX_PRECISION_BITS:
        re = complex_embed(a, bits).real
        if re.a > 0:
            return 1
        if re.b < 0:
            return -1
        bits *= 2
    raise PrecisionExhausted(f"sign of {a} undecided at {MAX_PRECISION_BITS} bits")
