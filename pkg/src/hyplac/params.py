"""Hypergeometric parameter tuples and their elementary invariants."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .cyclotomic import CyclotomicNumber, exp_2pi_i
from .errors import InvalidInput, NonGenericParameters, Reducible

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(token: str) -> Fraction:
    """Parse ``"p/q"`` or an integer; decimals and floats are rejected."""
    m = _FRACTION_RE.match(token)
    if not m:
        raise InvalidInput(f"not a fraction: {token!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise InvalidInput(f"zero denominator in {token!r}")
    return Fraction(num, den)


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma-separated list, reporting the offending token and its position."""
    if not text.strip():
        raise InvalidInput("empty parameter list")
    out = []
    for pos, tok in enumerate(text.split(",")):
        try:
            out.append(parse_rational(tok))
        except InvalidInput as exc:
            raise InvalidInput(f"{exc} at position {pos}") from None
    return out


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def frac_part(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


@dataclass(frozen=True)
class HypergeometricParameters:
    """Canonical (alpha, beta): both tuples sorted ascending inside [0, 1)."""

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.alpha) != len(self.beta) or not self.alpha:
            raise InvalidInput("alpha and beta must have the same nonzero length")
        for name, vals in (("alpha", self.alpha), ("beta", self.beta)):
            if any(not 0 <= v < 1 for v in vals):
                raise InvalidInput(f"{name} entries must lie in [0, 1); use normalize()")
            if list(vals) != sorted(vals):
                raise InvalidInput(f"{name} must be sorted; use normalize()")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def is_generic(self) -> bool:
        """Distinct entries within alpha and within beta."""
        return len(set(self.alpha)) == self.n and len(set(self.beta)) == self.n

    def __str__(self):
        a = ", ".join(format_rational(x) for x in self.alpha)
        b = ", ".join(format_rational(x) for x in self.beta)
        return f"alpha=({a}) beta=({b})"


def normalize(raw_alpha: Iterable, raw_beta: Iterable) -> HypergeometricParameters:
    alpha = [Fraction(x) for x in raw_alpha]
    beta = [Fraction(x) for x in raw_beta]
    if len(alpha) != len(beta) or not alpha:
        raise InvalidInput(f"length mismatch: {len(alpha)} alpha vs {len(beta)} beta")
    return HypergeometricParameters(
        tuple(sorted(frac_part(x) for x in alpha)), tuple(sorted(frac_part(x) for x in beta))
    )


def with_implicit_beta_one(raw_alpha: Sequence, raw_beta: Sequence) -> HypergeometricParameters:
    """The nF(n-1) convention: append the implicit bottom parameter 1 (== 0 mod 1)."""
    return normalize(raw_alpha, list(raw_beta) + [Fraction(0)])


def is_irreducible(p: HypergeometricParameters) -> bool:
    return not set(p.alpha) & set(p.beta)


def require_analyzable(p: HypergeometricParameters) -> None:
    """Raise unless p is generic-type and irreducible."""
    if not p.is_generic:
        raise NonGenericParameters(f"repeated entries in {p}")
    if not is_irreducible(p):
        shared = sorted(set(p.alpha) & set(p.beta))
        raise Reducible(f"alpha and beta share {', '.join(map(format_rational, shared))}")


def gamma(p: HypergeometricParameters) -> Fraction:
    return sum(p.beta, Fraction(0)) - sum(p.alpha, Fraction(0))


def dual(p: HypergeometricParameters) -> HypergeometricParameters:
    return normalize([1 - a for a in p.alpha], [1 - b for b in p.beta])


def rigidity_index(n: int) -> int:
    """Katz's sum for three points: (2 - 3) n^2 + dim Z at 0, infinity and 1."""
    if n < 1:
        raise InvalidInput("rank must be positive")
    dim_z_regular = n
    dim_z_pseudoreflection = (n - 1) ** 2 + 1
    return -(n ** 2) + dim_z_regular + dim_z_regular + dim_z_pseudoreflection


def splitting_field_order(p: HypergeometricParameters) -> int:
    return lcm(*(x.denominator for x in p.alpha + p.beta))


@dataclass(frozen=True)
class LocalMonodromySpec:
    eigenvalues_at_0: tuple[CyclotomicNumber, ...]
    eigenvalues_at_infinity: tuple[CyclotomicNumber, ...]
    special_eigenvalue_at_1: CyclotomicNumber
    gamma: Fraction

    @property
    def order(self) -> int:
        return self.special_eigenvalue_at_1.order


def local_monodromy_spec(p: HypergeometricParameters) -> LocalMonodromySpec:
    N = splitting_field_order(p)
    g = gamma(p)
    return LocalMonodromySpec(
        tuple(exp_2pi_i(a, N) for a in p.alpha),
        tuple(exp_2pi_i(-b, N) for b in p.beta),
        exp_2pi_i(g, N),
        g,
    )
