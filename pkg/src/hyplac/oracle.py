"""Exact monodromy matrices: an independent check on the parameter-side verdicts.

The generators come from companion matrices (Levelt's normal form):
``g0 = A``, ``g1 = A^-1 B``, ``g_inf = B^-1`` where A and B are the
companion matrices of prod (t - e^{2 pi i alpha_j}) and
prod (t - e^{2 pi i beta_j}).  Since A and B differ only in their last
column, ``g1 - I`` has rank at most one.
"""

from __future__ import annotations

import cmath
from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .cyclotomic import (
    CyclotomicNumber,
    certified_real_sign,
    complex_embed,
    exp_2pi_i,
    field_data,
    root_of_unity,
)
from .errors import NoInvariantForm, NotAPseudoreflection, Reducible
from .matrix import CycMatrix
from .params import HypergeometricParameters, gamma, is_irreducible, splitting_field_order

DEFAULT_CLOSURE_BOUND = 100_000


def poly_from_roots(roots: Sequence[CyclotomicNumber], order: int) -> list[CyclotomicNumber]:
    """Coefficients of prod (t - r), constant term first, leading 1 included."""
    coeffs = [CyclotomicNumber.from_rational(1, order)]
    for r in roots:
        shifted = [CyclotomicNumber.from_rational(0, order)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] = shifted[i] - r * c
        coeffs = shifted
    return coeffs


@dataclass(frozen=True)
class MonodromyTriple:
    g0: CycMatrix
    g1: CycMatrix
    g_inf: CycMatrix

    @property
    def n(self) -> int:
        return self.g0.rows

    @property
    def order(self) -> int:
        return self.g0.order

    def conjugate_by(self, x: CycMatrix) -> "MonodromyTriple":
        xi = x.inverse()
        return MonodromyTriple(x @ self.g0 @ xi, x @ self.g1 @ xi, x @ self.g_inf @ xi)


def levelt_generators(p: HypergeometricParameters) -> MonodromyTriple:
    if not is_irreducible(p):
        raise Reducible(f"companion-matrix model needs alpha_j != beta_k: {p}")
    N = splitting_field_order(p)
    pa = poly_from_roots([exp_2pi_i(a, N) for a in p.alpha], N)
    pb = poly_from_roots([exp_2pi_i(b, N) for b in p.beta], N)
    A = CycMatrix.companion(pa[:-1], N)
    B = CycMatrix.companion(pb[:-1], N)
    t = MonodromyTriple(A, A.inverse() @ B, B.inverse())
    if not (t.g0 @ t.g1 @ t.g_inf).is_identity():
        raise AssertionError("g0 g1 g_inf != I")  # cannot happen by construction
    return t


def is_pseudoreflection(m: CycMatrix) -> bool:
    return (m - CycMatrix.identity(m.rows, m.order)).rank() == 1


def special_eigenvalue(m: CycMatrix) -> CyclotomicNumber:
    if not is_pseudoreflection(m):
        raise NotAPseudoreflection("rank(M - I) != 1")
    return m.det()


def centralizer_dimension(m: CycMatrix) -> int:
    """dim {X : XM = MX}, via the exact nullity of the n^2 x n^2 commutation system."""
    n, N = m.rows, m.order
    zero = CyclotomicNumber.from_rational(0, N)
    rows = []
    for i in range(n):
        for j in range(n):
            # (XM - MX)_{ij} = sum_k X_ik M_kj - M_ik X_kj ; unknown X_ab at column a*n + b
            eq = [zero] * (n * n)
            for k in range(n):
                eq[i * n + k] = eq[i * n + k] + m[k, j]
                eq[k * n + j] = eq[k * n + j] - m[i, k]
            rows.append(eq)
    return n * n - CycMatrix.from_rows(rows, N).rank()


def katz_sum(t: MonodromyTriple) -> int:
    n = t.n
    return -(n ** 2) + sum(centralizer_dimension(g) for g in (t.g0, t.g1, t.g_inf))


@dataclass(frozen=True)
class TripleConsistency:
    product_is_identity: bool
    charpoly_at_0: bool
    charpoly_at_inf: bool
    g1_pseudoreflection: bool
    special_eigenvalue_matches: bool

    @property
    def ok(self) -> bool:
        return all(vars(self).values())


def check_triple(t: MonodromyTriple, p: HypergeometricParameters) -> TripleConsistency:
    """Compare the matrices against the prescribed local monodromy of p."""
    N = t.order
    want0 = poly_from_roots([exp_2pi_i(a, N) for a in p.alpha], N)
    want_inf = poly_from_roots([exp_2pi_i(-b, N) for b in p.beta], N)
    pseudo = is_pseudoreflection(t.g1)
    return TripleConsistency(
        (t.g0 @ t.g1 @ t.g_inf).is_identity(),
        t.g0.charpoly() == want0,
        t.g_inf.charpoly() == want_inf,
        pseudo,
        pseudo and special_eigenvalue(t.g1) == exp_2pi_i(gamma(p), N),
    )


# invariant Hermitian forms


@dataclass(frozen=True)
class HermitianFormResult:
    form: Optional[CycMatrix]
    signature: Optional[tuple[int, int]]
    solution_dimension: int

    @property
    def is_definite(self) -> bool:
        return self.signature is not None and 0 in self.signature and sum(self.signature) == self.form.rows


def _invariance_system(gens: Sequence[CycMatrix]) -> CycMatrix:
    n, N = gens[0].rows, gens[0].order
    rows = []
    for g in gens:
        gbar = [[g[k, i].conjugate() for k in range(n)] for i in range(n)]  # gbar[i][k] = conj(g_ki)
        for i in range(n):
            for j in range(n):
                # (g^dag H g)_ij - H_ij, unknown H_kl at column k*n + l
                eq = [gbar[i][k] * g[l, j] for k in range(n) for l in range(n)]
                eq[i * n + j] = eq[i * n + j] - 1
                rows.append(eq)
    return CycMatrix.from_rows(rows, N)


def _hermitianize(h0: CycMatrix) -> CycMatrix:
    # h0^dag spans the same line as h0, so some c*h0 + (c*h0)^dag is a nonzero Hermitian form
    N = h0.order
    for k in range(max(N, 1)):
        c = h0.scale(root_of_unity(k, N))
        h = c + c.conjugate_transpose()
        if any(not e.is_zero() for e in h.entries):
            return h
    raise NoInvariantForm("no Hermitian element in the invariant line")


def hermitian_signature(h: CycMatrix) -> tuple[int, int]:
    """(positive, negative) counts by exact Hermitian congruence diagonalization.

    Each diagonal entry is real; its sign is certified by interval
    evaluation with precision doubling.
    """
    N = h.order
    m = h.to_rows()
    pos = neg = 0
    while m:
        size = len(m)
        piv = next((i for i in range(size) if not m[i][i].is_zero()), None)
        if piv is None:
            pair = next(((i, j) for i in range(size) for j in range(size) if not m[i][j].is_zero()), None)
            if pair is None:
                break  # the remaining block is zero
            i, j = pair
            for k in range(max(N, 1)):
                c = root_of_unity(k, N)
                # row_i += c row_j, col_i += conj(c) col_j
                new_ii = c * m[j][i] + c.conjugate() * m[i][j] + c * c.conjugate() * m[j][j] + m[i][i]
                if not new_ii.is_zero():
                    break
            m[i] = [x + c * y for x, y in zip(m[i], m[j])]
            for r in m:
                r[i] = r[i] + c.conjugate() * r[j]
            piv = i
        d = m[piv][piv]
        dinv = d.inverse()
        s = certified_real_sign(d)
        pos += s > 0
        neg += s < 0
        rest = [r for r in range(size) if r != piv]
        m = [
            [m[r][c] - m[r][piv] * dinv * m[piv][c] for c in rest]
            for r in rest
        ]
    return pos, neg


def invariant_hermitian_form(t: MonodromyTriple) -> HermitianFormResult:
    basis = _invariance_system([t.g0, t.g_inf]).nullspace()
    dim = len(basis)
    if dim == 0:
        raise NoInvariantForm("no nonzero H with g^dag H g = H")
    if dim > 1:
        return HermitianFormResult(None, None, dim)
    n = t.n
    vec = basis[0].entries
    h = _hermitianize(CycMatrix(n, n, vec, t.order))
    return HermitianFormResult(h, hermitian_signature(h), 1)


# group closure


@dataclass(frozen=True)
class FiniteOfOrder:
    order: int


@dataclass(frozen=True)
class InfiniteOrderWitness:
    """A group element g with |sigma_h(trace g)| > n, so g has infinite order."""

    word_length: int
    unit: int
    trace: CyclotomicNumber


@dataclass(frozen=True)
class ExceededBound:
    bound: int
    explored: int
    witness: Optional[InfiniteOrderWitness] = None


ClosureResult = Union[FiniteOfOrder, ExceededBound]


class _IntegralOps:
    """Matrices over Z[zeta_N] as flat int tuples (n*n entries of phi(N) coefficients)."""

    def __init__(self, n: int, order: int):
        fd = field_data(order)
        self.n, self.deg, self.order = n, fd.degree, order
        self.reduction = fd.powers

    def encode(self, m: CycMatrix) -> tuple:
        out = []
        for e in m.entries:
            out.extend(e.numerator_vector)
        return tuple(out)

    def identity(self) -> tuple:
        n, deg = self.n, self.deg
        out = [0] * (n * n * deg)
        for i in range(n):
            out[(i * n + i) * deg] = 1
        return tuple(out)

    def mul(self, x: tuple, y: tuple) -> tuple:
        n, deg, red = self.n, self.deg, self.reduction
        width = 2 * deg - 1
        out = []
        for i in range(n):
            for j in range(n):
                acc = [0] * width
                for k in range(n):
                    xo = (i * n + k) * deg
                    yo = (k * n + j) * deg
                    for a in range(deg):
                        xa = x[xo + a]
                        if xa:
                            for b in range(deg):
                                yb = y[yo + b]
                                if yb:
                                    acc[a + b] += xa * yb
                entry = acc[:deg]
                for kk in range(deg, width):
                    c = acc[kk]
                    if c:
                        for t, pv in enumerate(red[kk]):
                            if pv:
                                entry[t] += c * pv
                out.extend(entry)
        return tuple(out)

    def trace(self, x: tuple) -> CyclotomicNumber:
        n, deg = self.n, self.deg
        coeffs = [0] * deg
        for i in range(n):
            o = (i * n + i) * deg
            for a in range(deg):
                coeffs[a] += x[o + a]
        return CyclotomicNumber._raw(self.order, coeffs, 1)


class _GenericOps:
    def __init__(self, n: int, order: int):
        self.n, self.order = n, order

    def encode(self, m: CycMatrix) -> CycMatrix:
        return m

    def identity(self) -> CycMatrix:
        return CycMatrix.identity(self.n, self.order)

    def mul(self, x: CycMatrix, y: CycMatrix) -> CycMatrix:
        return x @ y

    def trace(self, x: CycMatrix) -> CyclotomicNumber:
        return x.trace()


def _infinite_order_screen(order: int, n: int) -> Callable[[CyclotomicNumber], Optional[int]]:
    """Return a test giving a unit h with |sigma_h(tr)| > n (certified), or None.

    A float evaluation screens candidates; a hit is confirmed with a
    rigorous interval enclosure before it is trusted.
    """
    fd = field_data(order)
    table = {h: [cmath.exp(2j * cmath.pi * h * k / order) for k in range(fd.degree)] for h in fd.units}
    margin = n + 0.5

    def screen(tr: CyclotomicNumber) -> Optional[int]:
        num, den = tr.numerator_vector, tr.denominator
        for h, w in table.items():
            if abs(sum(c * z for c, z in zip(num, w))) > margin * den:
                box = complex_embed(tr.galois(h), 128)
                sq = box.real ** 2 + box.imag ** 2
                if sq.a > n * n:
                    return h
        return None

    return screen


def group_closure(
    t: MonodromyTriple,
    bound: int = DEFAULT_CLOSURE_BOUND,
    certify_infinite: bool = True,
) -> ClosureResult:
    """Breadth-first closure of <g0, g1> with exact deduplication.

    With ``certify_infinite`` the search stops early once it meets an element
    of provably infinite order; the result is then ``ExceededBound`` carrying
    the witness, which is what an exhaustive search would eventually report.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n, N = t.n, t.order
    gens = (t.g0, t.g1)
    integral = all(e.is_integral() for g in gens for e in g.entries)
    ops = _IntegralOps(n, N) if integral else _GenericOps(n, N)
    key = (lambda x: x) if integral else (lambda x: x.key())
    enc = [ops.encode(g) for g in gens]
    screen = _infinite_order_screen(N, n) if certify_infinite else None

    start = ops.identity()
    seen = {key(start)}
    queue = deque([(start, 0)])
    while queue:
        x, depth = queue.popleft()
        for g in enc:
            y = ops.mul(x, g)
            ky = key(y)
            if ky in seen:
                continue
            seen.add(ky)
            if len(seen) > bound:
                return ExceededBound(bound, len(seen))
            if screen is not None:
                tr = ops.trace(y)
                h = screen(tr)
                if h is not None:
                    return ExceededBound(bound, len(seen), InfiniteOrderWitness(depth + 1, h, tr))
            queue.append((y, depth + 1))
    return FiniteOfOrder(len(seen))
