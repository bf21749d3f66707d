"""Parabolic bundles on (P^1, 0 + 1 + infinity) and the stability test.

Flags are generic, so a parabolic point is recorded only through its
weights and their multiplicities.  Stability of the hypergeometric bundle
is decided by evaluating the parabolic degree of every maximal
destabilizing candidate ``O(-1)^k -> E``; there are two families of
candidates, according to whether the subbundle meets the distinguished
line at 1 (``CASE_TWO``) or not (``CASE_ONE``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .errors import InvalidCandidate, InvalidInput, NeedsDualization, NonGenericParameters
from .params import (
    HypergeometricParameters,
    frac_part,
    gamma,
    require_analyzable,
)

MARKED_POINTS = ("0", "1", "inf")


@dataclass(frozen=True)
class ParabolicPoint:
    weights: tuple[Fraction, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.multiplicities):
            raise InvalidInput("weights and multiplicities differ in length")
        if any(not 0 <= w < 1 for w in self.weights):
            raise InvalidInput("parabolic weights must lie in [0, 1)")
        if any(b <= a for a, b in zip(self.weights, self.weights[1:])):
            raise InvalidInput("parabolic weights must be strictly increasing")
        if any(m < 1 for m in self.multiplicities):
            raise InvalidInput("multiplicities must be positive")

    @property
    def rank(self) -> int:
        return sum(self.multiplicities)

    def weight_sum(self) -> Fraction:
        return sum((w * m for w, m in zip(self.weights, self.multiplicities)), Fraction(0))

    @classmethod
    def from_weights(cls, weights: Sequence[Fraction]) -> "ParabolicPoint":
        """Collect a multiset of weights into sorted (weight, multiplicity) form."""
        counts: dict[Fraction, int] = {}
        for w in weights:
            counts[Fraction(w)] = counts.get(Fraction(w), 0) + 1
        ws = sorted(counts)
        return cls(tuple(ws), tuple(counts[w] for w in ws))


@dataclass(frozen=True)
class ParabolicBundle:
    splitting_degrees: tuple[int, ...]
    points: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.splitting_degrees:
            raise InvalidInput("a parabolic bundle needs rank >= 1")
        for label, pt in self.points.items():
            if label not in MARKED_POINTS:
                raise InvalidInput(f"unknown marked point {label!r}")
            if pt.rank != self.rank:
                raise InvalidInput(f"flag at {label} has rank {pt.rank}, bundle has rank {self.rank}")

    @property
    def rank(self) -> int:
        return len(self.splitting_degrees)

    @property
    def degree(self) -> int:
        return sum(self.splitting_degrees)


def parabolic_degree(b: ParabolicBundle) -> Fraction:
    return b.degree + sum((pt.weight_sum() for pt in b.points.values()), Fraction(0))


def parabolic_slope(b: ParabolicBundle) -> Fraction:
    return parabolic_degree(b) / b.rank


def _bundle_from_weights(alpha: Sequence[Fraction], beta: Sequence[Fraction], g: Fraction) -> ParabolicBundle:
    n = len(alpha)
    w1 = frac_part(g)
    at_one = [w1] + [Fraction(0)] * (n - 1)
    return ParabolicBundle(
        (-1,) * n,
        {
            "0": ParabolicPoint.from_weights(alpha),
            "inf": ParabolicPoint.from_weights([frac_part(1 - b) for b in beta]),
            "1": ParabolicPoint.from_weights(at_one),
        },
    )


def build_parabolic(p: HypergeometricParameters) -> ParabolicBundle:
    """The bundle O(-1)^n with weights alpha at 0, (1 - beta) mod 1 at infinity
    and frac(gamma) on a generic line at 1."""
    if not p.is_generic:
        raise NonGenericParameters(f"repeated entries in {p}")
    g = gamma(p)
    if g < 0:
        raise NeedsDualization(f"gamma = {g} < 0; build the bundle of the dual parameters")
    return _bundle_from_weights(p.alpha, p.beta, g)


# candidates


class CaseTag(enum.Enum):
    CASE_ONE = "CaseOne"  # subbundle avoids the line at 1
    CASE_TWO = "CaseTwo"  # subbundle contains the line at 1


@dataclass(frozen=True)
class SubbundleCandidate:
    case: CaseTag
    indices: tuple[int, ...]  # 1-based into the sorted alpha list

    def __post_init__(self):
        idx = self.indices
        if not idx or any(b <= a for a, b in zip(idx, idx[1:])) or idx[0] < 1:
            raise InvalidCandidate(f"indices must be a nonempty increasing list of positive integers: {idx}")
        if self.case is CaseTag.CASE_TWO and idx[0] != 1:
            raise InvalidCandidate("a CaseTwo candidate must contain index 1")

    @property
    def rank(self) -> int:
        return len(self.indices)

    def sort_key(self) -> tuple:
        return (self.rank, self.indices, self.case is CaseTag.CASE_TWO)


@dataclass(frozen=True)
class CandidateDegree:
    candidate: SubbundleCandidate
    degree: Fraction
    weights_at_0: tuple[Fraction, ...]
    weights_at_inf: tuple[Fraction, ...]
    weights_at_1: tuple[Fraction, ...]


def _candidate_degree(alpha, beta, g, c: SubbundleCandidate) -> CandidateDegree:
    n = len(alpha)
    if c.indices[-1] > n:
        raise InvalidCandidate(f"index {c.indices[-1]} exceeds rank {n}")
    k = c.rank
    if c.case is CaseTag.CASE_ONE:
        at0 = tuple(alpha[i - 1] for i in c.indices)
        atinf = tuple(1 - beta[i - 1] for i in c.indices)
        at1: tuple[Fraction, ...] = ()
    else:
        rest = c.indices[1:]
        at0 = (alpha[0],) + tuple(alpha[i - 1] for i in rest)
        atinf = (1 - beta[n - 1],) + tuple(1 - beta[i - 2] for i in rest)
        at1 = (g,)
    degree = -k + sum(at0, Fraction(0)) + sum(atinf, Fraction(0)) + sum(at1, Fraction(0))
    return CandidateDegree(c, degree, at0, atinf, at1)


def candidate_degree(p: HypergeometricParameters, c: SubbundleCandidate) -> CandidateDegree:
    """Parabolic degree of the maximal rank-k subbundle of shape ``c``.

    CaseOne: sum over S of (alpha_i - beta_i).  CaseTwo with
    S = {1, i_2, ..., i_k}: the unsimplified weight sum
    -k + alpha_1 + sum alpha_{i_j} + (1 - beta_n) + sum (1 - beta_{i_j - 1}) + gamma.
    """
    if not p.is_generic:
        raise NonGenericParameters(f"repeated entries in {p}")
    g = gamma(p)
    if not 0 <= g < 1:
        raise NeedsDualization(f"candidate degrees need gamma in [0, 1), got {g}")
    return _candidate_degree(p.alpha, p.beta, g, c)


def enumerate_candidates(n: int) -> Iterator[SubbundleCandidate]:
    """Every proper candidate, ordered by rank, then indices, CaseOne first."""
    for k in range(1, n):
        for S in combinations(range(1, n + 1), k):
            yield SubbundleCandidate(CaseTag.CASE_ONE, S)
            if S[0] == 1:
                yield SubbundleCandidate(CaseTag.CASE_TWO, S)


# stability


class StabilityVerdict(enum.Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"


@dataclass(frozen=True)
class NormalizationWitness:
    """gamma >= 1 after sign normalization, so the bundle has negative parabolic degree."""

    gamma: Fraction


@dataclass(frozen=True)
class SignNormalized:
    """Weight data of the bundle that is actually tested.

    When gamma < 0 this is the dual data (1 - alpha, 1 - beta): the alpha
    side is reduced into [0, 1) and the beta side is kept in (0, 1], so that
    the weights 1 - beta' at infinity are again exactly the original betas.
    """

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    gamma: Fraction
    dualized: bool

    def bundle(self) -> ParabolicBundle:
        return _bundle_from_weights(self.alpha, self.beta, self.gamma)


def sign_normalize(p: HypergeometricParameters) -> SignNormalized:
    g = gamma(p)
    if g >= 0:
        return SignNormalized(p.alpha, p.beta, g, False)
    alpha = tuple(sorted(frac_part(1 - a) for a in p.alpha))
    beta = tuple(sorted(1 - b for b in p.beta))
    return SignNormalized(alpha, beta, sum(beta, Fraction(0)) - sum(alpha, Fraction(0)), True)


@dataclass(frozen=True)
class StabilityResult:
    verdict: StabilityVerdict
    analyzed: SignNormalized
    max_candidate: Optional[CandidateDegree] = None
    normalization_witness: Optional[NormalizationWitness] = None
    candidates_checked: int = 0

    @property
    def witness(self):
        if self.verdict is StabilityVerdict.STABLE:
            return None
        return self.normalization_witness or self.max_candidate


def is_stable(p: HypergeometricParameters) -> StabilityResult:
    require_analyzable(p)
    data = sign_normalize(p)
    if data.gamma >= 1:
        return StabilityResult(StabilityVerdict.UNSTABLE, data, normalization_witness=NormalizationWitness(data.gamma))
    best: Optional[CandidateDegree] = None
    count = 0
    for cand in enumerate_candidates(p.n):
        cd = _candidate_degree(data.alpha, data.beta, data.gamma, cand)
        count += 1
        # enumeration order is the tie-break order, so only a strict improvement replaces
        if best is None or cd.degree > best.degree:
            best = cd
    if best is None or best.degree < 0:
        verdict = StabilityVerdict.STABLE
    elif best.degree == 0:
        verdict = StabilityVerdict.STRICTLY_SEMISTABLE
    else:
        verdict = StabilityVerdict.UNSTABLE
    return StabilityResult(verdict, data, best, None, count)
