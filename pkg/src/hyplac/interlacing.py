"""Interlacing of parameter sets and the Galois-orbit finiteness test."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .cyclotomic import units_mod
from .errors import InconsistentVerdict, NotAUnit
from .params import HypergeometricParameters, normalize, require_analyzable, splitting_field_order
from .parabolic import StabilityVerdict, is_stable


class Pattern(enum.Enum):
    ALPHA_FIRST = "AlphaFirst"
    BETA_FIRST = "BetaFirst"


@dataclass(frozen=True)
class InterlacingVerdict:
    holds: bool
    pattern: Optional[Pattern] = None
    # 0-based position in the merged sorted sequence where alternation first breaks
    failure_position: Optional[int] = None


def interlaces(p: HypergeometricParameters) -> InterlacingVerdict:
    merged = sorted([(a, 0) for a in p.alpha] + [(b, 1) for b in p.beta])
    for pos in range(len(merged) - 1):
        (x, fx), (y, fy) = merged[pos], merged[pos + 1]
        # equal values (collision or repeat) can never strictly alternate
        if fx == fy or x == y:
            return InterlacingVerdict(False, None, pos)
    pattern = Pattern.ALPHA_FIRST if merged[0][1] == 0 else Pattern.BETA_FIRST
    return InterlacingVerdict(True, pattern, None)


def galois_conjugate(p: HypergeometricParameters, h: int) -> HypergeometricParameters:
    """Apply zeta_N -> zeta_N^h to every eigenvalue exponent."""
    N = splitting_field_order(p)
    if gcd(h, N) != 1:
        raise NotAUnit(f"{h} is not a unit modulo {N}")
    return normalize([h * a for a in p.alpha], [h * b for b in p.beta])


def is_unitary(p: HypergeometricParameters) -> bool:
    """Interlacing verdict, checked against the bundle-side stability verdict."""
    require_analyzable(p)
    holds = interlaces(p).holds
    stable = is_stable(p).verdict is StabilityVerdict.STABLE
    if holds != stable:
        raise InconsistentVerdict(f"interlacing={holds} but stability={stable} for {p}")
    return holds


@dataclass(frozen=True)
class GaloisOrbitReport:
    N: int
    units: tuple[int, ...]
    per_unit: dict  # h -> (conjugated parameters, InterlacingVerdict), ascending h

    @property
    def first_failing_unit(self) -> Optional[int]:
        return next((h for h in self.units if not self.per_unit[h][1].holds), None)

    @property
    def all_pass(self) -> bool:
        return self.first_failing_unit is None


def galois_orbit_report(p: HypergeometricParameters) -> GaloisOrbitReport:
    N = splitting_field_order(p)
    units = units_mod(N)
    per_unit = {}
    for h in units:
        q = galois_conjugate(p, h)
        per_unit[h] = (q, interlaces(q))
    return GaloisOrbitReport(N, tuple(units), per_unit)


def has_finite_monodromy(p: HypergeometricParameters) -> tuple[bool, GaloisOrbitReport]:
    require_analyzable(p)
    report = galois_orbit_report(p)
    return report.all_pass, report
