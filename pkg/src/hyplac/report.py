"""Analysis reports (JSON) and parameter scans (CSV)."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from . import __version__
from .cyclotomic import units_mod
from .errors import HyplacError
from .interlacing import galois_conjugate, galois_orbit_report, interlaces
from .oracle import (
    DEFAULT_CLOSURE_BOUND,
    FiniteOfOrder,
    check_triple,
    group_closure,
    invariant_hermitian_form,
    katz_sum,
    levelt_generators,
)
from .parabolic import CandidateDegree, NormalizationWitness, StabilityVerdict, is_stable
from .params import (
    HypergeometricParameters,
    format_rational,
    gamma,
    is_irreducible,
    normalize,
    rigidity_index,
    splitting_field_order,
)

SCHEMA = "hyplac/1"
CSV_HEADER = ("alpha", "beta", "gamma", "interlaces", "pattern", "stable", "finite", "first_failing_unit")


def _fr(xs: Iterable[Fraction]) -> list[str]:
    return [format_rational(x) for x in xs]


def _witness_dict(w) -> Optional[dict]:
    if w is None:
        return None
    if isinstance(w, NormalizationWitness):
        return {"type": "normalization", "gamma": format_rational(w.gamma)}
    assert isinstance(w, CandidateDegree)
    return {
        "type": "candidate",
        "case": w.candidate.case.value,
        "indices": list(w.candidate.indices),
        "degree": format_rational(w.degree),
        "weights_at_0": _fr(w.weights_at_0),
        "weights_at_inf": _fr(w.weights_at_inf),
        "weights_at_1": _fr(w.weights_at_1),
    }


@dataclass
class AnalysisReport:
    input_echo: dict
    params: HypergeometricParameters
    irreducible: bool
    generic: bool
    interlacing: dict
    stability: Optional[dict]
    galois: Optional[dict]
    finite_monodromy: Optional[bool]
    oracle: Optional[dict] = None
    version: str = __version__
    degenerate: Optional[str] = field(default=None)

    def to_dict(self) -> dict:
        p = self.params
        out = {
            "schema": SCHEMA,
            "version": self.version,
            "input_echo": self.input_echo,
            "alpha": _fr(p.alpha),
            "beta": _fr(p.beta),
            "n": p.n,
            "N": splitting_field_order(p),
            "gamma": format_rational(gamma(p)),
            "irreducible": self.irreducible,
            "generic": self.generic,
            "degenerate": self.degenerate,
            "rigidity_index": rigidity_index(p.n),
            "interlacing": self.interlacing,
            "stability": self.stability,
            "galois": self.galois,
            "finite_monodromy": self.finite_monodromy,
        }
        if self.oracle is not None:
            out["oracle"] = self.oracle
        return out


def _oracle_section(p: HypergeometricParameters, closure_bound: int) -> dict:
    if not is_irreducible(p):
        return {"skipped": "reducible", "triple_consistent": None, "katz_sum": None,
                "hermitian_solution_dimension": None, "hermitian_signature": None, "closure": None}
    t = levelt_generators(p)
    try:
        herm = invariant_hermitian_form(t)
        herm_dim, sig = herm.solution_dimension, (list(herm.signature) if herm.signature else None)
    except HyplacError:
        herm_dim, sig = 0, None
    closure = group_closure(t, closure_bound)
    return {
        "skipped": None,
        "triple_consistent": check_triple(t, p).ok,
        "katz_sum": katz_sum(t),
        "hermitian_solution_dimension": herm_dim,
        "hermitian_signature": sig,
        "closure": closure.order if isinstance(closure, FiniteOfOrder) else f"exceeded({closure_bound})",
    }


def analyze_parameters(
    p: HypergeometricParameters,
    input_echo: Optional[dict] = None,
    oracle: bool = False,
    closure_bound: int = DEFAULT_CLOSURE_BOUND,
) -> AnalysisReport:
    irreducible = is_irreducible(p)
    generic = p.is_generic
    iv = interlaces(p)
    interlacing = {
        "holds": iv.holds,
        "pattern": iv.pattern.value if iv.pattern else None,
        "failure_position": iv.failure_position,
    }
    degenerate = None if irreducible and generic else ("reducible" if not irreducible else "non-generic")
    stability = galois = finite = None
    if degenerate is None:
        st = is_stable(p)
        stability = {
            "verdict": st.verdict.value,
            "dualized": st.analyzed.dualized,
            "analyzed_alpha": _fr(st.analyzed.alpha),
            "analyzed_beta": _fr(st.analyzed.beta),
            "analyzed_gamma": format_rational(st.analyzed.gamma),
            "candidates_checked": st.candidates_checked,
            "witness": _witness_dict(st.witness),
        }
        orbit = galois_orbit_report(p)
        failing = [h for h in orbit.units if not orbit.per_unit[h][1].holds]
        galois = {
            "N": orbit.N,
            "units_checked": len(orbit.units),
            "all_pass": orbit.all_pass,
            "first_failing_unit": orbit.first_failing_unit,
            "failing_units": failing,
        }
        finite = orbit.all_pass
    if input_echo is None:
        input_echo = {"alpha": _fr(p.alpha), "beta": _fr(p.beta), "implicit_beta_one": False}
    return AnalysisReport(
        input_echo=input_echo,
        params=p,
        irreducible=irreducible,
        generic=generic,
        interlacing=interlacing,
        stability=stability,
        galois=galois,
        finite_monodromy=finite,
        oracle=_oracle_section(p, closure_bound) if oracle else None,
        degenerate=degenerate,
    )


# scans


def rational_grid(max_denominator: int) -> list[Fraction]:
    """Sorted distinct p/q in [0, 1) with 1 <= q <= max_denominator."""
    return sorted({Fraction(a, q) for q in range(1, max_denominator + 1) for a in range(q)})


def scan_tuples(n: int, max_denominator: int, orbit_dedup: bool = False) -> Iterator[HypergeometricParameters]:
    """Generic irreducible canonical tuples in lexicographic (alpha, beta) order."""
    grid = rational_grid(max_denominator)
    for alpha in combinations(grid, n):
        rest = [x for x in grid if x not in alpha]
        for beta in combinations(rest, n):
            p = HypergeometricParameters(alpha, beta)
            if orbit_dedup and not _is_orbit_minimum(p):
                continue
            yield p


def _key(p: HypergeometricParameters) -> tuple:
    return (p.alpha, p.beta)


def _is_orbit_minimum(p: HypergeometricParameters) -> bool:
    k = _key(p)
    return all(k <= _key(galois_conjugate(p, h)) for h in units_mod(splitting_field_order(p)))


def scan_row(p: HypergeometricParameters) -> tuple[str, ...]:
    iv = interlaces(p)
    stable = is_stable(p).verdict is StabilityVerdict.STABLE
    orbit = galois_orbit_report(p)
    ffu = orbit.first_failing_unit
    return (
        " ".join(_fr(p.alpha)),
        " ".join(_fr(p.beta)),
        format_rational(gamma(p)),
        "true" if iv.holds else "false",
        iv.pattern.value if iv.pattern else "",
        "true" if stable else "false",
        "true" if orbit.all_pass else "false",
        "" if ffu is None else str(ffu),
    )


def scan_rows(n: int, max_denominator: int, jobs: int = 1, orbit_dedup: bool = False) -> list[tuple[str, ...]]:
    tuples = list(scan_tuples(n, max_denominator, orbit_dedup))
    if jobs <= 1 or len(tuples) < 2:
        return [scan_row(p) for p in tuples]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order, so the output is schedule independent
        return list(pool.map(scan_row, tuples, chunksize=max(1, len(tuples) // (8 * jobs))))


def write_csv(rows: Sequence[Sequence[str]], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)


def scan_csv(n: int, max_denominator: int, jobs: int = 1, orbit_dedup: bool = False) -> str:
    buf = io.StringIO()
    write_csv(scan_rows(n, max_denominator, jobs, orbit_dedup), buf)
    return buf.getvalue()
