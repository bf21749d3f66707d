"""Truncated nF(n-1) series and the hypergeometric differential operator."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInput, PoleInDenominatorParameters
from .params import HypergeometricParameters


def pochhammer(q, k: int) -> Fraction:
    """Rising factorial q (q+1) ... (q+k-1)."""
    if k < 0:
        raise InvalidInput("pochhammer needs k >= 0")
    q = Fraction(q)
    out = Fraction(1)
    for j in range(k):
        out *= q + j
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    coefficients: tuple[Fraction, ...]  # c_0 .. c_K

    @property
    def truncation_order(self) -> int:
        return len(self.coefficients) - 1


def _check_bottom(beta: Sequence[Fraction]) -> None:
    for b in beta:
        if b.denominator == 1 and b <= 0:
            raise PoleInDenominatorParameters(f"bottom parameter {b} is a nonpositive integer")


def series_coefficients(alpha: Sequence, beta: Sequence, K: int) -> TruncatedSeries:
    alpha = [Fraction(a) for a in alpha]
    beta = [Fraction(b) for b in beta]
    if len(beta) != len(alpha) - 1:
        raise InvalidInput(f"nF(n-1) needs {len(alpha) - 1} bottom parameters, got {len(beta)}")
    if K < 0:
        raise InvalidInput("truncation order must be >= 0")
    _check_bottom(beta)
    coeffs = [Fraction(1)]
    for k in range(K):
        num = Fraction(1)
        for a in alpha:
            num *= a + k
        den = Fraction(k + 1)
        for b in beta:
            den *= b + k
        coeffs.append(coeffs[-1] * num / den)
    return TruncatedSeries(tuple(coeffs))


def to_nfn1(p: HypergeometricParameters) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Drop one beta equal to 0 (the bottom parameter 1 of nF(n-1))."""
    if Fraction(0) not in p.beta:
        raise InvalidInput(f"{p} has no beta = 0, so it is not an nF(n-1) tuple")
    beta = list(p.beta)
    beta.remove(Fraction(0))
    return p.alpha, tuple(beta)


def apply_operator(alpha: Sequence, beta: Sequence, series: TruncatedSeries) -> list[Fraction]:
    """Coefficients of z^0 .. z^(K+1) in
    D (D + beta_1 - 1) ... (D + beta_{n-1} - 1) f - z (D + alpha_1) ... (D + alpha_n) f,
    where D = z d/dz acts on z^k as multiplication by k."""
    alpha = [Fraction(a) for a in alpha]
    beta = [Fraction(b) for b in beta]
    c = series.coefficients
    K = len(c) - 1
    out = []
    for k in range(K + 2):
        term = Fraction(0)
        if k <= K:
            left = Fraction(k)
            for b in beta:
                left *= k + b - 1
            term += left * c[k]
        if k >= 1:
            right = Fraction(1)
            for a in alpha:
                right *= k - 1 + a
            term -= right * c[k - 1]
        out.append(term)
    return out


def operator_annihilation_check(alpha: Sequence, beta: Sequence, K: int, series: TruncatedSeries | None = None):
    """Return (ok, residuals).  ``ok`` means the coefficients of z^1..z^K vanish;
    z^(K+1) is a truncation artifact and is not asserted."""
    if series is None:
        series = series_coefficients(alpha, beta, K)
    K = series.truncation_order
    residuals = apply_operator(alpha, beta, series)
    return all(r == 0 for r in residuals[1:K + 1]), residuals
