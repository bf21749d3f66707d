from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import generic_params
from hyplac.cyclotomic import units_mod
from hyplac.errors import NonGenericParameters, NotAUnit, Reducible
from hyplac.interlacing import (
    Pattern,
    galois_conjugate,
    galois_orbit_report,
    has_finite_monodromy,
    interlaces,
    is_unitary,
)
from hyplac.params import HypergeometricParameters, dual, gamma, normalize, splitting_field_order


def P(a, b):
    return normalize([F(x) for x in a], [F(x) for x in b])


def _alternates(p):
    # independent oracle: label the merged values and look for a repeated label
    labels = [lab for _, lab in sorted([(a, "a") for a in p.alpha] + [(b, "b") for b in p.beta])]
    values = sorted(p.alpha + p.beta)
    distinct = len(set(values)) == len(values)
    return distinct and all(x != y for x, y in zip(labels, labels[1:]))


def test_interlacing_examples():
    v = interlaces(P(["0", "1/2"], ["1/4", "3/4"]))
    assert v.holds and v.pattern is Pattern.ALPHA_FIRST and v.failure_position is None
    w = interlaces(P(["1/10", "3/10"], ["0", "1/2"]))
    assert not w.holds and w.pattern is None and w.failure_position == 1
    u = interlaces(P(["1/3"], ["2/3"]))
    assert u.holds and u.pattern is Pattern.ALPHA_FIRST
    assert interlaces(P(["1/4", "3/4"], ["0", "1/2"])).pattern is Pattern.BETA_FIRST


def test_collision_fails():
    v = interlaces(P(["1/2"], ["1/2"]))
    assert not v.holds and v.failure_position == 0


def test_galois_conjugate_examples():
    p = P(["0", "3/10"], ["1/5", "3/5"])
    assert galois_conjugate(p, 1) == p
    assert galois_conjugate(p, 3) == P(["0", "9/10"], ["3/5", "4/5"])
    q = P(["0", "1/2"], ["1/4", "3/4"])
    assert galois_conjugate(q, 3) == q
    with pytest.raises(NotAUnit):
        galois_conjugate(p, 5)


def test_is_unitary_examples():
    assert is_unitary(P(["0", "1/2"], ["1/4", "3/4"]))
    assert not is_unitary(P(["1/10", "3/10"], ["0", "1/2"]))
    assert is_unitary(P(["0", "3/10"], ["1/5", "3/5"]))
    with pytest.raises(Reducible):
        is_unitary(P(["1/2"], ["1/2"]))
    with pytest.raises(NonGenericParameters):
        is_unitary(P(["1/2", "1/2"], ["0", "1/3"]))


def test_finite_monodromy_examples():
    ok, rep = has_finite_monodromy(P(["0", "1/2"], ["1/4", "3/4"]))
    assert ok and rep.units == (1, 3) and rep.first_failing_unit is None
    ok, rep = has_finite_monodromy(P(["0", "3/10"], ["1/5", "3/5"]))
    assert not ok and rep.first_failing_unit == 3
    conj, verdict = rep.per_unit[3]
    assert conj == P(["0", "9/10"], ["3/5", "4/5"]) and not verdict.holds
    ok, rep = has_finite_monodromy(P(["1/10", "3/10"], ["0", "1/2"]))
    assert not ok and rep.first_failing_unit == 1


@settings(max_examples=300, deadline=None)
@given(generic_params(max_n=6, max_conductor=30))
def test_matches_independent_oracle(p):
    assert interlaces(p).holds == _alternates(p)


@settings(max_examples=300, deadline=None)
@given(generic_params(max_n=6, max_conductor=30))
def test_swap_symmetry(p):
    v = interlaces(p)
    w = interlaces(HypergeometricParameters(p.beta, p.alpha))
    assert v.holds == w.holds
    if v.holds:
        assert v.pattern != w.pattern


@settings(max_examples=300, deadline=None)
@given(generic_params(max_n=6, max_conductor=30))
def test_dual_invariance(p):
    assert interlaces(p).holds == interlaces(dual(p)).holds


@settings(max_examples=200, deadline=None)
@given(generic_params(max_n=5, max_conductor=30), st.data())
def test_conjugation_composes(p, data):
    N = splitting_field_order(p)
    units = units_mod(N)
    h = data.draw(st.sampled_from(units))
    k = data.draw(st.sampled_from(units))
    assert galois_conjugate(galois_conjugate(p, h), k) == galois_conjugate(p, (h * k) % N)


@settings(max_examples=150, deadline=None)
@given(generic_params(max_n=5, max_conductor=30), st.data())
def test_finiteness_constant_on_orbit(p, data):
    N = splitting_field_order(p)
    h = data.draw(st.sampled_from(units_mod(N)))
    q = galois_conjugate(p, h)
    assert has_finite_monodromy(q)[0] == has_finite_monodromy(p)[0]


@settings(max_examples=300, deadline=None)
@given(generic_params(max_n=6, max_conductor=30))
def test_alpha_first_bounds_gamma(p):
    v = interlaces(p)
    if v.holds and v.pattern is Pattern.ALPHA_FIRST:
        assert 0 < gamma(p) < 1
    if v.holds and v.pattern is Pattern.BETA_FIRST:
        assert -1 < gamma(p) < 0


@settings(max_examples=100, deadline=None)
@given(generic_params(max_n=4, max_conductor=24))
def test_orbit_report_shape(p):
    rep = galois_orbit_report(p)
    N = splitting_field_order(p)
    assert rep.N == N
    assert list(rep.units) == [h for h in range(1, max(N, 2)) if gcd(h, N) == 1]
    assert rep.per_unit[1] == (p, interlaces(p))
