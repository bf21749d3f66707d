"""Shared generators of parameter tuples for the test suite."""

from fractions import Fraction
from itertools import combinations
import random

from hypothesis import strategies as st

from hyplac.params import HypergeometricParameters, normalize


def grid(max_denominator):
    return sorted({Fraction(a, q) for q in range(1, max_denominator + 1) for a in range(q)})


def all_generic_irreducible(n, max_denominator):
    g = grid(max_denominator)
    for alpha in combinations(g, n):
        rest = [x for x in g if x not in alpha]
        for beta in combinations(rest, n):
            yield HypergeometricParameters(alpha, beta)


def random_generic_irreducible(rng: random.Random, n, max_denominator, interlacing_bias=0.5):
    """Random tuple; with probability ``interlacing_bias`` the 2n values are
    assigned alternately, so that both verdicts are well represented."""
    g = grid(max_denominator)
    vals = sorted(rng.sample(g, 2 * n))
    if rng.random() < interlacing_bias:
        first, second = vals[0::2], vals[1::2]
        alpha, beta = (first, second) if rng.random() < 0.5 else (second, first)
    else:
        rng.shuffle(vals)
        alpha, beta = vals[:n], vals[n:]
    return normalize(alpha, beta)


@st.composite
def generic_params(draw, max_n=4, max_conductor=12, min_n=1):
    """Generic irreducible tuples with all entries in (1/N)Z, N <= max_conductor."""
    n = draw(st.integers(min_n, max_n))
    N = draw(st.integers(max(1, 2 * n), max(2 * n, max_conductor)))
    ks = draw(st.lists(st.integers(0, N - 1), min_size=2 * n, max_size=2 * n, unique=True))
    return normalize([Fraction(k, N) for k in ks[:n]], [Fraction(k, N) for k in ks[n:]])


@st.composite
def any_params(draw, max_n=4, max_conductor=12):
    """Normalized tuples with repeats and collisions allowed."""
    n = draw(st.integers(1, max_n))
    N = draw(st.integers(1, max_conductor))
    ks = st.integers(0, N - 1).map(lambda k: Fraction(k, N))
    a = draw(st.lists(ks, min_size=n, max_size=n))
    b = draw(st.lists(ks, min_size=n, max_size=n))
    return normalize(a, b)


raw_rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
