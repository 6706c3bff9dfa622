"""Hilbert symbols against direct local solvability of a x^2 + b y^2 = z^2."""

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lattice_angles.exactnum import odd_primes, squarefree_int
from lattice_angles.hilbert import INF, hilbert_product_check, hilbert_symbol, parse_place, support_places

nonzero_rationals = st.fractions(min_value=-(10**4), max_value=10**4, max_denominator=10**4).filter(bool)
places = st.sampled_from([INF, 2, 3, 5, 7, 11, 13, 101])


def signed_squarefree(n: int) -> int:
    return squarefree_int(abs(n)) * (1 if n > 0 else -1)


def locally_solvable(a: int, b: int, p: int) -> bool:
    """Primitive solution of a x^2 + b y^2 = z^2 modulo p^3 (2^6 at p = 2).

    With a, b square-free this precision is enough for Hensel lifting, so it
    is an independent oracle for (a, b)_p = 1.
    """
    m = 64 if p == 2 else p**3
    xs = np.arange(m)
    sq = xs * xs % m
    all_squares = np.zeros(m, bool)
    all_squares[sq] = True
    unit_squares = np.zeros(m, bool)
    unit_squares[sq[xs % p != 0]] = True
    vals = (a * sq[:, None] + b * sq[None, :]) % m
    unit_xy = (xs[:, None] % p != 0) | (xs[None, :] % p != 0)
    return bool(np.any(np.where(unit_xy, all_squares[vals], unit_squares[vals])))


SQUAREFREE = [n for n in range(-30, 31) if n and signed_squarefree(n) == n]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_symbol_matches_local_solvability(p):
    for a in SQUAREFREE:
        for b in SQUAREFREE:
            expected = 1 if locally_solvable(a, b, p) else -1
            assert hilbert_symbol(a, b, p) == expected, (a, b, p)


def test_real_place():
    assert hilbert_symbol(-1, -1, INF) == -1
    assert hilbert_symbol(-1, 2, INF) == 1
    assert hilbert_symbol(Fraction(-3, 7), Fraction(-1, 2), INF) == -1


@pytest.mark.parametrize("a, b, place, expected", [(3, 3, 3, -1), (2, 5, 5, -1), (3, 3, 2, -1), (3, 3, INF, 1), (-1, -1, 2, -1)])
def test_symbol_examples(a, b, place, expected):
    assert hilbert_symbol(a, b, place) == expected


@pytest.mark.parametrize("pair", [(3, 3), (-1, -1), (5, 7), (Fraction(5, 12), Fraction(-7, 3))])
def test_product_formula_examples(pair):
    assert hilbert_product_check(*pair)


@given(nonzero_rationals, nonzero_rationals, places)
def test_symmetry(a, b, v):
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)


@given(nonzero_rationals, nonzero_rationals, nonzero_rationals, places)
def test_bimultiplicative(a, b, c, v):
    assert hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v)


@given(nonzero_rationals, nonzero_rationals, places)
def test_square_second_argument_is_trivial(a, b, v):
    assert hilbert_symbol(a, b * b, v) == 1


@given(nonzero_rationals.filter(lambda x: x != 1), places)
def test_a_one_minus_a(a, v):
    assert hilbert_symbol(a, 1 - a, v) == 1


@given(nonzero_rationals, nonzero_rationals)
def test_product_formula(a, b):
    assert hilbert_product_check(a, b)


@given(nonzero_rationals, nonzero_rationals, nonzero_rationals, places)
def test_square_insensitive(a, b, k, v):
    assert hilbert_symbol(a * k * k, b, v) == hilbert_symbol(a, b, v)


@given(nonzero_rationals, nonzero_rationals)
def test_trivial_outside_support(a, b):
    support = set(support_places(a, b))
    for p in odd_primes(60):
        if p not in support:
            assert hilbert_symbol(a, b, p) == 1


@pytest.mark.parametrize("p", odd_primes(200))
def test_p_p_at_p(p):
    assert hilbert_symbol(p, p, p) == (-1) ** ((p - 1) // 2)


def test_two_two_at_two():
    assert hilbert_symbol(2, 2, 2) == 1


def test_rejects_zero_and_non_primes():
    with pytest.raises(ValueError):
        hilbert_symbol(0, 3, 3)
    with pytest.raises(ValueError):
        hilbert_symbol(2, 3, 9)
    with pytest.raises(ValueError):
        parse_place("x")
    assert parse_place("inf") == INF and parse_place("7") == 7


def test_random_pairs_deterministic_sample():
    rng = random.Random(7)
    for _ in range(200):
        a = Fraction(rng.randint(1, 10**4), rng.randint(1, 10**4)) * rng.choice((1, -1))
        b = Fraction(rng.randint(1, 10**4), rng.randint(1, 10**4)) * rng.choice((1, -1))
        assert hilbert_product_check(a, b)
