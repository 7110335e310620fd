"""Exact polynomial arithmetic, the variable-permuting action, and splitting."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rexcalc.polyring import Polynomial, parse_polynomial
from rexcalc.symgroup import Permutation

from conftest import random_permutation, random_polynomial


def x(i, rank=4):
    return Polynomial.variable(i, rank)


def divide_by_variable_difference(p: Polynomial, i: int) -> Polynomial:
    """Long-division oracle: p / (x_i - x_{i+1}), exact by construction.

    Written only with ring operations so it stays independent of the
    closed-form divided difference it checks.
    """
    rank = p.rank
    # view p as a polynomial in x_i with coefficients in the other variables
    by_deg: dict[int, Polynomial] = {}
    for mono, c in p.terms.items():
        d = mono[i - 1]
        rest = mono[: i - 1] + (0,) + mono[i:]
        by_deg.setdefault(d, Polynomial.zero(rank))
        by_deg[d] = by_deg[d] + Polynomial(rank, {rest: c})
    if not by_deg:
        return Polynomial.zero(rank)
    top = max(by_deg)
    a = Polynomial.variable(i + 1, rank)
    xi = Polynomial.variable(i, rank)
    quotient = Polynomial.zero(rank)
    carry = Polynomial.zero(rank)  # synthetic-division accumulator
    for d in range(top, 0, -1):
        carry = carry + by_deg.get(d, Polynomial.zero(rank))
        quotient = quotient + carry * xi ** (d - 1)
        carry = carry * a
    remainder = carry + by_deg.get(0, Polynomial.zero(rank))
    assert remainder.is_zero(), "division was not exact"
    return quotient


# -- ring arithmetic -----------------------------------------------------------


def test_additive_inverse():
    assert (x(1) + (-x(1))).is_zero()


def test_product_of_conjugates():
    assert (x(1) + x(2)) * (x(1) - x(2)) == x(1) * x(1) - x(2) * x(2)


def test_scalar_multiples():
    assert 2 * (Fraction(1, 2) * x(3)) == x(3)


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        x(1, 3) + x(1, 4)


def test_power():
    assert x(2) ** 3 == x(2) * x(2) * x(2)
    assert (x(1) ** 0) == Polynomial.one(4)


# -- symmetric group action ----------------------------------------------------


def test_action_on_variables():
    s1 = Permutation.simple_reflection(1, 4)
    assert x(1).act(s1) == x(2)
    assert (x(1) + x(2)).act(s1) == x(1) + x(2)
    s2 = Permutation.simple_reflection(2, 4)
    assert (x(1) * x(2)).act(s2) == x(1) * x(3)


def test_swap_matches_act():
    rng = random.Random(11)
    for _ in range(50):
        p = random_polynomial(rng, 4)
        i = rng.randint(1, 3)
        assert p.swap(i) == p.act(Permutation.simple_reflection(i, 4))


def test_invariance():
    assert (x(1) + x(2)).is_invariant(1)
    assert not x(1).is_invariant(1)
    assert x(3).is_invariant(1)


@given(st.data())
def test_action_is_a_group_action(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    p = random_polynomial(rng, 4)
    u = random_permutation(rng, 4)
    v = random_permutation(rng, 4)
    assert p.act(v).act(u) == p.act(u * v)


# -- Demazure operators ----------------------------------------------------------


def test_demazure_on_small_inputs():
    assert x(1).demazure(1) == Polynomial.one(4)
    assert (x(1) + x(2)).demazure(1).is_zero()


def test_demazure_square_matches_division_oracle():
    # frozen from (x1^2 - x2^2) / (x1 - x2)
    numerator = x(1) * x(1) - (x(1) * x(1)).swap(1)
    assert divide_by_variable_difference(numerator, 1) == x(1) + x(2)
    assert (x(1) * x(1)).demazure(1) == x(1) + x(2)


def test_demazure_matches_division_oracle_randomized():
    rng = random.Random(7)
    for _ in range(200):
        p = random_polynomial(rng, 4)
        i = rng.randint(1, 3)
        assert p.demazure(i) == divide_by_variable_difference(p - p.swap(i), i)


def test_demazure_properties_randomized():
    rng = random.Random(13)
    xs = [None] + [x(i) for i in range(1, 5)]
    count = 0
    for _ in range(1000):
        p = random_polynomial(rng, 4)
        i = rng.randint(1, 3)
        d = p.demazure(i)
        assert d.is_invariant(i)
        assert (p - d * xs[i]).is_invariant(i)
        assert d.demazure(i).is_zero()
        count += 1
    assert count == 1000


@given(st.data())
def test_split_reassembles(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    p = random_polynomial(rng, 4)
    i = data.draw(st.integers(1, 3))
    pi0, pi1 = p.split(i)
    assert pi0.is_invariant(i) and pi1.is_invariant(i)
    assert pi0 + pi1 * x(i) == p


# -- grading ---------------------------------------------------------------------


def test_degrees():
    assert x(1).degree() == 2
    assert (x(1) * x(2) + x(3)).degree() == 4
    assert Polynomial.zero(4).degree() == -1
    assert (x(1) * x(2)).homogeneous_degree() == 4
    assert (x(1) + Polynomial.one(4)).homogeneous_degree() is None
    assert Polynomial.zero(4).is_homogeneous_of_degree(6)


# -- canonical strings and parsing ------------------------------------------------


def test_canonical_string_is_graded_lex():
    p = x(2) + x(1) * x(1) + Polynomial.constant(Fraction(-1, 2), 4)
    assert str(p) == "x1^2 + x2 - 1/2"


def test_parse_round_trip():
    rng = random.Random(3)
    for _ in range(100):
        p = random_polynomial(rng, 4)
        assert parse_polynomial(str(p), 4) == p


def test_parse_inputs():
    assert parse_polynomial("2*(1/2*x3)", 4) == x(3)
    assert parse_polynomial("-x1^2", 4) == -(x(1) * x(1))
    with pytest.raises(ValueError):
        parse_polynomial("x9", 4)
    with pytest.raises(ValueError):
        parse_polynomial("x1 x2", 4)
