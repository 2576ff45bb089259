from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uqplus.scalar import ONE, Q, ZERO, LaurentScalar, evaluate, q_binomial, quantum_plane_coefficients

laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentScalar)


def test_basic_products():
    a = LaurentScalar({-1: 1, 1: 1})
    assert a * a == LaurentScalar({-2: 1, 0: 2, 2: 1})
    assert (Q - Q ** -1) * (Q + Q ** -1) == Q ** 2 - Q ** -2
    assert Q * Q ** -1 == ONE


def test_rendering():
    assert str(LaurentScalar({-1: 1, 0: 2, 3: 1})) == "q^-1 + 2 + q^3"
    assert str(LaurentScalar({3: 2})) == "2*q^3"
    assert str(-Q) == "-q"
    assert str(ZERO) == "0"


def test_int_equality_and_hash():
    assert LaurentScalar(3) == 3
    assert hash(LaurentScalar(3)) == hash(3)
    assert LaurentScalar({1: 1}) != 1


def test_negative_power_of_unit():
    assert (LaurentScalar({2: -1})) ** -1 == LaurentScalar({-2: -1})
    assert (LaurentScalar({2: -1})) ** -2 == LaurentScalar({-4: 1})
    with pytest.raises(ValueError):
        (Q + 1) ** -1


def test_divexact():
    a = Q + Q ** -1
    b = Q ** 3 - 2 + Q ** -2
    assert (a * b).divexact(b) == a
    with pytest.raises(ArithmeticError):
        (Q + 2).divexact(Q + 1)


def test_evaluate():
    assert evaluate(Q + Q ** -1, 2) == Fraction(5, 2)
    with pytest.raises(ValueError):
        evaluate(Q ** -1, 0)


def test_json_round_trip():
    a = LaurentScalar({-2: 3, 0: -1, 5: 7})
    assert a.to_json() == [[-2, 3], [0, -1], [5, 7]]
    assert LaurentScalar.from_json(a.to_json()) == a


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(laurent, laurent, st.sampled_from([2, 3, -5, Fraction(1, 3)]))
def test_evaluation_is_a_ring_morphism(a, b, x):
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


@given(laurent, st.integers(-4, 4))
def test_shift_is_multiplication_by_q_power(a, k):
    assert a.shift(k) == a * LaurentScalar.q_power(k)


def test_small_q_binomials():
    assert q_binomial(2, 1) == 1 + Q
    assert q_binomial(4, 2) == LaurentScalar({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert q_binomial(3, 1, 2) == 1 + Q ** 2 + Q ** 4
    with pytest.raises(ValueError):
        q_binomial(2, 3)


@pytest.mark.parametrize("e", [1, 2])
def test_pascal_recurrence(e):
    for m in range(1, 12):
        for i in range(1, m + 1):
            assert q_binomial(m + 1, i, e) == q_binomial(m, i - 1, e) + q_binomial(m, i, e).shift(e * i)


def test_alternating_sum_vanishes():
    for m in range(1, 13):
        total = sum(
            (q_binomial(m, i, 2).shift(i * (i - 1)) * (-1) ** i for i in range(m + 1)), ZERO
        )
        assert total == ZERO


@pytest.mark.parametrize("e", [1, 2, 3])
def test_quantum_plane_brute_force(e):
    for m in range(8):
        brute = quantum_plane_coefficients(m, e)
        assert brute == [q_binomial(m, i, e) for i in range(m + 1)]


def test_classical_limit():
    from math import comb

    for m in range(10):
        for i in range(m + 1):
            assert q_binomial(m, i).evaluate(1) == comb(m, i)
