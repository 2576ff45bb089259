from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uqplus import pbw
from uqplus.parser import ParseError, parse, parse_element
from uqplus.sampling import random_element
from uqplus.scalar import Q


def test_examples():
    alg = pbw.algebra(2)
    x1, x2 = alg.gen(1), alg.gen(2)
    assert parse_element("x1*x2 - q^-1*x2*x1", alg) == alg.root_vector(1, 3)
    assert parse_element("x1 x2", alg) == x1 * x2
    assert parse_element("(q + q^-1) x1^2", alg) == (Q + Q ** -1) * x1 * x1
    assert parse_element("-x1 + 3", alg) == 3 - x1
    assert parse_element("e[1,3]", alg) == alg.root_vector(1, 3)
    assert parse_element("e[1,3]^2", alg) == alg.root_vector(1, 3) * alg.root_vector(1, 3)
    assert parse_element("(q+q^-1)*x1*x2*x1", alg) == (Q + Q ** -1) * x1 * x2 * x1
    assert parse_element("x1*x1*x2 - (q+q^-1)*x1*x2*x1 + x2*x1*x1", alg).is_zero()
    assert parse_element("1", alg) == alg.one()


@pytest.mark.parametrize(
    "text,pos",
    [("x1 +", 4), ("x3", 0), ("e[1,4]", 0), ("x1^-2", 0), ("x1 $ x2", 3), ("(x1", 3)],
)
def test_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as err:
        parse(text, 2)
    assert err.value.position == pos


@given(st.integers(0, 10_000), st.sampled_from([1, 2, 3]))
def test_render_then_parse_round_trip(seed, n):
    alg = pbw.algebra(n)
    a = random_element(alg, random.Random(seed), 4)
    assert parse_element(str(a), alg) == a


def test_zero_round_trip():
    alg = pbw.algebra(2)
    assert str(alg.zero()) == "0"
    assert parse_element("0", alg) == alg.zero()
