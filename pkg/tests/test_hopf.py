from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uqplus import hopf, pbw
from uqplus.hopf import hopf_context
from uqplus.sampling import random_element
from uqplus.scalar import ONE, Q
from uqplus.tensor import braided_multiply, tensor


@pytest.fixture
def ctx2():
    return hopf_context(2)


def test_generator_is_primitive(ctx2):
    alg = ctx2.algebra
    x1 = alg.gen(1)
    assert ctx2.coproduct(x1) == tensor(x1, alg.one()) + tensor(alg.one(), x1)


def test_coproduct_of_root_vector(ctx2):
    alg = ctx2.algebra
    e13 = alg.root_vector(1, 3)
    one = alg.one()
    expected = tensor(e13, one) + tensor(one, e13) + tensor(alg.gen(1), alg.gen(2)) * (1 - Q ** -2)
    assert ctx2.coproduct(e13) == expected


def test_antipode_of_root_vector(ctx2):
    alg = ctx2.algebra
    e13 = alg.root_vector(1, 3)
    assert ctx2.antipode(e13) == (1 - Q ** -2) * alg.gen(1) * alg.gen(2) - e13


def test_opposite_product(ctx2):
    alg = ctx2.algebra
    x1, x2 = alg.gen(1), alg.gen(2)
    assert ctx2.opposite_multiply(x1, x2) == Q ** -1 * x2 * x1
    assert str(ctx2.opposite_multiply(x1, x2)) == "-e[1,3] + x1*x2"


def test_counit_is_constant_term(ctx2):
    alg = ctx2.algebra
    a = 3 * alg.one() + alg.gen(1) * alg.gen(2)
    assert hopf.counit(a) == 3


def test_antipode_of_powers():
    assert hopf.verify_antipode_powers(2, 8).ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_closed_form_antipode(n):
    assert hopf.verify_antipode_closed_form(n, 4).ok


@pytest.mark.parametrize("n", [2, 3])
def test_coproduct_recursion_independent_of_index(n):
    assert hopf.verify_coproduct_recursion(n).ok


def test_power_coproduct():
    assert hopf.verify_power_coproduct(2, 6).ok


def test_serre_compatibility():
    assert hopf.verify_serre_compatibility(3).ok


def test_opposite_tlie():
    assert hopf.verify_opposite_tlie(3).ok


def _elements(n, degree):
    alg = pbw.algebra(n)
    return st.integers(0, 10_000).map(lambda s: random_element(alg, random.Random(s), degree))


@given(_elements(3, 3), _elements(3, 3))
def test_coproduct_is_multiplicative(a, b):
    ctx = hopf_context(3)
    assert ctx.coproduct(a * b) == braided_multiply(ctx.coproduct(a), ctx.coproduct(b))


@given(_elements(3, 3))
def test_antipode_axiom(a):
    ctx = hopf_context(3)
    target = ctx.algebra.scalar(ctx.counit(a))
    assert ctx.convolution_right(a) == target
    assert ctx.convolution_left(a) == target


@given(_elements(2, 3), _elements(2, 3))
def test_antipode_reverses_products(a, b):
    ctx = hopf_context(2)
    assert ctx.antipode(a * b) == ctx.opposite_multiply(ctx.antipode(a), ctx.antipode(b))


@given(_elements(3, 3))
def test_coproduct_preserves_weight(a):
    ctx = hopf_context(3)
    alg = ctx.algebra
    phi = ctx.coproduct(a)
    source = {alg.monomial_weight(m) for m in a.terms}
    for key in phi.terms:
        total = tuple(map(sum, zip(*(alg.monomial_weight(m) for m in key))))
        assert total in source


@given(_elements(2, 3))
def test_counit_on_both_sides(a):
    ctx = hopf_context(2)
    phi = ctx.coproduct(a)
    assert ctx.counit_left(phi) == a
    assert ctx.counit_right(phi) == a


def test_hexagon_and_additional_condition_rank_two():
    assert hopf.verify_hexagon(2, 3, 10, 1).ok
    assert hopf.verify_additional_condition(2, 3, 10, 1).ok


def test_antipode_of_one_and_unit_scalars(ctx2):
    alg = ctx2.algebra
    assert ctx2.antipode(alg.one()) == alg.one()
    assert ctx2.antipode(alg.scalar(Q)) == alg.scalar(Q)
    assert ctx2.coproduct(alg.one()) == ctx2.one_tensor()
    assert ctx2.counit(alg.scalar(ONE)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_split_power_products(n):
    assert hopf.verify_split_power_products(n, 4, 60, seed=n).ok


def test_split_power_exponent_pairs_left_index_with_later_right_power():
    # (x1 (x) x1)(x2^2 (x) 1): x1 on the right crosses x2^2, giving q^{-2}
    ctx = hopf_context(2)
    alg = ctx.algebra
    x1, x2, one = alg.gen(1), alg.gen(2), alg.one()
    t = braided_multiply(tensor(one, x1), tensor(x2 ** 2, one))
    assert t == tensor(x2 ** 2, x1) * Q ** -2
