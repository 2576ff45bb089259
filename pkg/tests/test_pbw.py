from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uqplus import pbw
from uqplus.pbw import Letter, c_pairing, compare_letters
from uqplus.sampling import random_element
from uqplus.scalar import ONE, Q, LaurentScalar


def test_letter_order():
    alg = pbw.algebra(3)
    assert [str(l) for l in alg.letters] == ["x1", "e[1,3]", "x2", "e[1,4]", "e[2,4]", "x3"]
    assert compare_letters(Letter(1, 2), Letter(2, 3)) == -1
    assert compare_letters(Letter(2, 3), Letter(2, 3)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_pairing_symmetric_and_equals_weight_product(n):
    alg = pbw.algebra(n)
    for u in alg.letters:
        for v in alg.letters:
            assert c_pairing(u, v) == c_pairing(v, u)
            dot = sum(a * b for a, b in zip(u.weight(n), v.weight(n)))
            assert c_pairing(u, v) == dot


def test_pairing_on_generators():
    assert c_pairing(Letter(1, 2), Letter(1, 2)) == 2
    assert c_pairing(Letter(1, 2), Letter(2, 3)) == -1
    assert c_pairing(Letter(1, 2), Letter(3, 4)) == 0


def test_worked_product():
    alg = pbw.algebra(2)
    x1, x2 = alg.gen(1), alg.gen(2)
    assert x2 * x1 == Q * x1 * x2 - Q * alg.root_vector(1, 3)
    assert str(x2 * x1) == "-q*e[1,3] + q*x1*x2"


def test_root_vector_definition():
    alg = pbw.algebra(2)
    x1, x2 = alg.gen(1), alg.gen(2)
    assert x1 * x2 - Q ** -1 * x2 * x1 == alg.root_vector(1, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_serre_relations_vanish(n):
    assert pbw.verify_serre_relations(n).ok


@pytest.mark.parametrize("n", [2, 3, 4])
def test_root_vector_expansions_agree(n):
    assert pbw.verify_root_vectors(n).ok


@pytest.mark.parametrize("n,triples", [(1, 0), (2, 1), (3, 20), (4, 120)])
def test_confluence(n, triples):
    report = pbw.algebra(n).check_confluence()
    assert report.instances == triples
    assert report.ok, report.failures


@pytest.mark.parametrize("n", [2, 3])
def test_strategies_agree(n):
    assert pbw.verify_straightening_strategies(n, degree=5, samples=60, seed=3).ok


def test_presymmetry_is_involution():
    alg = pbw.algebra(3)
    for u in alg.letters:
        for v in alg.letters:
            c1, a, b = alg.presymmetry(u, v)
            c2, a2, b2 = alg.presymmetry(a, b)
            assert (a2, b2) == (u, v)
            assert c1 * c2 == ONE


def test_bracket_antisymmetry_through_presymmetry():
    alg = pbw.algebra(3)
    for u in alg.letters:
        for v in alg.letters:
            if u == v:
                continue
            c, a, b = alg.presymmetry(u, v)
            assert alg.bracket(u, v) == -(alg.bracket(a, b) * c)


def test_pseudobracket_example():
    alg = pbw.algebra(3)
    t = alg.pseudobracket(Letter(1, 3), Letter(2, 4))
    assert str(t) == "(-q^-1 + q)*x2 (x) e[1,4]"


def test_straightening_rule_table():
    alg = pbw.algebra(2)
    rules = list(alg.rules())
    assert len(rules) == 3
    rule = alg.straightening_rule(Letter(1, 2), Letter(2, 3))
    assert rule.q_power == 1
    assert rule.bracket_term == (Letter(1, 3), ONE)
    with pytest.raises(ValueError):
        alg.straightening_rule(Letter(2, 3), Letter(1, 2))


def test_rank_cap(monkeypatch):
    monkeypatch.setattr(pbw, "MAX_RANK", 3)
    with pytest.raises(ValueError):
        pbw.algebra(4)
    assert pbw.algebra(3).n == 3


def _scaled_elements(n):
    alg = pbw.algebra(n)
    return st.integers(0, 10_000).map(lambda s: random_element(alg, random.Random(s), 3))


@given(_scaled_elements(3), _scaled_elements(3), _scaled_elements(3))
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(_scaled_elements(3), _scaled_elements(3), _scaled_elements(3))
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(_scaled_elements(2), _scaled_elements(2))
def test_products_respect_weights(a, b):
    alg = a.algebra
    product = a * b
    for m in product.terms:
        w = alg.monomial_weight(m)
        assert any(
            tuple(x + y for x, y in zip(alg.monomial_weight(ma), alg.monomial_weight(mb))) == w
            for ma in a.terms
            for mb in b.terms
        )


def test_monomial_products_preserve_multidegree():
    alg = pbw.algebra(3)
    for word in itertools.product(range(len(alg.letters)), repeat=3):
        value = alg.from_letter_word([alg.letters[k] for k in word])
        expected = tuple(sum(col) for col in zip(*(alg.letters[k].multidegree(3) for k in word)))
        assert value.multidegrees() <= {expected}


def test_classical_specialization():
    from uqplus.suites import verify_classical_specialization

    for n in (1, 2, 3):
        assert verify_classical_specialization(n, degree=4, samples=50, seed=n).ok


def test_element_json_round_trip():
    alg = pbw.algebra(3)
    a = random_element(alg, random.Random(7), 4)
    assert pbw.AlgebraElement.from_json(alg, a.to_json()) == a


def test_power_of_generator():
    alg = pbw.algebra(1)
    x = alg.gen(1)
    assert x ** 3 == x * x * x
    assert x ** 0 == alg.one()


def test_bad_letters():
    with pytest.raises(ValueError):
        Letter(2, 2)
    alg = pbw.algebra(2)
    with pytest.raises(ValueError):
        alg.letter(1, 4)


def test_scalar_multiplication_mixes_types():
    alg = pbw.algebra(2)
    x1 = alg.gen(1)
    assert 2 * x1 == x1 + x1
    assert (x1 * LaurentScalar({1: 1})).coefficient((0,)) == Q
