from __future__ import annotations

import pytest

from uqplus import oracle, pbw
from uqplus.linalg import rank
from uqplus.scalar import ONE, Q, LaurentScalar


def test_component_dimensions_small():
    assert oracle.component_dimension(2, (1, 1)) == 2
    assert oracle.component_dimension(2, (2, 1)) == 2
    assert oracle.component_dimension(1, (5,)) == 1
    assert oracle.pbw_count(2, (1, 1)) == 2
    assert oracle.pbw_count(2, (2, 1)) == 2


def test_free_words():
    words = list(oracle.words_of_degree(2, (2, 1)))
    assert sorted(words) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]


@pytest.mark.parametrize("n,limit", [(1, 8), (2, 5), (3, 4)])
def test_certificate(n, limit):
    cert = oracle.certify_pbw(n, limit)
    assert cert.ok
    for comp in cert.components:
        assert comp.quotient_dim == comp.pbw_count


def test_exact_and_probabilistic_ranks_agree():
    for d in oracle.multidegrees_up_to(3, 4):
        assert oracle.relation_rank(3, d, "exact") == oracle.relation_rank(3, d, "probabilistic")


def test_degree_limit():
    with pytest.raises(oracle.DegreeLimitError):
        oracle.graded_component(3, (4, 4, 4))
    with pytest.raises(ValueError):
        oracle.relation_rank(2, (1, 1), mode="fast")


def test_oracle_agrees_with_straightening():
    # x2*x1 reduced by the oracle equals the PBW answer expanded into words
    alg = pbw.algebra(2)
    value = alg.gen(2) * alg.gen(1)
    poly = {}
    for m, c in value.terms.items():
        words = {(): ONE}
        for l, e in alg.monomial_letters(m):
            for _ in range(e):
                exp = alg.root_vector_expansion(l.i, l.j)
                words = {w + v: a * b for w, a in words.items() for v, b in exp.items()}
        for w, a in words.items():
            poly[w] = poly.get(w, LaurentScalar()) + a * c
    assert oracle.oracle_reduce(2, poly) == oracle.oracle_normal_form(2, (2, 1))


def test_oracle_detects_difference():
    assert oracle.oracle_normal_form(2, (1, 2)) != oracle.oracle_normal_form(2, (2, 1))
    serre = {(1, 1, 2): ONE, (1, 2, 1): -(Q + Q ** -1), (2, 1, 1): ONE}
    assert oracle.oracle_reduce(2, serre).is_zero()


def test_certificate_json_shape():
    data = oracle.certify_pbw(2, 3).to_json()
    assert set(data) == {"n", "limit", "components"}
    assert set(data["components"][0]) == {
        "degree", "words", "rank", "quotient_dim", "pbw_count", "kernel_ok", "match",
    }


def test_bareiss_rank_integers():
    rows = [[2, 4, 6], [1, 2, 3], [0, 1, 1]]
    assert rank(rows, lambda a, b: a // b, 1) == 2
