"""Named verification suites shared by the CLI and the acceptance tests."""

from __future__ import annotations

import random
from typing import Callable

from . import hopf, oracle, pbw
from .tensor import verify_braided_associativity, verify_sigma_multiplicativity
from .classical import ClassicalStraightener
from .report import Report
from .sampling import random_word
from .scalar import ZERO, q_binomial, quantum_plane_coefficients

SUITE_NAMES = (
    "sigma",
    "serre",
    "coassoc",
    "counit",
    "antipode",
    "hexagon",
    "additional",
    "pbw",
    "qbinomial",
    "all",
)


def verify_qbinomial(m_max: int = 12, brute_force_max: int = 8) -> list[Report]:
    pascal = Report("q-binomial-pascal", 0, m_max)
    alternating = Report("q-binomial-alternating", 0, m_max)
    plane = Report("q-binomial-quantum-plane", 0, min(m_max, brute_force_max))
    for e in (1, 2):
        for m in range(1, m_max):
            for i in range(1, m + 1):
                lhs = q_binomial(m + 1, i, e)
                rhs = q_binomial(m, i - 1, e) + q_binomial(m, i, e).shift(e * i)
                pascal.record(lhs == rhs, f"Pascal recurrence fails at ({m + 1},{i}), base q^{e}")
    for m in range(1, m_max + 1):
        total = ZERO
        for i in range(m + 1):
            total += q_binomial(m, i, 2).shift(i * (i - 1)) * (-1 if i % 2 else 1)
        alternating.record(total.is_zero(), f"alternating sum at m={m} is {total}")
    for e in (1, 2):
        for m in range(min(m_max, brute_force_max) + 1):
            brute = quantum_plane_coefficients(m, e)
            ok = all(brute[i] == q_binomial(m, i, e) for i in range(m + 1))
            plane.record(ok, f"quantum plane expansion disagrees at m={m}, base q^{e}")
    return [pascal, alternating, plane]


def verify_classical_specialization(
    n: int, degree: int = 4, samples: int = 50, seed: int = 0
) -> Report:
    """At q = 1 the normal forms match classical U(sl_{n+1}^+) straightening."""
    alg = pbw.algebra(n)
    classical = ClassicalStraightener(n)
    rng = random.Random(seed)
    report = Report("classical-specialization", n, degree)
    for _ in range(samples):
        word = random_word(alg, rng, degree, min_len=1)
        quantum = alg.from_letter_word(word)
        at_one: dict = {}
        for m, c in quantum.terms.items():
            value = c.evaluate(1)
            if value:
                key = tuple((l.i, l.j) for l in (alg.letters[k] for k in m))
                at_one[key] = int(value)
        expected = classical.normal_form([(l.i, l.j) for l in word])
        report.record(at_one == expected, f"q=1 mismatch on {'*'.join(map(str, word))}")
    return report


def _sigma_suite(n, degree, seed, samples, **_):
    return [
        verify_sigma_multiplicativity(n, degree, samples, seed),
        verify_braided_associativity(n, min(degree, 2), samples, seed),
    ]


def _serre_suite(n, degree, seed, samples, **_):
    return [pbw.verify_serre_relations(n), hopf.verify_serre_compatibility(n)]


def _coassoc_suite(n, degree, seed, samples, **_):
    return [
        hopf.verify_coassociativity(n, degree, samples, seed),
        hopf.verify_coproduct_morphism(n, degree, samples, seed),
        hopf.verify_coproduct_recursion(n),
        hopf.verify_power_coproduct(n, 8),
        hopf.verify_split_power_products(n, 4, samples, seed),
    ]


def _counit_suite(n, degree, seed, samples, **_):
    return [hopf.verify_counit(n, degree, samples, seed)]


def _antipode_suite(n, degree, seed, samples, **_):
    return [
        hopf.verify_antipode_axiom(n, degree, samples, seed),
        hopf.verify_antipode_closed_form(n, 5 if n <= 3 else 4),
        hopf.verify_antipode_powers(n, 8),
        hopf.verify_antimorphism(n, degree, samples, seed),
        hopf.verify_opposite_tlie(n),
    ]


def _hexagon_suite(n, degree, seed, samples, **_):
    return [hopf.verify_hexagon(n, degree, samples, seed)]


def _additional_suite(n, degree, seed, samples, **_):
    return [hopf.verify_additional_condition(n, degree, samples, seed)]


def _pbw_suite(n, degree, seed, samples, **_):
    alg = pbw.algebra(n)
    limit = min(degree, oracle.default_degree_limit(n))
    return [
        alg.check_confluence(),
        pbw.verify_root_vectors(n),
        pbw.verify_straightening_strategies(n, degree, samples, seed),
        oracle.certify_pbw(n, limit).to_report(),
        verify_classical_specialization(n, degree, samples, seed),
    ]


def _qbinomial_suite(n, degree, seed, samples, m_max=12, **_):
    return verify_qbinomial(m_max)


SUITES: dict[str, Callable[..., list[Report]]] = {
    "sigma": _sigma_suite,
    "serre": _serre_suite,
    "coassoc": _coassoc_suite,
    "counit": _counit_suite,
    "antipode": _antipode_suite,
    "hexagon": _hexagon_suite,
    "additional": _additional_suite,
    "pbw": _pbw_suite,
    "qbinomial": _qbinomial_suite,
}


def run_suite(
    suite: str, n: int, degree: int = 3, seed: int = 0, samples: int = 25, m_max: int = 12
) -> tuple[int, list[Report]]:
    """Run a named suite; the exit code is 1 iff some report has failures."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    names = [s for s in SUITE_NAMES if s != "all"] if suite == "all" else [suite]
    reports: list[Report] = []
    for name in names:
        reports.extend(SUITES[name](n, degree, seed, samples, m_max=m_max))
    code = 0 if all(r.ok for r in reports) else 1
    return code, reports
