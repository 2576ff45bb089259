"""Seeded random elements for the verification sweeps."""

from __future__ import annotations

import random

from .pbw import AlgebraElement, PBWAlgebra
from .scalar import LaurentScalar


def random_scalar(rng: random.Random) -> LaurentScalar:
    k = rng.randint(-2, 2)
    c = rng.choice([-2, -1, 1, 1, 2, 3])
    out = LaurentScalar.q_power(k, c)
    if rng.random() < 0.3:
        out = out + LaurentScalar.q_power(rng.randint(-2, 2), rng.choice([-1, 1]))
    return out


def random_word(alg: PBWAlgebra, rng: random.Random, degree: int, min_len: int = 0):
    length = rng.randint(min_len, degree)
    return [rng.choice(alg.letters) for _ in range(length)]


def random_element(
    alg: PBWAlgebra, rng: random.Random, degree: int, max_terms: int = 3
) -> AlgebraElement:
    """Sum of up to ``max_terms`` scaled products of at most ``degree`` letters."""
    out = alg.zero()
    for _ in range(rng.randint(1, max_terms)):
        word = random_word(alg, rng, degree)
        out = out + alg.from_letter_word(word) * random_scalar(rng)
    return out


def random_homogeneous_word_element(
    alg: PBWAlgebra, rng: random.Random, degree: int
) -> AlgebraElement:
    """A single product of at least one and at most ``degree`` letters."""
    return alg.from_letter_word(random_word(alg, rng, degree, min_len=1))
