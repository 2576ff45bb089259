"""Classical U(sl_{n+1}^+) straightening, used as the q = 1 reference.

Brackets come from honest matrix commutators of elementary matrices, so this
model shares nothing with the quantum rule table except the letter order.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

Pair = tuple[int, int]
ClassicalWord = tuple[Pair, ...]


def _key(letter: Pair) -> tuple[int, int]:
    i, j = letter
    return (i + j, j)


@lru_cache(maxsize=None)
def _commutator(n: int, v: Pair, u: Pair) -> tuple[tuple[int, Pair], ...]:
    """[v, u] = vu - uv expanded in elementary matrices."""
    size = n + 1
    a = np.zeros((size, size), dtype=np.int64)
    b = np.zeros((size, size), dtype=np.int64)
    a[v[0] - 1, v[1] - 1] = 1
    b[u[0] - 1, u[1] - 1] = 1
    c = a @ b - b @ a
    rows, cols = np.nonzero(c)
    return tuple((int(c[r, k]), (int(r) + 1, int(k) + 1)) for r, k in zip(rows, cols))


class ClassicalStraightener:
    def __init__(self, n: int):
        self.n = n
        self._cache: dict[ClassicalWord, dict[ClassicalWord, int]] = {}

    def normal_form(self, word) -> dict[ClassicalWord, int]:
        word = tuple(tuple(l) for l in word)
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        for k in range(len(word) - 1):
            if _key(word[k]) > _key(word[k + 1]):
                break
        else:
            return {word: 1}
        v, u = word[k], word[k + 1]
        head, tail = word[:k], word[k + 2:]
        out: dict[ClassicalWord, int] = {}
        # vu = uv + [v, u]
        pieces = [(1, (u, v))] + [(c, (l,)) for c, l in _commutator(self.n, v, u)]
        for coeff, mid in pieces:
            for w, c in self.normal_form(head + mid + tail).items():
                out[w] = out.get(w, 0) + coeff * c
        out = {w: c for w, c in out.items() if c}
        self._cache[word] = out
        return out
