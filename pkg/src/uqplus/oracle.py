"""Brute-force model: the free algebra on x_1..x_n modulo the Serre ideal.

Each multidegree component is finite dimensional, so the quotient dimension is
(number of words) - rank(span of w * r * w'), computed exactly over
Z[q, q^-1].  Comparing against the number of PBW monomials certifies the PBW
basis degree by degree, without trusting the straightening rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional

from .linalg import bareiss_echelon
from .pbw import algebra, serre_relations
from .report import Report
from .scalar import ONE, ZERO, LaurentScalar

__all__ = [
    "DegreeLimitError",
    "GradedComponent",
    "OracleCoordinates",
    "default_degree_limit",
    "words_of_degree",
    "graded_component",
    "component_dimension",
    "pbw_count",
    "oracle_normal_form",
    "oracle_reduce",
    "certify_pbw",
    "PBWCertificate",
]

FreeWord = tuple[int, ...]
PROBE_VALUES = (2, 3, 5)


class DegreeLimitError(ValueError):
    pass


def default_degree_limit(n: int) -> int:
    if n == 1:
        return 12
    if n <= 3:
        return 6
    if n == 4:
        return 4
    return 3


def _check_degree(n: int, d: tuple[int, ...], limit: Optional[int]) -> None:
    if len(d) != n:
        raise ValueError(f"multidegree {d} does not have {n} entries")
    if any(x < 0 for x in d):
        raise ValueError(f"multidegree {d} has negative entries")
    limit = default_degree_limit(n) if limit is None else limit
    if sum(d) > limit:
        raise DegreeLimitError(f"|{d}| = {sum(d)} exceeds the degree limit {limit}")


def words_of_degree(n: int, d: tuple[int, ...]) -> Iterator[FreeWord]:
    """All words in 1..n using generator k exactly d[k-1] times, in lex order."""
    counts = list(d)
    total = sum(counts)
    word: list[int] = []

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for k in range(n):
            if counts[k]:
                counts[k] -= 1
                word.append(k + 1)
                yield from rec()
                word.pop()
                counts[k] += 1

    yield from rec()


def word_multidegree(n: int, word: FreeWord) -> tuple[int, ...]:
    d = [0] * n
    for k in word:
        if not 1 <= k <= n:
            raise ValueError(f"generator index {k} out of range for rank {n}")
        d[k - 1] += 1
    return tuple(d)


@dataclass
class GradedComponent:
    n: int
    degree: tuple[int, ...]
    basis: list[FreeWord]
    relation_span: list[list[LaurentScalar]]

    @property
    def dim(self) -> int:
        return len(self.basis)


@lru_cache(maxsize=None)
def _component(n: int, d: tuple[int, ...]) -> GradedComponent:
    basis = list(words_of_degree(n, d))
    index = {w: k for k, w in enumerate(basis)}
    rows: list[list[LaurentScalar]] = []
    for _, rel in serre_relations(n):
        rd = word_multidegree(n, next(iter(rel)))
        rest = tuple(a - b for a, b in zip(d, rd))
        if any(x < 0 for x in rest):
            continue
        for pad in words_of_degree(n, rest):
            for p in range(len(pad) + 1):
                row = [ZERO] * len(basis)
                for rw, c in rel.items():
                    row[index[pad[:p] + rw + pad[p:]]] += c
                rows.append(row)
    return GradedComponent(n, d, basis, rows)


def graded_component(n: int, d, limit: Optional[int] = None) -> GradedComponent:
    d = tuple(d)
    _check_degree(n, d, limit)
    return _component(n, d)


def _clear_q_content(row: list[LaurentScalar]) -> list[LaurentScalar]:
    lows = [c.min_exponent() for c in row if c]
    if not lows:
        return row
    k = min(lows)
    return [c.shift(-k) for c in row]


def _laurent_div(a: LaurentScalar, b: LaurentScalar) -> LaurentScalar:
    return a.divexact(b)


@lru_cache(maxsize=None)
def _exact_echelon(n: int, d: tuple[int, ...]):
    comp = _component(n, d)
    rows = [_clear_q_content(r) for r in comp.relation_span]
    return bareiss_echelon(rows, _laurent_div, ONE)


def relation_rank(n: int, d, mode: str = "exact", limit: Optional[int] = None) -> int:
    if mode not in ("exact", "probabilistic"):
        raise ValueError(f"unknown rank mode {mode!r}")
    comp = graded_component(n, d, limit)
    if not comp.relation_span:
        return 0
    if mode == "exact":
        return len(_exact_echelon(n, comp.degree)[1])
    # probabilistic: rank at a few integer points never exceeds the generic rank
    best = 0
    for value in PROBE_VALUES:
        numeric = [[c.evaluate(value) for c in row] for row in comp.relation_span]
        _, piv = bareiss_echelon(numeric, lambda a, b: a / b, Fraction(1))
        best = max(best, len(piv))
    return best


def component_dimension(n: int, d, mode: str = "exact", limit: Optional[int] = None) -> int:
    comp = graded_component(n, d, limit)
    return comp.dim - relation_rank(n, comp.degree, mode, limit)


@lru_cache(maxsize=None)
def _pbw_count(n: int, d: tuple[int, ...], start: int) -> int:
    if not any(d):
        return 1
    alg = algebra(n)
    total = 0
    for k in range(start, len(alg.letters)):
        md = alg.multidegrees[k]
        rest = tuple(a - b for a, b in zip(d, md))
        if all(x >= 0 for x in rest):
            total += _pbw_count(n, rest, k)
    return total


def pbw_count(n: int, d) -> int:
    """Number of PBW monomials (letter multisets) of multidegree d."""
    d = tuple(d)
    if len(d) != n or any(x < 0 for x in d):
        raise ValueError(f"bad multidegree {d} for rank {n}")
    return _pbw_count(n, d, 0)


@dataclass
class OracleCoordinates:
    """Class of a homogeneous element modulo the Serre ideal.

    Stored as ``coords / denominator`` on the words that are not pivots of the
    echelonized relation span; compared by cross multiplication.
    """

    degree: tuple[int, ...]
    coords: dict[FreeWord, LaurentScalar]
    denominator: LaurentScalar = field(default=ONE)

    def is_zero(self) -> bool:
        return not self.coords

    def __eq__(self, other) -> bool:
        if not isinstance(other, OracleCoordinates):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.degree != other.degree or set(self.coords) != set(other.coords):
            return False
        return all(
            self.coords[w] * other.denominator == other.coords[w] * self.denominator
            for w in self.coords
        )


def oracle_reduce(n: int, poly: dict[FreeWord, LaurentScalar], limit: Optional[int] = None) -> OracleCoordinates:
    """Reduce a homogeneous combination of words modulo the relation span."""
    poly = {w: LaurentScalar.coerce(c) for w, c in poly.items() if c}
    if not poly:
        return OracleCoordinates((), {}, ONE)
    degrees = {word_multidegree(n, w) for w in poly}
    if len(degrees) != 1:
        raise ValueError("oracle reduction needs a homogeneous element")
    (d,) = degrees
    comp = graded_component(n, d, limit)
    index = {w: k for k, w in enumerate(comp.basis)}
    vec = [ZERO] * comp.dim
    for w, c in poly.items():
        vec[index[w]] += c
    denom = ONE
    if comp.relation_span:
        rows, pivots = _exact_echelon(n, d)
        for row, pc in zip(rows, pivots):
            a = vec[pc]
            if not a:
                continue
            piv = row[pc]
            vec = [piv * x - a * y for x, y in zip(vec, row)]
            denom = denom * piv
    coords = {comp.basis[k]: c for k, c in enumerate(vec) if c}
    return OracleCoordinates(d, coords, denom)


def oracle_normal_form(n: int, word, limit: Optional[int] = None) -> OracleCoordinates:
    return oracle_reduce(n, {tuple(word): ONE}, limit)


@dataclass
class ComponentResult:
    degree: tuple[int, ...]
    words: int
    rank: int
    quotient_dim: int
    pbw_count: int
    kernel_ok: bool

    @property
    def match(self) -> bool:
        return self.quotient_dim == self.pbw_count and self.kernel_ok

    def to_json(self) -> dict:
        return {
            "degree": list(self.degree),
            "words": self.words,
            "rank": self.rank,
            "quotient_dim": self.quotient_dim,
            "pbw_count": self.pbw_count,
            "kernel_ok": self.kernel_ok,
            "match": self.match,
        }


@dataclass
class PBWCertificate:
    n: int
    limit: int
    components: list[ComponentResult]

    @property
    def ok(self) -> bool:
        return all(c.match for c in self.components)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "limit": self.limit,
            "components": [c.to_json() for c in self.components],
        }

    def to_report(self) -> Report:
        report = Report("pbw-certificate", self.n, self.limit)
        for c in self.components:
            report.record(
                c.match,
                f"degree {c.degree}: words={c.words} rank={c.rank} "
                f"quotient={c.quotient_dim} pbw={c.pbw_count} kernel_ok={c.kernel_ok}",
            )
        return report


def multidegrees_up_to(n: int, limit: int) -> Iterator[tuple[int, ...]]:
    for total in range(1, limit + 1):
        for d in product(range(total + 1), repeat=n):
            if sum(d) == total:
                yield d


def _normal_form_check(n: int, comp: GradedComponent) -> tuple[bool, int]:
    """Relations die under the PBW evaluation map, and its rank is the PBW count."""
    alg = algebra(n)
    images = [alg.from_generator_word(w) for w in comp.basis]
    for row in comp.relation_span:
        total = alg.zero()
        for img, c in zip(images, row):
            if c:
                total = total + img * c
        if total:
            return False, -1
    monos = sorted({m for img in images for m in img.terms})
    col = {m: k for k, m in enumerate(monos)}
    matrix = []
    for img in images:
        row = [ZERO] * len(monos)
        for m, c in img.terms.items():
            row[col[m]] = c
        matrix.append(row)
    _, piv = bareiss_echelon(matrix, _laurent_div, ONE)
    return True, len(piv)


def certify_pbw(n: int, degree_limit: int, mode: str = "exact") -> PBWCertificate:
    results = []
    for d in multidegrees_up_to(n, degree_limit):
        comp = graded_component(n, d, degree_limit)
        rk = relation_rank(n, d, mode, degree_limit)
        quotient = comp.dim - rk
        count = pbw_count(n, d)
        killed, image_rank = _normal_form_check(n, comp)
        results.append(
            ComponentResult(d, comp.dim, rk, quotient, count, killed and image_rank == count)
        )
    return PBWCertificate(n, degree_limit, results)
