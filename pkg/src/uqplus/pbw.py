"""The algebra U_q^+(sl_{n+1}) in PBW normal form.

Basis letters are the root vectors ``e[i,j]`` (``1 <= i < j <= n+1``) ordered
by ``(i + j, j)``.  A PBW monomial is a non-decreasing word in that order; it
is stored as a tuple of positions into :attr:`PBWAlgebra.letters`.  Products
are brought to normal form with the straightening rules

    v*u  ->  q^{-c(u,v)} * (u*v - [u,v] - m<u,v>)          (u < v)

where ``[,]`` is the matrix bracket restricted to ordered pairs and ``<,>`` is
the pseudobracket, a (q - q^-1)-multiple of a product of two letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Optional, Tuple

from .scalar import ONE, ZERO, LaurentScalar

__all__ = [
    "MAX_RANK",
    "Letter",
    "StraighteningRule",
    "PBWAlgebra",
    "AlgebraElement",
    "algebra",
    "c_pairing",
    "compare_letters",
]

MAX_RANK = 16

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, LaurentScalar]


@dataclass(frozen=True)
class Letter:
    """Root vector ``e[i,j]``; the generator ``x_i`` is ``e[i,i+1]``."""

    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise ValueError(f"invalid basis letter e[{self.i},{self.j}]")

    @property
    def key(self) -> tuple[int, int]:
        return (self.i + self.j, self.j)

    def __lt__(self, other: "Letter") -> bool:
        return self.key < other.key

    def __le__(self, other: "Letter") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "Letter") -> bool:
        return self.key > other.key

    def __ge__(self, other: "Letter") -> bool:
        return self.key >= other.key

    @property
    def is_generator(self) -> bool:
        return self.j == self.i + 1

    @property
    def height(self) -> int:
        return self.j - self.i

    def weight(self, n: int) -> tuple[int, ...]:
        w = [0] * (n + 1)
        w[self.i - 1] += 1
        w[self.j - 1] -= 1
        return tuple(w)

    def multidegree(self, n: int) -> tuple[int, ...]:
        """Number of times each generator x_k enters the root vector."""
        return tuple(1 if self.i <= k < self.j else 0 for k in range(1, n + 1))

    def __str__(self) -> str:
        return f"x{self.i}" if self.is_generator else f"e[{self.i},{self.j}]"


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def c_pairing(u: Letter, v: Letter) -> int:
    """Integer c with [[e_ij, e_ji], e_ab] = c e_ab, for u = e_ij, v = e_ab."""
    i, j, a, b = u.i, u.j, v.i, v.j
    return -_delta(b, i) + _delta(b, j) + _delta(i, a) - _delta(j, a)


def compare_letters(u: Letter, v: Letter) -> int:
    """Sign of the comparison of u with v in the letter order."""
    if u.key == v.key:
        return 0
    return -1 if u.key < v.key else 1


@dataclass(frozen=True)
class StraighteningRule:
    """Oriented rewrite ``v*u -> q^{q_power} (u*v - bracket - pseudo)`` for u < v."""

    left: tuple[Letter, Letter]
    q_power: int
    bracket_term: Optional[tuple[Letter, LaurentScalar]] = None
    pseudo_term: Optional[tuple[tuple[Letter, Letter], LaurentScalar]] = None

    def right_side(self) -> list[tuple[LaurentScalar, tuple[Letter, ...]]]:
        """The rewritten form of ``v*u`` as (coefficient, word) pairs."""
        u, v = self.left
        unit = LaurentScalar.q_power(self.q_power)
        out = [(unit, (u, v))]
        if self.bracket_term is not None:
            letter, coeff = self.bracket_term
            out.append((-unit * coeff, (letter,)))
        if self.pseudo_term is not None:
            pair, coeff = self.pseudo_term
            out.append((-unit * coeff, pair))
        return out

    def __str__(self) -> str:
        u, v = self.left
        rhs = []
        for coeff, word in self.right_side():
            rhs.append(f"({coeff})*" + "*".join(map(str, word)))
        return f"{v}*{u} -> " + " + ".join(rhs)


_Q_MINUS_QINV = LaurentScalar({1: 1, -1: -1})


class PBWAlgebra:
    """U_q^+(sl_{n+1}) for a fixed rank n, with cached straightening data."""

    def __init__(self, n: int, max_rank: int = MAX_RANK):
        if n < 1:
            raise ValueError("rank must be at least 1")
        if n > max_rank:
            raise ValueError(f"rank {n} exceeds the configured maximum {max_rank}")
        self.n = n
        letters = [Letter(i, j) for i in range(1, n + 2) for j in range(i + 1, n + 2)]
        letters.sort(key=lambda l: l.key)
        self.letters: tuple[Letter, ...] = tuple(letters)
        self.index: dict[Letter, int] = {l: k for k, l in enumerate(letters)}
        self.weights = [l.weight(n) for l in letters]
        self.multidegrees = [l.multidegree(n) for l in letters]
        m = len(letters)
        self.pairing = [
            [c_pairing(letters[a], letters[b]) for b in range(m)] for a in range(m)
        ]
        # (v, u) with v > u  ->  [(coeff, word of positions)]
        self._rules: dict[tuple[int, int], list[tuple[LaurentScalar, Monomial]]] = {}
        for a in range(m):
            for b in range(a + 1, m):
                rule = self.straightening_rule(letters[a], letters[b])
                self._rules[(b, a)] = [
                    (c, tuple(self.index[l] for l in word))
                    for c, word in rule.right_side()
                ]
        self._append_cache: dict[tuple[Monomial, int], Terms] = {}
        self._mono_cache: dict[tuple[Monomial, Monomial], Terms] = {}
        self._word_cache: dict[Monomial, Terms] = {}
        self._weight_cache: dict[Monomial, tuple[int, ...]] = {}

    def __repr__(self) -> str:
        return f"PBWAlgebra(n={self.n})"

    # -- letters and T-Lie data ---------------------------------------
    def letter(self, i: int, j: int) -> Letter:
        if not (1 <= i < j <= self.n + 1):
            raise ValueError(f"e[{i},{j}] is not a basis letter for rank {self.n}")
        return Letter(i, j)

    def generator_letter(self, k: int) -> Letter:
        if not 1 <= k <= self.n:
            raise ValueError(f"x{k} is not a generator for rank {self.n}")
        return Letter(k, k + 1)

    def _check(self, *letters: Letter) -> None:
        for l in letters:
            if l not in self.index:
                raise ValueError(f"{l} is not a basis letter for rank {self.n}")

    def bracket(self, u: Letter, v: Letter) -> "AlgebraElement":
        """The bracket [u, v]_q, extended to u > v through the presymmetry."""
        self._check(u, v)
        if u <= v:
            # for u <= v the delta_{b,i} term of the gl bracket cannot fire
            assert v.j != u.i
            if u.j == v.i:
                return self.element_of_letter(Letter(u.i, v.j))
            return self.zero()
        return self.bracket(v, u) * LaurentScalar.q_power(-c_pairing(u, v), -1)

    def presymmetry(self, u: Letter, v: Letter) -> tuple[LaurentScalar, Letter, Letter]:
        """S(u (x) v) as (coefficient, first, second); S is an involution."""
        self._check(u, v)
        if u == v:
            return ONE, u, v
        c = c_pairing(u, v)
        return LaurentScalar.q_power(c if u < v else -c), v, u

    def pseudobracket_terms(
        self, u: Letter, v: Letter
    ) -> list[tuple[LaurentScalar, Letter, Letter]]:
        """<u, v> as a list of (coefficient, left, right) tensor terms."""
        self._check(u, v)
        if u == v:
            return []
        if u > v:
            factor = LaurentScalar.q_power(-c_pairing(u, v), -1)
            return [(factor * c, a, b) for c, a, b in self.pseudobracket_terms(v, u)]
        i, j, a, b = u.i, u.j, v.i, v.j
        if i < a < j < b:
            return [(_Q_MINUS_QINV, Letter(a, j), Letter(i, b))]
        return []

    def pseudobracket(self, u: Letter, v: Letter):
        from .tensor import TensorElement

        terms = {}
        for c, a, b in self.pseudobracket_terms(u, v):
            key = ((self.index[a],), (self.index[b],))
            terms[key] = terms.get(key, ZERO) + c
        return TensorElement(self, 2, terms)

    def straightening_rule(self, u: Letter, v: Letter) -> StraighteningRule:
        if not u < v:
            raise ValueError(f"straightening rule needs {u} < {v}")
        c = c_pairing(u, v)
        bracket_term = None
        if u.j == v.i:
            bracket_term = (Letter(u.i, v.j), ONE)
        pseudo = self.pseudobracket_terms(u, v)
        pseudo_term = ((pseudo[0][1], pseudo[0][2]), pseudo[0][0]) if pseudo else None
        return StraighteningRule((u, v), -c, bracket_term, pseudo_term)

    def rules(self) -> Iterator[StraighteningRule]:
        for a, u in enumerate(self.letters):
            for v in self.letters[a + 1:]:
                yield self.straightening_rule(u, v)

    # -- monomial helpers ---------------------------------------------
    def monomial_weight(self, m: Monomial) -> tuple[int, ...]:
        hit = self._weight_cache.get(m)
        if hit is None:
            w = [0] * (self.n + 1)
            for k in m:
                l = self.letters[k]
                w[l.i - 1] += 1
                w[l.j - 1] -= 1
            hit = self._weight_cache[m] = tuple(w)
        return hit

    def monomial_multidegree(self, m: Monomial) -> tuple[int, ...]:
        d = [0] * self.n
        for k in m:
            for t, x in enumerate(self.multidegrees[k]):
                d[t] += x
        return tuple(d)

    def monomial_letters(self, m: Monomial) -> list[tuple[Letter, int]]:
        out: list[tuple[Letter, int]] = []
        for k in m:
            l = self.letters[k]
            if out and out[-1][0] == l:
                out[-1] = (l, out[-1][1] + 1)
            else:
                out.append((l, 1))
        return out

    def monomial_from_letters(self, pairs: Iterable[tuple[Letter, int]]) -> Monomial:
        word: list[int] = []
        for l, e in pairs:
            self._check(l)
            if e < 1:
                raise ValueError("letter exponents must be positive")
            word.extend([self.index[l]] * e)
        if any(a > b for a, b in zip(word, word[1:])):
            raise ValueError("letters of a PBW monomial must ascend")
        return tuple(word)

    def render_monomial(self, m: Monomial) -> str:
        if not m:
            return "1"
        parts = []
        for l, e in self.monomial_letters(m):
            parts.append(str(l) if e == 1 else f"{l}^{e}")
        return "*".join(parts)

    def monomial_json(self, m: Monomial) -> list[list[int]]:
        return [[l.i, l.j, e] for l, e in self.monomial_letters(m)]

    @staticmethod
    def output_key(m: Monomial):
        return (len(m), m)

    # -- straightening ------------------------------------------------
    def _append(self, m: Monomial, l: int) -> Terms:
        """Normal form of (PBW monomial m) * (letter l)."""
        if not m or m[-1] <= l:
            return {m + (l,): ONE}
        key = (m, l)
        hit = self._append_cache.get(key)
        if hit is not None:
            return hit
        prefix = m[:-1]
        out: Terms = {}
        for coeff, word in self._rules[(m[-1], l)]:
            _accumulate(out, self._mul_word(prefix, word), coeff)
        self._append_cache[key] = out
        return out

    def _mul_word(self, m: Monomial, word: Iterable[int]) -> Terms:
        cur: Terms = {m: ONE}
        for l in word:
            nxt: Terms = {}
            for mono, c in cur.items():
                _accumulate(nxt, self._append(mono, l), c)
            cur = nxt
        return cur

    def mono_mul(self, m1: Monomial, m2: Monomial) -> Terms:
        if not m2:
            return {m1: ONE}
        if not m1 or m1[-1] <= m2[0]:
            return {m1 + m2: ONE}
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is None:
            hit = self._mul_word(m1, m2)
            self._mono_cache[key] = hit
        return hit

    def reduce_word(self, word: Iterable[int]) -> Terms:
        """Normal form of an arbitrary letter word, rewriting the leftmost inversion.

        Independent of the insertion strategy used by :meth:`mono_mul`; the two
        agree exactly when the rewriting system is confluent.
        """
        word = tuple(word)
        hit = self._word_cache.get(word)
        if hit is not None:
            return hit
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                break
        else:
            return {word: ONE}
        out: Terms = {}
        head, tail = word[:k], word[k + 2:]
        for coeff, rhs in self._rules[(word[k], word[k + 1])]:
            _accumulate(out, self.reduce_word(head + rhs + tail), coeff)
        self._word_cache[word] = out
        return out

    # -- elements -----------------------------------------------------
    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {(): ONE})

    def scalar(self, s) -> "AlgebraElement":
        s = LaurentScalar.coerce(s)
        return AlgebraElement(self, {(): s} if s else {})

    def element_of_letter(self, l: Letter) -> "AlgebraElement":
        self._check(l)
        return AlgebraElement(self, {(self.index[l],): ONE})

    def gen(self, k: int) -> "AlgebraElement":
        return self.element_of_letter(self.generator_letter(k))

    def root_vector(self, i: int, j: int) -> "AlgebraElement":
        return self.element_of_letter(self.letter(i, j))

    def monomial(self, m: Monomial) -> "AlgebraElement":
        return AlgebraElement(self, {tuple(m): ONE})

    def from_letter_word(self, letters: Iterable[Letter]) -> "AlgebraElement":
        word = []
        for l in letters:
            self._check(l)
            word.append(self.index[l])
        return AlgebraElement(self, self.reduce_word(word))

    def from_generator_word(self, word: Iterable[int]) -> "AlgebraElement":
        """Product x_{w1} x_{w2} ... in normal form."""
        out = self.one()
        for k in word:
            out = out * self.gen(k)
        return out

    def from_free(self, poly: dict[tuple[int, ...], LaurentScalar]) -> "AlgebraElement":
        """Evaluate a combination of generator words."""
        out = self.zero()
        for word, c in poly.items():
            out = out + self.from_generator_word(word) * c
        return out

    def multiply(self, a: "AlgebraElement", b: "AlgebraElement") -> "AlgebraElement":
        if a.algebra is not self or b.algebra is not self:
            raise ValueError("elements belong to a different rank")
        out: Terms = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                _accumulate(out, self.mono_mul(m1, m2), c1 * c2)
        return AlgebraElement(self, out)

    # -- root vectors as words in generators --------------------------
    def root_vector_expansion(
        self, i: int, j: int, middle: Optional[int] = None
    ) -> dict[tuple[int, ...], LaurentScalar]:
        """e[i,j] as a combination of generator words.

        Uses ``e[i,b] = e[i,k] e[k,b] - q^-1 e[k,b] e[i,k]`` at ``k = middle``
        (default ``i + 1``); sub-letters recurse at their minimal index.
        """
        self.letter(i, j)
        if j == i + 1:
            if middle is not None:
                raise ValueError("a generator has no intermediate index")
            return {(i,): ONE}
        k = i + 1 if middle is None else middle
        if not i < k < j:
            raise ValueError(f"intermediate index {k} not strictly between {i} and {j}")
        left = self.root_vector_expansion(i, k)
        right = self.root_vector_expansion(k, j)
        out: dict[tuple[int, ...], LaurentScalar] = {}
        qinv = LaurentScalar.q_power(-1, -1)
        for w1, c1 in left.items():
            for w2, c2 in right.items():
                _accumulate(out, {w1 + w2: c1 * c2}, ONE)
                _accumulate(out, {w2 + w1: c1 * c2}, qinv)
        return out

    # -- diamond-lemma check ------------------------------------------
    def check_confluence(self):
        """Resolve every overlap w*v*u (w > v > u) both ways and compare."""
        from .report import Report

        report = Report("confluence", self.n)
        m = len(self.letters)
        for u in range(m):
            for v in range(u + 1, m):
                for w in range(v + 1, m):
                    left: Terms = {}
                    for c, rhs in self._rules[(w, v)]:
                        _accumulate(left, self.reduce_word(rhs + (u,)), c)
                    right: Terms = {}
                    for c, rhs in self._rules[(v, u)]:
                        _accumulate(right, self.reduce_word((w,) + rhs), c)
                    report.instances += 1
                    if left != right:
                        lw, lv, lu = (self.letters[t] for t in (w, v, u))
                        diff = AlgebraElement(self, left) - AlgebraElement(self, right)
                        report.fail(f"{lw}*{lv}*{lu}: ambiguity difference {diff}")
        return report

    def serre_relations(self) -> list[tuple[tuple[int, int], dict[tuple[int, ...], LaurentScalar]]]:
        """Defining relations as generator-word combinations, keyed by (i, j)."""
        return serre_relations(self.n)


def serre_relations(n: int) -> list[tuple[tuple[int, int], dict[tuple[int, ...], LaurentScalar]]]:
    out = []
    q_sum = LaurentScalar({1: -1, -1: -1})
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if abs(i - j) == 1:
                out.append(((i, j), {(i, i, j): ONE, (i, j, i): q_sum, (j, i, i): ONE}))
            elif abs(i - j) > 1 and i < j:
                out.append(((i, j), {(i, j): ONE, (j, i): -ONE}))
    return out


def _accumulate(acc: Terms, terms: Terms, coeff: LaurentScalar) -> None:
    if not coeff:
        return
    for m, c in terms.items():
        v = acc.get(m)
        new = c * coeff if v is None else v + c * coeff
        if new:
            acc[m] = new
        elif v is not None:
            del acc[m]


def algebra(n: int) -> PBWAlgebra:
    """Shared algebra instance for rank n, subject to the ``MAX_RANK`` cap."""
    if n > MAX_RANK:
        raise ValueError(f"rank {n} exceeds the configured maximum {MAX_RANK}")
    return _shared_algebra(n)


@lru_cache(maxsize=None)
def _shared_algebra(n: int) -> PBWAlgebra:
    return PBWAlgebra(n, max_rank=n)


def verify_serre_relations(n: int):
    """Every defining relation evaluates to zero in PBW normal form."""
    from .report import Report

    alg = algebra(n)
    report = Report("serre-relations", n)
    for (i, j), rel in serre_relations(n):
        report.record(alg.from_free(rel).is_zero(), f"relation for (x{i}, x{j}) is nonzero")
    return report


def verify_root_vectors(n: int):
    """Generator expansions of e[i,j] agree for every intermediate index."""
    from .report import Report

    alg = algebra(n)
    report = Report("root-vectors", n)
    for l in alg.letters:
        target = alg.element_of_letter(l)
        middles = [None] + list(range(l.i + 1, l.j)) if not l.is_generator else [None]
        for k in middles:
            value = alg.from_free(alg.root_vector_expansion(l.i, l.j, k))
            report.record(value == target, f"{l} via index {k} gives {value}")
    return report


def verify_straightening_strategies(n: int, degree: int = 4, samples: int = 50, seed: int = 0):
    """Insertion-based products agree with leftmost-inversion rewriting."""
    import random

    from .report import Report

    alg = algebra(n)
    rng = random.Random(seed)
    report = Report("straightening-strategies", n, degree)
    m = len(alg.letters)
    for _ in range(samples):
        word = tuple(rng.randrange(m) for _ in range(rng.randint(0, degree)))
        fast = alg.one()
        for k in word:
            fast = fast * alg.monomial((k,))
        slow = AlgebraElement(alg, alg.reduce_word(word))
        report.record(fast == slow, f"strategies disagree on word {word}")
    return report


class AlgebraElement:
    """A Z[q, q^-1]-combination of PBW monomials of a fixed rank."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: PBWAlgebra, terms: Terms):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}

    # arithmetic
    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise ValueError("elements belong to a different rank")
            return other
        if isinstance(other, (int, LaurentScalar)):
            return self.algebra.scalar(other)
        raise TypeError(f"cannot combine AlgebraElement with {type(other).__name__}")

    def __add__(self, other) -> "AlgebraElement":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        _accumulate(out, other.terms, ONE)
        return AlgebraElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "AlgebraElement":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "AlgebraElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, LaurentScalar)):
            s = LaurentScalar.coerce(other)
            return AlgebraElement(self.algebra, {m: c * s for m, c in self.terms.items()})
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        return NotImplemented

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, LaurentScalar)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise ValueError("negative powers of algebra elements are undefined")
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    # inspection
    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.algebra.n == other.algebra.n and self.terms == other.terms
        if isinstance(other, (int, LaurentScalar)):
            return self.terms == self.algebra.scalar(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.algebra.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> LaurentScalar:
        return self.terms.get(tuple(m), ZERO)

    def constant_term(self) -> LaurentScalar:
        return self.terms.get((), ZERO)

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def weights(self) -> set[tuple[int, ...]]:
        return {self.algebra.monomial_weight(m) for m in self.terms}

    def multidegrees(self) -> set[tuple[int, ...]]:
        return {self.algebra.monomial_multidegree(m) for m in self.terms}

    def sorted_terms(self) -> list[tuple[Monomial, LaurentScalar]]:
        return sorted(self.terms.items(), key=lambda t: PBWAlgebra.output_key(t[0]))

    def map_coefficients(self, f) -> dict[Monomial, object]:
        return {m: f(c) for m, c in self.terms.items()}

    def __str__(self) -> str:
        return render_terms(
            [(self.algebra.render_monomial(m), c) for m, c in self.sorted_terms()]
        )

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.algebra.n}, {self})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": c.to_json(), "monomial": self.algebra.monomial_json(m)}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, alg: PBWAlgebra, data) -> "AlgebraElement":
        out: Terms = {}
        for entry in data:
            pairs = [(alg.letter(i, j), e) for i, j, e in entry["monomial"]]
            m = alg.monomial_from_letters(pairs)
            _accumulate(out, {m: LaurentScalar.from_json(entry["coeff"])}, ONE)
        return cls(alg, out)


def render_terms(terms: list[tuple[str, LaurentScalar]]) -> str:
    """Join (body, coefficient) pairs into a parseable sum."""
    if not terms:
        return "0"
    out = []
    for idx, (body, c) in enumerate(terms):
        negative = False
        if c.is_monomial():
            (e, k), = c.items()
            negative = k < 0
            mag = LaurentScalar.q_power(e, abs(k))
            coeff = "" if mag.is_one() else str(mag)
        else:
            coeff = f"({c})"
        if body == "1":
            text = coeff or "1"
        else:
            text = f"{coeff}*{body}" if coeff else body
        if idx == 0:
            out.append(("-" if negative else "") + text)
        else:
            out.append((" - " if negative else " + ") + text)
    return "".join(out)
