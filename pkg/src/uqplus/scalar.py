"""Exact arithmetic in the Laurent polynomial ring Z[q, q^-1].

Every coefficient in the algebra lives here.  Values are immutable and kept
in canonical form (no stored zero coefficients), so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentScalar",
    "ONE",
    "ZERO",
    "Q",
    "add",
    "mul",
    "q_binomial",
    "evaluate",
]

ScalarLike = Union["LaurentScalar", int]


class LaurentScalar:
    """A finite sum ``sum_k c_k q^k`` with integer ``c_k`` and integer ``k``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | int | None = None):
        if terms is None:
            clean: dict[int, int] = {}
        elif isinstance(terms, int):
            clean = {0: terms} if terms else {}
        else:
            clean = {int(e): int(c) for e, c in terms.items() if c}
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentScalar":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def q_power(cls, k: int, coeff: int = 1) -> "LaurentScalar":
        return cls._raw({k: coeff} if coeff else {})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "LaurentScalar":
        acc: dict[int, int] = {}
        for e, c in pairs:
            acc[e] = acc.get(e, 0) + c
        return cls(acc)

    @staticmethod
    def coerce(x: ScalarLike) -> "LaurentScalar":
        if isinstance(x, LaurentScalar):
            return x
        if isinstance(x, int):
            return LaurentScalar(x)
        raise TypeError(f"cannot interpret {x!r} as a Laurent scalar")

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of Z[q, q^-1] are exactly the monomials +-q^k."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def min_exponent(self) -> int:
        return min(self._terms)

    def max_exponent(self) -> int:
        return max(self._terms)

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations ----------------------------------------------
    def __add__(self, other: ScalarLike) -> "LaurentScalar":
        if isinstance(other, int):
            if not other:
                return self
            other = LaurentScalar(other)
        elif not isinstance(other, LaurentScalar):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentScalar._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "LaurentScalar":
        return self

    def __sub__(self, other: ScalarLike) -> "LaurentScalar":
        if isinstance(other, int):
            other = LaurentScalar(other)
        elif not isinstance(other, LaurentScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> "LaurentScalar":
        return LaurentScalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "LaurentScalar":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentScalar._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentScalar._raw({e + eb: c * cb for e, c in a.items()})
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentScalar._raw({e + ea: c * ca for e, c in b.items()})
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                k = ea + eb
                out[k] = out.get(k, 0) + ca * cb
        return LaurentScalar._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentScalar":
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units +-q^k can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentScalar._raw({e * k: 1 if k % 2 == 0 else c})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentScalar":
        """Multiply by q^k."""
        return LaurentScalar._raw({e + k: c for e, c in self._terms.items()})

    def divexact(self, other: ScalarLike) -> "LaurentScalar":
        """Exact quotient in Z[q, q^-1]; raises ``ArithmeticError`` if none exists."""
        other = LaurentScalar.coerce(other)
        if not other._terms:
            raise ZeroDivisionError("division by zero Laurent scalar")
        if not self._terms:
            return ZERO
        top_b = other.max_exponent()
        lead_b = other._terms[top_b]
        floor = self.min_exponent() - other.min_exponent()
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            e = top - top_b
            c, r = divmod(rem[top], lead_b)
            if r or e < floor:
                raise ArithmeticError(f"{other} does not divide {self}")
            quot[e] = c
            for eb, cb in other._terms.items():
                k = e + eb
                v = rem.get(k, 0) - c * cb
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentScalar._raw(quot)

    def evaluate(self, q_value) -> Fraction:
        q_value = Fraction(q_value)
        if q_value == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at q = 0")
        return sum((c * q_value ** e for e, c in self._terms.items()), Fraction(0))

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentScalar):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif set(self._terms) == {0}:
                self._hash = hash(self._terms[0])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering ----------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (e, c) in enumerate(sorted(self._terms.items())):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qs = "q" if e == 1 else f"q^{e}"
                body = qs if mag == 1 else f"{mag}*{qs}"
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentScalar({self})"

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> "LaurentScalar":
        return cls.from_pairs(data)


ZERO = LaurentScalar._raw({})
ONE = LaurentScalar._raw({0: 1})
Q = LaurentScalar._raw({1: 1})


def add(a: ScalarLike, b: ScalarLike) -> LaurentScalar:
    return LaurentScalar.coerce(a) + LaurentScalar.coerce(b)


def mul(a: ScalarLike, b: ScalarLike) -> LaurentScalar:
    return LaurentScalar.coerce(a) * LaurentScalar.coerce(b)


def evaluate(a: ScalarLike, q_value: Rational | int | str) -> Fraction:
    return LaurentScalar.coerce(a).evaluate(q_value)


@lru_cache(maxsize=None)
def q_binomial(m: int, i: int, base_exponent: int = 1) -> LaurentScalar:
    """Gaussian binomial ``[m choose i]`` in the variable ``q^base_exponent``.

    Built from the Pascal recurrence
    ``[m+1, i] = [m, i-1] + t^i [m, i]`` with ``t = q^base_exponent``.
    """
    if m < 0 or i < 0:
        raise ValueError("q_binomial needs non-negative arguments")
    if i > m:
        raise ValueError(f"q_binomial({m}, {i}): i exceeds m")
    if i == 0 or i == m:
        return ONE
    return q_binomial(m - 1, i - 1, base_exponent) + q_binomial(
        m - 1, i, base_exponent
    ).shift(base_exponent * i)


def quantum_plane_coefficients(m: int, base_exponent: int = 1) -> list[LaurentScalar]:
    """Coefficients of x^{m-i} y^i in (x + y)^m where yx = q^base_exponent xy.

    Brute force: expand all 2^m words and rewrite every ``yx`` until sorted.
    Independent of the recurrence used by :func:`q_binomial`.
    """
    words: dict[str, LaurentScalar] = {"": ONE}
    for _ in range(m):
        nxt: dict[str, LaurentScalar] = {}
        for w, c in words.items():
            for letter in "xy":
                nxt[w + letter] = nxt.get(w + letter, ZERO) + c
        words = nxt
    swap = LaurentScalar.q_power(base_exponent)
    done: dict[str, LaurentScalar] = {}
    while words:
        nxt = {}
        for w, c in words.items():
            k = w.find("yx")
            if k < 0:
                done[w] = done.get(w, ZERO) + c
            else:
                w2 = w[:k] + "xy" + w[k + 2:]
                nxt[w2] = nxt.get(w2, ZERO) + c * swap
        words = nxt
    return [done.get("x" * (m - i) + "y" * i, ZERO) for i in range(m + 1)]
