"""Tensor powers of U_q^+ (arity 1 to 4), the braiding and the braided product.

The braiding is diagonal: swapping monomials u, v in adjacent slots picks up
q^{<wt u, wt v>}, the multiplicative extension of sigma(e_ij (x) e_ab) =
q^{c_{ij,ab}} e_ab (x) e_ij.  Composite operators such as
``(s x 1)(1 x s)(phi x 1)`` are plain data (:class:`OperatorExpression`) and
are applied right to left, as written.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Tuple

from .pbw import AlgebraElement, Monomial, PBWAlgebra, _accumulate, algebra, render_terms
from .report import Report
from .sampling import random_element
from .scalar import ONE, ZERO, LaurentScalar

__all__ = [
    "MAX_ARITY",
    "TensorElement",
    "tensor",
    "sigma",
    "sigma_inverse",
    "braided_multiply",
    "multiply_slots",
    "apply_to_slot",
    "PrimitiveStep",
    "OperatorExpression",
    "ArityError",
    "evaluate_operator",
    "weight_pairing",
    "from_slot",
    "verify_sigma_multiplicativity",
    "verify_braided_associativity",
]

MAX_ARITY = 4

Key = Tuple[Monomial, ...]


class ArityError(ValueError):
    pass


def weight_pairing(alg: PBWAlgebra, u: Monomial, v: Monomial) -> int:
    if not u or not v:
        return 0
    wu = alg.monomial_weight(u)
    wv = alg.monomial_weight(v)
    return sum(a * b for a, b in zip(wu, wv))


class TensorElement:
    """Finite combination of ``arity``-tuples of PBW monomials."""

    __slots__ = ("algebra", "arity", "terms")

    def __init__(self, algebra: PBWAlgebra, arity: int, terms: Dict[Key, LaurentScalar]):
        if not 1 <= arity <= MAX_ARITY:
            raise ArityError(f"tensor arity {arity} outside 1..{MAX_ARITY}")
        for key in terms:
            if len(key) != arity:
                raise ArityError(f"term {key} does not have arity {arity}")
        self.algebra = algebra
        self.arity = arity
        self.terms = {k: c for k, c in terms.items() if c}

    def _check(self, other: "TensorElement") -> None:
        if other.algebra.n != self.algebra.n:
            raise ValueError("tensors belong to different ranks")
        if other.arity != self.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms, ONE)
        return TensorElement(self.algebra, self.arity, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.algebra, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "TensorElement":
        if isinstance(other, (int, LaurentScalar)):
            s = LaurentScalar.coerce(other)
            return TensorElement(
                self.algebra, self.arity, {k: c * s for k, c in self.terms.items()}
            )
        if isinstance(other, TensorElement):
            return braided_multiply(self, other)
        return NotImplemented

    def __rmul__(self, other) -> "TensorElement":
        if isinstance(other, (int, LaurentScalar)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.algebra.n == other.algebra.n
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.algebra.n, self.arity, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, *slots: Monomial) -> LaurentScalar:
        return self.terms.get(tuple(tuple(s) for s in slots), ZERO)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda t: (sum(len(m) for m in t[0]), [PBWAlgebra.output_key(m) for m in t[0]]),
        )

    def __str__(self) -> str:
        alg = self.algebra
        return render_terms(
            [
                (" (x) ".join(alg.render_monomial(m) for m in key), c)
                for key, c in self.sorted_terms()
            ]
        )

    def __repr__(self) -> str:
        return f"TensorElement(n={self.algebra.n}, arity={self.arity}, {self})"

    def to_json(self) -> list[dict]:
        alg = self.algebra
        return [
            {"coeff": c.to_json(), "slots": [alg.monomial_json(m) for m in key]}
            for key, c in self.sorted_terms()
        ]

    def slot_weights(self) -> set[tuple[tuple[int, ...], ...]]:
        return {tuple(self.algebra.monomial_weight(m) for m in key) for key in self.terms}


def tensor(*elements: AlgebraElement) -> TensorElement:
    """Outer product a (x) b (x) ... of algebra elements."""
    if not elements:
        raise ArityError("tensor of nothing")
    alg = elements[0].algebra
    terms: Dict[Key, LaurentScalar] = {(): ONE}
    for el in elements:
        if el.algebra.n != alg.n:
            raise ValueError("elements belong to different ranks")
        nxt: Dict[Key, LaurentScalar] = {}
        for key, c in terms.items():
            for m, d in el.terms.items():
                nxt[key + (m,)] = c * d
        terms = nxt
    return TensorElement(alg, len(elements), terms)


def from_slot(t: TensorElement) -> AlgebraElement:
    """Arity-1 tensor back to an algebra element."""
    if t.arity != 1:
        raise ArityError("only arity-1 tensors convert to algebra elements")
    return AlgebraElement(t.algebra, {k[0]: c for k, c in t.terms.items()})


def _check_slot(t: TensorElement, slot: int, width: int = 2) -> None:
    if not 1 <= slot <= t.arity - width + 1:
        raise ArityError(f"slot {slot} out of range for arity {t.arity}")


def _braid(t: TensorElement, slot: int, sign: int) -> TensorElement:
    _check_slot(t, slot)
    alg = t.algebra
    p = slot - 1
    out: Dict[Key, LaurentScalar] = {}
    for key, c in t.terms.items():
        u, v = key[p], key[p + 1]
        new_key = key[:p] + (v, u) + key[p + 2:]
        k = sign * weight_pairing(alg, u, v)
        _accumulate(out, {new_key: c.shift(k)}, ONE)
    return TensorElement(alg, t.arity, out)


def sigma(t: TensorElement, slot: int = 1) -> TensorElement:
    """Braiding on slots (slot, slot + 1), 1-based."""
    return _braid(t, slot, 1)


def sigma_inverse(t: TensorElement, slot: int = 1) -> TensorElement:
    return _braid(t, slot, -1)


def braided_multiply(a: TensorElement, b: TensorElement) -> TensorElement:
    """(a1 (x) a2)(b1 (x) b2) = a1 sigma(a2 (x) b1) b2."""
    if a.arity != 2 or b.arity != 2:
        raise ArityError("the braided product is defined on arity-2 tensors")
    if a.algebra.n != b.algebra.n:
        raise ValueError("tensors belong to different ranks")
    alg = a.algebra
    out: Dict[Key, LaurentScalar] = {}
    for (a1, a2), ca in a.terms.items():
        for (b1, b2), cb in b.terms.items():
            coeff = (ca * cb).shift(weight_pairing(alg, a2, b1))
            left = alg.mono_mul(a1, b1)
            right = alg.mono_mul(a2, b2)
            for m1, c1 in left.items():
                for m2, c2 in right.items():
                    _accumulate(out, {(m1, m2): c1 * c2}, coeff)
    return TensorElement(alg, 2, out)


def apply_to_slot(
    t: TensorElement, slot: int, fn: Callable[[Monomial], TensorElement]
) -> TensorElement:
    """Replace slot ``slot`` by the tensor ``fn(monomial)``, extended linearly."""
    _check_slot(t, slot, 1)
    p = slot - 1
    out: Dict[Key, LaurentScalar] = {}
    width = None
    for key, c in t.terms.items():
        image = fn(key[p])
        width = image.arity
        for ikey, ic in image.terms.items():
            _accumulate(out, {key[:p] + ikey + key[p + 1:]: ic}, c)
    if width is None:
        # zero input; arity of the image is still determined by fn on 1
        width = fn(()).arity
    return TensorElement(t.algebra, t.arity - 1 + width, out)


def multiply_slots(t: TensorElement, slot: int = 1) -> TensorElement:
    """Ordinary product of slots (slot, slot + 1)."""
    _check_slot(t, slot)
    alg = t.algebra
    p = slot - 1
    out: Dict[Key, LaurentScalar] = {}
    for key, c in t.terms.items():
        for m, d in alg.mono_mul(key[p], key[p + 1]).items():
            _accumulate(out, {key[:p] + (m,) + key[p + 2:]: d}, c)
    return TensorElement(alg, t.arity - 1, out)


# -- operator expressions ----------------------------------------------

_TOKEN_INPUTS = {"1": 1, "s": 2, "s^-1": 2, "phi": 1, "m": 2}
_TOKEN_OP = {"s": "sigma", "s^-1": "sigma_inv", "phi": "coproduct", "m": "multiply"}
_OP_TOKEN = {v: k for k, v in _TOKEN_OP.items()}
_OP_DELTA = {"sigma": 0, "sigma_inv": 0, "coproduct": 1, "multiply": -1}
_ALIASES = {
    "σ": "s",
    "sigma": "s",
    "σ^-1": "s^-1",
    "σ^{-1}": "s^-1",
    "sigma^-1": "s^-1",
    "s^{-1}": "s^-1",
    "φ": "phi",
    "id": "1",
}


@dataclass(frozen=True)
class PrimitiveStep:
    """One slot operator; ``slot`` is 1-based, ``arity`` is the input arity."""

    op: str
    slot: int
    arity: int

    def __post_init__(self):
        if self.op not in _OP_DELTA:
            raise ValueError(f"unknown primitive {self.op!r}")
        width = 2 if self.op in ("sigma", "sigma_inv", "multiply") else 1
        if not 1 <= self.slot <= self.arity - width + 1:
            raise ArityError(f"{self.op} at slot {self.slot} needs more than arity {self.arity}")

    @property
    def out_arity(self) -> int:
        return self.arity + _OP_DELTA[self.op]

    def render(self) -> str:
        width = 1 if self.op in ("coproduct",) else 2
        tokens = ["1"] * (self.slot - 1) + [_OP_TOKEN[self.op]]
        tokens += ["1"] * (self.arity - self.slot - width + 1)
        return "(" + " x ".join(tokens) + ")"

    def to_json(self) -> dict:
        return {"op": self.op, "slot": self.slot, "arity": self.arity}


def _normalize_token(tok: str) -> list[str]:
    tok = tok.strip()
    tok = _ALIASES.get(tok, tok)
    m = re.fullmatch(r"1\^\{?(\d+)\}?", tok)
    if m:
        return ["1"] * int(m.group(1))
    if tok not in _TOKEN_INPUTS:
        raise ValueError(f"unknown operator token {tok!r}")
    return [tok]


@dataclass(frozen=True)
class OperatorExpression:
    """Composite of primitive steps, stored in application order."""

    steps: tuple[PrimitiveStep, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "OperatorExpression":
        """Parse written notation such as ``(s x 1^2)(1 x phi x 1)(s^-1 x 1)``.

        Factors are tensor products (``x`` or ``⊗``) of the tokens ``1``,
        ``1^k``, ``s``, ``s^-1``, ``phi`` and ``m``; the rightmost factor acts
        first.
        """
        factors = re.findall(r"\(([^()]*)\)", text)
        if re.sub(r"\([^()]*\)", "", text).strip():
            raise ValueError(f"malformed operator expression {text!r}")
        steps: list[PrimitiveStep] = []
        for factor in reversed(factors):
            raw = re.split(r"\s*(?:⊗|\bx\b)\s*", factor.strip())
            tokens = [t for part in raw for t in _normalize_token(part)]
            arity = sum(_TOKEN_INPUTS[t] for t in tokens)
            # apply right to left within a factor so left slot positions stay put
            positions = []
            pos = 1
            for t in tokens:
                positions.append((pos, t))
                pos += _TOKEN_INPUTS[t]
            for pos, t in reversed(positions):
                if t == "1":
                    continue
                step = PrimitiveStep(_TOKEN_OP[t], pos, arity)
                steps.append(step)
                arity = step.out_arity
        return cls(tuple(steps))

    @property
    def in_arity(self):
        return self.steps[0].arity if self.steps else None

    def __str__(self) -> str:
        if not self.steps:
            return "1"
        return "".join(step.render() for step in reversed(self.steps))

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "OperatorExpression":
        return cls(tuple(PrimitiveStep(d["op"], d["slot"], d["arity"]) for d in data))

    def __call__(self, t: TensorElement) -> TensorElement:
        return evaluate_operator(self, t)


def evaluate_operator(expr: OperatorExpression, t: TensorElement) -> TensorElement:
    from .hopf import hopf_context

    for step in expr.steps:
        if step.arity != t.arity:
            raise ArityError(
                f"{step.render()} expects arity {step.arity}, got {t.arity}"
            )
        if step.op == "sigma":
            t = sigma(t, step.slot)
        elif step.op == "sigma_inv":
            t = sigma_inverse(t, step.slot)
        elif step.op == "multiply":
            t = multiply_slots(t, step.slot)
        else:
            ctx = hopf_context(t.algebra)
            t = apply_to_slot(t, step.slot, ctx.coproduct_monomial)
    return t


# -- verification ------------------------------------------------------

MULTIPLICATIVITY_EQUATIONS = (
    ("(s)(1 x m)", "(m x 1)(1 x s)(s x 1)"),
    ("(s)(m x 1)", "(1 x m)(s x 1)(1 x s)"),
)


def verify_sigma_multiplicativity(
    n: int, degree_bound: int = 3, samples: int = 100, seed: int = 0
) -> Report:
    """sigma(1 x m) = (m x 1)(1 x sigma)(sigma x 1) and its mirror image."""
    alg = algebra(n)
    rng = random.Random(seed)
    report = Report("sigma-multiplicativity", n, degree_bound)
    equations = [
        (OperatorExpression.parse(l), OperatorExpression.parse(r))
        for l, r in MULTIPLICATIVITY_EQUATIONS
    ]
    letters = [alg.one()] + [alg.element_of_letter(l) for l in alg.letters]
    triples = [tensor(a, b, c) for a in letters for b in letters for c in letters]
    triples += [
        tensor(*(random_element(alg, rng, degree_bound) for _ in range(3)))
        for _ in range(samples)
    ]
    for t in triples:
        for lhs, rhs in equations:
            report.record(lhs(t) == rhs(t), f"{lhs} != {rhs} on {t}")
    return report


def verify_braided_associativity(
    n: int, degree_bound: int = 2, samples: int = 100, seed: int = 0
) -> Report:
    """((a x b)(c x d))(e x f) = (a x b)((c x d)(e x f)) in the braided square."""
    alg = algebra(n)
    rng = random.Random(seed)
    report = Report("braided-associativity", n, degree_bound)
    gens = [alg.one()] + [alg.gen(k) for k in range(1, n + 1)]
    cases = []
    if n <= 2:
        cases.extend(itertools.product(gens, repeat=6))
    for _ in range(samples):
        cases.append(tuple(random_element(alg, rng, degree_bound) for _ in range(6)))
    for a, b, c, d, e, f in cases:
        x, y, z = tensor(a, b), tensor(c, d), tensor(e, f)
        lhs = braided_multiply(braided_multiply(x, y), z)
        rhs = braided_multiply(x, braided_multiply(y, z))
        report.record(lhs == rhs, f"braided product not associative on {x}, {y}, {z}")
    return report
