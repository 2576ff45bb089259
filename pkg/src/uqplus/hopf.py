"""The braided Hopf structure maps of U_q^+.

The coproduct is the algebra map into the braided tensor square determined
by primitive generators; the antipode is the anti-morphism (with respect to
the braided opposite product ``m o sigma``) sending every generator x to -x.
The ``verify_*`` functions check the axioms exactly over Z[q, q^-1].
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional

from .pbw import AlgebraElement, Letter, Monomial, PBWAlgebra, _accumulate, algebra, c_pairing
from .report import Report
from .sampling import random_element
from .scalar import ONE, LaurentScalar, q_binomial
from .tensor import (
    OperatorExpression,
    TensorElement,
    braided_multiply,
    evaluate_operator,
    sigma_inverse,
    tensor,
    weight_pairing,
)

__all__ = [
    "HopfContext",
    "hopf_context",
    "coproduct",
    "counit",
    "antipode",
    "opposite_multiply",
    "HEXAGON_EQUATIONS",
    "ADDITIONAL_CONDITION",
]

_QINV = LaurentScalar.q_power(-1)


class HopfContext:
    """Cached Hopf maps for one rank."""

    def __init__(self, alg: PBWAlgebra):
        self.algebra = alg
        self.n = alg.n
        self._letter_coproduct: dict[Letter, TensorElement] = {}
        self._mono_coproduct: dict[Monomial, TensorElement] = {}
        self._letter_antipode: dict[Letter, AlgebraElement] = {}
        self._mono_antipode: dict[Monomial, AlgebraElement] = {}
        for l in alg.letters:
            self.coproduct_letter(l)
            self.antipode_letter(l)

    # -- coproduct ----------------------------------------------------
    def one_tensor(self) -> TensorElement:
        return TensorElement(self.algebra, 2, {((), ()): ONE})

    def coproduct_letter(self, l: Letter, middle: Optional[int] = None) -> TensorElement:
        """phi(e[i,j]); non-generators go through the root-vector recursion."""
        if middle is None and l in self._letter_coproduct:
            return self._letter_coproduct[l]
        alg = self.algebra
        if l.is_generator:
            if middle is not None:
                raise ValueError("a generator has no intermediate index")
            x = alg.element_of_letter(l)
            one = alg.one()
            out = tensor(x, one) + tensor(one, x)
        else:
            k = l.i + 1 if middle is None else middle
            if not l.i < k < l.j:
                raise ValueError(f"intermediate index {k} not strictly inside {l}")
            left = self.coproduct_letter(Letter(l.i, k))
            right = self.coproduct_letter(Letter(k, l.j))
            out = braided_multiply(left, right) - braided_multiply(right, left) * _QINV
        if middle is None:
            self._letter_coproduct[l] = out
        return out

    def coproduct_monomial(self, m: Monomial) -> TensorElement:
        hit = self._mono_coproduct.get(m)
        if hit is not None:
            return hit
        if not m:
            out = self.one_tensor()
        else:
            out = braided_multiply(
                self.coproduct_monomial(m[:-1]),
                self.coproduct_letter(self.algebra.letters[m[-1]]),
            )
        self._mono_coproduct[m] = out
        return out

    def coproduct(self, a: AlgebraElement) -> TensorElement:
        out: dict = {}
        for m, c in a.terms.items():
            _accumulate(out, self.coproduct_monomial(m).terms, c)
        return TensorElement(self.algebra, 2, out)

    # -- counit -------------------------------------------------------
    @staticmethod
    def counit(a: AlgebraElement) -> LaurentScalar:
        return a.constant_term()

    # -- antipode -----------------------------------------------------
    def opposite_multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """m^op = m o sigma: the braided-opposite product of a and b."""
        alg = self.algebra
        out: dict = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                coeff = (c1 * c2).shift(weight_pairing(alg, m1, m2))
                _accumulate(out, alg.mono_mul(m2, m1), coeff)
        return AlgebraElement(alg, out)

    def antipode_letter(self, l: Letter) -> AlgebraElement:
        hit = self._letter_antipode.get(l)
        if hit is not None:
            return hit
        alg = self.algebra
        if l.is_generator:
            out = -alg.element_of_letter(l)
        else:
            left = self.antipode_letter(Letter(l.i, l.i + 1))
            right = self.antipode_letter(Letter(l.i + 1, l.j))
            out = self.opposite_multiply(left, right) - self.opposite_multiply(right, left) * _QINV
        self._letter_antipode[l] = out
        return out

    def antipode_monomial(self, m: Monomial) -> AlgebraElement:
        hit = self._mono_antipode.get(m)
        if hit is not None:
            return hit
        if not m:
            out = self.algebra.one()
        else:
            out = self.opposite_multiply(
                self.antipode_monomial(m[:-1]),
                self.antipode_letter(self.algebra.letters[m[-1]]),
            )
        self._mono_antipode[m] = out
        return out

    def antipode(self, a: AlgebraElement) -> AlgebraElement:
        out: dict = {}
        for m, c in a.terms.items():
            _accumulate(out, self.antipode_monomial(m).terms, c)
        return AlgebraElement(self.algebra, out)

    def antipode_generator_word(self, word: Iterable[int]) -> AlgebraElement:
        """Closed form on x_{w1}...x_{wk}: (-1)^k q^{sum_{a<b} c} x_{wk}...x_{w1}."""
        word = tuple(word)
        alg = self.algebra
        gens = [alg.generator_letter(k) for k in word]
        exponent = 0
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                exponent += alg.pairing[alg.index[gens[a]]][alg.index[gens[b]]]
        sign = -1 if len(word) % 2 else 1
        return alg.from_generator_word(reversed(word)) * LaurentScalar.q_power(exponent, sign)

    # -- convolution helpers ------------------------------------------
    def _collapse(self, t: TensorElement, left, right) -> AlgebraElement:
        """m (left (x) right) applied to an arity-2 tensor."""
        alg = self.algebra
        out = alg.zero()
        for (m1, m2), c in t.terms.items():
            out = out + left(alg.monomial(m1)) * right(alg.monomial(m2)) * c
        return out

    def convolution_right(self, a: AlgebraElement) -> AlgebraElement:
        """m (1 (x) kappa) phi(a)."""
        return self._collapse(self.coproduct(a), lambda x: x, self.antipode)

    def convolution_left(self, a: AlgebraElement) -> AlgebraElement:
        """m (kappa (x) 1) phi(a)."""
        return self._collapse(self.coproduct(a), self.antipode, lambda x: x)

    def counit_left(self, t: TensorElement) -> AlgebraElement:
        """(epsilon (x) 1) on an arity-2 tensor."""
        return AlgebraElement(self.algebra, {m2: c for (m1, m2), c in t.terms.items() if not m1})

    def counit_right(self, t: TensorElement) -> AlgebraElement:
        return AlgebraElement(self.algebra, {m1: c for (m1, m2), c in t.terms.items() if not m2})


def hopf_context(alg_or_n) -> HopfContext:
    alg = alg_or_n if isinstance(alg_or_n, PBWAlgebra) else algebra(alg_or_n)
    return _context_for(alg)


@lru_cache(maxsize=None)
def _context_for(alg: PBWAlgebra) -> HopfContext:
    return HopfContext(alg)


def coproduct(a: AlgebraElement) -> TensorElement:
    return hopf_context(a.algebra).coproduct(a)


def counit(a: AlgebraElement) -> LaurentScalar:
    return HopfContext.counit(a)


def antipode(a: AlgebraElement) -> AlgebraElement:
    return hopf_context(a.algebra).antipode(a)


def opposite_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return hopf_context(a.algebra).opposite_multiply(a, b)


# -- verification ------------------------------------------------------

def _letters_and_samples(alg: PBWAlgebra, degree: int, samples: int, seed: int):
    rng = random.Random(seed)
    items = [alg.one()] + [alg.element_of_letter(l) for l in alg.letters]
    items += [random_element(alg, rng, degree) for _ in range(samples)]
    return items


def verify_counit(n: int, degree_bound: int = 3, samples: int = 20, seed: int = 0) -> Report:
    ctx = hopf_context(n)
    report = Report("counit", n, degree_bound)
    for a in _letters_and_samples(ctx.algebra, degree_bound, samples, seed):
        phi = ctx.coproduct(a)
        report.record(ctx.counit_right(phi) == a, f"(1 x eps) phi({a}) != {a}")
        report.record(ctx.counit_left(phi) == a, f"(eps x 1) phi({a}) != {a}")
    return report


def verify_antipode_axiom(
    n: int, degree_bound: int = 3, samples: int = 20, seed: int = 0
) -> Report:
    ctx = hopf_context(n)
    alg = ctx.algebra
    report = Report("antipode", n, degree_bound)
    for a in _letters_and_samples(alg, degree_bound, samples, seed):
        target = alg.scalar(ctx.counit(a))
        report.record(ctx.convolution_right(a) == target, f"m(1 x kappa)phi({a}) != eps*1")
        report.record(ctx.convolution_left(a) == target, f"m(kappa x 1)phi({a}) != eps*1")
    return report


def verify_antipode_closed_form(n: int, max_length: int = 5) -> Report:
    """Recursive antipode against the closed form on every generator word."""
    ctx = hopf_context(n)
    alg = ctx.algebra
    report = Report("antipode-closed-form", n, max_length)
    for length in range(max_length + 1):
        for word in product(range(1, n + 1), repeat=length):
            a = alg.from_generator_word(word)
            report.record(
                ctx.antipode(a) == ctx.antipode_generator_word(word),
                f"kappa(x{word}) disagrees with the closed form",
            )
    return report


def verify_antipode_powers(n: int, max_power: int = 8) -> Report:
    """kappa(x_j^i) = (-1)^i q^{i(i-1)} x_j^i."""
    ctx = hopf_context(n)
    alg = ctx.algebra
    report = Report("antipode-powers", n, max_power)
    for j in range(1, n + 1):
        x = alg.gen(j)
        for i in range(max_power + 1):
            expected = x ** i * LaurentScalar.q_power(i * (i - 1), -1 if i % 2 else 1)
            report.record(ctx.antipode(x ** i) == expected, f"kappa(x{j}^{i}) mismatch")
    return report


def verify_antimorphism(n: int, degree_bound: int = 3, samples: int = 20, seed: int = 0) -> Report:
    """kappa(ab) = m^op(kappa a, kappa b)."""
    ctx = hopf_context(n)
    alg = ctx.algebra
    rng = random.Random(seed)
    report = Report("antipode-antimorphism", n, degree_bound)
    pairs = [(alg.element_of_letter(u), alg.element_of_letter(v)) for u in alg.letters for v in alg.letters]
    pairs += [
        (random_element(alg, rng, degree_bound), random_element(alg, rng, degree_bound))
        for _ in range(samples)
    ]
    for a, b in pairs:
        lhs = ctx.antipode(a * b)
        rhs = ctx.opposite_multiply(ctx.antipode(a), ctx.antipode(b))
        report.record(lhs == rhs, f"kappa(({a})*({b})) is not anti-multiplicative")
    return report


def verify_coassociativity(
    n: int, degree_bound: int = 3, samples: int = 20, seed: int = 0
) -> Report:
    ctx = hopf_context(n)
    report = Report("coassociativity", n, degree_bound)
    left = OperatorExpression.parse("(phi x 1)(phi)")
    right = OperatorExpression.parse("(1 x phi)(phi)")
    for a in _letters_and_samples(ctx.algebra, degree_bound, samples, seed):
        t = tensor(a)
        report.record(
            evaluate_operator(left, t) == evaluate_operator(right, t),
            f"(phi x 1)phi != (1 x phi)phi on {a}",
        )
    return report


def verify_coproduct_morphism(
    n: int, degree_bound: int = 3, samples: int = 20, seed: int = 0
) -> Report:
    """phi(ab) = phi(a) phi(b) in the braided tensor square."""
    ctx = hopf_context(n)
    alg = ctx.algebra
    rng = random.Random(seed)
    report = Report("coproduct-morphism", n, degree_bound)
    pairs = [(alg.element_of_letter(u), alg.element_of_letter(v)) for u in alg.letters for v in alg.letters]
    pairs += [
        (random_element(alg, rng, degree_bound), random_element(alg, rng, degree_bound))
        for _ in range(samples)
    ]
    for a, b in pairs:
        lhs = ctx.coproduct(a * b)
        rhs = braided_multiply(ctx.coproduct(a), ctx.coproduct(b))
        report.record(lhs == rhs, f"phi(({a})*({b})) != phi({a})phi({b})")
    return report


def verify_coproduct_recursion(n: int) -> Report:
    """phi(e[i,j]) does not depend on the intermediate index of the recursion."""
    ctx = hopf_context(n)
    report = Report("coproduct-recursion", n)
    for l in ctx.algebra.letters:
        base = ctx.coproduct_letter(l)
        for k in range(l.i + 1, l.j):
            report.record(
                ctx.coproduct_letter(l, middle=k) == base,
                f"phi({l}) via index {k} differs",
            )
    return report


def verify_power_coproduct(n: int, max_power: int = 8) -> Report:
    """phi(x_j)^m = sum_i [m choose i]_{q^2} x_j^{m-i} (x) x_j^i."""
    ctx = hopf_context(n)
    alg = ctx.algebra
    report = Report("power-coproduct", n, max_power)
    for j in range(1, n + 1):
        x = alg.gen(j)
        phi_x = ctx.coproduct(x)
        power = ctx.one_tensor()
        for m in range(max_power + 1):
            expected = None
            for i in range(m + 1):
                term = tensor(x ** (m - i), x ** i) * q_binomial(m, i, 2)
                expected = term if expected is None else expected + term
            report.record(power == expected, f"phi(x{j})^{m} mismatch")
            power = braided_multiply(power, phi_x)
    return report


def verify_split_power_products(
    n: int, max_power: int = 4, samples: int = 50, seed: int = 0
) -> Report:
    """Braided product of the tensors x_{j_a}^{n_a - i_a} (x) x_{j_a}^{i_a}.

    The result is the plain tensor of the two slot products scaled by
    q^{sum_{a<b} c(j_a, j_b) i_a (n_b - i_b)}: each right-slot factor crosses
    every later left-slot factor once.
    """
    alg = algebra(n)
    rng = random.Random(seed)
    report = Report("split-power-products", n, max_power)
    gens = [alg.generator_letter(k) for k in range(1, n + 1)]
    for _ in range(samples):
        u = rng.randint(1, 4)
        js = [rng.randint(1, n) for _ in range(u)]
        ns = [rng.randint(0, max_power) for _ in range(u)]
        iss = [rng.randint(0, k) for k in ns]
        product_t = None
        left, right = alg.one(), alg.one()
        exponent = 0
        for a in range(u):
            x = alg.gen(js[a])
            t = tensor(x ** (ns[a] - iss[a]), x ** iss[a])
            product_t = t if product_t is None else braided_multiply(product_t, t)
            left = left * x ** (ns[a] - iss[a])
            right = right * x ** iss[a]
            for b in range(a + 1, u):
                c = c_pairing(gens[js[a] - 1], gens[js[b] - 1])
                exponent += c * iss[a] * (ns[b] - iss[b])
        expected = tensor(left, right) * LaurentScalar.q_power(exponent)
        report.record(product_t == expected, f"split powers j={js} n={ns} i={iss}")
    return report


def verify_serre_compatibility(n: int) -> Report:
    ctx = hopf_context(n)
    alg = ctx.algebra
    report = Report("serre-compatibility", n)
    q_sum = LaurentScalar({1: 1, -1: 1})
    phis = {k: ctx.coproduct(alg.gen(k)) for k in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pi, pj = phis[i], phis[j]
            if abs(i - j) == 1:
                lhs = braided_multiply(braided_multiply(pi, pi), pj) + braided_multiply(
                    pj, braided_multiply(pi, pi)
                )
                rhs = braided_multiply(braided_multiply(pi, pj), pi) * q_sum
                report.record(lhs == rhs, f"cubic Serre image fails for ({i},{j})")
            elif abs(i - j) > 1:
                report.record(
                    braided_multiply(pi, pj) == braided_multiply(pj, pi),
                    f"phi(x{i}), phi(x{j}) do not commute",
                )
    return report


HEXAGON_EQUATIONS = (
    ("(s x 1)(1 x s)(phi x 1)", "(1 x phi)(s)"),
    ("(1 x s)(s x 1)(1 x phi)", "(phi x 1)(s)"),
)

ADDITIONAL_CONDITION = (
    "(s x 1^2)(1 x phi x 1)(s^-1 x 1)(1 x phi)",
    "(1^2 x s)(1 x phi x 1)(1 x s^-1)(phi x 1)",
    "(1 x s^-1 x 1)(phi x phi)",
)


def _tensor_pairs(alg: PBWAlgebra, degree: int, samples: int, seed: int):
    rng = random.Random(seed)
    letters = [alg.one()] + [alg.element_of_letter(l) for l in alg.letters]
    pairs = [tensor(a, b) for a in letters for b in letters]
    pairs += [
        tensor(random_element(alg, rng, degree), random_element(alg, rng, degree))
        for _ in range(samples)
    ]
    return pairs


def verify_hexagon(n: int, degree_bound: int = 3, samples: int = 20, seed: int = 0) -> Report:
    alg = algebra(n)
    report = Report("hexagon", n, degree_bound)
    equations = [(OperatorExpression.parse(l), OperatorExpression.parse(r)) for l, r in HEXAGON_EQUATIONS]
    for t in _tensor_pairs(alg, degree_bound, samples, seed):
        for lhs, rhs in equations:
            report.record(lhs(t) == rhs(t), f"{lhs} != {rhs} on {t}")
    return report


def verify_additional_condition(
    n: int, degree_bound: int = 3, samples: int = 20, seed: int = 0
) -> Report:
    alg = algebra(n)
    report = Report("additional-condition", n, degree_bound)
    left, right, middle = (OperatorExpression.parse(e) for e in ADDITIONAL_CONDITION)
    for t in _tensor_pairs(alg, degree_bound, samples, seed):
        a, b, c = left(t), right(t), middle(t)
        report.record(a == b, f"{left} != {right} on {t}")
        report.record(a == c, f"{left} != {middle} on {t}")
    return report


def verify_opposite_tlie(n: int) -> Report:
    """[,]^op = [,]_q S equals -[,]_q; <,>^op = sigma^-1 <,> is S-antisymmetric."""
    alg = algebra(n)
    report = Report("opposite-tlie", n)
    for u in alg.letters:
        for v in alg.letters:
            c, s1, s2 = alg.presymmetry(u, v)
            op_bracket = alg.bracket(s1, s2) * c
            report.record(op_bracket == -alg.bracket(u, v), f"[,]^op({u},{v}) != -[{u},{v}]")
            op_pseudo = sigma_inverse(alg.pseudobracket(u, v), 1)
            op_pseudo_s = sigma_inverse(alg.pseudobracket(s1, s2), 1) * c
            report.record(op_pseudo_s == -op_pseudo, f"<,>^op not S-antisymmetric on ({u},{v})")
    return report
