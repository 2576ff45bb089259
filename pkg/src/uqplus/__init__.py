"""Exact computations in U_q^+(sl_{n+1}) as a braided quantum group.

PBW normal forms, the diagonal braiding on the braided tensor square and
the Hopf structure maps, with exact verification sweeps.
"""

from .hopf import antipode, coproduct, counit, hopf_context, opposite_multiply
from .parser import ParseError, parse, parse_element
from .pbw import AlgebraElement, Letter, PBWAlgebra, algebra, c_pairing, compare_letters
from .scalar import ONE, Q, ZERO, LaurentScalar, q_binomial
from .tensor import OperatorExpression, TensorElement, braided_multiply, sigma, sigma_inverse

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "LaurentScalar",
    "Letter",
    "ONE",
    "OperatorExpression",
    "PBWAlgebra",
    "ParseError",
    "Q",
    "TensorElement",
    "ZERO",
    "algebra",
    "antipode",
    "braided_multiply",
    "c_pairing",
    "compare_letters",
    "coproduct",
    "counit",
    "hopf_context",
    "opposite_multiply",
    "parse",
    "parse_element",
    "q_binomial",
    "sigma",
    "sigma_inverse",
]
