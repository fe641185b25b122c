"""Exact verification of q-analog binomial congruences over Z[q].

The package computes q-numbers, q-factorials and Gaussian binomial
coefficients in exact integer-polynomial arithmetic and mechanically
checks the classical and q-analog congruences built on them, centrally
the q-analog of Ljunggren's congruence modulo ([p]_q)^3.
"""

from .congruence import (
    CongruenceContext,
    DenominatorNotUnitError,
    QRational,
    q_double_harmonic,
    q_harmonic_sum,
)
from .poly import (
    NonMonicDivisorError,
    NotDivisibleError,
    Poly,
    gcd_primitive,
)
from .qanalogs import (
    InternalNonDivisibleError,
    NotPrimeError,
    QParams,
    is_prime,
    modulus,
    q_binomial,
    q_factorial,
    q_number,
)
from .statements import (
    STATEMENT_IDS,
    BudgetExceededError,
    CheckResult,
    JacobsthalResult,
    PrecondViolationError,
    binom,
    check_clark,
    check_classical,
    check_cong2,
    check_convolution_identity,
    check_double_harmonic,
    check_expansion_identity,
    check_jacobsthal,
    check_power_reduction,
    check_q_ljunggren,
    check_q_wolstenholme,
    check_qchu,
    check_shipan,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CheckResult",
    "CongruenceContext",
    "DenominatorNotUnitError",
    "InternalNonDivisibleError",
    "JacobsthalResult",
    "NonMonicDivisorError",
    "NotDivisibleError",
    "NotPrimeError",
    "Poly",
    "QParams",
    "QRational",
    "STATEMENT_IDS",
    "binom",
    "check_clark",
    "check_classical",
    "check_cong2",
    "check_convolution_identity",
    "check_double_harmonic",
    "check_expansion_identity",
    "check_jacobsthal",
    "check_power_reduction",
    "check_q_ljunggren",
    "check_q_wolstenholme",
    "check_qchu",
    "check_shipan",
    "gcd_primitive",
    "is_prime",
    "modulus",
    "q_binomial",
    "q_double_harmonic",
    "q_factorial",
    "q_harmonic_sum",
    "q_number",
]
