"""q-analog constructions: q-integers, q-factorials, Gaussian binomial
coefficients, and powers of the modulus [p]_q.

All values are exact integer polynomials.  For prime p the q-integer
[p]_q = 1 + q + ... + q^(p-1) is the p-th cyclotomic polynomial, which is
what makes ([p]_q)^k the natural polynomial analog of the prime power p^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .poly import NotDivisibleError, Poly


class NotPrimeError(ValueError):
    """A parameter that must be prime is composite or smaller than 2."""


class InternalNonDivisibleError(RuntimeError):
    """A structurally exact division failed; this indicates a kernel bug."""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def q_number(n: int) -> Poly:
    """The q-integer [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError(f"q_number needs n >= 0, got {n}")
    return Poly([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> Poly:
    """The q-factorial [n]_q! = [n]_q [n-1]_q ... [1]_q; [0]_q! = 1."""
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    if n == 0:
        return Poly((1,))
    return q_factorial(n - 1) * q_number(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> Poly:
    """The Gaussian binomial coefficient, an integer polynomial of degree
    k(n-k) with nonnegative coefficients.

    Out-of-range k (k < 0 or k > n) yields the zero polynomial, matching
    the convention for unrestricted summation indices.  Built as the
    incremental product of [n-k+i]_q / [i]_q for i = 1..k; every partial
    product is itself a Gaussian binomial, so each division is exact.
    """
    if n < 0:
        raise ValueError(f"q_binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return Poly()
    k = min(k, n - k)
    acc = Poly((1,))
    try:
        for i in range(1, k + 1):
            acc = (acc * q_number(n - k + i)).exact_div(q_number(i))
    except NotDivisibleError as exc:
        raise InternalNonDivisibleError(
            f"q_binomial({n}, {k}) hit an inexact division step"
        ) from exc
    return acc


def modulus(p: int, k: int) -> Poly:
    """The congruence modulus ([p]_q)^k, monic of degree k(p-1)."""
    if not is_prime(p):
        raise NotPrimeError(f"modulus requires a prime, got {p}")
    if k < 1:
        raise ValueError(f"modulus exponent must be >= 1, got {k}")
    return q_number(p) ** k


@dataclass(frozen=True)
class QParams:
    """Validated parameter bundle (p, a, b, k) for congruence statements.

    Primality of p is checked here; statement-specific bounds such as
    p >= 5 are enforced by the individual checks.
    """

    p: int
    a: int
    b: int
    k: int = 3

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrimeError(f"p must be prime, got {self.p}")
        if self.a < 0 or self.b < 0:
            raise ValueError(f"a and b must be nonnegative, got a={self.a}, b={self.b}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
