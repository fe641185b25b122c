"""Congruence services modulo M = ([p]_q)^k, plus q-harmonic sums.

Congruence of integer polynomials means divisibility of the difference by
M inside Z[q].  Fractional congruences N/D = R (mod M) are interpreted by
clearing the denominator: N = R*D (mod M), which requires D to be a unit
modulo M.  Since [p]_q is irreducible for prime p, unit-ness is exactly
coprimality with [p]_q, certified with a rational-free polynomial gcd.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import Poly, gcd_primitive
from .qanalogs import is_prime, modulus, q_factorial, q_number


class DenominatorNotUnitError(ValueError):
    """The denominator of a fractional congruence shares a factor with [p]_q."""


@dataclass(frozen=True)
class QRational:
    """A formal quotient of two integer polynomials.

    No normalization is performed; num/den is kept exactly as built.
    Congruence verdicts are invariant under scaling by polynomials coprime
    to the modulus, so canonical form is never needed.
    """

    num: Poly
    den: Poly

    def __post_init__(self) -> None:
        if self.den.is_zero():
            raise ValueError("QRational denominator must be nonzero")

    def __add__(self, other: QRational) -> QRational:
        if not isinstance(other, QRational):
            return NotImplemented
        return QRational(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    def __mul__(self, other: QRational | Poly | int) -> QRational:
        if isinstance(other, QRational):
            return QRational(self.num * other.num, self.den * other.den)
        if isinstance(other, (Poly, int)):
            return QRational(self.num * other, self.den)
        return NotImplemented

    __rmul__ = __mul__


@dataclass(frozen=True)
class CongruenceContext:
    """A prime p and exponent k with the cached modulus ([p]_q)^k."""

    p: int
    k: int
    modulus: Poly = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "modulus", modulus(self.p, self.k))

    def reduce(self, a: Poly) -> Poly:
        """Canonical remainder of a modulo ([p]_q)^k; degree < k(p-1).

        Coefficients are not range-normalized: the degree bound alone makes
        the representative unique in Z[q].
        """
        return a.divrem_monic(self.modulus)[1]

    def congruent(self, a: Poly, b: Poly) -> bool:
        """True iff ([p]_q)^k divides a - b in Z[q]."""
        return self.reduce(a - b).is_zero()

    def frac_congruent(self, f: QRational, r: Poly) -> bool:
        """True iff f.num = r * f.den modulo ([p]_q)^k.

        Raises DenominatorNotUnitError when f.den is not coprime to [p]_q,
        in which case the fractional congruence would be meaningless.
        """
        g = gcd_primitive(f.den, q_number(self.p))
        if g.degree != 0:
            raise DenominatorNotUnitError(
                f"denominator shares the factor {g} with [{self.p}]_q"
            )
        return self.congruent(f.num, r * f.den)


def q_harmonic_sum(p: int, s: int) -> QRational:
    """The sum of 1/([i]_q)^s for i = 1..p-1, over the fixed common
    denominator ([p-1]_q!)^s."""
    if s not in (1, 2):
        raise ValueError(f"harmonic power must be 1 or 2, got {s}")
    if p < 3 or not is_prime(p):
        raise ValueError(f"q_harmonic_sum needs a prime p >= 3, got {p}")
    num = Poly()
    den = Poly((1,))
    for i in range(1, p):
        t = q_number(i) ** s
        num = num * t + den
        den = den * t
    return QRational(num, den)


def q_double_harmonic(p: int) -> QRational:
    """The sum of 1/([i]_q [j]_q) over 1 <= i < j <= p-1, over the fixed
    common denominator ([p-1]_q!)^2."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"q_double_harmonic needs a prime p >= 3, got {p}")
    f = q_factorial(p - 1)
    cof = {i: f.exact_div(q_number(i)) for i in range(1, p)}
    num = Poly()
    suffix = Poly()
    for i in reversed(range(1, p)):
        num = num + cof[i] * suffix
        suffix = suffix + cof[i]
    return QRational(num, f * f)
