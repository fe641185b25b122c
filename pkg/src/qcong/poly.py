"""Dense exact arithmetic for univariate polynomials over the integers.

A polynomial is a tuple of arbitrary-precision integer coefficients in
ascending powers of q, trimmed so that the highest stored coefficient is
nonzero.  The zero polynomial stores an empty tuple and reports a degree
of ``None`` rather than a number, so accidental degree arithmetic on it
fails loudly.  Nothing in this module ever leaves integer arithmetic.
"""

from __future__ import annotations

from math import gcd as _int_gcd
from typing import Iterable


class NonMonicDivisorError(ValueError):
    """The divisor of a monic division does not have leading coefficient 1."""


class NotDivisibleError(ArithmeticError):
    """Exact division failed: nonzero remainder or a fractional quotient step."""


class Poly:
    """Immutable polynomial in q with integer coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> Poly:
        """Return coefficient * q**exponent."""
        if exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {exponent}")
        return cls([0] * exponent + [coefficient])

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (() if other == 0 else (other,))
        return NotImplemented

    def __hash__(self) -> int:
        # constants compare equal to ints, so they must hash alike
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __add__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly((other,))
        elif not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly((other,))
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> Poly:
        return Poly((other,)) + (-self)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            if other == 0:
                return Poly()
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        if len(a) < len(b):
            a, b = b, a
        nb = len(b)
        out = [0] * (len(a) + nb - 1)
        for i, ai in enumerate(a):
            if ai:
                seg = out[i:i + nb]
                out[i:i + nb] = [s + ai * bj for s, bj in zip(seg, b)]
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divrem_monic(self, m: Poly) -> tuple[Poly, Poly]:
        """Divide by a monic polynomial, returning (quotient, remainder).

        Monicity keeps every intermediate coefficient an integer and makes
        the remainder of degree < degree(m) unique.
        """
        if m.is_zero() or m.coeffs[-1] != 1:
            raise NonMonicDivisorError(f"divisor is not monic: {m}")
        dm = len(m.coeffs) - 1
        if dm == 0:
            return self, Poly()
        r = list(self.coeffs)
        if len(r) <= dm:
            return Poly(), self
        body = m.coeffs[:dm]
        quot = [0] * (len(r) - dm)
        for i in reversed(range(len(quot))):
            c = r[i + dm]
            if c:
                quot[i] = c
                seg = r[i:i + dm]
                r[i:i + dm] = [rv - c * mv for rv, mv in zip(seg, body)]
                r[i + dm] = 0
        return Poly(quot), Poly(r[:dm])

    def exact_div(self, b: Poly) -> Poly:
        """Return c with c * b == self, or raise NotDivisibleError.

        Works for arbitrary nonzero divisors by back-substituting from the
        leading coefficient; every quotient coefficient must come out an
        integer, and the final remainder must vanish.
        """
        if b.is_zero():
            raise ZeroDivisionError("exact division by the zero polynomial")
        if self.is_zero():
            return Poly()
        db = len(b.coeffs) - 1
        if len(self.coeffs) - 1 < db:
            raise NotDivisibleError(f"{self} is not divisible by {b}")
        lead = b.coeffs[-1]
        body = b.coeffs[:db]
        r = list(self.coeffs)
        quot = [0] * (len(r) - db)
        for i in reversed(range(len(quot))):
            c = r[i + db]
            step, frac = divmod(c, lead)
            if frac:
                raise NotDivisibleError(f"{self} is not divisible by {b}")
            if step:
                quot[i] = step
                seg = r[i:i + db]
                r[i:i + db] = [rv - step * bv for rv, bv in zip(seg, body)]
            r[i + db] = 0
        if any(r[:db]):
            raise NotDivisibleError(f"{self} is not divisible by {b}")
        return Poly(quot)

    def substitute_power(self, m: int) -> Poly:
        """Return self(q**m)."""
        if m < 1:
            raise ValueError(f"substitution power must be >= 1, got {m}")
        if m == 1 or self.is_zero():
            return self
        out = [0] * ((len(self.coeffs) - 1) * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return Poly(out)

    def eval_at_one(self) -> int:
        """Value at q = 1, i.e. the coefficient sum."""
        return sum(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "q" if mag == 1 else f"{mag}*q"
            else:
                term = f"q^{i}" if mag == 1 else f"{mag}*q^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly('{self}')"


def _content(p: Poly) -> int:
    g = 0
    for c in p.coeffs:
        g = _int_gcd(g, c)
    return g


def _primitive(p: Poly) -> Poly:
    """Primitive part of p, normalized to a positive leading coefficient."""
    if p.is_zero():
        return p
    g = _content(p)
    if p.coeffs[-1] < 0:
        g = -g
    if g == 1:
        return p
    return Poly([c // g for c in p.coeffs])


def _pseudo_rem(a: Poly, b: Poly) -> Poly:
    # Remainder of lc(b)**t * a divided by b; stays in integer coefficients.
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    r = a
    while not r.is_zero() and len(r.coeffs) - 1 >= db:
        shift = len(r.coeffs) - 1 - db
        r = r * lead - b * Poly.monomial(shift, r.coeffs[-1])
    return r


def gcd_primitive(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor over the rationals, as a primitive integer
    polynomial with positive leading coefficient.

    Uses a primitive pseudo-remainder sequence, so no rational arithmetic
    occurs at any point.  gcd_primitive(p, 0) is the primitive part of p.
    """
    a = _primitive(a)
    b = _primitive(b)
    while not b.is_zero():
        a, b = b, _primitive(_pseudo_rem(a, b))
    return a
