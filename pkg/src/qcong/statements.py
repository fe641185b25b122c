"""One verifiable check per congruence or identity in the statement catalog.

Every check returns a structured result carrying the parameters, the
verdict, and (on failure) the reduced difference as a witness, so a
driver can report exactly what broke.  Statements quantified over primes
p >= 5 reject smaller primes with PrecondViolationError instead of
reporting a failure; "does not apply" and "is false" are kept distinct.
The one exception is check_classical, which accepts p = 3 so the known
failure of the mod-p^3 congruence there can serve as a negative control.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter

from .congruence import CongruenceContext, QRational, q_double_harmonic, q_harmonic_sum
from .poly import Poly
from .qanalogs import is_prime, q_binomial, q_number

#: Stable statement identifiers, as accepted by the CLI.
STATEMENT_IDS = (
    "clark",
    "classical",
    "cong2",
    "convolution",
    "double_harmonic",
    "expansion",
    "jacobsthal",
    "power_reduction",
    "q_ljunggren",
    "q_wolstenholme",
    "qchu",
    "shipan",
)


class PrecondViolationError(ValueError):
    """The requested parameters are outside a statement's hypotheses."""


class BudgetExceededError(RuntimeError):
    """A composition enumeration would exceed the configured budget."""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verified statement instance.

    ``witness`` is the reduced difference that should have been zero; it is
    None exactly when the check passed.
    """

    statement_id: str
    params: dict[str, int]
    passed: bool
    witness: Poly | None
    elapsed_ms: float

    def __post_init__(self) -> None:
        if self.statement_id not in STATEMENT_IDS:
            raise ValueError(f"unknown statement id {self.statement_id!r}")
        if self.passed != (self.witness is None or self.witness.is_zero()):
            raise ValueError("witness must be absent or zero iff passed")


@dataclass(frozen=True)
class JacobsthalResult:
    """Outcome of the sharpened integer congruence mod p^(3+r).

    ``r`` is the p-adic valuation of a*b*(a-b)*binom(a,b).  ``q_exponent``
    is exploratory data: the largest k <= 5 for which the corrected
    q-congruence still holds modulo ([p]_q)^k.
    """

    r: int
    passed: bool
    q_exponent: int


_pascal_rows: list[tuple[int, ...]] = [(1,)]


def binom(n: int, k: int) -> int:
    """Integer binomial coefficient by Pascal's rule, in exact big integers.

    Kept independent of the q-binomial construction so that q = 1
    specializations are checked against a separately computed value.
    """
    if n < 0:
        raise ValueError(f"binom needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    while len(_pascal_rows) <= n:
        prev = _pascal_rows[-1]
        _pascal_rows.append(
            (1, *(prev[i] + prev[i + 1] for i in range(len(prev) - 1)), 1)
        )
    return _pascal_rows[n][k]


def _require_prime(p: int, statement: str, minimum: int = 2) -> None:
    if not is_prime(p):
        raise PrecondViolationError(f"{statement} needs a prime p, got {p}")
    if p < minimum:
        raise PrecondViolationError(f"{statement} needs p >= {minimum}, got p={p}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PrecondViolationError(message)


def _exact_scalar(numerator: int, divisor: int) -> int:
    value, frac = divmod(numerator, divisor)
    if frac:
        raise PrecondViolationError(
            f"scalar coefficient {numerator}/{divisor} is not an integer"
        )
    return value


def _finish(
    statement_id: str, params: dict[str, int], diff: Poly, t0: float
) -> CheckResult:
    passed = diff.is_zero()
    return CheckResult(
        statement_id=statement_id,
        params=params,
        passed=passed,
        witness=None if passed else diff,
        elapsed_ms=(perf_counter() - t0) * 1000.0,
    )


def _qp_minus_one(p: int) -> Poly:
    return Poly.monomial(p) - 1


def _two_power(p: int) -> Poly:
    # [2] evaluated at q^(p^2), i.e. 1 + q^(p^2)
    return q_number(2).substitute_power(p * p)


def check_qchu(m: int, n: int, k: int) -> CheckResult:
    """q-analog of the Chu-Vandermonde convolution, as an exact identity:

        C_q(m+n, k) = sum_j C_q(m, j) C_q(n, k-j) q^(j(n-k+j)).
    """
    t0 = perf_counter()
    _require(m >= 0 and n >= 0 and k >= 0, "qchu needs nonnegative m, n, k")
    lhs = q_binomial(m + n, k)
    rhs = Poly()
    for j in range(max(0, k - n), min(m, k) + 1):
        e = j * (n - k + j)
        assert e >= 0
        rhs = rhs + q_binomial(m, j) * q_binomial(n, k - j) * Poly.monomial(e)
    return _finish("qchu", {"m": m, "n": n, "k": k}, lhs - rhs, t0)


def check_expansion_identity(
    p: int, a: int, b: int, budget: int = 10**6
) -> CheckResult:
    """Multinomial expansion of C_q(ap, bp) over bounded compositions:

        C_q(ap, bp) = sum over c_1+...+c_a = bp, 0 <= c_i <= p, of
            prod_i C_q(p, c_i) * q^(p*sum (i-1)c_i - sum_{i<j} c_i c_j).

    The sum is evaluated exactly with shared suffixes, which leaves the
    enumerated sum unchanged; the budget still caps the conceptual
    (p+1)^a composition space.
    """
    t0 = perf_counter()
    _require_prime(p, "expansion")
    _require(0 <= b <= a, f"expansion needs 0 <= b <= a, got a={a}, b={b}")
    if (p + 1) ** a > budget:
        raise BudgetExceededError(
            f"(p+1)^a = {(p + 1) ** a} exceeds the enumeration budget {budget}"
        )
    target = b * p
    row = [q_binomial(p, c).coeffs for c in range(p + 1)]
    memo: dict[tuple[int, int], list[int] | None] = {}

    def suffix(i: int, s: int) -> list[int] | None:
        # Sum over (c_i, ..., c_a) completing prefix sum s to the target,
        # as a coefficient list; None when no completion exists.
        if i == a + 1:
            return [1] if s == target else None
        key = (i, s)
        if key in memo:
            return memo[key]
        base = p * (i - 1) - s
        assert base >= 0
        acc: list[int] | None = None
        for c in range(p + 1):
            ns = s + c
            if ns > target or ns + (a - i) * p < target:
                continue
            child = suffix(i + 1, ns)
            if child is None:
                continue
            e = c * base
            rc = row[c]
            need = e + len(rc) + len(child) - 1
            if acc is None:
                acc = [0] * need
            elif len(acc) < need:
                acc.extend([0] * (need - len(acc)))
            for off, coef in enumerate(rc):
                if coef:
                    lo = e + off
                    hi = lo + len(child)
                    seg = acc[lo:hi]
                    acc[lo:hi] = [x + coef * y for x, y in zip(seg, child)]
        memo[key] = acc
        return acc

    total = suffix(1, 0)
    rhs = Poly(total or ())
    lhs = q_binomial(a * p, b * p)
    return _finish("expansion", {"p": p, "a": a, "b": b}, lhs - rhs, t0)


def check_convolution_identity(p: int) -> CheckResult:
    """The peeled convolution identity

        sum_{d=1..p-1} C_q(p, d) C_q(p, p-d) q^(d^2)
            = C_q(2p, p) - (1 + q^(p^2)),

    exact for every prime p >= 2.
    """
    t0 = perf_counter()
    _require_prime(p, "convolution")
    lhs = Poly()
    for d in range(1, p):
        lhs = lhs + q_binomial(p, d) * q_binomial(p, p - d) * Poly.monomial(d * d)
    rhs = q_binomial(2 * p, p) - _two_power(p)
    return _finish("convolution", {"p": p}, lhs - rhs, t0)


def check_clark(p: int, a: int, b: int, k: int = 2) -> CheckResult:
    """Clark's congruence: C_q(ap, bp) = C_{q^(p^2)}(a, b) mod ([p]_q)^2."""
    t0 = perf_counter()
    _require_prime(p, "clark")
    _require(0 <= b <= a, f"clark needs 0 <= b <= a, got a={a}, b={b}")
    ctx = CongruenceContext(p, k)
    lhs = q_binomial(a * p, b * p)
    rhs = q_binomial(a, b).substitute_power(p * p)
    diff = ctx.reduce(lhs - rhs)
    return _finish("clark", {"p": p, "a": a, "b": b, "k": k}, diff, t0)


def check_q_ljunggren(p: int, a: int, b: int, k: int = 3) -> CheckResult:
    """q-analog of Ljunggren's congruence: for primes p >= 5,

        C_q(ap, bp) = C_{q^(p^2)}(a, b)
            - binom(a, b+1) binom(b+1, 2) ((p^2-1)/12) (q^p - 1)^2

    modulo ([p]_q)^3.
    """
    t0 = perf_counter()
    _require_prime(p, "q_ljunggren", minimum=5)
    _require(0 <= b <= a, f"q_ljunggren needs 0 <= b <= a, got a={a}, b={b}")
    ctx = CongruenceContext(p, k)
    corr = binom(a, b + 1) * binom(b + 1, 2) * _exact_scalar(p * p - 1, 12)
    lhs = q_binomial(a * p, b * p)
    rhs = q_binomial(a, b).substitute_power(p * p) - corr * _qp_minus_one(p) ** 2
    diff = ctx.reduce(lhs - rhs)
    return _finish("q_ljunggren", {"p": p, "a": a, "b": b, "k": k}, diff, t0)


def check_cong2(p: int, a: int, b: int, k: int = 3) -> CheckResult:
    """Reduction of the general case to the central one: for primes p >= 5,

        C_q(ap, bp) = C_{q^(p^2)}(a, b)
            + binom(a, b+1) binom(b+1, 2) (C_q(2p, p) - (1 + q^(p^2)))

    modulo ([p]_q)^3.
    """
    t0 = perf_counter()
    _require_prime(p, "cong2", minimum=5)
    _require(0 <= b <= a, f"cong2 needs 0 <= b <= a, got a={a}, b={b}")
    ctx = CongruenceContext(p, k)
    scale = binom(a, b + 1) * binom(b + 1, 2)
    lhs = q_binomial(a * p, b * p)
    rhs = q_binomial(a, b).substitute_power(p * p) + scale * (
        q_binomial(2 * p, p) - _two_power(p)
    )
    diff = ctx.reduce(lhs - rhs)
    return _finish("cong2", {"p": p, "a": a, "b": b, "k": k}, diff, t0)


def check_q_wolstenholme(p: int, k: int = 3) -> CheckResult:
    """q-analog of Wolstenholme's congruence: for primes p >= 5,

        C_q(2p, p) = 1 + q^(p^2) - ((p^2-1)/12) (q^p - 1)^2

    modulo ([p]_q)^3.  This is the a=2, b=1 case of check_q_ljunggren.
    """
    t0 = perf_counter()
    _require_prime(p, "q_wolstenholme", minimum=5)
    ctx = CongruenceContext(p, k)
    corr = _exact_scalar(p * p - 1, 12)
    lhs = q_binomial(2 * p, p)
    rhs = _two_power(p) - corr * _qp_minus_one(p) ** 2
    diff = ctx.reduce(lhs - rhs)
    return _finish("q_wolstenholme", {"p": p, "k": k}, diff, t0)


def check_shipan(p: int) -> CheckResult:
    """Shi and Pan's q-harmonic congruences: for primes p >= 5,

        sum 1/[i]_q   = -((p-1)/2)(q-1) + ((p^2-1)/24)(q-1)^2 [p]_q
                                                     mod ([p]_q)^2,
        sum 1/[i]_q^2 = -((p-1)(p-5)/12)(q-1)^2      mod [p]_q.
    """
    t0 = perf_counter()
    _require_prime(p, "shipan", minimum=5)
    qm1 = Poly((-1, 1))
    ctx2 = CongruenceContext(p, 2)
    h1 = q_harmonic_sum(p, 1)
    rhs1 = (
        -_exact_scalar(p - 1, 2) * qm1
        + _exact_scalar(p * p - 1, 24) * qm1 ** 2 * q_number(p)
    )
    ok1 = ctx2.frac_congruent(h1, rhs1)

    ctx1 = CongruenceContext(p, 1)
    h2 = q_harmonic_sum(p, 2)
    rhs2 = -_exact_scalar((p - 1) * (p - 5), 12) * qm1 ** 2
    ok2 = ctx1.frac_congruent(h2, rhs2)

    if ok1 and ok2:
        witness = Poly()
    elif not ok1:
        witness = ctx2.reduce(h1.num - rhs1 * h1.den)
    else:
        witness = ctx1.reduce(h2.num - rhs2 * h2.den)
    return _finish(
        "shipan",
        {"p": p, "harmonic1_ok": int(ok1), "harmonic2_ok": int(ok2)},
        witness,
        t0,
    )


def check_double_harmonic(p: int) -> CheckResult:
    """Double q-harmonic congruence: for primes p >= 5,

        sum_{i<j} 1/([i]_q [j]_q) = ((p-1)(p-2)/6)(q-1)^2  mod [p]_q.
    """
    t0 = perf_counter()
    _require_prime(p, "double_harmonic", minimum=5)
    ctx = CongruenceContext(p, 1)
    dh = q_double_harmonic(p)
    rhs = _exact_scalar((p - 1) * (p - 2), 6) * Poly((-1, 1)) ** 2
    if ctx.frac_congruent(dh, rhs):
        diff = Poly()
    else:
        diff = ctx.reduce(dh.num - rhs * dh.den)
    return _finish("double_harmonic", {"p": p}, diff, t0)


def check_power_reduction(p: int) -> CheckResult:
    """The three reductions modulo ([p]_q)^3 that pin down C_q(2p, p):

    (i)   C_q(2p, p) against its harmonic-product form
          (1 + q^p)(q^(p(p-1)) + q^(p(p-2)) [p]_q H1 + q^(p(p-3)) [p]_q^2 H2'),
          where H1 sums 1/[i]_q and H2' sums 1/([i]_q [j]_q) over i < j;
    (ii)  C_q(2p, p)  = 2 + p(q^p - 1) + ((p-1)(5p-1)/12)(q^p - 1)^2;
    (iii) 1 + q^(p^2) = 2 + p(q^p - 1) + ((p-1)p/2)(q^p - 1)^2.
    """
    t0 = perf_counter()
    _require_prime(p, "power_reduction", minimum=5)
    ctx = CongruenceContext(p, 3)
    central = q_binomial(2 * p, p)
    pn = q_number(p)

    h1 = q_harmonic_sum(p, 1)
    dh = q_double_harmonic(p)
    one = QRational(Poly((1,)), Poly((1,)))
    expr = (
        one * Poly.monomial(p * (p - 1))
        + QRational(h1.num * pn, h1.den) * Poly.monomial(p * (p - 2))
        + QRational(dh.num * pn ** 2, dh.den) * Poly.monomial(p * (p - 3))
    ) * q_number(2).substitute_power(p)
    ok1 = ctx.frac_congruent(expr, central)
    diff1 = Poly() if ok1 else ctx.reduce(expr.num - central * expr.den)

    qp1 = _qp_minus_one(p)
    rhs2 = 2 + p * qp1 + _exact_scalar((p - 1) * (5 * p - 1), 12) * qp1 ** 2
    diff2 = ctx.reduce(central - rhs2)

    rhs3 = 2 + p * qp1 + _exact_scalar((p - 1) * p, 2) * qp1 ** 2
    diff3 = ctx.reduce(_two_power(p) - rhs3)

    ok2, ok3 = diff2.is_zero(), diff3.is_zero()
    witness = diff1 if not ok1 else (diff2 if not ok2 else diff3)
    return _finish(
        "power_reduction",
        {
            "p": p,
            "harmonic_form_ok": int(ok1),
            "central_reduction_ok": int(ok2),
            "two_power_ok": int(ok3),
        },
        witness,
        t0,
    )


def check_classical(p: int, a: int, b: int) -> CheckResult:
    """The classical integer congruences at q = 1:

        binom(ap, bp) = binom(a, b)  mod p^3,
        sum 1/i   = 0  mod p^2,
        sum 1/i^2 = 0  mod p,

    with the harmonic sums cleared over the denominator (p-1)!^s.  All
    three hold for primes p >= 5; smaller primes are accepted and report
    their genuine failures, p = 3 being the documented negative control.
    """
    t0 = perf_counter()
    _require_prime(p, "classical")
    _require(0 <= b <= a, f"classical needs 0 <= b <= a, got a={a}, b={b}")
    binom_res = (binom(a * p, b * p) - binom(a, b)) % p ** 3

    fact = 1
    for i in range(2, p):
        fact *= i
    h1 = sum(fact // i for i in range(1, p)) % p ** 2
    h2 = sum((fact * fact) // (i * i) for i in range(1, p)) % p

    ok_binom, ok_h1, ok_h2 = binom_res == 0, h1 == 0, h2 == 0
    residue = binom_res if not ok_binom else (h1 if not ok_h1 else h2)
    return _finish(
        "classical",
        {
            "p": p,
            "a": a,
            "b": b,
            "binom_ok": int(ok_binom),
            "harmonic1_ok": int(ok_h1),
            "harmonic2_ok": int(ok_h2),
        },
        Poly((residue,)),
        t0,
    )


def check_jacobsthal(p: int, a: int, b: int) -> JacobsthalResult:
    """Jacobsthal's sharpening: binom(ap, bp) = binom(a, b) mod p^(3+r)
    with r the p-adic valuation of a*b*(a-b)*binom(a, b), for p >= 5 and
    0 < b < a.  Also cross-checks the identity

        a*b*(a-b)*binom(a, b) = 2a * binom(a, b+1) * binom(b+1, 2)

    and records the largest k <= 5 for which the corrected q-congruence
    of check_q_ljunggren still holds modulo ([p]_q)^k.
    """
    _require_prime(p, "jacobsthal", minimum=5)
    _require(0 < b < a, f"jacobsthal needs 0 < b < a, got a={a}, b={b}")
    value = a * b * (a - b) * binom(a, b)
    r = 0
    v = value
    while v % p == 0:
        v //= p
        r += 1
    cong_ok = (binom(a * p, b * p) - binom(a, b)) % p ** (3 + r) == 0
    identity_ok = value == 2 * a * binom(a, b + 1) * binom(b + 1, 2)

    corr = binom(a, b + 1) * binom(b + 1, 2) * _exact_scalar(p * p - 1, 12)
    diff = (
        q_binomial(a * p, b * p)
        - q_binomial(a, b).substitute_power(p * p)
        + corr * _qp_minus_one(p) ** 2
    )
    q_exponent = 0
    for k in range(1, 6):
        if not CongruenceContext(p, k).reduce(diff).is_zero():
            break
        q_exponent = k
    return JacobsthalResult(r=r, passed=cong_ok and identity_ok, q_exponent=q_exponent)
