"""Sums of p-th powers ``S(n, p) = 1^p + 2^p + ... + n^p`` via six
strategies: literal summation plus five closed forms, each with at most
p+1 summands no matter how large n is.  That term-count asymmetry is what
the bench harness measures.

Also here: the rational closed form of ``Li_-p(t) = sum_{k>=1} k^p t^k``
(an Eulerian polynomial over ``(1-t)^(p+1)``) and the series check that its
expansion against ``1/(1-t)`` reproduces the power sums coefficient by
coefficient.
"""

from __future__ import annotations

import time
from enum import Enum
from fractions import Fraction

from .bernoulli import bernoulli
from .exact import DomainError, binomial, factorial, int_pow
from .report import VerificationReport
from .series import PowerSeries, geometric_pow
from .stirling import stirling2

__all__ = [
    "FormulaId",
    "evaluate",
    "in_domain",
    "polylog_neg_coeff_check",
    "polylog_neg_eval",
    "powersum_corollary",
    "powersum_direct",
    "powersum_faulhaber",
    "powersum_gould_a",
    "powersum_gould_b",
    "powersum_theorem2",
]


class FormulaId(str, Enum):
    """The five closed-form strategies plus direct summation."""

    DIRECT = "direct"
    FAULHABER = "faulhaber"
    GOULD_A = "gould_a"
    GOULD_B = "gould_b"
    COROLLARY_STIRLING = "corollary_stirling"
    THEOREM2_STIRLING = "theorem2_stirling"


def _require_natural(n: int, p: int, where: str) -> None:
    if n < 0 or p < 0:
        raise DomainError(f"{where} needs n >= 0 and p >= 0")


def powersum_direct(n: int, p: int) -> int:
    """Literal summation ``sum_{k=1..n} k^p``; the oracle for every closed
    form, with O(n) terms."""
    _require_natural(n, p, "powersum_direct")
    return sum(k**p for k in range(1, n + 1))


def powersum_faulhaber(n: int, p: int) -> int:
    """Bernoulli-number closed form:

        (1/(p+1)) sum_{k=0..p} (-1)^k C(p+1, k) B_k n^(p+1-k)

    Runs in exact rational arithmetic end to end; the total must reduce to
    an integer, and anything else signals a sign-convention bug rather than
    a user error.
    """
    _require_natural(n, p, "powersum_faulhaber")
    total = Fraction(0)
    for k in range(p + 1):
        total += (-1) ** k * binomial(p + 1, k) * bernoulli(k) * int_pow(n, p + 1 - k)
    value = total / (p + 1)
    if value.denominator != 1:
        raise ArithmeticError(f"faulhaber total is not integral at n={n}, p={p}: {value}")
    return value.numerator


def powersum_gould_a(n: int, p: int) -> int:
    """Falling-factorial expansion summed column-wise:

        sum_{j=0..p} j! {p, j} C(n+1, j+1)

    Requires p >= 1: at p = 0 the right side counts an extra k = 0 term
    (0^0 = 1) and evaluates to n+1 instead of n.
    """
    _require_natural(n, p, "powersum_gould_a")
    if p < 1:
        raise DomainError("powersum_gould_a needs p >= 1")
    return sum(factorial(j) * stirling2(p, j) * binomial(n + 1, j + 1) for j in range(p + 1))


def powersum_gould_b(n: int, p: int) -> int:
    """Rising-factorial companion of :func:`powersum_gould_a`:

        sum_{j=0..p} (-1)^(p+j) j! {p, j} C(n+j, j+1)

    Each k^p is expanded as an alternating sum of rising factorials and the
    k-sum collapses by the hockey-stick identity.  Requires p >= 1.
    """
    _require_natural(n, p, "powersum_gould_b")
    if p < 1:
        raise DomainError("powersum_gould_b needs p >= 1")
    return sum(
        (-1) ** (p + j) * factorial(j) * stirling2(p, j) * binomial(n + j, j + 1)
        for j in range(p + 1)
    )


def powersum_corollary(n: int, p: int) -> int:
    """Shifted-index Stirling form, valid for all n, p >= 0:

        sum_{j=0..p} j! {p+1, j+1} C(n, j+1)
    """
    _require_natural(n, p, "powersum_corollary")
    return sum(
        factorial(j) * stirling2(p + 1, j + 1) * binomial(n, j + 1) for j in range(p + 1)
    )


def powersum_theorem2(n: int, p: int) -> int:
    """Alternating shifted-index form with rising binomials:

        sum_{j=0..p} (-1)^(p+j) j! {p+1, j+1} C(n+j+1, j+1)

    Stated for positive n and p only; both bounds are enforced.
    """
    if n < 1 or p < 1:
        raise DomainError("powersum_theorem2 needs n >= 1 and p >= 1")
    return sum(
        (-1) ** (p + j) * factorial(j) * stirling2(p + 1, j + 1) * binomial(n + j + 1, j + 1)
        for j in range(p + 1)
    )


_EVALUATORS = {
    FormulaId.DIRECT: powersum_direct,
    FormulaId.FAULHABER: powersum_faulhaber,
    FormulaId.GOULD_A: powersum_gould_a,
    FormulaId.GOULD_B: powersum_gould_b,
    FormulaId.COROLLARY_STIRLING: powersum_corollary,
    FormulaId.THEOREM2_STIRLING: powersum_theorem2,
}


def in_domain(formula: FormulaId | str, n: int, p: int) -> bool:
    """Whether the formula is defined at (n, p); domains differ only at the
    edges n = 0 and p = 0."""
    formula = FormulaId(formula)
    if n < 0 or p < 0:
        return False
    if formula in (FormulaId.GOULD_A, FormulaId.GOULD_B):
        return p >= 1
    if formula is FormulaId.THEOREM2_STIRLING:
        return n >= 1 and p >= 1
    return True


def evaluate(formula: FormulaId | str, n: int, p: int) -> int:
    """Dispatch a power-sum evaluation; the single entry point the CLI and
    the bench harness iterate over."""
    return _EVALUATORS[FormulaId(formula)](n, p)


def polylog_neg_eval(p: int, t: Fraction) -> Fraction:
    """Evaluate ``sum_{k>=1} k^p t^k`` through its rational closed form:

        (-1)^(p+1) sum_{k=0..p} k! {p+1, k+1} (-1/(1-t))^(k+1)

    Defined for p >= 1 and any rational t except the pole at t = 1.
    """
    if p < 1:
        raise DomainError("polylog_neg_eval needs p >= 1")
    t = Fraction(t)
    if t == 1:
        raise DomainError("polylog_neg_eval has a pole at t = 1")
    u = Fraction(-1) / (1 - t)
    acc = Fraction(0)
    for k in range(p + 1):
        acc += factorial(k) * stirling2(p + 1, k + 1) * u ** (k + 1)
    return (-1) ** (p + 1) * acc


def polylog_neg_coeff_check(p: int, order: int) -> VerificationReport:
    """Expand the closed form of ``Li_-p(t) / (1-t)`` as a series, each
    ``(1-t)^-(k+1)`` contributing coefficients ``C(m+k, k)``, and require
    coefficient n to equal ``powersum_direct(n, p)`` for 0 <= n <= order."""
    if p < 1:
        raise DomainError("polylog_neg_coeff_check needs p >= 1")
    if order < 0:
        raise ValueError("order must be >= 0")
    start = time.perf_counter()
    acc = PowerSeries.zero(order)
    for k in range(p + 1):
        scalar = (-1) ** (p + 1) * factorial(k) * stirling2(p + 1, k + 1) * (-1) ** (k + 1)
        acc = acc + geometric_pow(k + 1, order) * scalar
    expanded = acc * geometric_pow(1, order)
    report = VerificationReport(suite=f"polylog_neg_coeffs(p={p})")
    for m in range(order + 1):
        report.check({"p": p, "n": m}, Fraction(powersum_direct(m, p)), expanded.coeff(m))
    report.elapsed = time.perf_counter() - start
    return report
