"""Truncated formal power series with exact rational coefficients.

A :class:`PowerSeries` stores coefficients ``0..order`` and every operation
truncates its result to the smallest operand order, so a coefficient is only
ever produced when both inputs determine it.  Arithmetic is the quadratic
schoolbook kind, which is exact and entirely adequate at the orders
(``<= ~64``) these verification oracles run at.

The named constructors at the bottom build the handful of series the
identity checks need: ``1/(1-t)`` and its powers, ``e^t``, ``1 - e^{-t}``,
and the polylogarithm ``Li_p(t) = sum_{k>=1} t^k / k^p`` for any integer
order ``p``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact import DomainError, binomial, factorial
from .report import VerificationReport

__all__ = [
    "PowerSeries",
    "exp_series",
    "geometric",
    "geometric_pow",
    "harmonic_ogf_check",
    "one_minus_exp_neg",
    "one_minus_t",
    "poly_bernoulli_egf",
    "polylog_series",
]


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients ``c_0 .. c_order`` of a truncated series ``sum c_k t^k``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a PowerSeries needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, values: Iterable, order: int | None = None) -> PowerSeries:
        """Build from an iterable, optionally padded/truncated to ``order``."""
        coeffs = [Fraction(v) for v in values]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            coeffs = coeffs[: order + 1]
            coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls.constant(1, order)

    @classmethod
    def constant(cls, value, order: int) -> PowerSeries:
        if order < 0:
            raise ValueError("order must be >= 0")
        return cls((Fraction(value),) + (Fraction(0),) * order)

    @classmethod
    def identity(cls, order: int) -> PowerSeries:
        """The series ``t``, the identity for composition."""
        return cls.from_coeffs([0, 1], order=max(order, 1)).truncate(order)

    # -- inspection --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} is beyond truncation order {self.order}")
        return self.coeffs[k]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None when all are zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> PowerSeries:
        if order < 0:
            raise ValueError("order must be >= 0")
        if order >= self.order:
            return self
        return PowerSeries(self.coeffs[: order + 1])

    def coeff_strings(self) -> list[str]:
        """Coefficients in ``num/den`` notation, lowest degree first."""
        return [str(c) for c in self.coeffs]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)))

    def __sub__(self, other) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[k] - other.coeffs[k] for k in range(n + 1)))

    def __neg__(self) -> PowerSeries:
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            return PowerSeries(
                tuple(sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n + 1))
            )
        if isinstance(other, (int, Fraction)):
            return PowerSeries(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> PowerSeries:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a non-negative int")
        result = PowerSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def __truediv__(self, other) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, PowerSeries):
            return NotImplemented
        shift = other.valuation()
        if shift is None:
            raise ZeroDivisionError("division by a series that is zero to its order")
        val = self.valuation()
        if val is not None and val < shift:
            raise DomainError(
                "quotient is not a power series: divisor vanishes to higher order "
                "than dividend"
            )
        n = min(self.order, other.order) - shift
        if n < 0:
            raise ValueError("operand orders too small to determine any quotient term")
        # Factor t^shift out of both operands, then invert the unit divisor by
        # the usual recursion q_k = (a_k - sum_{i<k} q_i b_{k-i}) / b_0.
        a = self.coeffs[shift : shift + n + 1]
        b = other.coeffs[shift : shift + n + 1]
        quotient: list[Fraction] = []
        for k in range(n + 1):
            acc = a[k]
            for i, q in enumerate(quotient):
                acc -= q * b[k - i]
            quotient.append(acc / b[0])
        return PowerSeries(tuple(quotient))

    def compose(self, inner: PowerSeries) -> PowerSeries:
        """Substitute ``inner`` for t; requires ``inner`` to vanish at 0."""
        if inner.coeff(0) != 0:
            raise DomainError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        outer = self.coeffs[: n + 1]
        # Horner in the truncated ring: intermediate values are polynomials,
        # so truncating every product at order n loses nothing.
        result = PowerSeries.constant(outer[-1], n)
        for c in reversed(outer[:-1]):
            result = result * inner + PowerSeries.constant(c, n)
        return result


# -- named series --------------------------------------------------------


def geometric(order: int) -> PowerSeries:
    """``1/(1-t)``: all coefficients 1."""
    return PowerSeries((Fraction(1),) * (order + 1))


def geometric_pow(power: int, order: int) -> PowerSeries:
    """``(1-t)^-power`` with coefficient ``C(m+power-1, power-1)`` at t^m."""
    if power < 0:
        raise DomainError("geometric_pow needs power >= 0")
    if power == 0:
        return PowerSeries.one(order)
    return PowerSeries(
        tuple(Fraction(binomial(m + power - 1, power - 1)) for m in range(order + 1))
    )


def one_minus_t(order: int) -> PowerSeries:
    return PowerSeries.from_coeffs([1, -1], order=max(order, 1)).truncate(order)


def exp_series(order: int) -> PowerSeries:
    """``e^t``: coefficient ``1/k!``."""
    return PowerSeries(tuple(Fraction(1, factorial(k)) for k in range(order + 1)))


def one_minus_exp_neg(order: int) -> PowerSeries:
    """``1 - e^{-t}``: zero constant term, then ``-(-1)^k / k!``."""
    return PowerSeries(
        tuple(Fraction(-((-1) ** k), factorial(k)) if k else Fraction(0) for k in range(order + 1))
    )


def polylog_series(p: int, order: int) -> PowerSeries:
    """``Li_p(t) = sum_{k>=1} t^k / k^p`` for any integer p.

    Negative p makes the coefficients integers (``k^|p|``), turning the same
    series into the generating function of p-th powers.
    """
    coeffs = [Fraction(0)]
    for k in range(1, order + 1):
        coeffs.append(Fraction(1, k**p) if p >= 0 else Fraction(k ** (-p)))
    return PowerSeries(tuple(coeffs[: order + 1]))


def poly_bernoulli_egf(p: int, order: int) -> PowerSeries:
    """``Li_p(1 - e^{-t}) / (1 - e^{-t})`` to the given order.

    ``k!`` times coefficient k is the poly-Bernoulli number with upper index
    p.  The constant term is 1 for every p (``Li_p(z)/z -> 1`` as z -> 0),
    which fixes the k = 0 value even though the defining sum is sometimes
    displayed starting at k = 1.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    # Build one order higher: the substitution has valuation 1, so the final
    # division gives back exactly `order` coefficients.
    work = order + 1
    z = one_minus_exp_neg(work)
    return polylog_series(p, work).compose(z) / z


def harmonic_ogf_check(p: int, order: int) -> VerificationReport:
    """Verify coefficient k of ``Li_p(t)/(1-t)`` is the k-th generalized
    harmonic number ``sum_{i<=k} i^-p``, for 0 <= k <= order."""
    from .harmonic import harmonic_direct  # deferred: harmonic depends on this module

    start = time.perf_counter()
    report = VerificationReport(suite=f"harmonic_ogf(p={p})")
    quotient = polylog_series(p, order) / one_minus_t(order)
    for k in range(order + 1):
        report.check({"p": p, "k": k}, harmonic_direct(k, p), quotient.coeff(k))
    report.elapsed = time.perf_counter() - start
    return report
