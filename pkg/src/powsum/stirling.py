"""Stirling numbers of both kinds as memoized triangles, plus the sequence
transform pair built from them and the convolution identity tying the two
kinds together.

``stirling1u(n, k)`` counts permutations of n elements with k disjoint
cycles (unsigned first kind); ``stirling2(n, k)`` counts partitions of an
n-set into k non-empty blocks.  Out-of-triangle queries (k > n) return 0 so
summations can run over rectangular index ranges without edge cases.
"""

from __future__ import annotations

import threading
import time
from enum import Enum
from fractions import Fraction

from .exact import DomainError, factorial
from .report import VerificationReport

__all__ = [
    "StirlingKind",
    "StirlingTable",
    "inverse_stirling_transform",
    "stirling1u",
    "stirling2",
    "stirling2_egf_check",
    "stirling_mixed_sum",
    "stirling_transform",
]


class StirlingKind(str, Enum):
    FIRST_UNSIGNED = "first_unsigned"
    SECOND = "second"


class StirlingTable:
    """A triangle of Stirling numbers grown row by row on demand.

    Rows are kept for the table's lifetime.  Growth is serialized by a lock;
    after a preparatory :meth:`grow`, instances are safe to share read-only
    across threads.
    """

    def __init__(self, kind: StirlingKind | str):
        self.kind = StirlingKind(kind)
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def grow(self, n: int) -> None:
        """Ensure rows 0..n are materialized."""
        if n < len(self._rows):
            return
        first_kind = self.kind is StirlingKind.FIRST_UNSIGNED
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows) - 1  # last complete row index
                prev = self._rows[m]
                row = [0] * (m + 2)
                for k in range(1, m + 2):
                    above = prev[k] if k <= m else 0
                    row[k] = (m if first_kind else k) * above + prev[k - 1]
                self._rows.append(row)

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise DomainError("stirling numbers need n, k >= 0")
        if k > n:
            return 0
        self.grow(n)
        return self._rows[n][k]

    def row(self, n: int) -> list[int]:
        if n < 0:
            raise DomainError("row index must be >= 0")
        self.grow(n)
        return list(self._rows[n])


_FIRST = StirlingTable(StirlingKind.FIRST_UNSIGNED)
_SECOND = StirlingTable(StirlingKind.SECOND)


def stirling1u(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind [n k]."""
    return _FIRST.value(n, k)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind {n k}."""
    return _SECOND.value(n, k)


def stirling_mixed_sum(n: int, j: int) -> int:
    """Sum of ``[n+1, k+1] * {k+1, j+1}`` over ``j <= k <= n``.

    Equals ``n!/j! * C(n+1, j+1)``; the test suites compute both sides
    independently and require exact agreement.
    """
    if not 0 <= j <= n:
        raise DomainError("stirling_mixed_sum needs 0 <= j <= n")
    return sum(stirling1u(n + 1, k + 1) * stirling2(k + 1, j + 1) for k in range(j, n + 1))


def stirling_transform(seq):
    """Map a_0..a_N to ``b_n = sum_{k<=n} [n+1, k+1] a_k``."""
    return [
        sum(stirling1u(n + 1, k + 1) * seq[k] for k in range(n + 1))
        for n in range(len(seq))
    ]


def inverse_stirling_transform(seq):
    """Map b_0..b_N to ``a_n = sum_{k<=n} (-1)^(n-k) {n+1, k+1} b_k``.

    Inverse of :func:`stirling_transform`: composing the two in either order
    is the identity on sequences.
    """
    return [
        sum((-1) ** (n - k) * stirling2(n + 1, k + 1) * seq[k] for k in range(n + 1))
        for n in range(len(seq))
    ]


def stirling2_egf_check(n: int, order: int) -> VerificationReport:
    """Compare ``sum_{k>=n} {k+1, n+1} z^k/k!`` with ``(e^z - 1)^n e^z / n!``
    coefficient by coefficient up to ``order``.

    The left side comes straight from the triangle, the right side is built
    independently with series arithmetic.
    """
    from .series import PowerSeries, exp_series  # deferred; series does not import us

    if n < 0:
        raise DomainError("stirling2_egf_check needs n >= 0")
    if order < n:
        raise DomainError("stirling2_egf_check needs order >= n")
    start = time.perf_counter()
    ez = exp_series(order)
    rhs = (ez - PowerSeries.one(order)) ** n * ez / factorial(n)
    report = VerificationReport(suite=f"stirling2_egf(n={n})")
    for k in range(order + 1):
        lhs = Fraction(stirling2(k + 1, n + 1), factorial(k))
        report.check({"n": n, "k": k}, lhs, rhs.coeff(k))
    report.elapsed = time.perf_counter() - start
    return report
