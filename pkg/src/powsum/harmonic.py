"""Generalized harmonic numbers ``H_n = sum_{k=1..n} k^-p`` for any integer
exponent p, and the identities expressing them through Stirling and
(poly-)Bernoulli numbers.

``p = 1`` gives the classical harmonic numbers, ``p = 0`` counts the terms,
and negative p turns the sum into a sum of powers; all three run through
the same code path.  The empty sum at n = 0 is 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .bernoulli import bernoulli, poly_bernoulli_sequence
from .exact import DomainError, factorial
from .stirling import stirling1u, stirling2

__all__ = [
    "harmonic_classical",
    "harmonic_direct",
    "harmonic_theorem1",
    "polybernoulli_from_harmonic",
    "reciprocal_power",
]


def reciprocal_power(k: int, p: int) -> Fraction:
    """``k^-p`` as an exact Fraction, for k >= 1 and any integer p."""
    if k < 1:
        raise DomainError("reciprocal_power: k must be >= 1")
    return Fraction(1, k**p) if p >= 0 else Fraction(k ** (-p))


def harmonic_direct(n: int, p: int) -> Fraction:
    """Literal summation; the oracle the other evaluation routes are tested
    against."""
    if n < 0:
        raise DomainError("harmonic_direct: n must be >= 0")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += reciprocal_power(k, p)
    return total


def harmonic_theorem1(
    n: int, p: int, poly_bernoulli_values: Sequence[Fraction] | None = None
) -> Fraction:
    """The (n+1)-st generalized harmonic number from poly-Bernoulli numbers:

        H_{n+1} = (1/n!) sum_{j=0..n} [n+1, j+1] B_j   (upper index p)

    ``poly_bernoulli_values`` may carry a precomputed batch of the B_j with
    upper index p, at least n+1 entries long, which is the natural shape for
    grid sweeps; by default the batch is built here.
    """
    if n < 0:
        raise DomainError("harmonic_theorem1: n must be >= 0")
    values = (
        poly_bernoulli_sequence(p, n) if poly_bernoulli_values is None else poly_bernoulli_values
    )
    if len(values) < n + 1:
        raise ValueError("poly_bernoulli_values must cover lower indices 0..n")
    total = sum(stirling1u(n + 1, j + 1) * values[j] for j in range(n + 1))
    return Fraction(total) / factorial(n)


def harmonic_classical(n: int) -> Fraction:
    """The (n+1)-st harmonic number from the classical Bernoulli numbers:

        H_{n+1} = (1/n!) sum_{k=0..n} (-1)^k [n+1, k+1] B_k
    """
    if n < 0:
        raise DomainError("harmonic_classical: n must be >= 0")
    total = sum((-1) ** k * stirling1u(n + 1, k + 1) * bernoulli(k) for k in range(n + 1))
    return Fraction(total) / factorial(n)


def polybernoulli_from_harmonic(n: int, p: int) -> Fraction:
    """Poly-Bernoulli numbers from harmonic numbers, the reverse direction
    of :func:`harmonic_theorem1`:

        B_n = sum_{k=0..n} (-1)^(n-k) {n+1, k+1} k! H_{k+1}   (upper index p)
    """
    if n < 0:
        raise DomainError("polybernoulli_from_harmonic: n must be >= 0")
    total = sum(
        (-1) ** (n - k) * stirling2(n + 1, k + 1) * factorial(k) * harmonic_direct(k + 1, p)
        for k in range(n + 1)
    )
    return Fraction(total)
