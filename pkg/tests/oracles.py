"""Independent brute-force oracles for the test suite.

Everything here is deliberately naive: enumeration, Pascal's triangle,
repeated multiplication.  These routines share no code with the package so
an agreement between the two is evidence, not tautology.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def factorial_by_products(n: int) -> int:
    result = 1
    for i in range(1, n + 1):
        result *= i
    return result


def binomial_pascal(n: int, k: int) -> int:
    if k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def pow_by_squaring(base: int, exponent: int) -> int:
    result = 1
    while exponent:
        if exponent & 1:
            result *= base
        base *= base
        exponent >>= 1
    return result


def count_cycles(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
    return cycles


def stirling1u_brute(n: int, k: int) -> int:
    """Count permutations of n elements with exactly k cycles. Keep n <= 7."""
    return sum(1 for perm in itertools.permutations(range(n)) if count_cycles(perm) == k)


def set_partitions(items: list):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [partition[i] + [head]] + partition[i + 1 :]
        yield [[head]] + partition


def stirling2_brute(n: int, k: int) -> int:
    """Count partitions of an n-set into exactly k blocks. Keep n <= 7."""
    return sum(1 for part in set_partitions(list(range(n))) if len(part) == k)


def bernoulli_akiyama_tanigawa(nmax: int) -> list[Fraction]:
    """B_0..B_nmax by the Akiyama-Tanigawa scheme.

    This yields the convention with +1/2 at index 1; the package uses -1/2,
    so comparisons go through a (-1)^n flip (even indices are unaffected and
    odd indices above 1 are zero either way).
    """
    row = [Fraction(0)] * (nmax + 1)
    values = []
    for m in range(nmax + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        values.append(row[0])
    return values


def harmonic_by_summation(n: int, p: int) -> Fraction:
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, k**p) if p >= 0 else Fraction(k ** (-p))
    return total


def powersum_by_summation(n: int, p: int) -> int:
    total = 0
    for k in range(1, n + 1):
        total += k**p
    return total
