"""Exact arithmetic building blocks shared by every other module.

Python ints are arbitrary precision and ``fractions.Fraction`` keeps every
value reduced with a positive denominator, so equality of values is plain
structural equality.  This module pins the few conventions the formula code
depends on (``0**0 == 1``, factorials and binomials on natural numbers) and
the ``num/den`` text form used by the CLI and all serialization.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

__all__ = [
    "DomainError",
    "Rational",
    "binomial",
    "factorial",
    "format_rational",
    "int_pow",
    "parse_rational",
]

#: Exact rational scalar used throughout the package.
Rational = Fraction


class DomainError(ValueError):
    """An argument lies outside the domain on which an operation is defined."""


def factorial(n: int) -> int:
    """Return ``n!`` for ``n >= 0``."""
    if n < 0:
        raise DomainError("factorial: n must be >= 0")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Return ``C(n, k)`` for ``n, k >= 0``; zero when ``k > n``."""
    if n < 0 or k < 0:
        raise DomainError("binomial: n and k must be >= 0")
    return math.comb(n, k)


def int_pow(base: int, exponent: int) -> int:
    """Return ``base ** exponent`` exactly, for ``exponent >= 0``.

    ``int_pow(0, 0)`` is 1, the empty-product convention every summation
    formula here relies on.
    """
    if exponent < 0:
        raise DomainError("int_pow: exponent must be >= 0")
    return base**exponent


_RATIONAL_FORM = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse the ``num/den`` wire form: optional sign, digits, optional ``/digits``."""
    body = text.strip()
    if not _RATIONAL_FORM.fullmatch(body):
        raise ValueError(f"not a num/den rational: {text!r}")
    num, slash, den = body.partition("/")
    if slash and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den)) if slash else Fraction(int(num))


def format_rational(value) -> str:
    """Render an int or Fraction as ``num/den``, omitting a unit denominator."""
    return str(Fraction(value))
