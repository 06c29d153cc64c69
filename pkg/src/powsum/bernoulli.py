"""Classical Bernoulli numbers and their poly-Bernoulli generalization.

Conventions, fixed once for the whole package:

* ``B_1 = -1/2`` (the generating function ``t/(e^t - 1)``), produced by the
  defining recurrence ``sum_{k=0..n} C(n+1, k) B_k = 0`` for n >= 1.
* The poly-Bernoulli number with lower index k and integer upper index p is
  ``k!`` times coefficient k of ``Li_p(1 - e^{-t}) / (1 - e^{-t})``.  That
  series has constant term 1, so the k = 0 value is 1 for every p even
  though the defining sum is sometimes displayed starting at k = 1.
* Upper index 1 reduces to the classical numbers with an alternating sign:
  the value at (k, 1) is ``(-1)^k B_k``.

For negative upper index the values are integers and there is an
independent closed form, a convolution of second-kind Stirling numbers,
implemented in :func:`poly_bernoulli_negative`.  It serves both as the fast
path and as a cross-check on the generating-function route.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exact import DomainError, binomial, factorial
from .series import poly_bernoulli_egf
from .stirling import stirling2

__all__ = [
    "BernoulliCache",
    "bernoulli",
    "poly_bernoulli",
    "poly_bernoulli_negative",
    "poly_bernoulli_sequence",
]


class BernoulliCache:
    """Monotonically grown list of the classical numbers B_0, B_1, ..."""

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def grow(self, n: int) -> None:
        if n < len(self._values):
            return
        with self._lock:
            while len(self._values) <= n:
                m = len(self._values)
                acc = sum(binomial(m + 1, k) * value for k, value in enumerate(self._values))
                self._values.append(-acc / (m + 1))

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError("bernoulli: n must be >= 0")
        self.grow(n)
        return self._values[n]


_CACHE = BernoulliCache()


def bernoulli(n: int) -> Fraction:
    """The n-th Bernoulli number, with ``bernoulli(1) == -1/2``."""
    return _CACHE.value(n)


def poly_bernoulli_sequence(p: int, kmax: int) -> list[Fraction]:
    """All poly-Bernoulli numbers with upper index p and lower index 0..kmax.

    One generating-function expansion serves the whole batch, which is the
    shape grid sweeps want; :func:`poly_bernoulli` is the single-value
    convenience on top of it.
    """
    if kmax < 0:
        raise DomainError("poly_bernoulli_sequence: kmax must be >= 0")
    egf = poly_bernoulli_egf(p, kmax)
    return [factorial(k) * egf.coeff(k) for k in range(kmax + 1)]


def poly_bernoulli(k: int, p: int) -> Fraction:
    """Poly-Bernoulli number, lower index k >= 0, any integer upper index p."""
    if k < 0:
        raise DomainError("poly_bernoulli: k must be >= 0")
    return poly_bernoulli_sequence(p, k)[k]


def poly_bernoulli_negative(k: int, p: int) -> int:
    """Closed form for upper index ``-p`` (p >= 0):

        sum_{j=0..min(k,p)} (j!)^2 {p+1, j+1} {k+1, j+1}

    Symmetric in k and p, always an integer, and equal to
    ``poly_bernoulli(k, -p)``.
    """
    if k < 0 or p < 0:
        raise DomainError("poly_bernoulli_negative: k and p must be >= 0")
    return sum(
        factorial(j) ** 2 * stirling2(p + 1, j + 1) * stirling2(k + 1, j + 1)
        for j in range(min(k, p) + 1)
    )
