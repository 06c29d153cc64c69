"""Named exact-identity sweeps over parameter grids.

Each suite runs one identity (or one small family) over its default grid
and returns a :class:`VerificationReport`; a failing cell means two
independently computed sides disagreed, so failures are always worth
staring at.  Grids are sized to finish in seconds at desk scale.

Suites accept injectable evaluation callables so a deliberately broken
implementation can be used to prove the harness actually catches faults.

Grid sweeps fan out over rows when POWSUM_THREADS asks for more than one
worker; results are collected in submission order, so reports are
deterministic regardless of scheduling.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .bernoulli import (
    bernoulli,
    poly_bernoulli_negative,
    poly_bernoulli_sequence,
)
from .exact import binomial, factorial, int_pow
from .harmonic import (
    harmonic_classical,
    harmonic_theorem1,
    polybernoulli_from_harmonic,
    reciprocal_power,
)
from .powersum import FormulaId, evaluate, in_domain, polylog_neg_coeff_check
from .report import Failure, VerificationReport
from .series import harmonic_ogf_check
from .stirling import (
    inverse_stirling_transform,
    stirling2_egf_check,
    stirling_mixed_sum,
    stirling_transform,
)

__all__ = [
    "SUITE_NAMES",
    "run_suite",
    "verify_eq2",
    "verify_formulas",
    "verify_gfgh",
    "verify_nyra",
    "verify_polybernoulli",
    "verify_polylog_coeffs",
    "verify_stirling_egf",
    "verify_theorem1",
    "verify_transform_roundtrip",
]

_ROUNDTRIP_SEED = 20240801


def _worker_count() -> int:
    raw = os.environ.get("POWSUM_THREADS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_rows(fn, keys):
    workers = _worker_count()
    if workers == 1:
        return [fn(key) for key in keys]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, keys))


def _pick(value, default):
    return default if value is None else value


def verify_formulas(nmax=None, pmax=None, evaluate_fn=None) -> VerificationReport:
    """Every formula equals literal summation on its domain within the grid."""
    nmax = _pick(nmax, 200)
    pmax = _pick(pmax, 30)
    eval_fn = evaluate if evaluate_fn is None else evaluate_fn
    start = time.perf_counter()
    report = VerificationReport(suite="formulas")

    def sweep_row(p: int):
        cells, failures = 0, []
        oracle = 0  # running sum of k^p, the literal oracle swept along n
        for n in range(nmax + 1):
            if n:
                oracle += int_pow(n, p)
            for formula in FormulaId:
                if not in_domain(formula, n, p):
                    continue
                got = eval_fn(formula, n, p)
                cells += 1
                if got != oracle:
                    failures.append(
                        Failure({"formula": formula.value, "n": n, "p": p}, oracle, got)
                    )
        return cells, failures

    for cells, failures in _map_rows(sweep_row, range(pmax + 1)):
        report.cells_checked += cells
        report.failures.extend(failures)
    report.sort_failures()
    report.elapsed = time.perf_counter() - start
    return report


def verify_theorem1(nmax=None, pmax=None, theorem1_fn=None) -> VerificationReport:
    """The poly-Bernoulli route to H_{n+1} equals direct summation, for all
    upper indices |p| <= pmax."""
    nmax = _pick(nmax, 40)
    pmax = _pick(pmax, 8)
    fn = harmonic_theorem1 if theorem1_fn is None else theorem1_fn
    start = time.perf_counter()
    report = VerificationReport(suite="theorem1")

    def sweep_row(p: int):
        local = VerificationReport(suite="theorem1")
        values = poly_bernoulli_sequence(p, nmax)
        oracle = Fraction(0)
        for n in range(nmax + 1):
            oracle += reciprocal_power(n + 1, p)
            local.check({"n": n, "p": p}, oracle, fn(n, p, poly_bernoulli_values=values))
        return local

    for local in _map_rows(sweep_row, range(-pmax, pmax + 1)):
        report.extend(local)
    report.sort_failures()
    report.elapsed = time.perf_counter() - start
    return report


def verify_eq2(nmax=None, classical_fn=None) -> VerificationReport:
    """The classical-Bernoulli route to H_{n+1} equals direct summation."""
    nmax = _pick(nmax, 40)
    fn = harmonic_classical if classical_fn is None else classical_fn
    start = time.perf_counter()
    report = VerificationReport(suite="eq2")
    oracle = Fraction(0)
    for n in range(nmax + 1):
        oracle += Fraction(1, n + 1)
        report.check({"n": n}, oracle, fn(n))
    report.elapsed = time.perf_counter() - start
    return report


def verify_polybernoulli(nmax=None, pmax=None) -> VerificationReport:
    """Poly-Bernoulli consistency: the generating-function route against the
    Stirling closed form at negative upper index, the reduction to classical
    Bernoulli numbers at upper index 1, and the harmonic-number inversion."""
    kmax = _pick(nmax, 40)
    pmax = _pick(pmax, 8)
    start = time.perf_counter()
    report = VerificationReport(suite="polybernoulli")

    for p in range(pmax + 1):
        values = poly_bernoulli_sequence(-p, kmax)
        for k in range(kmax + 1):
            report.check(
                {"k": k, "p": -p}, Fraction(poly_bernoulli_negative(k, p)), values[k]
            )

    classical = poly_bernoulli_sequence(1, kmax)
    for k in range(kmax + 1):
        report.check({"k": k, "p": 1}, (-1) ** k * bernoulli(k), classical[k])

    for p in range(-min(pmax, 6), min(pmax, 6) + 1):
        inv_max = min(kmax, 20)
        values = poly_bernoulli_sequence(p, inv_max)
        for n in range(inv_max + 1):
            report.check(
                {"n": n, "p": p, "route": "from_harmonic"},
                values[n],
                polybernoulli_from_harmonic(n, p),
            )

    report.sort_failures()
    report.elapsed = time.perf_counter() - start
    return report


def verify_stirling_egf(nmax=None, order=None) -> VerificationReport:
    """Second-kind generating function against series arithmetic."""
    nmax = _pick(nmax, 5)
    order = _pick(order, 25)
    start = time.perf_counter()
    report = VerificationReport(suite="stirling_egf")
    for n in range(nmax + 1):
        report.extend(stirling2_egf_check(n, max(order, n)))
    report.elapsed = time.perf_counter() - start
    return report


def verify_nyra(nmax=None, mixed_sum_fn=None) -> VerificationReport:
    """The first/second-kind convolution equals ``n!/j! C(n+1, j+1)``, both
    sides computed independently."""
    nmax = _pick(nmax, 30)
    fn = stirling_mixed_sum if mixed_sum_fn is None else mixed_sum_fn
    start = time.perf_counter()
    report = VerificationReport(suite="nyra")
    for n in range(nmax + 1):
        for j in range(n + 1):
            lhs = fn(n, j) * factorial(j)
            rhs = factorial(n) * binomial(n + 1, j + 1)
            report.check({"n": n, "j": j}, rhs, lhs)
    report.elapsed = time.perf_counter() - start
    return report


def verify_transform_roundtrip(count=None, length=None, seed=_ROUNDTRIP_SEED) -> VerificationReport:
    """Both compositions of the Stirling transform pair are the identity on
    pseudo-random rational sequences (fixed seed, hence reproducible)."""
    count = _pick(count, 100)
    length = _pick(length, 30)
    start = time.perf_counter()
    report = VerificationReport(suite="transform_roundtrip")
    rng = random.Random(seed)
    for index in range(count):
        seq = [
            Fraction(rng.randint(-999, 999), rng.randint(1, 999)) for _ in range(length)
        ]
        report.check(
            {"n": index, "direction": "inverse_of_forward"},
            seq,
            inverse_stirling_transform(stirling_transform(seq)),
        )
        report.check(
            {"n": index, "direction": "forward_of_inverse"},
            seq,
            stirling_transform(inverse_stirling_transform(seq)),
        )
    report.elapsed = time.perf_counter() - start
    return report


def verify_gfgh(pmax=None, order=None) -> VerificationReport:
    """Generalized harmonic numbers are the coefficients of Li_p(t)/(1-t)."""
    pmax = _pick(pmax, 4)
    order = _pick(order, 25)
    start = time.perf_counter()
    report = VerificationReport(suite="gfgh")
    for p in range(-pmax, pmax + 1):
        report.extend(harmonic_ogf_check(p, order))
    report.elapsed = time.perf_counter() - start
    return report


def verify_polylog_coeffs(pmax=None, order=None) -> VerificationReport:
    """The rational closed form of Li_-p(t)/(1-t) expands to the power sums."""
    pmax = _pick(pmax, 7)
    order = _pick(order, 25)
    start = time.perf_counter()
    report = VerificationReport(suite="polylog_coeffs")
    for p in range(1, pmax + 1):
        report.extend(polylog_neg_coeff_check(p, order))
    report.elapsed = time.perf_counter() - start
    return report


_SUITES = {
    "formulas": lambda nmax, pmax, order: verify_formulas(nmax=nmax, pmax=pmax),
    "theorem1": lambda nmax, pmax, order: verify_theorem1(nmax=nmax, pmax=pmax),
    "eq2": lambda nmax, pmax, order: verify_eq2(nmax=nmax),
    "polybernoulli": lambda nmax, pmax, order: verify_polybernoulli(nmax=nmax, pmax=pmax),
    "stirling_egf": lambda nmax, pmax, order: verify_stirling_egf(nmax=nmax, order=order),
    "nyra": lambda nmax, pmax, order: verify_nyra(nmax=nmax),
    "transform_roundtrip": lambda nmax, pmax, order: verify_transform_roundtrip(count=nmax),
    "gfgh": lambda nmax, pmax, order: verify_gfgh(pmax=pmax, order=order),
    "polylog_coeffs": lambda nmax, pmax, order: verify_polylog_coeffs(pmax=pmax, order=order),
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def run_suite(name: str, nmax=None, pmax=None, order=None) -> list[VerificationReport]:
    """Run one named suite (or every suite, for "all") and return its reports."""
    if name == "all":
        return [runner(nmax, pmax, order) for runner in _SUITES.values()]
    if name not in _SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return [_SUITES[name](nmax, pmax, order)]
