"""Microbenchmark harness for the power-sum evaluation strategies.

For every requested (n, p) cell, each requested formula is evaluated once
up front and all results must be identical; that agreed value becomes the
record's checksum.  Timed repetitions are folded into an accumulator that
is compared against ``reps * checksum`` afterwards, so the measured work
can neither be skipped nor silently wrong.  With ``reps == 0`` nothing is
timed and only the checksums are reported (dry-run mode).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .exact import DomainError
from .powersum import FormulaId, evaluate, in_domain

__all__ = ["BenchRecord", "ChecksumMismatch", "run_bench"]

CSV_HEADER = "formula,n,p,reps,total_ns,ns_per_eval"
CSV_HEADER_DRY = "formula,n,p,checksum"


class ChecksumMismatch(RuntimeError):
    """Two formulas disagreed on a value they were about to be timed on."""


@dataclass
class BenchRecord:
    """One timed (formula, n, p) cell.

    The checksum equals the single computed value; keeping it in the record
    (and accumulating it during the timed loop) prevents the benchmarked
    computation from being eliminated.
    """

    formula: FormulaId
    n: int
    p: int
    reps: int
    total_ns: int
    checksum: int

    @property
    def ns_per_eval(self) -> int:
        return self.total_ns // self.reps if self.reps else 0

    def csv_row(self) -> str:
        return f"{self.formula.value},{self.n},{self.p},{self.reps},{self.total_ns},{self.ns_per_eval}"


def run_bench(
    formulas: Sequence[FormulaId | str],
    n_values: Iterable[int],
    p_values: Iterable[int],
    reps: int,
    warmup: int = 1,
    evaluate_fn: Callable | None = None,
) -> list[BenchRecord]:
    """Benchmark each formula at each (n, p) cell; sequential and
    deterministic in record order (n, then p, then formula as given)."""
    if reps < 0 or warmup < 0:
        raise ValueError("reps and warmup must be >= 0")
    chosen = [FormulaId(f) for f in formulas]
    if not chosen:
        raise ValueError("no formulas requested")
    eval_fn = evaluate if evaluate_fn is None else evaluate_fn

    records: list[BenchRecord] = []
    for n in n_values:
        for p in p_values:
            for formula in chosen:
                if not in_domain(formula, n, p):
                    raise DomainError(
                        f"formula {formula.value} is out of domain at n={n}, p={p}"
                    )
            values = {formula: eval_fn(formula, n, p) for formula in chosen}
            checksum = next(iter(values.values()))
            mismatched = {f.value: v for f, v in values.items() if v != checksum}
            if mismatched:
                raise ChecksumMismatch(
                    f"checksum disagreement at n={n}, p={p}: {values}"
                )
            if reps == 0:
                records.extend(
                    BenchRecord(formula, n, p, 0, 0, checksum) for formula in chosen
                )
                continue
            for formula in chosen:
                for _ in range(warmup):
                    eval_fn(formula, n, p)
                accumulator = 0
                begin = time.perf_counter_ns()
                for _ in range(reps):
                    accumulator += eval_fn(formula, n, p)
                total_ns = time.perf_counter_ns() - begin
                if accumulator != reps * checksum:
                    raise ChecksumMismatch(
                        f"{formula.value} drifted during timing at n={n}, p={p}"
                    )
                records.append(BenchRecord(formula, n, p, reps, total_ns, checksum))
    return records
