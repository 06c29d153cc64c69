"""Outcome records for exact identity sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import format_rational

__all__ = ["Failure", "VerificationReport"]

#: How many failing cells a serialized report carries at most.
MAX_REPORTED_FAILURES = 25


def _render(value) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in value) + "]"
    try:
        return format_rational(value)
    except (TypeError, ValueError):
        return str(value)


@dataclass
class Failure:
    """One grid cell whose two sides disagreed."""

    inputs: dict
    expected: object
    got: object

    def to_dict(self) -> dict:
        return {
            "inputs": dict(self.inputs),
            "expected": _render(self.expected),
            "got": _render(self.got),
        }


def _cell_key(failure: Failure) -> tuple:
    inputs = failure.inputs

    def num(name):
        value = inputs.get(name)
        return value if isinstance(value, int) else -1

    return (num("n"), num("p"), num("k"), num("j"), str(inputs.get("formula", "")))


@dataclass
class VerificationReport:
    """Result of sweeping one identity over a parameter grid.

    The report passes exactly when no cell disagreed; every comparison is
    exact, so there is no tolerance anywhere.
    """

    suite: str
    cells_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, inputs: dict, expected, got) -> None:
        """Record one cell, keeping the mismatch when the sides differ."""
        self.cells_checked += 1
        if expected != got:
            self.failures.append(Failure(dict(inputs), expected, got))

    def extend(self, other: VerificationReport) -> None:
        """Fold another report's cells and failures into this one."""
        self.cells_checked += other.cells_checked
        self.failures.extend(other.failures)

    def sort_failures(self) -> None:
        """Normalize failure order to (n, p, k, j, formula) regardless of schedule."""
        self.failures.sort(key=_cell_key)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "cells_checked": self.cells_checked,
            "failure_count": len(self.failures),
            "failures": [f.to_dict() for f in self.failures[:MAX_REPORTED_FAILURES]],
            "elapsed_s": round(self.elapsed, 6),
        }
