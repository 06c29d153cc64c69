import pytest

from powsum.bench import BenchRecord, ChecksumMismatch, run_bench
from powsum.exact import DomainError
from powsum.powersum import FormulaId, evaluate


def test_checksum_equals_computed_value():
    records = run_bench([FormulaId.FAULHABER], [10], [2], reps=0)
    assert len(records) == 1
    assert records[0].checksum == 385
    assert records[0].reps == 0
    assert records[0].total_ns == 0
    assert records[0].ns_per_eval == 0


def test_dry_run_covers_every_cell():
    formulas = [FormulaId.DIRECT, FormulaId.COROLLARY_STIRLING]
    records = run_bench(formulas, [10, 20], [2, 3], reps=0)
    assert len(records) == 8
    by_cell = {(r.n, r.p, r.formula) for r in records}
    assert (10, 2, FormulaId.DIRECT) in by_cell
    assert all(r.checksum == evaluate("direct", r.n, r.p) for r in records)


def test_timed_records_have_positive_totals():
    records = run_bench(["direct", "faulhaber"], [2000], [5], reps=2, warmup=1)
    assert all(r.total_ns > 0 for r in records)
    assert all(r.ns_per_eval == r.total_ns // 2 for r in records)
    checksums = {r.checksum for r in records}
    assert checksums == {evaluate("direct", 2000, 5)}


def test_out_of_domain_request_is_rejected():
    with pytest.raises(DomainError):
        run_bench(["gould_a"], [10], [0], reps=1)
    with pytest.raises(DomainError):
        run_bench(["theorem2_stirling"], [0], [3], reps=1)


def test_checksum_disagreement_aborts_before_timing():
    def biased(formula, n, p):
        value = evaluate(formula, n, p)
        return value + (1 if FormulaId(formula) is FormulaId.GOULD_A else 0)

    with pytest.raises(ChecksumMismatch):
        run_bench(["direct", "gould_a"], [50], [3], reps=3, evaluate_fn=biased)


def test_drift_during_timing_is_detected():
    calls = {"count": 0}

    def flaky(formula, n, p):
        calls["count"] += 1
        value = evaluate(formula, n, p)
        return value + (1 if calls["count"] > 2 else 0)  # agree at checksum time only

    with pytest.raises(ChecksumMismatch, match="drifted"):
        run_bench(["direct"], [30], [2], reps=4, warmup=0, evaluate_fn=flaky)


def test_argument_validation():
    with pytest.raises(ValueError):
        run_bench([], [10], [2], reps=1)
    with pytest.raises(ValueError):
        run_bench(["direct"], [10], [2], reps=-1)
    with pytest.raises(ValueError):
        run_bench(["direct"], [10], [2], reps=1, warmup=-1)


def test_csv_row_shape():
    record = BenchRecord(FormulaId.DIRECT, 10, 2, 5, 1000, 385)
    assert record.csv_row() == "direct,10,2,5,1000,200"
