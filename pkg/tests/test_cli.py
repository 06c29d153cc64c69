import json

from powsum.cli import main
from powsum.exact import parse_rational
from powsum.powersum import FormulaId
import powsum.verify as verify


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_powersum_with_formula(capsys):
    code, out, _ = run(capsys, "compute", "powersum", "-n", "3", "-p", "2", "--formula", "theorem2_stirling")
    assert code == 0
    assert out.strip() == "14"


def test_compute_harmonic_plain(capsys):
    code, out, _ = run(capsys, "compute", "harmonic", "-n", "3", "-p", "1")
    assert code == 0
    assert out.strip() == "11/6"


def test_compute_polybernoulli_negative_upper_index(capsys):
    code, out, _ = run(capsys, "compute", "polybernoulli", "-k", "2", "-p", "-1")
    assert code == 0
    assert out.strip() == "4"


def test_compute_bernoulli(capsys):
    code, out, _ = run(capsys, "compute", "bernoulli", "-n", "12")
    assert code == 0
    assert out.strip() == "-691/2730"


def test_compute_stirling_values(capsys):
    code, out, _ = run(capsys, "compute", "stirling1", "-n", "4", "-k", "2")
    assert (code, out.strip()) == (0, "11")
    code, out, _ = run(capsys, "compute", "stirling2", "-n", "4", "-k", "2")
    assert (code, out.strip()) == (0, "7")


def test_compute_polylog(capsys):
    code, out, _ = run(capsys, "compute", "polylog", "-p", "2", "-t", "1/2")
    assert (code, out.strip()) == (0, "6")


def test_compute_json_payloads(capsys):
    code, out, _ = run(capsys, "compute", "harmonic", "-n", "4", "-p", "2", "--format", "json", "--formula", "theorem1")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"n": 4, "p": 2, "value": "205/144", "method": "theorem1"}


def test_compute_csv_format(capsys):
    code, out, _ = run(capsys, "compute", "powersum", "-n", "10", "-p", "2", "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "n,p,formula,value"
    assert row == "10,2,direct,385"


def test_printed_values_roundtrip_through_parser(capsys):
    cases = [
        ("compute", "powersum", "-n", "7", "-p", "11"),
        ("compute", "harmonic", "-n", "9", "-p", "3"),
        ("compute", "bernoulli", "-n", "20"),
        ("compute", "polybernoulli", "-k", "6", "-p", "2"),
    ]
    for argv in cases:
        code, out, _ = run(capsys, *argv)
        assert code == 0
        parse_rational(out.strip())  # must parse back exactly


def test_domain_violation_exits_2_and_names_precondition(capsys):
    code, _, err = run(capsys, "compute", "powersum", "-n", "5", "-p", "0", "--formula", "gould_a")
    assert code == 2
    assert "p >= 1" in err


def test_harmonic_eq2_requires_exponent_one(capsys):
    code, _, err = run(capsys, "compute", "harmonic", "-n", "3", "-p", "2", "--formula", "eq2")
    assert code == 2
    assert "p = 1" in err
    code, out, _ = run(capsys, "compute", "harmonic", "-n", "3", "-p", "1", "--formula", "eq2")
    assert (code, out.strip()) == (0, "11/6")


def test_harmonic_zero_index(capsys):
    for method in ("direct", "theorem1", "eq2"):
        code, out, _ = run(capsys, "compute", "harmonic", "-n", "0", "-p", "1", "--formula", method)
        assert (code, out.strip()) == (0, "0")


def test_missing_flags_exit_2(capsys):
    code, _, err = run(capsys, "compute", "powersum", "-n", "3")
    assert code == 2
    assert "needs" in err


def test_unknown_quantity_exits_2(capsys):
    assert run(capsys, "compute", "zeta", "-n", "3")[0] == 2


def test_table_dump(capsys):
    code, out, _ = run(capsys, "table", "stirling2", "--nmax", "4")
    assert code == 0
    assert out.splitlines() == ["1", "0,1", "0,1,1", "0,1,3,1", "0,1,7,6,1"]


def test_verify_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "nyra", "--nmax", "10")
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "nyra"
    assert report["passed"] is True
    assert report["failures"] == []


def test_verify_unknown_suite_exits_2(capsys):
    assert run(capsys, "verify", "everything")[0] == 2


def test_verify_all_with_injected_fault_exits_1(capsys, monkeypatch):
    from powsum.powersum import evaluate

    def off_by_one(formula, n, p):
        value = evaluate(formula, n, p)
        return value + (1 if FormulaId(formula) is FormulaId.COROLLARY_STIRLING else 0)

    monkeypatch.setattr(verify, "evaluate", off_by_one)
    code, out, _ = run(capsys, "verify", "all", "--nmax", "5", "--pmax", "2", "--order", "6")
    assert code == 1
    reports = [json.loads(line) for line in out.splitlines()]
    formulas = next(r for r in reports if r["suite"] == "formulas")
    assert formulas["passed"] is False
    first = formulas["failures"][0]
    assert first["inputs"]["formula"] == "corollary_stirling"
    # every other suite is untouched by the fault
    assert all(r["passed"] for r in reports if r["suite"] != "formulas")


def test_bench_dry_run_checksums(capsys):
    code, out, _ = run(capsys, "bench", "--formulas", "faulhaber", "-n", "10", "-p", "2", "--reps", "0")
    assert code == 0
    assert out.splitlines() == ["formula,n,p,checksum", "faulhaber,10,2,385"]


def test_bench_csv_output(capsys):
    code, out, _ = run(
        capsys, "bench", "--formulas", "direct,corollary_stirling", "-n", "500", "-p", "3",
        "--reps", "2", "--warmup", "0",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "formula,n,p,reps,total_ns,ns_per_eval"
    assert len(lines) == 3
    for line in lines[1:]:
        formula, n, p, reps, total_ns, ns_per_eval = line.split(",")
        assert formula in ("direct", "corollary_stirling")
        assert (int(n), int(p), int(reps)) == (500, 3, 2)
        assert int(total_ns) > 0 and int(ns_per_eval) > 0


def test_bench_rejects_unknown_formula(capsys):
    code, _, err = run(capsys, "bench", "--formulas", "direct,newton", "-n", "10", "-p", "2")
    assert code == 2
    assert "newton" in err or "valid names" in err


def test_bench_out_of_domain_exits_2(capsys):
    code, _, err = run(capsys, "bench", "--formulas", "gould_a", "-n", "10", "-p", "0", "--reps", "0")
    assert code == 2
    assert "out of domain" in err


def test_no_command_exits_2(capsys):
    assert main([]) == 2
