"""CLI contract: flags, file schemas, exit codes, byte-stable JSON."""

import json
import subprocess
import sys

import pytest

from urskit.cli import main


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


BASE = ["--n", "7", "--m", "1", "--a", "1", "--b", "1", "--s", "2,3"]


# --- validate-poly --------------------------------------------------------------


def test_validate_poly_pass(capsys):
    code, out, _ = run(["validate-poly", *BASE], capsys)
    assert code == 0
    assert "squarefree" in out


def test_validate_poly_degree_gap(capsys):
    code, _, _ = run(
        ["validate-poly", "--n", "6", "--m", "1", "--a", "1", "--b", "1", "--s", "2,3"],
        capsys,
    )
    assert code == 1


def test_validate_poly_non_unit_b(capsys):
    code, _, _ = run(
        ["validate-poly", "--n", "7", "--m", "1", "--a", "1", "--b", "1/5", "--s", "2,3"],
        capsys,
    )
    assert code == 1


def test_malformed_rational_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["validate-poly", "--n", "7", "--m", "1", "--a", "0.5", "--b", "1", "--s", "2,3"])
    assert exc.value.code == 2


def test_float_rejected_in_files(tmp_path, capsys):
    pairs = write(tmp_path, "pairs.json", [{"x": "0.5", "y": "1"}])
    code, _, err = run(["share", *BASE, "--pairs", pairs], capsys)
    assert code == 2
    assert "floats are not accepted" in err
    assert "pairs.json[0].x" in err


def test_schema_error_names_field(tmp_path, capsys):
    pairs = write(tmp_path, "pairs.json", [{"x": "1"}])
    code, _, err = run(["share", *BASE, "--pairs", pairs], capsys)
    assert code == 2
    assert "pairs.json[0]" in err


# --- share / unit-eq --------------------------------------------------------------


def test_share_command(tmp_path, capsys):
    pairs = write(tmp_path, "pairs.json", [{"x": "0", "y": "-1"}, {"x": "1", "y": "0"}])
    code, out, _ = run(
        ["share", *BASE, "--pairs", pairs, "--format", "json"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["rows"][0]["shares"] is True
    assert data["rows"][1]["u"] == "3"
    assert data["artifact"]["version"]
    assert data["config"]["s_primes"] == [2, 3]


def test_share_nonsharing_exit(tmp_path, capsys):
    pairs = write(tmp_path, "pairs.json", [{"x": "2", "y": "3"}])
    code, _, _ = run(["share", *BASE, "--pairs", pairs], capsys)
    assert code == 1


def test_unit_eq_contains_fixture(capsys):
    code, out, _ = run(
        ["unit-eq", "--s", "2,3", "--bound", "3", "--format", "json"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert ["9", "-8"] in data["solutions"]


# --- trace -------------------------------------------------------------------------


def test_trace_reports_identity(tmp_path, capsys):
    pairs = write(tmp_path, "pairs.json", [{"x": "0", "y": "-1"}])
    code, out, _ = run(
        ["trace", *BASE, "--pairs", pairs, "--epsilon", "1/10", "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    row = data["rows"][0]
    assert row["identity_ok"] is True and row["u"] == "1"
    checks = data["checks"]
    assert checks["main_inequality"]["constants"]["C_total"] == str(2**20)
    assert checks["roth_chain"]["ok"] and checks["trunc_bounds"]["ok"]
    assert data["dependence"]["basis"] == [[1, 0, 0], [0, 0, 1]]


def test_trace_invalid_family_exit(tmp_path, capsys):
    pairs = write(tmp_path, "pairs.json", [{"x": "0", "y": "-1"}])
    code, _, err = run(
        ["trace", "--n", "6", "--m", "1", "--a", "1", "--b", "1", "--s", "2,3",
         "--pairs", pairs],
        capsys,
    )
    assert code == 1
    assert "validate-poly" in err


# --- subspace -----------------------------------------------------------------------


def test_subspace_fixture(tmp_path, capsys):
    forms = write(tmp_path, "forms.json", {"r": 1, "forms": [["1", "0"], ["0", "1"], ["1", "1"]]})
    points = write(tmp_path, "points.json", [["81", "-80"], ["5", "-4"]])
    code, out, _ = run(
        ["subspace", "--s", "2,3", "--epsilon", "1/10", "--forms", forms,
         "--points", points, "--format", "json"],
        capsys,
    )
    assert code == 1  # one violated row
    data = json.loads(out)
    first, second = data["rows"]
    assert first["verdict"] == "violated"
    assert first["rhs"]["exact"] == "5"
    assert first["max_height"]["exact"] == "81"
    assert second["verdict"] == "holds"


def test_subspace_corollary_mode(tmp_path, capsys):
    pairs = write(tmp_path, "pairs.json", [{"x": "5", "y": "-4"}])
    code, out, _ = run(
        ["subspace", "--s", "2,3", "--corollary", "--A", "1", "--B", "1", "--C", "1",
         "--pairs", pairs, "--epsilon", "1/10", "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["rows"][0]["agree"] is True


def test_subspace_missing_files_schema_error(capsys):
    code, _, err = run(["subspace", "--s", "2,3"], capsys)
    assert code == 2
    assert "forms" in err


def test_subspace_summary_and_strict(tmp_path, capsys):
    forms = write(tmp_path, "forms.json", {"r": 1, "forms": [["1", "0"], ["0", "1"], ["1", "1"]]})
    points = write(tmp_path, "points.json", [["10", "15"]])
    code, out, _ = run(
        ["subspace", "--s", "2,3", "--forms", forms, "--points", points,
         "--format", "json"],
        capsys,
    )
    data = json.loads(out)
    assert data["summary"]["points"] == 1
    # strict mode rejects the same non-primitive point
    code, _, err = run(
        ["subspace", "--s", "2,3", "--forms", forms, "--points", points, "--strict"],
        capsys,
    )
    assert code == 2
    assert "not primitive" in err


def test_empty_prime_set_allowed(capsys):
    code, _, _ = run(
        ["validate-poly", "--n", "7", "--m", "1", "--a", "1", "--b", "1", "--s", ""],
        capsys,
    )
    assert code == 0  # 1 and -1 are S-units for every S


def test_zero_b_fails_unit_check(capsys):
    code, out, _ = run(
        ["validate-poly", "--n", "7", "--m", "1", "--a", "1", "--b", "0", "--s", "2,3"],
        capsys,
    )
    assert code == 1
    assert "b_s_unit" in out


def test_format_both_prints_table_and_writes_json(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    code, out, _ = run(
        ["unit-eq", "--s", "2,3", "--bound", "1", "--format", "both",
         "--out", str(out_file)],
        capsys,
    )
    assert code == 0
    assert "u" in out and "v" in out  # table headers on stdout
    data = json.loads(out_file.read_text())
    assert data["command"] == "unit-eq"


# --- searches and determinism ---------------------------------------------------------


def test_search_shared_fixture(tmp_path, capsys):
    code, out, _ = run(
        ["search-shared", *BASE, "--height-bound", "5", "--format", "json"], capsys
    )
    assert code == 0
    data = json.loads(out)
    pairs = [(r["x"], r["y"]) for r in data["rows"]]
    assert ("0", "-1") in pairs and ("-1", "0") in pairs


def test_search_su_fixture(capsys):
    code, out, _ = run(
        ["search-su", *BASE, "--c", "1", "--height-bound", "20", "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert ["0", "-1"] in data["pairs"] and ["-1", "0"] in data["pairs"]


def test_search_budget_exit(capsys):
    code, _, err = run(
        ["search-su", *BASE, "--c", "1", "--height-bound", "10", "--pair-budget", "5"],
        capsys,
    )
    assert code == 3
    assert "budget" in err


def test_worker_count_does_not_change_bytes(tmp_path, capsys):
    out1 = tmp_path / "w1.json"
    out4 = tmp_path / "w4.json"
    argv = ["search-shared", *BASE, "--height-bound", "8", "--denom-exponent", "1",
            "--format", "json"]
    assert main([*argv, "--workers", "1", "--out", str(out1)]) == 0
    assert main([*argv, "--workers", "4", "--out", str(out4)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out4.read_bytes()


def test_repeated_run_byte_identical(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    argv = ["unit-eq", "--s", "2,3", "--bound", "4", "--format", "json"]
    assert main([*argv, "--out", str(a)]) == 0
    assert main([*argv, "--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_module_invocation_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "urskit", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "urskit" in proc.stdout
