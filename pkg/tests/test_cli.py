import io
import json
import subprocess
import sys

import pytest

from lcdkit.cli import main
from lcdkit.constructions import mod9_construction
from lcdkit.matrix import format_matrix, parse_matrix


def run_cli(argv, capsys, monkeypatch=None, stdin_text=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def binary_example(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("2 2 1\n0 1\n")
    return str(path)


def test_check_text_output(binary_example, capsys):
    code, out, _ = run_cli(["check", binary_example], capsys)
    assert code == 0
    assert out.splitlines() == ["LCD: true", "hull_dim: 0"]


def test_check_reads_stdin(capsys, monkeypatch):
    code, out, _ = run_cli(["check", "-"], capsys, monkeypatch,
                           stdin_text="3 4 2\n1 0 1 0\n0 1 0 2\n")
    assert code == 0 and out.startswith("LCD:")


def test_construct_mindist_pipe(capsys, monkeypatch):
    code, out, _ = run_cli(["construct", "mod9-3", "--m", "1"], capsys)
    assert code == 0
    code, out, _ = run_cli(["mindist", "-"], capsys, monkeypatch, stdin_text=out)
    assert code == 0 and out.strip() == "4"


def test_bound_values(capsys):
    for formula, expected in (("stated", "4"), ("plotkin", "9"), ("singleton", "11")):
        code, out, _ = run_cli(
            ["bound", "--n", "12", "--k", "2", "--q", "3", "--formula", formula],
            capsys)
        assert code == 0 and out.strip() == expected


@pytest.mark.parametrize("argv", [
    ["construct", "repetition", "--n", "5"],
    ["construct", "zero-rep", "--n", "6"],
    ["construct", "mod9-3", "--m", "1"],
    ["construct", "mod9-4", "--m", "1"],
])
def test_construct_round_trips_through_check(argv, capsys, monkeypatch):
    code, emitted, _ = run_cli(argv, capsys)
    assert code == 0
    reparsed = parse_matrix(emitted)
    assert format_matrix(reparsed) == emitted  # no serialization drift
    code, out, _ = run_cli(["check", "-"], capsys, monkeypatch, stdin_text=emitted)
    assert code == 0
    expect = "true" if argv[1] != "mod9-4" else "false"
    assert out.splitlines()[0] == f"LCD: {expect}"


def test_between_both_spellings_agree(tmp_path, capsys):
    f1 = tmp_path / "c1.txt"
    f2 = tmp_path / "c2.txt"
    f1.write_text("3 4 2\n1 0 0 1\n0 1 1 0\n")
    f2.write_text("3 4 1\n1 1 1 1\n")
    _, via_construct, _ = run_cli(
        ["construct", "between", "--c1", str(f1), "--c2", str(f2)], capsys)
    _, via_subcommand, _ = run_cli(["between", str(f1), str(f2)], capsys)
    assert via_construct == via_subcommand
    assert parse_matrix(via_construct).rows == 3


def test_construct_structured_record(capsys):
    code, out, _ = run_cli(
        ["construct", "mod9-3", "--m", "1", "--format", "structured"], capsys)
    rec = json.loads(out)
    assert rec["version"] == 1 and rec["record"] == "matrix"
    assert rec["family"] == "mod9-3" and rec["k"] == 2 and rec["n"] == 12
    rows = [[int(x) for x in line.split()] for line in rec["rows"]]
    assert (rows == mod9_construction(3, 1).generator.arr).all()


def test_weights_and_dual(capsys, monkeypatch):
    self_dual = "2 4 2\n1 0 1 0\n0 1 0 1\n"
    code, out, _ = run_cli(["weights", "-"], capsys, monkeypatch,
                           stdin_text=self_dual)
    assert code == 0 and out.strip() == "1 0 2 0 1"
    code, out, _ = run_cli(["dual", "-"], capsys, monkeypatch,
                           stdin_text=self_dual)
    assert code == 0
    dual = parse_matrix(out)
    assert (dual.rows, dual.cols) == (2, 4)


def test_search_structured_and_jobs_identical(capsys):
    base = ["search", "--n", "8", "--k", "2", "--format", "structured",
            "--no-timing"]
    _, one, _ = run_cli(base + ["--jobs", "1"], capsys)
    _, four, _ = run_cli(base + ["--jobs", "4"], capsys)
    assert one == four
    rec = json.loads(one)
    assert rec["d_lcd"] == 5 and "elapsed_ms" not in rec
    assert rec["witness_rows"][0].count(" ") == 7


def test_search_random_records_generated_seed(capsys):
    argv = ["search", "--n", "6", "--k", "2", "--method", "random",
            "--trials", "40", "--format", "structured", "--no-timing"]
    _, out, _ = run_cli(argv, capsys)
    rec = json.loads(out)
    assert isinstance(rec["seed"], int)
    _, again, _ = run_cli(argv + ["--seed", str(rec["seed"])], capsys)
    assert json.loads(again) == rec


def test_table_structured_and_monotonic(capsys):
    argv = ["table", "--n", "2:6", "--k", "1:3", "--no-timing",
            "--check-monotonic", "--format", "structured"]
    code, out, _ = run_cli(argv, capsys)
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert all(rec["version"] == 1 for rec in records)
    kinds = {rec["record"] for rec in records}
    assert kinds == {"table-cell", "skipped-cell"}  # no violations on real data
    assert sum(rec["record"] == "skipped-cell" for rec in records) == 1
    assert len(records) == 15


def test_table_text_mentions_monotonicity(capsys):
    code, out, _ = run_cli(
        ["table", "--n", "2:5", "--k", "2", "--no-timing", "--check-monotonic"],
        capsys)
    assert code == 0 and "monotonicity: no violations" in out


def test_verify_paper_exit_codes(capsys):
    argv = ["verify-paper", "--budget", "100", "--seed", "5"]
    code, out, _ = run_cli(argv, capsys)
    assert code == 0
    assert "kn1-multiple: refuted" in out
    code, _, _ = run_cli(argv + ["--strict"], capsys)
    assert code == 2


def test_verify_paper_structured_and_claims_out(tmp_path, capsys):
    claims_path = tmp_path / "claims.json"
    argv = ["verify-paper", "--budget", "100", "--seed", "5",
            "--format", "structured", "--claims-out", str(claims_path)]
    code, out, _ = run_cli(argv, capsys)
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 12
    assert records[-1]["record"] == "verify-summary"
    assert records[-1]["seed"] == 5
    catalog = json.loads(claims_path.read_text())
    assert len(catalog) == 11
    assert all("hypothesis_text" in rec for rec in catalog)


def test_figures_written(tmp_path, capsys):
    out_dir = tmp_path / "figs"
    code, _, err = run_cli(
        ["table", "--n", "2:6", "--k", "2", "--figures", str(out_dir)], capsys)
    assert code == 0
    assert (out_dir / "table_k2_q3.png").stat().st_size > 0
    assert "wrote figures" in err


def test_usage_and_input_errors_exit_one(tmp_path, capsys, monkeypatch):
    assert run_cli(["bogus"], capsys)[0] == 1
    assert run_cli(["bound", "--n", "4"], capsys)[0] == 1  # missing --k
    assert run_cli(["check", str(tmp_path / "missing.txt")], capsys)[0] == 1
    code, _, err = run_cli(["check", "-"], capsys, monkeypatch,
                           stdin_text="3 3 1\n1 2\n")
    assert code == 1 and "line 2" in err
    code, _, err = run_cli(["search", "--n", "30", "--k", "2"], capsys)
    assert code == 1 and "budget" in err


def test_help_exits_zero(capsys):
    assert run_cli(["--help"], capsys)[0] == 0
    assert run_cli(["search", "--help"], capsys)[0] == 0


def test_console_script_installed():
    proc = subprocess.run([sys.executable, "-m", "lcdkit.cli", "bound",
                           "--n", "12", "--k", "2", "--formula", "stated"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "4"
