import io
import json
from fractions import Fraction as F

import pytest

from orderedpmf.cli import InputError, load_records, main, parse_record


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pmf_opm_row(capsys):
    code, out, _ = run(capsys, "pmf", "--kind", "opm", "6/5,1,1,5/6")
    assert code == 0
    assert "6/23 6/23 6/23 5/23 | 1.01594 | 0.0162193" in out


@pytest.mark.parametrize("kind", ["apm", "gpm", "opm"])
def test_pmf_uniform(capsys, kind):
    code, out, _ = run(capsys, "pmf", "--kind", kind, "--format", "json", "1,1,1")
    rec = json.loads(out)["records"][0]
    assert code == 0
    assert rec["probs"] == ["1/3"] * 3
    assert rec["variance"] == "0"


def test_pmf_normalized_scores(capsys):
    code, out, _ = run(capsys, "pmf", "--normalize", "--format", "json", "alice=90,95,85,90")
    rec = json.loads(out)["records"][0]
    assert code == 0
    assert rec["variance"] == pytest.approx(0.00156616, abs=5e-9)
    assert rec["mode"] == "approx"


def test_pmf_opm_without_normalize_fails(capsys):
    code, _, err = run(capsys, "pmf", "alice=90,95,85,90")
    assert code == 1
    assert "alice" in err and "65407500" in err


def test_pmf_gpm_needs_no_unit_product(capsys):
    code, out, _ = run(capsys, "pmf", "--kind", "gpm", "2,3")
    assert code == 0
    assert "2/5 3/5" in out


def test_search_examples(capsys):
    code, out, _ = run(capsys, "search", "--format", "json", "ex1=6/5,1,1,5/6", "ex2=6/5,7/6,6/7,5/6", "c=3,3,3")
    assert code == 0
    ex1, ex2, const = json.loads(out)["records"]
    assert ex1["best_ordering"] == ["6/5", "1", "1", "5/6"]
    assert float(F(ex1["variance"])) == pytest.approx(0.0162193, abs=5e-8)
    assert float(F(ex2["variance"])) == pytest.approx(0.0281971, abs=5e-8)
    assert const["variance"] == "0"
    assert ex1["method"] == "exhaustive"


def test_search_table(capsys):
    code, out, _ = run(capsys, "search", "6/5,1,1,5/6")
    assert code == 0
    assert "best ordering 6/5, 1, 1, 5/6" in out
    assert "0.0162193" in out


def test_search_forced_exhaustive_capacity(capsys):
    code, _, err = run(capsys, "search", "--mode", "exhaustive", "--max-exhaustive", "3", "1,2,3,4")
    assert code == 1
    assert "max_exhaustive" in err


def test_compare_alice_bob(capsys):
    code, out, _ = run(capsys, "compare", "Alice=90,95,85,90", "Bob=85,95,90,90")
    assert code == 0
    assert "winner: Bob" in out
    assert "0.00156616" in out and "0.00152324" in out


def test_compare_json(capsys):
    code, out, _ = run(capsys, "compare", "--format", "json", "Alice=90,95,85,90", "Bob=85,95,90,90")
    doc = json.loads(out)
    assert doc["winner"] == "Bob"
    assert doc["ranking"] == ["Bob", "Alice"]
    assert [r["name"] for r in doc["records"]] == ["Alice", "Bob"]


def test_compare_single_and_tie(capsys):
    code, out, _ = run(capsys, "compare", "solo=1,2,3")
    assert "winner: solo" in out
    code, out, _ = run(capsys, "compare", "a=1,2,3", "b=1,2,3")
    assert code == 0 and "tie: a, b" in out


def test_compare_duplicate_names(capsys):
    code, _, err = run(capsys, "compare", "a=1,2", "a=2,1")
    assert code == 1
    assert "duplicate" in err


@pytest.mark.parametrize("n", [1, 3, 4])
def test_identity(capsys, n):
    code, out, _ = run(capsys, "identity", "-n", str(n), "--trials", "100", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["exact_zeros"] == 100
    assert doc["max_abs_residual"] == "0"
    assert doc["max_abs_residual_float"] <= 1e-12


def test_identity_table(capsys):
    code, out, _ = run(capsys, "identity", "-n", "3", "--trials", "100")
    assert "exact zeros: 100/100" in out


def test_parse_record_forms():
    rec = parse_record("alice = 0.85, 3/4 ,2", "seq1")
    assert rec.name == "alice"
    assert rec.values == [F(17, 20), F(3, 4), 2]
    assert parse_record("1,2", "seq7").name == "seq7"


@pytest.mark.parametrize(
    "line, column",
    [("1,x,3", 3), ("a=1, 2, -3", 9), ("1,,2", 3), ("1/0", 1)],
)
def test_parse_errors_locate(line, column):
    with pytest.raises(InputError) as info:
        parse_record(line, "s", lineno=4)
    assert info.value.line == 4
    assert info.value.column == column


def test_input_file(tmp_path, capsys):
    path = tmp_path / "scores.txt"
    path.write_text("# two players\nAlice=90,95,85,90\n\nBob=85,95,90,90\n")
    code, out, _ = run(capsys, "compare", "--input", str(path))
    assert code == 0 and "winner: Bob" in out


def test_input_file_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("a=1,2\nb=1,zz\n")
    code, _, err = run(capsys, "pmf", "--kind", "gpm", "--input", str(path))
    assert code == 1
    assert f"{path}:2:5" in err


def test_stdin_input():
    recs = load_records([], "-", io.StringIO("1,2\nx=3\n"))
    assert [r.name for r in recs] == ["seq1", "x"]


def test_missing_input(capsys):
    code, _, err = run(capsys, "pmf")
    assert code == 1
    code, _, err = run(capsys, "pmf", "--input", "/nonexistent/file")
    assert code == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["pmf", "--kind", "xpm", "1"])
    assert info.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["pmf", "--kind", "opm", "a=6/5,1,1,5/6", "b=2,1/2"],
        ["pmf", "--kind", "gpm", "a=0.85,0.9,1.25"],
        ["pmf", "--normalize", "a=90,95,85,90"],
        ["search", "a=6/5,7/6,6/7,5/6"],
        ["compare", "Alice=90,95,85,90", "Bob=85,95,90,90"],
        ["compare", "a=4,1", "b=1,4"],
    ],
)
def test_json_round_trip(tmp_path, capsys, argv):
    code, first, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    path = tmp_path / "out.json"
    path.write_text(first)
    command = argv[0]
    flags = [a for a in argv[1:] if a.startswith("--") or a in ("opm", "gpm", "apm")]
    code, second, _ = run(capsys, command, *flags, "--format", "json", "--input", str(path))
    assert code == 0
    assert second == first


def test_format_env(monkeypatch, capsys):
    monkeypatch.setenv("ORDEREDPMF_FORMAT", "json")
    code, out, _ = run(capsys, "pmf", "1,1")
    assert json.loads(out)["command"] == "pmf"

