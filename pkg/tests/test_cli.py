import json

import pytest

from quivercoalg.cli import main

LINE = """quiver
vertex a
vertex b
vertex c
arrow x a b
arrow y b c
"""

POSET = """poset
element p
element q
element r
cover p q
cover q r
"""

REP = """rep
dim a 1
dim b 1
dim c 1
map x 1
map y 1
"""


@pytest.fixture
def line_file(tmp_path):
    path = tmp_path / "line.txt"
    path.write_text(LINE)
    return str(path)


@pytest.fixture
def poset_file(tmp_path):
    path = tmp_path / "poset.txt"
    path.write_text(POSET)
    return str(path)


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_paths_verb(line_file, capsys):
    status, out, _ = run(capsys, "paths", line_file, "--max-len", "2")
    assert status == 0
    assert "count: 6" in out
    assert "x.y" in out


def test_delta_and_mul(line_file, capsys):
    status, out, _ = run(capsys, "delta", line_file, "[x.y]")
    assert status == 0 and "[x] (x) [y]" in out
    status, out, _ = run(capsys, "mul", line_file, "[x]", "[y]")
    assert status == 0 and "product: [x.y]" in out


def test_check_bialgebra_exit_codes(line_file, capsys, tmp_path):
    status, out, _ = run(capsys, "check", "bialgebra", line_file)
    assert status == 1
    assert "witness" in out
    single = tmp_path / "single.txt"
    single.write_text("quiver\nvertex u\nvertex v\narrow x u v\n")
    status, out, _ = run(capsys, "check", "bialgebra", str(single))
    assert status == 0


def test_check_thm33_family(capsys):
    status, out, _ = run(capsys, "check", "thm33", "family:loop", "--codim-bound", "10")
    assert status == 1
    assert "rule:eval(1)" in out
    assert "no_up_to_bound" in out


def test_check_coreflexive_tensor(line_file, capsys):
    status, out, _ = run(capsys, "check", "coreflexive", line_file, line_file)
    assert status == 0
    assert "tensor rule" in out


def test_rep_locnilp(line_file, tmp_path, capsys):
    rep = tmp_path / "rep.txt"
    rep.write_text(REP)
    status, out, _ = run(capsys, "rep-locnilp", line_file, str(rep))
    assert status == 0
    assert "locally_nilpotent: True" in out
    assert "consistent" in out


def test_check_prop41_and_thm42(poset_file, capsys):
    status, out, _ = run(capsys, "check", "prop41", poset_file)
    assert status == 0 and "agreement: True" in out
    status, out, _ = run(capsys, "check", "thm42", poset_file)
    assert status == 0 and "dimension: 6" in out


def test_json_reports_round_trip(line_file, capsys):
    status, out, _ = run(capsys, "check", "bialgebra", line_file, "--json")
    report = json.loads(out)
    assert report["command"] == "check-bialgebra"
    assert report["compatible"] is False
    status, out, _ = run(capsys, "paths", line_file, "--json")
    report = json.loads(out)
    assert report["count"] == 6


def test_reports_are_deterministic(line_file, capsys):
    first = run(capsys, "factor-perp", line_file, "[a]", "--seed", "5")
    second = run(capsys, "factor-perp", line_file, "[a]", "--seed", "5")
    assert first == second
    reseeded = run(capsys, "factor-perp", line_file, "[a]", "--seed", "6")
    assert reseeded != first


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("quiver\nvertex a\narrow x a\n")
    status, out, err = run(capsys, "paths", str(bad))
    assert status == 2
    assert "line 3" in err


def test_unknown_suite_exit_code(capsys):
    status, _, err = run(capsys, "suite", "nonsense")
    assert status == 2
    assert "unknown suite" in err


def test_suite_runs(capsys):
    status, out, _ = run(capsys, "suite", "prop32", "--seed", "7")
    assert status == 0
    assert "[PASS]" in out


def test_counterexample_verbs(capsys):
    status, out, _ = run(capsys, "counterexample", "multiarrow", "--max-len", "5")
    assert status == 0
    assert "codimension: 3" in out
    status, out, _ = run(capsys, "counterexample", "cycle", "family:cycle:2", "--max-len", "8")
    assert status == 0
    assert "codimension: 4" in out


def test_prime_field_flag(line_file, capsys):
    status, out, _ = run(capsys, "mul", line_file, "3*[x]", "5*[y]", "--field", "fp:7")
    assert status == 0
    assert "[x.y]" in out
    status, _, err = run(capsys, "paths", line_file, "--field", "fp:6")
    assert status == 2
