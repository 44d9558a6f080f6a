import json

import pytest

from direfair import serialize_election
from direfair.cli import main
from direfair.fixture import (COMMITTEE_SIZE, two_state_constraints,
                              two_state_election)


@pytest.fixture
def demo_file(tmp_path):
    path = tmp_path / "demo.election"
    path.write_text(serialize_election(two_state_election(),
                                       two_state_constraints(), COMMITTEE_SIZE),
                    encoding="utf-8")
    return str(path)


def test_solve(demo_file, capsys):
    assert main(["solve", demo_file]) == 0
    assert capsys.readouterr().out.strip() == "{c0,c2,c5,c7} score 286"


def test_solve_json(demo_file, capsys):
    assert main(["solve", demo_file, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"members": [0, 2, 5, 7], "score": 286}


def test_solve_writes_file(demo_file, tmp_path):
    out = tmp_path / "result.txt"
    assert main(["solve", demo_file, "--out", str(out)]) == 0
    assert out.read_text() == "{c0,c2,c5,c7} score 286\n"


def test_fair_variants(demo_file, capsys):
    assert main(["fair", demo_file, "--notion", "fec", "--bound", "0"]) == 0
    assert capsys.readouterr().out.strip() == "{c0,c2,c4,c7} score 285"
    assert main(["fair", demo_file, "--notion", "wec", "--bound", "0"]) == 0
    assert capsys.readouterr().out.strip() == "{c0,c2,c4,c6} score 284"
    assert main(["fair", demo_file, "--notion", "wec", "--bound", "2/13"]) == 0
    assert capsys.readouterr().out.strip() == "{c0,c2,c5,c7} score 286"


def test_check_pass_and_fail(demo_file, capsys):
    assert main(["check", demo_file, "--committee", "0,2,4,7",
                 "--notion", "uec", "--bound", "0"]) == 0
    out = capsys.readouterr().out
    assert "constraints: satisfied" in out
    assert "uec(0) global: satisfied" in out

    assert main(["check", demo_file, "--committee", "0,2,5,7",
                 "--notion", "uec", "--bound", "0"]) == 1
    out = capsys.readouterr().out
    assert "ENVY" in out
    assert "proportion envious: 1/1 (1.000000)" in out

    assert main(["check", demo_file, "--committee", "0,1,4,5"]) == 1
    assert "constraints: violated" in capsys.readouterr().out


def test_check_bad_committee(demo_file, capsys):
    assert main(["check", demo_file, "--committee", "0,two"]) == 2
    assert main(["check", demo_file, "--committee", "0,1,2"]) == 2


def test_manipulate_demo_reports_nothing(demo_file, capsys):
    assert main(["manipulate", demo_file, "--any"]) == 1
    assert "no successful manipulation" in capsys.readouterr().err


def test_manipulate_bad_population(demo_file):
    assert main(["manipulate", demo_file, "--manipulator", "nodash"]) == 2


def test_generate_then_solve(tmp_path, capsys):
    out = tmp_path / "gen.election"
    assert main(["generate", "--candidates", "8", "--voters", "10", "--k", "3",
                 "--pi", "2", "--seed", "cli", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("dire-election v1\n")
    capsys.readouterr()
    code = main(["solve", str(out)])
    assert code in (0, 1)
    # repeat generation is identical
    out2 = tmp_path / "gen2.election"
    assert main(["generate", "--candidates", "8", "--voters", "10", "--k", "3",
                 "--pi", "2", "--seed", "cli", "--out", str(out2)]) == 0
    assert out2.read_text() == text


def test_generate_requires_k(capsys):
    assert main(["generate", "--candidates", "8", "--voters", "10"]) == 2
    assert "requires --k" in capsys.readouterr().err


def test_experiment_csv_and_json(tmp_path, capsys):
    args = ["experiment", "--sweep", "bound", "--values", "0,2",
            "--notion", "uec", "--candidates", "7", "--voters", "8",
            "--k", "3", "--instances", "2", "--seed", "cli-exp"]
    assert main(args) == 0
    out = capsys.readouterr().out
    assert out.startswith("value,instance,")
    assert len(out.strip().splitlines()) == 5

    assert main(args + ["--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload) == 4
    assert {"value", "instance", "feasible", "ef_exists"} <= set(payload[0])


def test_simpsons_command(demo_file, tmp_path, capsys):
    # the demo has one voter attribute: not applicable
    assert main(["simpsons", demo_file, "--notion", "uec", "--bound", "0"]) == 1
    assert "not applicable" in capsys.readouterr().err

    gen = tmp_path / "two_attrs.election"
    assert main(["generate", "--candidates", "10", "--voters", "12", "--k", "3",
                 "--pi", "2", "--seed", "simpson:17", "--out", str(gen)]) == 0
    assert main(["simpsons", str(gen), "--notion", "uec", "--bound", "0",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"global_exists", "intersectional_exists",
                            "global_fail_intersectional_pass",
                            "intersectional_fail_global_pass"}


def test_missing_file_and_bad_input(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "absent.election")]) == 2
    bad = tmp_path / "bad.election"
    bad.write_text("not an election\n")
    assert main(["solve", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_missing_k(tmp_path):
    path = tmp_path / "nok.election"
    text = serialize_election(two_state_election(), two_state_constraints())
    path.write_text(text)
    assert main(["solve", str(path)]) == 2
    assert main(["solve", str(path), "--k", "4"]) == 0


def test_usage_errors():
    assert main([]) == 2
    assert main(["solve"]) == 2
    assert main(["fair", "x", "--notion", "zzz"]) == 2
