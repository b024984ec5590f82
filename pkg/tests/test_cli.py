import json

import pytest

from minicalc.cli import main
from minicalc.fixtures import FIXTURES, get_fixture

IMP_P_P = "Imp p p Imp_R Neg p p Ext p Neg p Basic"
MISSING_EXT = "Imp p p Imp_R Neg p p Basic"

PROMOTED = """Imp p p

Imp_R
  Neg p
  p
Ext
  p
  Neg p
Basic
"""


@pytest.fixture
def proof_file(tmp_path):
    def write(source, name="proof.mc"):
        path = tmp_path / name
        path.write_text(source, encoding="utf-8")
        return str(path)

    return write


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as stop:
        code = stop.code
    out = capsys.readouterr()
    return code, out.out, out.err


# ------------- check -------------


def test_check_verified_exit_0(proof_file, capsys):
    code, out, _ = run(capsys, "check", proof_file(IMP_P_P))
    assert code == 0
    assert "verified" in out


def test_check_warning_exit_1(proof_file, capsys):
    code, out, _ = run(capsys, "check", proof_file(MISSING_EXT))
    assert code == 1
    assert "warning" in out
    assert "Basic" in out


def test_check_parse_error_exit_2(proof_file, capsys):
    code, out, _ = run(capsys, "check", proof_file("Imp p p Bogus_R"))
    assert code == 2
    assert "error" in out


def test_check_json_stable(proof_file, capsys):
    path = proof_file(IMP_P_P)
    code, first, _ = run(capsys, "check", "--json", path)
    assert code == 0
    payload = json.loads(first)
    assert payload["verdict"] == "verified"
    assert list(payload) == [
        "verdict",
        "diagnostics",
        "renderedGoal",
        "promotedLayout",
        "isabelleTheory",
        "steps",
        "countermodel",
    ]
    _, second, _ = run(capsys, "check", "--json", path)
    assert first == second


def test_check_unreadable_exit_66(capsys):
    code, _, err = run(capsys, "check", "/nonexistent/nowhere.mc")
    assert code == 66
    assert "cannot read" in err


# ------------- fmt -------------


def test_fmt_prints_promoted(proof_file, capsys):
    code, out, _ = run(capsys, "fmt", proof_file(IMP_P_P))
    assert code == 0
    assert out == PROMOTED


def test_fmt_write_rewrites_file(proof_file, capsys, tmp_path):
    path = proof_file(IMP_P_P)
    code, _, _ = run(capsys, "fmt", "--write", path)
    assert code == 0
    assert open(path).read() == PROMOTED


def test_fmt_parse_error_leaves_file_alone(proof_file, capsys):
    path = proof_file("Imp p (")
    code, _, _ = run(capsys, "fmt", "--write", path)
    assert code == 2
    assert open(path).read() == "Imp p ("


def test_fmt_formats_warnings_too(proof_file, capsys):
    code, out, _ = run(capsys, "fmt", proof_file(MISSING_EXT))
    assert code == 0
    assert out.startswith("Imp p p\n")


# ------------- export -------------


def test_export_stdout(proof_file, capsys):
    code, out, _ = run(capsys, "export", proof_file(IMP_P_P), "--theory", "My_Proof")
    assert code == 0
    assert out.startswith("theory My_Proof\n")
    assert "⊩" in out


def test_export_to_file(proof_file, capsys, tmp_path):
    target = tmp_path / "out.thy"
    code, _, _ = run(
        capsys, "export", proof_file(IMP_P_P), "--theory", "My_Proof", "-o", str(target)
    )
    assert code == 0
    assert target.read_text().startswith("theory My_Proof")


def test_export_refuses_warning(proof_file, capsys):
    code, _, err = run(capsys, "export", proof_file(MISSING_EXT), "--theory", "No_Proof")
    assert code == 1
    assert "only verified" in err


# ------------- validate -------------


def test_validate_valid_goal(proof_file, capsys):
    code, out, _ = run(capsys, "validate", proof_file(IMP_P_P), "--max-domain", "3")
    assert code == 0
    assert out.strip() == "valid up to 3"


def test_validate_countermodel(proof_file, capsys):
    code, out, _ = run(capsys, "validate", proof_file("p Basic"), "--max-domain", "2")
    assert code == 1
    assert "countermodel" in out


def test_validate_open_goal_is_a_clean_error(proof_file, capsys):
    code, _, err = run(capsys, "validate", proof_file("P[Var 0] Basic"), "--max-domain", "2")
    assert code == 2
    assert "free variable" in err


# ------------- examples -------------


def test_examples_lists_all_fixtures(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0
    for fixture in FIXTURES:
        assert fixture.name in out


def test_examples_prints_source(capsys):
    code, out, _ = run(capsys, "examples", "imp_p_p")
    assert code == 0
    assert out == get_fixture("imp_p_p").source


def test_examples_unknown_name(capsys):
    code, _, err = run(capsys, "examples", "nope")
    assert code == 64


# ------------- usage -------------


def test_unknown_subcommand_exit_64(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 64


def test_unknown_flag_exit_64(proof_file, capsys):
    code, _, _ = run(capsys, "check", proof_file(IMP_P_P), "--frobnicate")
    assert code == 64


def test_fixture_files_check_verified(capsys, fixture_sources, tmp_path):
    for name, source in fixture_sources.items():
        path = tmp_path / f"{name}.mc"
        path.write_text(source, encoding="utf-8")
        code, out, _ = run(capsys, "check", str(path))
        assert code == 0, name
