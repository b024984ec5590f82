import pytest

from minicalc.api import analyze
from minicalc.export import ExportError, export_isabelle
from minicalc.script import check_document, parse_document

IMP_P_P = "Imp p p Imp_R Neg p p Ext p Neg p Basic"

GOLDEN_THEORY = """theory Imp_p_p
  imports MiniCalc
begin

(*
Imp p p

Imp_R
  Neg p
  p
Ext
  p
  Neg p
Basic
*)

proposition ‹⊩ [(p → p)]›
  apply (rule Imp_R)
  apply (rule Ext)
  apply (rule Basic)
  done

end
"""


def test_golden_theory_text():
    doc = parse_document(IMP_P_P)
    report = check_document(doc)
    assert export_isabelle(doc, report, "Imp_p_p") == GOLDEN_THEORY


def test_export_is_deterministic(fixture_sources):
    for source in fixture_sources.values():
        doc = parse_document(source)
        report = check_document(doc)
        once = export_isabelle(doc, report, "Proof_1").encode()
        twice = export_isabelle(doc, report, "Proof_1").encode()
        assert once == twice


def test_comment_block_equals_promoted_layout(fixture_sources):
    for source in fixture_sources.values():
        doc = parse_document(source)
        report = check_document(doc)
        theory = export_isabelle(doc, report, "Some_Proof")
        assert report.promoted_layout is not None
        assert report.promoted_layout in theory
        body = theory.split("(*\n", 1)[1].split("*)", 1)[0]
        assert body == report.promoted_layout


def test_every_step_once_in_order(fixture_sources):
    for source in fixture_sources.values():
        doc = parse_document(source)
        report = check_document(doc)
        theory = export_isabelle(doc, report, "Some_Proof")
        script = theory.split("proposition", 1)[1]
        lines = [l for l in script.splitlines() if l.startswith("  apply")]
        assert len(lines) == len(doc.steps)
        for line, step in zip(lines, doc.steps):
            assert f"(rule {step.rule}" in line


def test_instantiations_are_materialized():
    source = (
        "Imp (Uni P[Var 0]) P[a] "
        "Imp_R Neg (Uni P[Var 0]) P[a] "
        "Uni_L Neg P[a] P[a] "
        "Ext P[a] Neg P[a] "
        "Basic"
    )
    doc = parse_document(source)
    report = check_document(doc)
    assert report.verdict == "verified"
    theory = export_isabelle(doc, report, "Uses_Witness")
    assert "apply (rule Uni_L [where t = ‹a›])" in theory


def test_witness_constants_are_materialized(fixture_sources):
    doc = parse_document(fixture_sources["drinker"])
    report = check_document(doc)
    theory = export_isabelle(doc, report, "Drinker")
    assert "apply (rule Uni_R [where c = ‹b›])" in theory
    assert "apply (rule Exi_R [where t = ‹a›])" in theory


def test_refuses_unverified():
    doc = parse_document("Imp p p Imp_R Neg p p")
    report = check_document(doc)
    assert report.verdict == "warning"
    with pytest.raises(ExportError):
        export_isabelle(doc, report, "Nope")


def test_rejects_bad_theory_name():
    doc = parse_document(IMP_P_P)
    report = check_document(doc)
    with pytest.raises(ExportError):
        export_isabelle(doc, report, "0bad name")


def test_import_target_is_a_parameter():
    doc = parse_document(IMP_P_P)
    report = check_document(doc)
    theory = export_isabelle(doc, report, "Imp_p_p", imports="Formalization.Core")
    assert "  imports Formalization.Core" in theory


def test_analyze_attaches_theory_only_when_verified():
    verified = analyze(IMP_P_P)
    assert verified.report.isabelle_theory is not None
    failing = analyze("Imp p p Imp_R Neg p p")
    assert failing.report.isabelle_theory is None
