"""One-call analysis of proof source text and its JSON projection.

This is the contract shared by the command line and the local check
service: the same report, the same key order, byte-stable for identical
input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .export import export_isabelle
from .script import CheckReport, Diagnostic, ProofDocument, check_document, parse_document
from .syntax import ParseError, SourceSpan, line_col, render_formula, render_term

DEFAULT_THEORY_NAME = "Scratch"


@dataclass
class Analysis:
    source: str
    document: ProofDocument | None
    report: CheckReport


def analyze(source: str, theory_name: str = DEFAULT_THEORY_NAME) -> Analysis:
    """Parse and check; on success attach the Isabelle export to the report."""
    try:
        document = parse_document(source)
    except ParseError as error:
        report = CheckReport(
            verdict="parse-error",
            diagnostics=(Diagnostic(error.span, error.message),),
        )
        return Analysis(source, None, report)
    report = check_document(document)
    if report.verdict == "verified":
        report.isabelle_theory = export_isabelle(document, report, theory_name)
    return Analysis(source, document, report)


def _span_json(source: str, span: SourceSpan) -> dict:
    line, col = line_col(source, span.start)
    return {"start": span.start, "end": span.end, "line": line, "col": col}


def report_to_json(analysis: Analysis) -> dict:
    """The canonical JSON projection of a check report.

    Key order is fixed; serializing the result with ``json_dumps`` below is
    stable across runs.
    """
    report = analysis.report
    rendered = None
    if report.rendered_symbolic is not None:
        rendered = {
            "symbolic": report.rendered_symbolic,
            "parenthesized": report.rendered_parenthesized,
        }
    steps = [
        {
            "rule": step.rule,
            **_span_json(analysis.source, step.span),
            "annotations": (
                [render_term(t) for t in step.annotations]
                if step.annotations is not None
                else None
            ),
            "frontier": [
                [render_formula(f) for f in sequent] for sequent in step.frontier
            ],
        }
        for step in report.resolved_steps
    ]
    return {
        "verdict": report.verdict,
        "diagnostics": [
            {**_span_json(analysis.source, d.span), "message": d.message}
            for d in report.diagnostics
        ],
        "renderedGoal": rendered,
        "promotedLayout": report.promoted_layout,
        "isabelleTheory": report.isabelle_theory,
        "steps": steps,
        "countermodel": None,
    }


def json_dumps(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2)
