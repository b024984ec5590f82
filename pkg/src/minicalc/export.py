"""Deterministic Isabelle theory text for a verified proof document.

The emitted theory imports the companion formalization (the import target is
a template parameter), embeds the promoted layout as a comment, states the
goal as a one-formula sequent, and replays the proof with one ``apply`` line
per step.  Instantiations and witnesses are always written out, including
the inferred ones.  Identical inputs produce identical bytes.
"""

from __future__ import annotations

import re

from .script import CheckReport, ProofDocument, format_promoted
from .syntax import render_formula, render_term

_THEORY_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

DEFAULT_IMPORTS = "MiniCalc"


class ExportError(Exception):
    pass


def _step_line(rule: str, annotations) -> str:
    if not annotations:
        return f"  apply (rule {rule})"
    if rule in ("Exi_R", "Uni_L"):
        binder = "t"
    else:
        binder = "c"
    parts = " and ".join(f"{binder} = ‹{render_term(t)}›" for t in annotations)
    return f"  apply (rule {rule} [where {parts}])"


def export_isabelle(
    doc: ProofDocument,
    report: CheckReport,
    theory_name: str,
    imports: str = DEFAULT_IMPORTS,
) -> str:
    """Theory text for a verified document; refuses anything else."""
    if report.verdict != "verified":
        raise ExportError(f"only verified proofs can be exported (verdict: {report.verdict})")
    if not _THEORY_NAME_RE.fullmatch(theory_name):
        raise ExportError(f"invalid theory name: {theory_name!r}")
    promoted = report.promoted_layout
    if promoted is None:
        promoted = format_promoted(doc, report)

    lines = [
        f"theory {theory_name}",
        f"  imports {imports}",
        "begin",
        "",
        "(*",
        promoted.rstrip("\n"),
        "*)",
        "",
        f"proposition ‹⊩ [{render_formula(doc.goal, 'parenthesized')}]›",
    ]
    for idx, step in enumerate(doc.steps):
        resolved = report.resolved_steps[idx]
        lines.append(_step_line(step.rule, resolved.annotations))
    lines.append("  done")
    lines.append("")
    lines.append("end")
    return "\n".join(lines) + "\n"
