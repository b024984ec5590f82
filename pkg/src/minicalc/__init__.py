"""minicalc: a checker for a minimal one-sided sequent calculus.

Proofs are plain text: a goal formula in prefix notation with de Bruijn
indices, followed by named rule applications.  The package parses and
verifies them, formats them in the promoted layout, exports Isabelle
theory text, and serves a JSON check API for the browser editor.
"""

from .api import Analysis, analyze, json_dumps, report_to_json
from .kernel import (
    RuleApplication,
    Sequent,
    apply_rule,
    check_basic,
    ext_covers,
    inst,
    lift_term,
    member,
    news,
    subt,
)
from .script import (
    CheckReport,
    Diagnostic,
    ProofDocument,
    ProofStep,
    StepFailure,
    check_document,
    format_promoted,
    infer_annotation,
    parse_document,
    step_frontier,
)
from .semantics import (
    BudgetExceeded,
    Countermodel,
    Environment,
    Interpretation,
    eval_formula,
    is_valid_upto,
)
from .syntax import (
    Con,
    Dis,
    Exi,
    Formula,
    Fun,
    Imp,
    Neg,
    ParseError,
    Pre,
    SourceSpan,
    Term,
    Uni,
    Var,
    parse_formula,
    parse_term,
    render_formula,
    render_term,
)

__version__ = "0.1.0"

__all__ = [
    "Analysis",
    "BudgetExceeded",
    "CheckReport",
    "Con",
    "Countermodel",
    "Diagnostic",
    "Dis",
    "Environment",
    "Exi",
    "Formula",
    "Fun",
    "Imp",
    "Interpretation",
    "Neg",
    "ParseError",
    "Pre",
    "ProofDocument",
    "ProofStep",
    "RuleApplication",
    "Sequent",
    "SourceSpan",
    "StepFailure",
    "Term",
    "Uni",
    "Var",
    "analyze",
    "apply_rule",
    "check_basic",
    "check_document",
    "eval_formula",
    "ext_covers",
    "format_promoted",
    "infer_annotation",
    "inst",
    "is_valid_upto",
    "json_dumps",
    "lift_term",
    "member",
    "news",
    "parse_document",
    "parse_formula",
    "parse_term",
    "render_formula",
    "render_term",
    "report_to_json",
    "step_frontier",
    "subt",
]
