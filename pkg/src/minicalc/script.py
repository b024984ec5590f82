"""Proof documents: parsing, checking and the promoted layout.

A proof document is a goal formula followed by steps.  Each step is a rule
name, an optional bracketed annotation (instantiation terms or witness
constants), and an optional statement of the resulting goal sequents, with
``+`` separating branches.  Rule names are reserved words, so the blocks
are self-delimiting and any layout parses the same way.

Checking keeps a frontier: the ordered list of open goal sequents.  A step
applies its rule to every open goal whose head matches and passes the other
goals through unchanged; the proof is complete when the frontier is empty
and the last step is Basic.  Missing instantiations are inferred from the
stated sequents, mirroring what the student meant to write.

Check failures are warnings, not errors: the checker itself could be wrong,
and a proof assistant re-checking the export would have the final word.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .kernel import RuleApplication, Sequent
from .syntax import (
    RULE_NAMES,
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
    Token,
    TokenStream,
    Uni,
    Var,
    parse_formula_at,
    parse_term_at,
    render_formula,
    render_term,
    tokenize,
)

RULES_WITH_TERMS = frozenset({"Exi_R", "Uni_L"})
RULES_WITH_WITNESS = frozenset({"Exi_L", "Uni_R"})
ANNOTATED_RULES = RULES_WITH_TERMS | RULES_WITH_WITNESS
TARGET_RULES = frozenset({"Ext", "Extra"})

# Stands in for the instantiation term when the bound variable does not
# occur, so any term would do.
DUMMY_CONSTANT = "dummy"

_RULE_SET = frozenset(RULE_NAMES)


@dataclass(frozen=True)
class ProofStep:
    rule: str
    annotations: tuple[Term, ...] | None
    stated_frontier: tuple[Sequent, ...]
    span: SourceSpan
    block_spans: tuple[SourceSpan, ...] = ()


@dataclass(frozen=True)
class ProofDocument:
    goal: Formula
    goal_span: SourceSpan
    steps: tuple[ProofStep, ...]
    comments: tuple[tuple[SourceSpan, str], ...] = ()


@dataclass(frozen=True)
class Diagnostic:
    span: SourceSpan
    message: str


@dataclass(frozen=True)
class ResolvedStep:
    rule: str
    span: SourceSpan
    annotations: tuple[Term, ...] | None
    frontier: tuple[Sequent, ...]


@dataclass
class CheckReport:
    verdict: str  # "verified" | "warning" | "parse-error"
    diagnostics: tuple[Diagnostic, ...]
    resolved_steps: tuple[ResolvedStep, ...] = ()
    rendered_symbolic: str | None = None
    rendered_parenthesized: str | None = None
    promoted_layout: str | None = None
    isabelle_theory: str | None = None


class StepFailure(Exception):
    def __init__(
        self,
        message: str,
        *,
        span: SourceSpan | None = None,
        position: int | None = None,
        expected: Sequent | None = None,
        stated: Sequent | None = None,
    ):
        super().__init__(message)
        self.message = message
        self.span = span
        self.position = position
        self.expected = expected
        self.stated = stated


def render_sequent(s: Sequent) -> str:
    return ", ".join(render_formula(f) for f in s)


# ---------- Document parsing ----------


def parse_document(source: str) -> ProofDocument:
    tokens, comments = tokenize(source)
    ts = TokenStream(tokens, len(source))
    goal_start = ts.peek()
    if goal_start is None:
        raise ParseError("empty input: expected a goal formula", SourceSpan(0, 0))
    goal = parse_formula_at(ts)
    goal_end = ts.tokens[ts.pos - 1]
    goal_span = SourceSpan(goal_start.start, goal_end.end)

    steps: list[ProofStep] = []
    while ts.peek() is not None:
        steps.append(_parse_step(ts))
    if not steps:
        raise ParseError("proof has no steps", goal_span)
    return ProofDocument(goal, goal_span, tuple(steps), tuple(comments))


def _at_rule_name(ts: TokenStream) -> bool:
    tok = ts.peek()
    return tok is not None and tok.kind == "name" and tok.text in _RULE_SET


def _parse_step(ts: TokenStream) -> ProofStep:
    tok = ts.next()
    if tok.kind != "name" or tok.text not in _RULE_SET:
        raise ParseError(f"expected a rule name, found {tok.text!r}", tok.span)
    rule = tok.text
    span = tok.span

    annotations: tuple[Term, ...] | None = None
    nxt = ts.peek()
    if nxt is not None and nxt.kind == "[":
        if rule not in ANNOTATED_RULES:
            raise ParseError(f"rule {rule!r} takes no annotation", nxt.span)
        open_tok = ts.next()
        anns = [parse_term_at(ts)]
        while True:
            tok2 = ts.peek()
            if tok2 is None:
                raise ParseError("unterminated annotation", open_tok.span)
            if tok2.kind == ",":
                ts.next()
                anns.append(parse_term_at(ts))
                continue
            if tok2.kind == "]":
                ts.next()
                break
            raise ParseError(f"expected ',' or ']' in annotation, found {tok2.text!r}", tok2.span)
        annotations = tuple(anns)

    blocks: list[Sequent] = []
    block_spans: list[SourceSpan] = []
    current: list[Formula] = []
    current_start: Token | None = None
    current_end: Token | None = None
    pending_plus: SourceSpan | None = None

    def close_block(plus_span: SourceSpan) -> None:
        if not current:
            raise ParseError("dangling '+': branch block is empty", plus_span)
        blocks.append(tuple(current))
        assert current_start is not None and current_end is not None
        block_spans.append(SourceSpan(current_start.start, current_end.end))
        current.clear()

    while True:
        tok2 = ts.peek()
        if tok2 is None or _at_rule_name(ts):
            break
        if tok2.kind == "+":
            ts.next()
            close_block(tok2.span)
            current_start = current_end = None
            pending_plus = tok2.span
            continue
        if current_start is None:
            current_start = tok2
        current.append(parse_formula_at(ts))
        current_end = ts.tokens[ts.pos - 1]
        pending_plus = None
    if current:
        assert current_start is not None and current_end is not None
        blocks.append(tuple(current))
        block_spans.append(SourceSpan(current_start.start, current_end.end))
    elif pending_plus is not None:
        raise ParseError("dangling '+': branch block is empty", pending_plus)

    return ProofStep(rule, annotations, tuple(blocks), span, tuple(block_spans))


# ---------- Annotation inference ----------


class _NoMatch(Exception):
    pass


_VACUOUS = object()


def _unlift(t: Term, depth: int) -> Term:
    """Inverse of lift_term; fails if any index would go negative."""
    match t:
        case Var(i):
            if i < depth:
                raise _NoMatch
            return Var(i - depth)
        case Fun(name, args):
            return Fun(name, tuple(_unlift(a, depth) for a in args))
    raise TypeError(f"not a term: {t!r}")


def _match_term(pattern: Term, actual: Term, depth: int, found: list[Term]) -> None:
    match pattern:
        case Var(i):
            if i == depth:
                found.append(_unlift(actual, depth))
            elif i > depth:
                if actual != Var(i - 1):
                    raise _NoMatch
            else:
                if actual != Var(i):
                    raise _NoMatch
        case Fun(name, args):
            if not isinstance(actual, Fun) or actual.name != name or len(actual.args) != len(args):
                raise _NoMatch
            for p, a in zip(args, actual.args):
                _match_term(p, a, depth, found)


def _match_formula(pattern: Formula, actual: Formula, depth: int, found: list[Term]) -> None:
    if type(pattern) is not type(actual):
        raise _NoMatch
    match pattern:
        case Pre(name, args):
            assert isinstance(actual, Pre)
            if actual.name != name or len(actual.args) != len(args):
                raise _NoMatch
            for p, a in zip(args, actual.args):
                _match_term(p, a, depth, found)
        case Neg(body):
            assert isinstance(actual, Neg)
            _match_formula(body, actual.body, depth, found)
        case Imp(a, b) | Dis(a, b) | Con(a, b):
            assert isinstance(actual, (Imp, Dis, Con))
            _match_formula(a, actual.left, depth, found)
            _match_formula(b, actual.right, depth, found)
        case Uni(body) | Exi(body):
            assert isinstance(actual, (Uni, Exi))
            _match_formula(body, actual.body, depth + 1, found)


def _match_instance(body: Formula, instance: Formula) -> Term | object:
    """The unique t with ``subt t body == instance``, or _VACUOUS, or raise."""
    found: list[Term] = []
    _match_formula(body, instance, 0, found)
    if not found:
        return _VACUOUS
    first = found[0]
    if any(t != first for t in found[1:]):
        raise _NoMatch
    return first


def infer_annotation(rule: str, current: Sequent, stated: Sequent) -> Term:
    """Recover the missing instantiation of a quantifier rule.

    Matches the quantifier body against the head of the stated premise; every
    occurrence of the discharged variable pins down the term, and all
    occurrences must agree.  A body without the variable accepts any term, so
    the designated dummy constant is returned.
    """
    if not current or not stated:
        raise StepFailure(f"cannot infer the {rule} instantiation from an empty sequent")
    head, stated_head = current[0], stated[0]
    match rule, head:
        case "Exi_R", Exi(body):
            pattern, instance = body, stated_head
        case "Uni_R", Uni(body):
            pattern, instance = body, stated_head
        case "Uni_L", Neg(Uni(body)):
            if not isinstance(stated_head, Neg):
                raise StepFailure(
                    f"cannot infer the {rule} instantiation: stated head "
                    f"[{render_formula(stated_head)}] is not a negation"
                )
            pattern, instance = body, stated_head.body
        case "Exi_L", Neg(Exi(body)):
            if not isinstance(stated_head, Neg):
                raise StepFailure(
                    f"cannot infer the {rule} instantiation: stated head "
                    f"[{render_formula(stated_head)}] is not a negation"
                )
            pattern, instance = body, stated_head.body
        case _:
            raise StepFailure(f"rule {rule!r} takes no instantiation")
    try:
        result = _match_instance(pattern, instance)
    except _NoMatch:
        raise StepFailure(
            f"cannot infer the {rule} instantiation: "
            f"[{render_formula(stated_head)}] is not an instance of the quantified goal"
        ) from None
    if result is _VACUOUS:
        return Fun(DUMMY_CONSTANT)
    assert isinstance(result, (Var, Fun))
    return result


# ---------- The frontier engine ----------


_HEAD_PATTERNS: dict[str, tuple[type, type | None]] = {
    "Imp_R": (Imp, None),
    "Imp_L": (Neg, Imp),
    "Dis_R": (Dis, None),
    "Dis_L": (Neg, Dis),
    "Con_R": (Con, None),
    "Con_L": (Neg, Con),
    "Exi_R": (Exi, None),
    "Exi_L": (Neg, Exi),
    "Uni_R": (Uni, None),
    "Uni_L": (Neg, Uni),
    "NegNeg": (Neg, Neg),
}


def _pattern_applies(rule: str, s: Sequent) -> bool:
    if rule == "Basic":
        return kernel.check_basic(s)
    if not s or rule not in _HEAD_PATTERNS:
        return False
    head = s[0]
    outer, inner = _HEAD_PATTERNS[rule]
    if not isinstance(head, outer):
        return False
    return inner is None or isinstance(head.body, inner)  # type: ignore[union-attr]


def _block_span(step: ProofStep, position: int) -> SourceSpan | None:
    if position < len(step.block_spans):
        return step.block_spans[position]
    return None


def _apply_target_rule(frontier: tuple[Sequent, ...], step: ProofStep) -> tuple[Sequent, ...]:
    rule = step.rule
    stated = step.stated_frontier
    if not stated:
        raise StepFailure(f"{rule} requires the resulting sequents to be stated")
    if len(stated) != len(frontier):
        raise StepFailure(
            f"{rule} states {len(stated)} sequent(s) but {len(frontier)} goal(s) are open"
        )
    new: list[Sequent] = []
    transformed = 0
    for i, (goal, block) in enumerate(zip(frontier, stated)):
        if rule == "Extra" and block == goal:
            new.append(goal)
            continue
        premises = kernel.apply_rule(RuleApplication(rule, target=block), goal)
        if premises is None:
            if rule == "Ext":
                msg = (
                    f"Ext cannot reach [{render_sequent(block)}]: it is not covered by "
                    f"the goal [{render_sequent(goal)}]"
                )
            else:
                msg = (
                    f"Extra expects the goal with one duplicated member in front, "
                    f"but [{render_sequent(block)}] does not extend [{render_sequent(goal)}]"
                )
            raise StepFailure(msg, span=_block_span(step, i), position=i, expected=goal, stated=block)
        new.extend(premises)
        transformed += 1
    if transformed == 0:
        raise StepFailure(f"rule {rule} transforms no goal")
    return tuple(new)


def step_frontier(
    frontier: tuple[Sequent, ...], step: ProofStep
) -> tuple[tuple[Sequent, ...], tuple[Term, ...] | None]:
    """Apply one step to every applicable open goal.

    Returns the new frontier and the annotations actually used, one per
    transformed goal.  Raises StepFailure when the step cannot be carried
    out or the stated sequents disagree with the computed ones.
    """
    rule = step.rule
    if not frontier:
        raise StepFailure("no open goals remain before this step")

    if rule in TARGET_RULES:
        return _apply_target_rule(frontier, step), None

    applicable = [i for i, g in enumerate(frontier) if _pattern_applies(rule, g)]
    if not applicable:
        raise StepFailure(
            f"rule {rule} does not apply to any open goal; the first open goal is "
            f"[{render_sequent(frontier[0])}]"
        )

    annotations: dict[int, Term] = {}
    if rule in ANNOTATED_RULES:
        k = len(applicable)
        if step.annotations is not None:
            given = step.annotations
            if len(given) == k:
                annotations = dict(zip(applicable, given))
            elif len(given) == 1:
                annotations = {i: given[0] for i in applicable}
            else:
                raise StepFailure(
                    f"rule {rule} transforms {k} goal(s) but {len(given)} annotation(s) were given"
                )
        else:
            stated = step.stated_frontier
            if not stated:
                raise StepFailure(
                    f"annotation required but not inferable: annotate {rule} or state "
                    f"the resulting sequents"
                )
            if len(stated) != len(frontier):
                raise StepFailure(
                    f"cannot infer the {rule} instantiation: {len(stated)} sequent(s) "
                    f"stated but {len(frontier)} goal(s) are open"
                )
            for i in applicable:
                annotations[i] = infer_annotation(rule, frontier[i], stated[i])
        if rule in RULES_WITH_WITNESS:
            for i, t in annotations.items():
                if not isinstance(t, Fun) or t.args:
                    raise StepFailure(
                        f"rule {rule} needs a constant witness, got [{render_term(t)}]"
                    )

    new: list[Sequent] = []
    used: list[Term] = []
    applicable_set = set(applicable)
    for i, goal in enumerate(frontier):
        if i not in applicable_set:
            new.append(goal)
            continue
        app = RuleApplication(rule)
        if rule in RULES_WITH_TERMS:
            app = RuleApplication(rule, instantiation=annotations[i])
        elif rule in RULES_WITH_WITNESS:
            app = RuleApplication(rule, witness=annotations[i].name)  # type: ignore[union-attr]
        premises = kernel.apply_rule(app, goal)
        if premises is None:
            # The head matched, so only a freshness side condition can fail here.
            name = annotations[i].name  # type: ignore[union-attr]
            raise StepFailure(
                f"constant {name!r} is not fresh in the goal [{render_sequent(goal)}]"
            )
        new.extend(premises)
        if i in annotations:
            used.append(annotations[i])
    computed = tuple(new)

    stated = step.stated_frontier
    if stated:
        for pos, (want, got) in enumerate(zip(computed, stated)):
            if want != got:
                raise StepFailure(
                    f"stated sequent {pos + 1} does not match: expected "
                    f"[{render_sequent(want)}] but found [{render_sequent(got)}]",
                    span=_block_span(step, pos),
                    position=pos,
                    expected=want,
                    stated=got,
                )
        if len(stated) != len(computed):
            raise StepFailure(
                f"the rule yields {len(computed)} sequent(s) but {len(stated)} were stated",
                expected=computed[len(stated)] if len(computed) > len(stated) else None,
            )
    return computed, (tuple(used) if rule in ANNOTATED_RULES else None)


# ---------- Whole-document checking ----------


def check_document(doc: ProofDocument) -> CheckReport:
    frontier: tuple[Sequent, ...] = ((doc.goal,),)
    resolved: list[ResolvedStep] = []
    diagnostics: list[Diagnostic] = []

    for step in doc.steps:
        try:
            frontier, used = step_frontier(frontier, step)
        except StepFailure as failure:
            span = failure.span if failure.span is not None else step.span
            diagnostics.append(Diagnostic(span, failure.message))
            break
        resolved.append(ResolvedStep(step.rule, step.span, used, frontier))
    else:
        if frontier:
            diagnostics.append(
                Diagnostic(doc.steps[-1].span, f"unproved goals remain ({len(frontier)})")
            )
        elif doc.steps[-1].rule != "Basic":
            diagnostics.append(Diagnostic(doc.steps[-1].span, "the final step must be Basic"))

    report = CheckReport(
        verdict="verified" if not diagnostics else "warning",
        diagnostics=tuple(diagnostics),
        resolved_steps=tuple(resolved),
        rendered_symbolic=render_formula(doc.goal, "symbolic"),
        rendered_parenthesized=render_formula(doc.goal, "parenthesized"),
    )
    report.promoted_layout = format_promoted(doc, report)
    return report


# ---------- The promoted layout ----------


def format_promoted(doc: ProofDocument, report: CheckReport) -> str:
    """Canonical text form: rule lines at the margin, sequents indented.

    Inferred annotations are materialized in brackets, resolved frontiers are
    written out in full, and branch blocks are separated by a ``+`` line.
    The output reparses to an equivalent document.
    """
    if report.verdict == "parse-error":
        raise ValueError("cannot format an unparsed document")
    lines = [render_formula(doc.goal), ""]
    for idx, step in enumerate(doc.steps):
        res = report.resolved_steps[idx] if idx < len(report.resolved_steps) else None
        annotations = res.annotations if res is not None else step.annotations
        head = step.rule
        if annotations:
            head += f" [{', '.join(render_term(t) for t in annotations)}]"
        lines.append(head)
        blocks = res.frontier if res is not None else step.stated_frontier
        for bi, block in enumerate(blocks):
            if bi:
                lines.append("+")
            lines.extend(f"  {render_formula(f)}" for f in block)
    return "\n".join(lines) + "\n"
