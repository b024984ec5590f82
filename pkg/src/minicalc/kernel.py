"""The trusted core: list predicates, substitution, and the proof rules.

A sequent is an ordered list of formulas, read as their disjunction.  Every
rule works on the head of the list and is applied bottom-up: given the
conclusion sequent, ``apply_rule`` returns the premise sequents that remain
to be proved, or ``None`` when the rule does not apply.

The fourteen rules:

    Basic   closes ``p # z`` when ``Neg p`` is a member of ``z``
    Imp_R   ``Imp p q # z``        ->  ``Neg p # q # z``
    Imp_L   ``Neg (Imp p q) # z``  ->  ``p # z`` and ``Neg q # z``
    Dis_R   ``Dis p q # z``        ->  ``p # q # z``
    Dis_L   ``Neg (Dis p q) # z``  ->  ``Neg p # z`` and ``Neg q # z``
    Con_R   ``Con p q # z``        ->  ``p # z`` and ``q # z``
    Con_L   ``Neg (Con p q) # z``  ->  ``Neg p # Neg q # z``
    Exi_R   ``Exi p # z``          ->  ``subt t p # z``
    Exi_L   ``Neg (Exi p) # z``    ->  ``Neg (inst c p) # z``, c fresh
    Uni_R   ``Uni p # z``          ->  ``inst c p # z``, c fresh
    Uni_L   ``Neg (Uni p) # z``    ->  ``Neg (subt t p) # z``
    Extra   drops one extra copy: ``z`` -> ``p # z`` with ``member p z``
    Ext     derived; ``y`` -> ``z`` whenever ``ext_covers y z``
    NegNeg  derived; ``Neg (Neg p) # z`` -> ``p # z``

``Ext`` subsumes the usual structural rules: weakening, permutation and
contraction are all instances of list inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .syntax import Con, Dis, Exi, Formula, Fun, Imp, Neg, Pre, Term, Uni, Var

Sequent = tuple[Formula, ...]


def member(p: Formula, z: Iterable[Formula]) -> bool:
    """True iff p is structurally equal to some element of z."""
    return any(p == q for q in z)


def ext_covers(y: Iterable[Formula], z: Iterable[Formula]) -> bool:
    """True iff every formula of z is a member of y."""
    ys = tuple(y)
    return all(member(q, ys) for q in z)


def _term_mentions(t: Term, name: str) -> bool:
    match t:
        case Var():
            return False
        case Fun(n, args):
            return n == name or any(_term_mentions(a, name) for a in args)
    raise TypeError(f"not a term: {t!r}")


def _formula_mentions(f: Formula, name: str) -> bool:
    match f:
        case Pre(_, args):
            return any(_term_mentions(a, name) for a in args)
        case Neg(body) | Uni(body) | Exi(body):
            return _formula_mentions(body, name)
        case Imp(a, b) | Dis(a, b) | Con(a, b):
            return _formula_mentions(a, name) or _formula_mentions(b, name)
    raise TypeError(f"not a formula: {f!r}")


def news(c: str, z: Iterable[Formula]) -> bool:
    """True iff the name c occurs nowhere (at any arity) in any formula of z."""
    return not any(_formula_mentions(f, c) for f in z)


def lift_term(t: Term, depth: int) -> Term:
    """Raise every variable index in t by depth."""
    match t:
        case Var(i):
            return Var(i + depth)
        case Fun(name, args):
            return Fun(name, tuple(lift_term(a, depth) for a in args))
    raise TypeError(f"not a term: {t!r}")


def _subst_term(t: Term, replacement: Term, depth: int) -> Term:
    match t:
        case Var(i):
            if i == depth:
                return lift_term(replacement, depth)
            if i > depth:
                return Var(i - 1)
            return t
        case Fun(name, args):
            return Fun(name, tuple(_subst_term(a, replacement, depth) for a in args))
    raise TypeError(f"not a term: {t!r}")


def _subst_formula(f: Formula, replacement: Term, depth: int) -> Formula:
    match f:
        case Pre(name, args):
            return Pre(name, tuple(_subst_term(a, replacement, depth) for a in args))
        case Neg(body):
            return Neg(_subst_formula(body, replacement, depth))
        case Imp(a, b):
            return Imp(_subst_formula(a, replacement, depth), _subst_formula(b, replacement, depth))
        case Dis(a, b):
            return Dis(_subst_formula(a, replacement, depth), _subst_formula(b, replacement, depth))
        case Con(a, b):
            return Con(_subst_formula(a, replacement, depth), _subst_formula(b, replacement, depth))
        case Uni(body):
            return Uni(_subst_formula(body, replacement, depth + 1))
        case Exi(body):
            return Exi(_subst_formula(body, replacement, depth + 1))
    raise TypeError(f"not a formula: {f!r}")


def subt(t: Term, p: Formula) -> Formula:
    """Substitute t for the outermost bound variable of a quantifier body.

    Walking p with binder depth d, ``Var d`` becomes ``lift_term(t, d)`` and
    every ``Var i`` with ``i > d`` becomes ``Var (i - 1)``: the discharged
    variable no longer exists, so the remaining free variables move down.
    """
    return _subst_formula(p, t, 0)


def inst(c: str, p: Formula) -> Formula:
    """Substitute the constant c: ``inst c p = subt (Fun c []) p``."""
    return subt(Fun(c), p)


def check_basic(s: Sequent) -> bool:
    """True iff the head's negation is a member of the tail.

    Note the literal reading: if the head is itself ``Neg q``, the tail must
    contain ``Neg (Neg q)``, not ``q``.
    """
    return bool(s) and member(Neg(s[0]), s[1:])


@dataclass(frozen=True)
class RuleApplication:
    """A rule name plus whatever data that rule needs.

    instantiation: the term for Exi_R / Uni_L.
    witness: the fresh constant name for Exi_L / Uni_R.
    target: the stated premise sequent for Ext / Extra.
    """

    rule: str
    instantiation: Term | None = None
    witness: str | None = None
    target: Sequent | None = None


def apply_rule(app: RuleApplication, s: Sequent) -> list[Sequent] | None:
    """Premises of the rule applied to s, or None when it does not apply.

    None covers all of: the head does not match the rule's pattern, a side
    condition (member / news / ext) fails, or a required annotation is
    missing.
    """
    rule = app.rule
    if rule == "Ext":
        if app.target is None:
            return None
        return [app.target] if ext_covers(s, app.target) else None
    if rule == "Extra":
        t = app.target
        if t is None or not t:
            return None
        if t[1:] == tuple(s) and member(t[0], s):
            return [t]
        return None
    if rule == "Basic":
        return [] if check_basic(s) else None
    if not s:
        return None
    head, tail = s[0], s[1:]
    match rule, head:
        case "Imp_R", Imp(p, q):
            return [(Neg(p), q) + tail]
        case "Imp_L", Neg(Imp(p, q)):
            return [(p,) + tail, (Neg(q),) + tail]
        case "Dis_R", Dis(p, q):
            return [(p, q) + tail]
        case "Dis_L", Neg(Dis(p, q)):
            return [(Neg(p),) + tail, (Neg(q),) + tail]
        case "Con_R", Con(p, q):
            return [(p,) + tail, (q,) + tail]
        case "Con_L", Neg(Con(p, q)):
            return [(Neg(p), Neg(q)) + tail]
        case "Exi_R", Exi(p):
            if app.instantiation is None:
                return None
            return [(subt(app.instantiation, p),) + tail]
        case "Exi_L", Neg(Exi(p)):
            if app.witness is None or not news(app.witness, (p,) + tail):
                return None
            return [(Neg(inst(app.witness, p)),) + tail]
        case "Uni_R", Uni(p):
            if app.witness is None or not news(app.witness, (p,) + tail):
                return None
            return [(inst(app.witness, p),) + tail]
        case "Uni_L", Neg(Uni(p)):
            if app.instantiation is None:
                return None
            return [(Neg(subt(app.instantiation, p)),) + tail]
        case "NegNeg", Neg(Neg(p)):
            return [(p,) + tail]
    return None
