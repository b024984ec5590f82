"""Finite-model evaluator and an exhaustive validity oracle.

The evaluator follows the environment reading of de Bruijn indices: an
environment maps the naturals to domain elements, and entering a quantifier
shifts it so that index 0 denotes the freshly quantified element.

``is_valid_upto`` enumerates every interpretation of the symbols of a
sequent over small domains, so it can only ever refute: truth in all
finite models up to a bound is necessary for validity, never sufficient.
The checker uses it one-directionally, as a sanity oracle for proofs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .kernel import Sequent
from .syntax import Con, Dis, Exi, Formula, Fun, Imp, Neg, Pre, Term, Uni, Var

Symbol = tuple[str, int]  # name, arity


@dataclass(frozen=True)
class Environment:
    """A total map from variable indices to domain elements."""

    prefix: tuple[int, ...] = ()
    default: int = 0

    def lookup(self, index: int) -> int:
        if index < len(self.prefix):
            return self.prefix[index]
        return self.default

    def shifted(self, element: int) -> "Environment":
        return Environment((element,) + self.prefix, self.default)


@dataclass(frozen=True)
class Interpretation:
    domain_size: int
    functions: dict[Symbol, dict[tuple[int, ...], int]]
    predicates: dict[Symbol, dict[tuple[int, ...], bool]]
    environment: Environment = field(default_factory=Environment)


class MissingSymbol(Exception):
    pass


class BudgetExceeded(Exception):
    pass


def eval_term(t: Term, interp: Interpretation, env: Environment) -> int:
    match t:
        case Var(i):
            return env.lookup(i)
        case Fun(name, args):
            table = interp.functions.get((name, len(args)))
            if table is None:
                raise MissingSymbol(f"function {name}/{len(args)} not interpreted")
            values = tuple(eval_term(a, interp, env) for a in args)
            return table[values]
    raise TypeError(f"not a term: {t!r}")


def _eval(f: Formula, interp: Interpretation, env: Environment) -> bool:
    match f:
        case Pre(name, args):
            table = interp.predicates.get((name, len(args)))
            if table is None:
                raise MissingSymbol(f"predicate {name}/{len(args)} not interpreted")
            return table[tuple(eval_term(a, interp, env) for a in args)]
        case Neg(body):
            return not _eval(body, interp, env)
        case Imp(a, b):
            return not _eval(a, interp, env) or _eval(b, interp, env)
        case Dis(a, b):
            return _eval(a, interp, env) or _eval(b, interp, env)
        case Con(a, b):
            return _eval(a, interp, env) and _eval(b, interp, env)
        case Uni(body):
            return all(_eval(body, interp, env.shifted(d)) for d in range(interp.domain_size))
        case Exi(body):
            return any(_eval(body, interp, env.shifted(d)) for d in range(interp.domain_size))
    raise TypeError(f"not a formula: {f!r}")


def eval_formula(f: Formula, interp: Interpretation) -> bool:
    """Classical truth of f under the interpretation's own environment."""
    return _eval(f, interp, interp.environment)


def eval_sequent(s: Sequent, interp: Interpretation) -> bool:
    """A sequent is the disjunction of its formulas; the empty one is false."""
    return any(eval_formula(f, interp) for f in s)


# ---------- Signature extraction ----------


def _term_symbols(t: Term, funs: set[Symbol]) -> None:
    match t:
        case Var():
            pass
        case Fun(name, args):
            funs.add((name, len(args)))
            for a in args:
                _term_symbols(a, funs)


def _formula_symbols(f: Formula, preds: set[Symbol], funs: set[Symbol]) -> None:
    match f:
        case Pre(name, args):
            preds.add((name, len(args)))
            for a in args:
                _term_symbols(a, funs)
        case Neg(body) | Uni(body) | Exi(body):
            _formula_symbols(body, preds, funs)
        case Imp(a, b) | Dis(a, b) | Con(a, b):
            _formula_symbols(a, preds, funs)
            _formula_symbols(b, preds, funs)


def signature(formulas: Sequent) -> tuple[list[Symbol], list[Symbol]]:
    """Sorted predicate and function symbols occurring in the formulas."""
    preds: set[Symbol] = set()
    funs: set[Symbol] = set()
    for f in formulas:
        _formula_symbols(f, preds, funs)
    return sorted(preds), sorted(funs)


def max_free_index(f: Formula, depth: int = 0) -> int:
    """Largest free variable index plus one; 0 for closed formulas."""

    def term_max(t: Term, d: int) -> int:
        match t:
            case Var(i):
                return i - d + 1 if i >= d else 0
            case Fun(_, args):
                return max((term_max(a, d) for a in args), default=0)
        raise TypeError(f"not a term: {t!r}")

    match f:
        case Pre(_, args):
            return max((term_max(a, depth) for a in args), default=0)
        case Neg(body):
            return max_free_index(body, depth)
        case Imp(a, b) | Dis(a, b) | Con(a, b):
            return max(max_free_index(a, depth), max_free_index(b, depth))
        case Uni(body) | Exi(body):
            return max_free_index(body, depth + 1)
    raise TypeError(f"not a formula: {f!r}")


# ---------- Exhaustive validity ----------


@dataclass(frozen=True)
class Countermodel:
    """A finite interpretation falsifying the sequent's disjunction."""

    domain_size: int
    functions: dict[Symbol, dict[tuple[int, ...], int]]
    predicates: dict[Symbol, dict[tuple[int, ...], bool]]

    def describe(self) -> str:
        parts = [f"domain size {self.domain_size}"]
        for (name, arity), table in sorted(self.predicates.items()):
            entries = ", ".join(
                f"{name}({', '.join(map(str, args))}) = {value}" if args else f"{name} = {value}"
                for args, value in sorted(table.items())
            )
            parts.append(entries)
        for (name, arity), table in sorted(self.functions.items()):
            entries = ", ".join(
                f"{name}({', '.join(map(str, args))}) = {value}" if args else f"{name} = {value}"
                for args, value in sorted(table.items())
            )
            parts.append(entries)
        return "; ".join(parts)

    def to_json(self) -> dict:
        return {
            "domainSize": self.domain_size,
            "predicates": {
                f"{name}/{arity}": {
                    ",".join(map(str, args)): value for args, value in sorted(table.items())
                }
                for (name, arity), table in sorted(self.predicates.items())
            },
            "functions": {
                f"{name}/{arity}": {
                    ",".join(map(str, args)): value for args, value in sorted(table.items())
                }
                for (name, arity), table in sorted(self.functions.items())
            },
        }


def _interpretation_count(preds: list[Symbol], funs: list[Symbol], n: int) -> int:
    total = 1
    for _, arity in preds:
        total *= 2 ** (n**arity)
    for _, arity in funs:
        total *= n ** (n**arity)
    return total


def _iter_interpretations(preds: list[Symbol], funs: list[Symbol], n: int):
    """All interpretations over a domain of size n, in lexicographic order."""
    domain = range(n)
    pred_points = [list(itertools.product(domain, repeat=arity)) for _, arity in preds]
    fun_points = [list(itertools.product(domain, repeat=arity)) for _, arity in funs]
    pred_choices = [
        list(itertools.product((False, True), repeat=len(points))) for points in pred_points
    ]
    fun_choices = [list(itertools.product(domain, repeat=len(points))) for points in fun_points]
    for pred_rows in itertools.product(*pred_choices):
        pred_tables = {
            sym: dict(zip(points, row))
            for sym, points, row in zip(preds, pred_points, pred_rows)
        }
        for fun_rows in itertools.product(*fun_choices):
            fun_tables = {
                sym: dict(zip(points, row))
                for sym, points, row in zip(funs, fun_points, fun_rows)
            }
            yield Interpretation(n, fun_tables, pred_tables)


DEFAULT_BUDGET = 1_000_000


def is_valid_upto(
    s: Sequent, max_domain: int, budget: int = DEFAULT_BUDGET
) -> bool | Countermodel:
    """True if the sequent holds in every interpretation with domain size
    1..max_domain, otherwise the first countermodel in enumeration order.

    Only closed formulas are accepted: goals and everything the rules derive
    from them never contain free variables, so tables are the whole search
    space and environments need no enumeration.
    """
    if max_domain < 1:
        raise ValueError("max_domain must be at least 1")
    for f in s:
        free = max_free_index(f)
        if free:
            raise ValueError(
                f"finite-model validity needs closed formulas; "
                f"found a free variable (index {free - 1})"
            )
    preds, funs = signature(s)
    total = sum(_interpretation_count(preds, funs, n) for n in range(1, max_domain + 1))
    if total > budget:
        raise BudgetExceeded(
            f"{total} interpretations exceed the budget of {budget}; "
            f"shrink the domain bound or the signature"
        )
    for n in range(1, max_domain + 1):
        for interp in _iter_interpretations(preds, funs, n):
            if not eval_sequent(s, interp):
                return Countermodel(n, interp.functions, interp.predicates)
    return True
