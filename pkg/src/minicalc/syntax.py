"""Abstract syntax, reader and renderers for terms and formulas.

Bound variables carry no names: ``Var 0`` always refers to the innermost
enclosing quantifier, ``Var 1`` to the next one out, and so on.  Two
formulas that differ only in bound-variable names are therefore the very
same tree, and structural equality is the only equality the checker ever
needs.

The concrete input syntax is a layout-insensitive prefix notation::

    formula ::= 'Imp' formula formula | 'Dis' formula formula
              | 'Con' formula formula | 'Neg' formula
              | 'Uni' formula | 'Exi' formula
              | name | name '[' term (',' term)* ']'
              | '(' formula ')'
    term    ::= 'Var' nat | name | name '[' term (',' term)* ']'
              | '(' term ')'

Because every operator is prefix with a fixed arity, whitespace and line
breaks never change a parse.  ``#`` starts a comment that runs to the end
of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


RULE_NAMES = (
    "Basic",
    "Imp_R",
    "Imp_L",
    "Dis_R",
    "Dis_L",
    "Con_R",
    "Con_L",
    "Exi_R",
    "Exi_L",
    "Uni_R",
    "Uni_L",
    "Extra",
    "Ext",
    "NegNeg",
)

KEYWORDS = frozenset({"Imp", "Dis", "Con", "Neg", "Uni", "Exi", "Var"})

RESERVED = KEYWORDS | frozenset(RULE_NAMES)

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

# Hard cap on operator nesting; keeps every recursive walk over the tree
# within the default interpreter stack.
MAX_NESTING = 300


def is_valid_name(name: str) -> bool:
    """True for identifiers that may name a function or predicate."""
    return bool(_NAME_RE.fullmatch(name)) and name not in RESERVED


def _check_name(name: str) -> None:
    if not _NAME_RE.fullmatch(name or ""):
        raise ValueError(f"invalid identifier: {name!r}")
    if name in RESERVED:
        raise ValueError(f"reserved word used as a name: {name!r}")


# ---------- Terms and formulas ----------


@dataclass(frozen=True)
class Var:
    """A bound variable, counted from the innermost quantifier."""

    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"variable index must be >= 0, got {self.index}")


@dataclass(frozen=True)
class Fun:
    """A function application; a constant is a function with no arguments."""

    name: str
    args: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        _check_name(self.name)


Term = Var | Fun


@dataclass(frozen=True)
class Pre:
    """A predicate atom over terms."""

    name: str
    args: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        _check_name(self.name)


@dataclass(frozen=True)
class Neg:
    body: Formula


@dataclass(frozen=True)
class Imp:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Dis:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Con:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Uni:
    body: Formula


@dataclass(frozen=True)
class Exi:
    body: Formula


Formula = Pre | Neg | Imp | Dis | Con | Uni | Exi


# ---------- Source locations and errors ----------


@dataclass(frozen=True)
class SourceSpan:
    """Half-open character range [start, end) into the source text."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"bad span: {self.start}..{self.end}")


def line_col(source: str, offset: int) -> tuple[int, int]:
    """1-based line and column of a character offset."""
    line = source.count("\n", 0, offset) + 1
    col = offset - (source.rfind("\n", 0, offset) + 1) + 1
    return line, col


class ParseError(Exception):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(message)
        self.message = message
        self.span = span


# ---------- Tokenizer ----------


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "nat", or one of "()[],+"
    text: str
    start: int
    end: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.start, self.end)


_PUNCT = frozenset("()[],+")


def tokenize(source: str) -> tuple[list[Token], list[tuple[SourceSpan, str]]]:
    """Split source into tokens, collecting ``#`` comments separately."""
    tokens: list[Token] = []
    comments: list[tuple[SourceSpan, str]] = []
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "#":
            end = source.find("\n", i)
            if end < 0:
                end = n
            comments.append((SourceSpan(i, end), source[i:end]))
            i = end
            continue
        if ch in _PUNCT:
            tokens.append(Token(ch, ch, i, i + 1))
            i += 1
            continue
        if ch.isdigit():
            m = re.match(r"\d+", source[i:])
            assert m is not None
            tokens.append(Token("nat", m.group(), i, i + m.end()))
            i += m.end()
            continue
        m = _NAME_RE.match(source, i)
        if m:
            tokens.append(Token("name", m.group(), i, m.end()))
            i = m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", SourceSpan(i, i + 1))
    return tokens, comments


# ---------- Parser ----------


class TokenStream:
    def __init__(self, tokens: list[Token], source_len: int):
        self.tokens = tokens
        self.pos = 0
        self._eof_span = SourceSpan(source_len, source_len)

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self._eof_span)
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input, expected {what}", self._eof_span)
        if tok.kind != kind:
            raise ParseError(f"expected {what}, found {tok.text!r}", tok.span)
        self.pos += 1
        return tok

    @property
    def eof_span(self) -> SourceSpan:
        return self._eof_span


def _too_deep(span: SourceSpan) -> ParseError:
    return ParseError(f"nesting deeper than {MAX_NESTING} is not supported", span)


def parse_term_at(ts: TokenStream, depth: int = 0) -> Term:
    tok = ts.peek()
    if tok is None:
        raise ParseError("unexpected end of input, expected a term", ts.eof_span)
    if depth > MAX_NESTING:
        raise _too_deep(tok.span)
    if tok.kind == "(":
        ts.next()
        t = parse_term_at(ts, depth + 1)
        ts.expect(")", "')'")
        return t
    if tok.kind != "name":
        raise ParseError(f"expected a term, found {tok.text!r}", tok.span)
    if tok.text == "Var":
        ts.next()
        nat = ts.expect("nat", "a variable index")
        return Var(int(nat.text))
    if tok.text in RESERVED:
        raise ParseError(f"reserved word {tok.text!r} where a term is expected", tok.span)
    ts.next()
    args = _parse_args(ts, depth)
    return Fun(tok.text, args)


def _parse_args(ts: TokenStream, depth: int) -> tuple[Term, ...]:
    tok = ts.peek()
    if tok is None or tok.kind != "[":
        return ()
    open_tok = ts.next()
    args = [parse_term_at(ts, depth + 1)]
    while True:
        tok = ts.peek()
        if tok is None:
            raise ParseError("unterminated argument list", open_tok.span)
        if tok.kind == ",":
            ts.next()
            args.append(parse_term_at(ts, depth + 1))
            continue
        if tok.kind == "]":
            ts.next()
            return tuple(args)
        raise ParseError(f"expected ',' or ']' in argument list, found {tok.text!r}", tok.span)


def parse_formula_at(ts: TokenStream, depth: int = 0) -> Formula:
    tok = ts.peek()
    if tok is None:
        raise ParseError("unexpected end of input, expected a formula", ts.eof_span)
    if depth > MAX_NESTING:
        raise _too_deep(tok.span)
    if tok.kind == "(":
        ts.next()
        f = parse_formula_at(ts, depth + 1)
        ts.expect(")", "')'")
        return f
    if tok.kind != "name":
        raise ParseError(f"expected a formula, found {tok.text!r}", tok.span)
    word = tok.text
    if word in ("Imp", "Dis", "Con"):
        ts.next()
        left = parse_formula_at(ts, depth + 1)
        right = parse_formula_at(ts, depth + 1)
        return {"Imp": Imp, "Dis": Dis, "Con": Con}[word](left, right)
    if word in ("Neg", "Uni", "Exi"):
        ts.next()
        body = parse_formula_at(ts, depth + 1)
        return {"Neg": Neg, "Uni": Uni, "Exi": Exi}[word](body)
    if word in RESERVED:
        raise ParseError(f"reserved word {word!r} where a formula is expected", tok.span)
    ts.next()
    args = _parse_args(ts, depth)
    return Pre(word, args)


def _parse_whole(source: str, parse: "callable") -> object:
    tokens, _ = tokenize(source)
    ts = TokenStream(tokens, len(source))
    result = parse(ts)
    trailing = ts.peek()
    if trailing is not None:
        raise ParseError(f"trailing input: {trailing.text!r}", trailing.span)
    return result


def parse_formula(source: str) -> Formula:
    """Parse a single formula; raises ParseError with a source span."""
    return _parse_whole(source, parse_formula_at)


def parse_term(source: str) -> Term:
    """Parse a single term; raises ParseError with a source span."""
    return _parse_whole(source, parse_term_at)


# ---------- Renderers ----------
#
# Three output formats:
#   "debruijn"      -- the canonical prefix notation; reparses to the same tree
#   "symbolic"      -- logical operators with minimal parentheses
#   "parenthesized" -- logical operators, every binary connective wrapped

MODES = ("debruijn", "symbolic", "parenthesized")


def render_term(t: Term, mode: str = "debruijn") -> str:
    if mode == "debruijn":
        return _db_term(t)
    if mode in ("symbolic", "parenthesized"):
        return _sym_term(t)
    raise ValueError(f"unknown render mode: {mode!r}")


def render_formula(f: Formula, mode: str = "debruijn") -> str:
    if mode == "debruijn":
        return _db_formula(f)
    if mode == "symbolic":
        return _sym_formula(f, 0, full=False)
    if mode == "parenthesized":
        return _sym_formula(f, 0, full=True)
    raise ValueError(f"unknown render mode: {mode!r}")


def _db_term(t: Term) -> str:
    match t:
        case Var(i):
            return f"Var {i}"
        case Fun(name, ()):
            return name
        case Fun(name, args):
            return f"{name}[{', '.join(_db_term(a) for a in args)}]"
    raise TypeError(f"not a term: {t!r}")


def _db_atom_args(args: tuple[Term, ...]) -> str:
    if not args:
        return ""
    return f"[{', '.join(_db_term(a) for a in args)}]"


def _db_operand(f: Formula) -> str:
    # Compound operands are parenthesized for readability; atoms stay bare.
    if isinstance(f, Pre):
        return _db_formula(f)
    return f"({_db_formula(f)})"


def _db_formula(f: Formula) -> str:
    match f:
        case Pre(name, args):
            return name + _db_atom_args(args)
        case Neg(body):
            return f"Neg {_db_operand(body)}"
        case Imp(a, b):
            return f"Imp {_db_operand(a)} {_db_operand(b)}"
        case Dis(a, b):
            return f"Dis {_db_operand(a)} {_db_operand(b)}"
        case Con(a, b):
            return f"Con {_db_operand(a)} {_db_operand(b)}"
        case Uni(body):
            return f"Uni {_db_operand(body)}"
        case Exi(body):
            return f"Exi {_db_operand(body)}"
    raise TypeError(f"not a formula: {f!r}")


def _sym_term(t: Term) -> str:
    match t:
        case Var(i):
            return str(i)
        case Fun(name, ()):
            return name
        case Fun(name, args):
            return f"{name}({', '.join(_sym_term(a) for a in args)})"
    raise TypeError(f"not a term: {t!r}")


# Binding strength, loosest first: Imp < Dis < Con < prefix operators < atoms.
_PREC_IMP, _PREC_DIS, _PREC_CON, _PREC_PREFIX, _PREC_ATOM = 1, 2, 3, 4, 5


def _sym_formula(f: Formula, need: int, full: bool) -> str:
    match f:
        case Pre(name, args):
            text, prec = name + (f"({', '.join(_sym_term(a) for a in args)})" if args else ""), _PREC_ATOM
        case Neg(body):
            text, prec = "¬" + _sym_formula(body, _PREC_PREFIX, full), _PREC_PREFIX
        case Uni(body):
            text, prec = "∀ " + _sym_formula(body, _PREC_PREFIX, full), _PREC_PREFIX
        case Exi(body):
            text, prec = "∃ " + _sym_formula(body, _PREC_PREFIX, full), _PREC_PREFIX
        case Imp(a, b):
            # Right-associative: a → b → c groups to the right.
            text = _sym_formula(a, _PREC_DIS, full) + " → " + _sym_formula(b, _PREC_IMP, full)
            prec = _PREC_IMP
        case Dis(a, b):
            text = _sym_formula(a, _PREC_DIS, full) + " ∨ " + _sym_formula(b, _PREC_CON, full)
            prec = _PREC_DIS
        case Con(a, b):
            text = _sym_formula(a, _PREC_CON, full) + " ∧ " + _sym_formula(b, _PREC_PREFIX, full)
            prec = _PREC_CON
        case _:
            raise TypeError(f"not a formula: {f!r}")
    if isinstance(f, (Imp, Dis, Con)) and full:
        return f"({text})"
    if prec < need:
        return f"({text})"
    return text
