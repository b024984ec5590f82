import random

import pytest

from minicalc.syntax import (
    RESERVED,
    Con,
    Dis,
    Exi,
    Fun,
    Imp,
    Neg,
    ParseError,
    Pre,
    Uni,
    Var,
    line_col,
    parse_formula,
    parse_term,
    render_formula,
    render_term,
    tokenize,
)
from gen import random_formula
from named_oracle import NPre, NUni, NVar, to_debruijn


p = Pre("p")
q = Pre("q")
r = Pre("r")


# ------------- parse_formula -------------


def test_parse_imp_p_p():
    assert parse_formula("Imp p p") == Imp(p, p)


def test_parse_nested_universals():
    got = parse_formula("Uni (Uni (Uni (Imp P[Var 2] (Imp Q[Var 1] R[Var 0]))))")
    want = Uni(
        Uni(
            Uni(
                Imp(
                    Pre("P", (Var(2),)),
                    Imp(Pre("Q", (Var(1),)), Pre("R", (Var(0),))),
                )
            )
        )
    )
    assert got == want


def test_parse_reserved_word_as_formula_fails():
    with pytest.raises(ParseError) as info:
        parse_formula("Imp Var")
    assert "Var" in info.value.message
    # The span points at the offending token.
    assert info.value.span.start == 4
    assert info.value.span.end == 7


def test_parse_prefix_is_self_delimiting_without_parens():
    assert parse_formula("Imp Imp p q r") == Imp(Imp(p, q), r)


def test_parse_stray_close_paren():
    with pytest.raises(ParseError):
        parse_formula("Imp p p)")


def test_parse_trailing_input():
    with pytest.raises(ParseError) as info:
        parse_formula("p q")
    assert "trailing" in info.value.message


def test_parse_unterminated_args():
    with pytest.raises(ParseError) as info:
        parse_formula("P[a, b")
    assert "unterminated" in info.value.message


def test_parse_empty_argument_list_rejected():
    with pytest.raises(ParseError):
        parse_formula("P[]")


def test_comments_are_ignored():
    src = "# a comment\nImp p p  # trailing\n"
    assert parse_formula(src) == Imp(p, p)


# ------------- parse_term -------------


def test_parse_constant():
    assert parse_term("a") == Fun("a")


def test_parse_function_with_args():
    assert parse_term("f[a, Var 0]") == Fun("f", (Fun("a"), Var(0)))


def test_parse_negative_index_fails():
    with pytest.raises(ParseError):
        parse_term("Var -1")


def test_parse_var_needs_index():
    with pytest.raises(ParseError):
        parse_term("Var")


def test_parse_term_rejects_rule_names():
    with pytest.raises(ParseError):
        parse_term("Basic")


# ------------- renderers -------------


def test_render_symbolic_single_connective():
    assert render_formula(Imp(p, p), "symbolic") == "p → p"


def test_render_debruijn_quantified_atom():
    assert render_formula(Uni(Pre("P", (Var(0),)))) == "Uni P[Var 0]"


def test_render_parenthesized_nested_imp():
    f = Imp(p, Imp(q, r))
    assert render_formula(f, "parenthesized") == "(p → (q → r))"


def test_render_symbolic_right_assoc_imp():
    assert render_formula(Imp(p, Imp(q, r)), "symbolic") == "p → q → r"
    assert render_formula(Imp(Imp(p, q), r), "symbolic") == "(p → q) → r"


def test_render_symbolic_precedences():
    f = Imp(Dis(Con(p, q), r), Neg(p))
    assert render_formula(f, "symbolic") == "p ∧ q ∨ r → ¬p"
    g = Con(Dis(p, q), r)
    assert render_formula(g, "symbolic") == "(p ∨ q) ∧ r"


def test_render_symbolic_quantifier_parens_match_operator_style():
    f = Uni(Uni(Uni(Imp(Pre("P", (Var(2),)), Imp(Pre("Q", (Var(1),)), Pre("R", (Var(0),)))))))
    assert render_formula(f, "symbolic") == "∀ ∀ ∀ (P(2) → Q(1) → R(0))"


def test_render_symbolic_terms():
    f = Pre("P", (Fun("f", (Var(0), Fun("a"))),))
    assert render_formula(f, "symbolic") == "P(f(0, a))"


def test_render_term_modes():
    t = Fun("f", (Fun("a"), Var(3)))
    assert render_term(t) == "f[a, Var 3]"
    assert render_term(t, "symbolic") == "f(a, 3)"


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        render_formula(p, "fancy")


# ------------- invariants -------------


def test_roundtrip_random_formulas():
    rng = random.Random(202)
    for _ in range(500):
        f = random_formula(rng, depth=5)
        assert parse_formula(render_formula(f)) == f


def test_roundtrip_random_terms():
    from gen import random_term

    rng = random.Random(303)
    for _ in range(300):
        t = random_term(rng, depth=4, free=3)
        assert parse_term(render_term(t)) == t


def test_layout_insensitivity():
    rng = random.Random(7)
    for _ in range(100):
        f = random_formula(rng, depth=4)
        text = render_formula(f)
        tokens, _ = tokenize(text)
        spaced = ""
        for tok in tokens:
            spaced += rng.choice([" ", "\n", "\n   ", "  "]) + tok.text
        assert parse_formula(spaced) == f


def test_alpha_collapse():
    # forall x. P(x) and forall y. P(y) are the same tree.
    via_x = to_debruijn(NUni("x", NPre("P", (NVar("x"),))), [])
    via_y = to_debruijn(NUni("y", NPre("P", (NVar("y"),))), [])
    assert via_x == via_y == Uni(Pre("P", (Var(0),)))


def test_rendered_identifiers_are_never_reserved():
    rng = random.Random(99)
    for _ in range(200):
        f = random_formula(rng, depth=4)
        for mode in ("debruijn", "symbolic", "parenthesized"):
            words = set(
                w for w in render_formula(f, mode).replace("[", " ").replace("]", " ")
                .replace("(", " ").replace(")", " ").replace(",", " ").split()
            )
            names = {w for w in words if w.isidentifier()}
            assert not (names & (RESERVED - {"Imp", "Dis", "Con", "Neg", "Uni", "Exi", "Var"}))


def test_constructors_reject_reserved_names():
    with pytest.raises(ValueError):
        Fun("Basic")
    with pytest.raises(ValueError):
        Pre("Imp")
    with pytest.raises(ValueError):
        Var(-1)


def test_line_col():
    src = "Imp p p\nImp_R\n"
    assert line_col(src, 0) == (1, 1)
    assert line_col(src, 8) == (2, 1)
    assert line_col(src, 13) == (2, 6)
