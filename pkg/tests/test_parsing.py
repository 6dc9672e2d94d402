"""Formula grammar, rendering, and DIMACS input."""

import pytest
from hypothesis import given

from hornsat import (
    And,
    Atom,
    BOT_LITERAL,
    Clause,
    DimacsError,
    Falsum,
    Iff,
    Implies,
    Literal,
    Not,
    Or,
    ParseError,
    Verum,
    parse_dimacs,
    parse_formula,
    render,
)

from helpers import formula_strategy

P, Q, R, S = Atom("p"), Atom("q"), Atom("r"), Atom("s")


def test_grammar_examples():
    assert parse_formula("p & (~r | s)") == And(P, Or(Not(R), S))
    assert parse_formula("p -> q -> r") == Implies(P, Implies(Q, R))
    assert parse_formula("p & ~r | s") == Or(And(P, Not(R)), S)


def test_implication_and_iff_are_right_associative():
    assert parse_formula("p <-> q <-> r") == Iff(P, Iff(Q, R))


def test_and_or_are_left_associative():
    assert parse_formula("p & q & r") == And(And(P, Q), R)
    assert parse_formula("p | q | r") == Or(Or(P, Q), R)


def test_iff_binds_loosest():
    assert parse_formula("p -> q <-> r") == Iff(Implies(P, Q), R)
    assert parse_formula("p | q -> r") == Implies(Or(P, Q), R)


def test_negation_binds_tightest():
    assert parse_formula("~p & q") == And(Not(P), Q)
    assert parse_formula("~~p") == Not(Not(P))


def test_alternate_operator_spellings():
    baseline = parse_formula("~p & (q | false) -> true")
    assert parse_formula("¬p ∧ (q ∨ ⊥) → ⊤") == baseline
    assert parse_formula(r"p /\ q \/ r") == parse_formula("p & q | r")
    assert parse_formula("!p") == Not(P)
    assert parse_formula("p ↔ q") == Iff(P, Q)


@pytest.mark.parametrize("text", ["false", "bot", "⊥"])
def test_falsum_spellings(text):
    assert parse_formula(text) == Falsum()


@pytest.mark.parametrize("text", ["true", "top", "⊤"])
def test_verum_spellings(text):
    assert parse_formula(text) == Verum()


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as excinfo:
        parse_formula("p &\n& q")
    assert excinfo.value.line == 2
    assert excinfo.value.column == 1
    assert excinfo.value.expected


def test_parse_error_on_unknown_character():
    with pytest.raises(ParseError) as excinfo:
        parse_formula("p @ q")
    assert excinfo.value.line == 1
    assert excinfo.value.column == 3


def test_parse_error_on_unbalanced_paren():
    with pytest.raises(ParseError) as excinfo:
        parse_formula("(p | q")
    assert "')'" in excinfo.value.expected


def test_parse_error_on_trailing_input():
    with pytest.raises(ParseError):
        parse_formula("p q")


def test_empty_input_is_an_error():
    with pytest.raises(ParseError):
        parse_formula("")
    with pytest.raises(ParseError):
        parse_formula("   ")


def test_render_uses_minimal_parentheses():
    assert render(parse_formula("p & ~r | s")) == "p & ~r | s"
    assert render(parse_formula("(p | q) & r")) == "(p | q) & r"
    assert render(parse_formula("~(p & q)")) == "~(p & q)"
    assert render(parse_formula("p -> q -> r")) == "p -> q -> r"
    assert render(parse_formula("(p -> q) -> r")) == "(p -> q) -> r"
    assert render(parse_formula("p & (q & r)")) == "p & (q & r)"


@given(formula_strategy())
def test_render_round_trip(phi):
    assert parse_formula(render(phi)) == phi


def test_parse_dimacs_single_clause():
    cnf = parse_dimacs("p cnf 2 1\n1 -2 0\n")
    assert cnf.clauses == (Clause((Literal("x1"), Literal("x2", positive=False))),)


def test_parse_dimacs_two_unit_clauses():
    cnf = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")
    assert cnf.clauses == (
        Clause((Literal("x1"),)),
        Clause((Literal("x1", positive=False),)),
    )


def test_parse_dimacs_empty_clause():
    assert parse_dimacs("p cnf 1 1\n0\n").clauses == (Clause((BOT_LITERAL,)),)


def test_parse_dimacs_comments_and_multiline_clauses():
    text = "c a comment\np cnf 3 2\n1 2\n-3 0\n3 0\n"
    cnf = parse_dimacs(text)
    assert len(cnf.clauses) == 2
    assert len(cnf.clauses[0].literals) == 3


@pytest.mark.parametrize(
    "text",
    [
        "",
        "1 0\n",
        "p dnf 1 1\n1 0\n",
        "p cnf x 1\n1 0\n",
        "p cnf 1\n1 0\n",
        "p cnf 1 1\np cnf 1 1\n1 0\n",
    ],
)
def test_parse_dimacs_header_errors(text):
    with pytest.raises(DimacsError):
        parse_dimacs(text)


def test_parse_dimacs_literal_out_of_range():
    with pytest.raises(DimacsError) as excinfo:
        parse_dimacs("p cnf 2 1\n3 0\n")
    assert "out of range" in str(excinfo.value)


def test_parse_dimacs_missing_terminator():
    with pytest.raises(DimacsError) as excinfo:
        parse_dimacs("p cnf 2 1\n1 -2\n")
    assert "terminator" in str(excinfo.value)


def test_parse_dimacs_bad_token():
    with pytest.raises(DimacsError):
        parse_dimacs("p cnf 2 1\n1 x 0\n")
