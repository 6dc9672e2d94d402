"""Truth-table oracle: enumeration, classification, consequence, models."""

import pytest
from hypothesis import given

from hornsat import (
    And,
    Atom,
    Classification,
    Falsum,
    Implies,
    Not,
    Or,
    SymbolCapError,
    Verum,
    classify,
    desugar,
    enumerate_valuations,
    equivalent,
    models,
    parse_formula,
    semantic_consequence,
    to_cnf,
)

from helpers import SAT_CHAIN_TEXT, UNSAT_CHAIN_TEXT, formula_strategy


def test_enumerate_valuations_empty():
    assert enumerate_valuations(set()) == [{}]


def test_enumerate_valuations_single():
    assert enumerate_valuations({"p"}) == [{"p": 0}, {"p": 1}]


def test_enumerate_valuations_counts_in_binary_over_sorted_names():
    assert enumerate_valuations({"q", "p"}) == [
        {"p": 0, "q": 0},
        {"p": 0, "q": 1},
        {"p": 1, "q": 0},
        {"p": 1, "q": 1},
    ]


def test_symbol_cap():
    assert len(enumerate_valuations({f"v{i}" for i in range(4)}, cap=4)) == 16
    with pytest.raises(SymbolCapError):
        enumerate_valuations({f"v{i}" for i in range(21)})
    with pytest.raises(SymbolCapError):
        classify(parse_formula(" | ".join(f"v{i}" for i in range(25))))


def test_classify():
    assert classify(Verum()) is Classification.VALID
    assert classify(parse_formula(UNSAT_CHAIN_TEXT)) is Classification.CONTRADICTORY
    assert classify(parse_formula(SAT_CHAIN_TEXT)) is Classification.SATISFIABLE


def test_semantic_consequence():
    p, q = Atom("p"), Atom("q")
    assert semantic_consequence([Falsum()], parse_formula("p & ~q"))
    assert semantic_consequence([And(p, q)], p)
    assert semantic_consequence([And(p, q)], q)
    assert not semantic_consequence([p], q)


def test_equivalent():
    assert equivalent(Atom("p"), parse_formula("true -> p"))
    assert equivalent(parse_formula("~p | ~q"), parse_formula("(p & q) -> false"))
    assert not equivalent(Atom("p"), Atom("q"))


def test_models():
    assert models(Falsum()) == []
    assert models(Atom("p")) == [{"p": 1}]
    assert {"p": 1, "q": 0, "r": 0, "s": 0} in models(parse_formula(SAT_CHAIN_TEXT))


@given(formula_strategy())
def test_negation_swaps_valid_and_contradictory(phi):
    verdict = classify(phi)
    negated = classify(Not(phi))
    assert (verdict is Classification.CONTRADICTORY) == (negated is Classification.VALID)
    assert (verdict is Classification.VALID) == (negated is Classification.CONTRADICTORY)


@given(formula_strategy(max_leaves=6), formula_strategy(max_leaves=6))
def test_consequence_matches_implication_validity(premise, phi):
    expected = classify(Implies(premise, phi)) is Classification.VALID
    assert semantic_consequence([premise], phi) == expected


@given(formula_strategy(max_leaves=6))
def test_equivalent_relation_properties(phi):
    core = desugar(phi)
    conjunctive = to_cnf(phi).to_formula()
    assert equivalent(phi, phi)
    assert equivalent(phi, core) and equivalent(core, phi)
    assert equivalent(core, conjunctive) and equivalent(phi, conjunctive)


@given(formula_strategy(max_leaves=5), formula_strategy(max_leaves=5))
def test_equivalent_is_a_congruence(phi, other):
    rewritten = desugar(phi)
    assert equivalent(phi, rewritten)
    assert equivalent(Not(phi), Not(rewritten))
    for connective in (And, Or, Implies):
        assert equivalent(connective(phi, other), connective(rewritten, other))
        assert equivalent(connective(other, phi), connective(other, rewritten))
