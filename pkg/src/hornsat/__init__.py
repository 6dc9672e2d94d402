"""Horn-clause satisfiability by recursive forward chaining.

The pipeline: parse formula text (or DIMACS CNF), convert to an
equivalent conjunction of clauses, rewrite clauses as implications, then
saturate from {verum} to the least fixpoint.  Satisfiability is decided
by whether falsum entered the final set, which also reads off the least
model.  A brute-force truth-table oracle provides independent ground
truth for testing.
"""

from .formula import (
    And,
    Atom,
    Falsum,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Valuation,
    Verum,
    desugar,
    evaluate,
    satisfies,
    symbols,
)
from .normalform import (
    BOT,
    BOT_LITERAL,
    TOP,
    TOP_LITERAL,
    Clause,
    ClauseBudgetError,
    CnfFormula,
    CnfVerdict,
    Literal,
    clause_is_valid,
    cnf_quick_classify,
    to_cnf,
)
from .horn import (
    Antecedent,
    Conj,
    HornFormula,
    HornImplication,
    NotHornError,
    Top,
    basic_to_implication,
    horn_from_clauses,
    horn_from_formula,
    horn_symbols,
    horn_to_formula,
    implication_to_formula,
    is_basic_horn,
)
from .solver import (
    Fired,
    LiteralSet,
    SHORTCUT_NO_BOT_CONSEQUENT,
    SHORTCUT_NO_TOP_ANTECEDENT,
    SolveOutcome,
    TraceStep,
    antecedent_atoms,
    extract_model,
    precheck,
    saturate,
    solve,
    step,
)
from .oracle import (
    Classification,
    DEFAULT_SYMBOL_CAP,
    SymbolCapError,
    classify,
    enumerate_valuations,
    equivalent,
    models,
    semantic_consequence,
)
from .parsing import DimacsError, ParseError, parse_dimacs, parse_formula, render

__version__ = "0.1.0"

__all__ = [
    "And",
    "Antecedent",
    "Atom",
    "BOT",
    "BOT_LITERAL",
    "Classification",
    "Clause",
    "ClauseBudgetError",
    "CnfFormula",
    "CnfVerdict",
    "Conj",
    "DEFAULT_SYMBOL_CAP",
    "DimacsError",
    "Falsum",
    "Fired",
    "Formula",
    "HornFormula",
    "HornImplication",
    "Iff",
    "Implies",
    "Literal",
    "LiteralSet",
    "Not",
    "NotHornError",
    "Or",
    "ParseError",
    "SHORTCUT_NO_BOT_CONSEQUENT",
    "SHORTCUT_NO_TOP_ANTECEDENT",
    "SolveOutcome",
    "SymbolCapError",
    "TOP",
    "TOP_LITERAL",
    "Top",
    "TraceStep",
    "Valuation",
    "Verum",
    "antecedent_atoms",
    "basic_to_implication",
    "clause_is_valid",
    "classify",
    "cnf_quick_classify",
    "desugar",
    "enumerate_valuations",
    "equivalent",
    "evaluate",
    "extract_model",
    "horn_from_clauses",
    "horn_from_formula",
    "horn_symbols",
    "horn_to_formula",
    "implication_to_formula",
    "is_basic_horn",
    "models",
    "parse_dimacs",
    "parse_formula",
    "precheck",
    "render",
    "satisfies",
    "saturate",
    "semantic_consequence",
    "solve",
    "step",
    "symbols",
    "to_cnf",
]
