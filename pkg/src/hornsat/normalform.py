"""Literals, clauses, and equivalence-preserving CNF conversion.

Conversion distributes disjunction over conjunction (no auxiliary
variables), so the result is logically equivalent to the input, at the
cost of a possible exponential blowup.  An optional clause budget guards
against that blowup.

The falsum constant is an atomic formula here, so it may appear inside
literals; the verum literal is the negation of falsum.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .formula import And, Atom, Falsum, Formula, Iff, Implies, Not, Or, Valuation, Verum

__all__ = [
    "BOT",
    "TOP",
    "BOT_LITERAL",
    "TOP_LITERAL",
    "Clause",
    "ClauseBudgetError",
    "CnfFormula",
    "CnfVerdict",
    "Literal",
    "clause_is_valid",
    "cnf_quick_classify",
    "to_cnf",
]

# Atom tokens for the two constants.  Neither is a legal atom name, so they
# can share the namespace of symbol names inside literals and solver sets.
BOT = "⊥"
TOP = "⊤"


class ClauseBudgetError(ValueError):
    """CNF conversion would exceed the configured clause budget."""


@dataclass(frozen=True)
class Literal:
    """A possibly negated atom; ``atom`` is a symbol name or ``BOT``."""

    atom: str
    positive: bool = True

    def __post_init__(self) -> None:
        if self.atom == TOP:
            raise ValueError("verum is not atomic; use the negative falsum literal")
        if not self.atom:
            raise ValueError("literal atom must be nonempty")

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    def to_formula(self) -> Formula:
        base: Formula = Falsum() if self.atom == BOT else Atom(self.atom)
        return base if self.positive else Not(base)


BOT_LITERAL = Literal(BOT, positive=True)
TOP_LITERAL = Literal(BOT, positive=False)


@dataclass(frozen=True)
class Clause:
    """A disjunction of literals, in source order."""

    literals: tuple[Literal, ...]

    def __post_init__(self) -> None:
        if not self.literals:
            raise ValueError("clauses are nonempty; the empty clause is (bot)")

    def evaluate(self, valuation: Valuation) -> int:
        for lit in self.literals:
            value = 0 if lit.atom == BOT else (1 if valuation.get(lit.atom, 0) else 0)
            if not lit.positive:
                value = 1 - value
            if value:
                return 1
        return 0

    def symbols(self) -> set[str]:
        return {lit.atom for lit in self.literals if lit.atom != BOT}

    def to_formula(self) -> Formula:
        phi = self.literals[0].to_formula()
        for lit in self.literals[1:]:
            phi = Or(phi, lit.to_formula())
        return phi


@dataclass(frozen=True)
class CnfFormula:
    """A conjunction of clauses, in source order."""

    clauses: tuple[Clause, ...]

    def evaluate(self, valuation: Valuation) -> int:
        for clause in self.clauses:
            if not clause.evaluate(valuation):
                return 0
        return 1

    def symbols(self) -> set[str]:
        found: set[str] = set()
        for clause in self.clauses:
            found |= clause.symbols()
        return found

    def to_formula(self) -> Formula:
        if not self.clauses:
            return Verum()
        phi = self.clauses[0].to_formula()
        for clause in self.clauses[1:]:
            phi = And(phi, clause.to_formula())
        return phi


def _nnf(phi: Formula) -> Formula:
    """Negation normal form: expand -> and <->, push ~ down to literals."""
    if isinstance(phi, (Falsum, Verum, Atom)):
        return phi
    if isinstance(phi, Or):
        return Or(_nnf(phi.left), _nnf(phi.right))
    if isinstance(phi, And):
        return And(_nnf(phi.left), _nnf(phi.right))
    if isinstance(phi, Implies):
        return Or(_nnf(Not(phi.left)), _nnf(phi.right))
    if isinstance(phi, Iff):
        return And(
            Or(_nnf(Not(phi.left)), _nnf(phi.right)),
            Or(_nnf(Not(phi.right)), _nnf(phi.left)),
        )
    if isinstance(phi, Not):
        sub = phi.operand
        if isinstance(sub, Falsum):
            return Verum()
        if isinstance(sub, Verum):
            return Falsum()
        if isinstance(sub, Atom):
            return phi
        if isinstance(sub, Not):
            return _nnf(sub.operand)
        if isinstance(sub, Or):
            return And(_nnf(Not(sub.left)), _nnf(Not(sub.right)))
        if isinstance(sub, And):
            return Or(_nnf(Not(sub.left)), _nnf(Not(sub.right)))
        if isinstance(sub, Implies):
            return And(_nnf(sub.left), _nnf(Not(sub.right)))
        if isinstance(sub, Iff):
            return _nnf(Or(And(sub.left, Not(sub.right)), And(Not(sub.left), sub.right)))
    raise TypeError(f"not a formula: {phi!r}")


# Distribution works on plain (atom, positive) pairs: tuple hashing and
# equality run at C speed, which matters when a formula blows up into
# hundreds of thousands of clauses.
_BOT_PAIR = (BOT, True)
_TOP_PAIR = (BOT, False)


def _leaf_pair(phi: Formula) -> tuple[str, bool]:
    if isinstance(phi, Falsum):
        return _BOT_PAIR
    if isinstance(phi, Verum):
        return _TOP_PAIR
    if isinstance(phi, Atom):
        return (phi.name, True)
    if isinstance(phi, Not) and isinstance(phi.operand, Atom):
        return (phi.operand.name, False)
    raise TypeError(f"not a literal after NNF: {phi!r}")


def _distribute(phi: Formula, budget: int | None) -> list[list[tuple[str, bool]]]:
    if isinstance(phi, And):
        lists = _distribute(phi.left, budget) + _distribute(phi.right, budget)
        if budget is not None and len(lists) > budget:
            raise ClauseBudgetError(f"conversion exceeds the budget of {budget} clauses")
        return lists
    if isinstance(phi, Or):
        lefts = _distribute(phi.left, budget)
        rights = _distribute(phi.right, budget)
        if budget is not None and len(lefts) * len(rights) > budget:
            raise ClauseBudgetError(f"conversion exceeds the budget of {budget} clauses")
        return [lc + rc for lc in lefts for rc in rights]
    return [[_leaf_pair(phi)]]


def to_cnf(phi: Formula, max_clauses: int | None = None) -> CnfFormula:
    """Convert ``phi`` into an equivalent conjunction of clauses.

    Clause and literal order follow the source formula left to right.
    Simplification is minimal: clauses containing the verum literal are
    dropped, duplicate literals are dropped, and falsum literals are
    dropped from clauses that have other literals.  If every clause is
    dropped, the single verum clause remains.
    """
    raw = _distribute(_nnf(phi), max_clauses)
    interned: dict[tuple[str, bool], Literal] = {}
    clauses: list[Clause] = []
    for pairs in raw:
        if _TOP_PAIR in pairs:
            continue
        if len(pairs) > 1:
            seen: set[tuple[str, bool]] = set()
            kept: list[tuple[str, bool]] = []
            for pair in pairs:
                if pair not in seen:
                    seen.add(pair)
                    kept.append(pair)
            if len(kept) > 1:
                kept = [pair for pair in kept if pair != _BOT_PAIR]
        else:
            kept = pairs
        literals = tuple(
            interned.get(pair) or interned.setdefault(pair, Literal(*pair)) for pair in kept
        )
        clauses.append(Clause(literals))
    if not clauses:
        clauses.append(Clause((TOP_LITERAL,)))
    return CnfFormula(tuple(clauses))


def clause_is_valid(clause: Clause) -> bool:
    """True iff the clause holds under every valuation.

    That is the case exactly when it contains the verum literal or a
    complementary pair of literals over the same atom.
    """
    lits = set(clause.literals)
    if TOP_LITERAL in lits:
        return True
    return any(lit.complement() in lits for lit in lits)


class CnfVerdict(Enum):
    VALID = "valid"
    CONTRADICTORY = "contradictory"
    UNKNOWN = "unknown"


def cnf_quick_classify(cnf: CnfFormula) -> CnfVerdict:
    """Syntactic classification: VALID if every clause is valid,
    CONTRADICTORY if some clause consists solely of falsum literals,
    UNKNOWN otherwise (deferred to the solver or the oracle)."""
    if all(clause_is_valid(clause) for clause in cnf.clauses):
        return CnfVerdict.VALID
    for clause in cnf.clauses:
        if all(lit == BOT_LITERAL for lit in clause.literals):
            return CnfVerdict.CONTRADICTORY
    return CnfVerdict.UNKNOWN
