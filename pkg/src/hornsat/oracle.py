"""Brute-force truth-table semantics.

Deliberately naive ground truth: every question is answered by
enumerating all valuations over the relevant symbols.  A symbol cap
(default 20, about a million rows) keeps each call sub-second.  The
enumeration order is stable (binary counting over sorted names), so
failures are reproducible.
"""

from __future__ import annotations

import itertools
from enum import Enum
from typing import Iterable

from .formula import Formula, evaluate, symbols

__all__ = [
    "Classification",
    "DEFAULT_SYMBOL_CAP",
    "SymbolCapError",
    "classify",
    "enumerate_valuations",
    "equivalent",
    "models",
    "semantic_consequence",
]

DEFAULT_SYMBOL_CAP = 20


class SymbolCapError(ValueError):
    """A truth-table enumeration would exceed the symbol cap."""


class Classification(Enum):
    VALID = "valid"
    SATISFIABLE = "satisfiable"
    CONTRADICTORY = "contradictory"


def enumerate_valuations(
    syms: Iterable[str], cap: int = DEFAULT_SYMBOL_CAP
) -> list[dict[str, int]]:
    """All 2^k total valuations over ``syms``, counting in binary over the
    sorted names (the first-sorted name is the most significant bit)."""
    names = sorted(set(syms))
    if len(names) > cap:
        raise SymbolCapError(f"{len(names)} symbols exceed the cap of {cap}")
    return [dict(zip(names, bits)) for bits in itertools.product((0, 1), repeat=len(names))]


def classify(phi: Formula, cap: int = DEFAULT_SYMBOL_CAP) -> Classification:
    """VALID if every valuation satisfies ``phi``, CONTRADICTORY if none
    does, SATISFIABLE otherwise."""
    rows = [evaluate(phi, v) for v in enumerate_valuations(symbols(phi), cap)]
    if all(rows):
        return Classification.VALID
    if not any(rows):
        return Classification.CONTRADICTORY
    return Classification.SATISFIABLE


def semantic_consequence(
    premises: Iterable[Formula], phi: Formula, cap: int = DEFAULT_SYMBOL_CAP
) -> bool:
    """True iff every valuation satisfying all premises satisfies ``phi``."""
    premises = list(premises)
    syms = symbols(phi)
    for premise in premises:
        syms |= symbols(premise)
    for valuation in enumerate_valuations(syms, cap):
        if all(evaluate(p, valuation) for p in premises) and not evaluate(phi, valuation):
            return False
    return True


def equivalent(phi: Formula, psi: Formula, cap: int = DEFAULT_SYMBOL_CAP) -> bool:
    """True iff both formulas have identical truth tables over the union
    of their symbols."""
    for valuation in enumerate_valuations(symbols(phi) | symbols(psi), cap):
        if evaluate(phi, valuation) != evaluate(psi, valuation):
            return False
    return True


def models(phi: Formula, cap: int = DEFAULT_SYMBOL_CAP) -> list[dict[str, int]]:
    """All satisfying valuations over the symbols of ``phi``, stable order."""
    return [v for v in enumerate_valuations(symbols(phi), cap) if evaluate(phi, v)]
