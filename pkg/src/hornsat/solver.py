"""The satisfiability engine for Horn formulas.

Starting from the set {verum}, the engine repeatedly fires the leftmost
implication whose antecedent atoms are all in the current set, adds its
consequent, and removes the implication.  The run stops at a fixpoint;
the input is satisfiable exactly when falsum never entered the set.  Each
run is recorded as a trace of steps, and for satisfiable inputs the final
set reads off the least model.

Saturation grows the set monotonically: the final set always contains the
start set and adds nothing beyond the consequents, the result is the same
for any firing order, and a run over n implications takes at most n
firings plus one terminal step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .horn import Antecedent, HornFormula, Top, horn_symbols
from .normalform import BOT, TOP

__all__ = [
    "Fired",
    "LiteralSet",
    "SHORTCUT_NO_BOT_CONSEQUENT",
    "SHORTCUT_NO_TOP_ANTECEDENT",
    "SolveOutcome",
    "TraceStep",
    "antecedent_atoms",
    "extract_model",
    "precheck",
    "saturate",
    "solve",
    "step",
]

LiteralSet = frozenset  # sets of atom tokens: symbol names plus BOT/TOP

SHORTCUT_NO_BOT_CONSEQUENT = "no implication has consequent bot"
SHORTCUT_NO_TOP_ANTECEDENT = "no antecedent is top"


@dataclass(frozen=True)
class TraceStep:
    """One engine step.

    ``fired_index`` is the implication's position in the original input
    order, or None for the terminal step that detects the fixpoint.
    """

    fired_index: int | None
    consequent_added: str | None
    set_before: frozenset[str]
    set_after: frozenset[str]
    remaining_after: int


@dataclass(frozen=True)
class SolveOutcome:
    satisfiable: bool
    final_set: frozenset[str]
    trace: tuple[TraceStep, ...]
    steps: int  # firings plus one terminal step


@dataclass(frozen=True)
class Fired:
    """Result of one successful :func:`step`."""

    index: int  # position within the remaining sequence
    remaining: HornFormula
    literals: frozenset[str]


def antecedent_atoms(antecedent: Antecedent) -> frozenset[str]:
    """The atom set of an antecedent; the verum antecedent yields {TOP}."""
    if isinstance(antecedent, Top):
        return frozenset((TOP,))
    return frozenset(antecedent.atoms)


def _first_fireable(implications: Iterable, current: frozenset[str]) -> int | None:
    for position, imp in enumerate(implications):
        if antecedent_atoms(imp.antecedent) <= current:
            return position
    return None


def step(remaining: HornFormula, current: frozenset[str]) -> Fired | None:
    """Fire the leftmost implication whose antecedent atoms are contained
    in ``current``; None signals a fixpoint.  Expects TOP in ``current``."""
    position = _first_fireable(remaining.implications, current)
    if position is None:
        return None
    imp = remaining.implications[position]
    rest = remaining.implications[:position] + remaining.implications[position + 1 :]
    return Fired(position, HornFormula(rest), frozenset(current) | {imp.consequent})


def saturate(
    phi: HornFormula,
    start: Iterable[str],
    early_stop: bool = False,
) -> tuple[frozenset[str], tuple[TraceStep, ...]]:
    """Run the engine from ``start`` (which must contain TOP) to a fixpoint.

    Returns the accumulated set and the trace.  With ``early_stop`` the
    run halts as soon as BOT enters the set; the returned set is then a
    subset of the full fixpoint that already contains BOT, which settles
    satisfiability just as well.
    """
    current = frozenset(start)
    if TOP not in current:
        raise ValueError("the start set must contain the verum token")
    remaining = list(enumerate(phi.implications))
    trace: list[TraceStep] = []
    while True:
        if early_stop and BOT in current:
            position = None
        else:
            position = _first_fireable((imp for _, imp in remaining), current)
        if position is None:
            trace.append(TraceStep(None, None, current, current, len(remaining)))
            return current, tuple(trace)
        original_index, imp = remaining.pop(position)
        updated = current | {imp.consequent}
        trace.append(TraceStep(original_index, imp.consequent, current, updated, len(remaining)))
        current = updated


def solve(phi: HornFormula, early_stop: bool = False) -> SolveOutcome:
    """Decide satisfiability of ``phi``: saturate from {verum} and test
    whether falsum entered the final set."""
    final, trace = saturate(phi, frozenset((TOP,)), early_stop)
    return SolveOutcome(BOT not in final, final, trace, len(trace))


def precheck(phi: HornFormula) -> tuple[str, ...]:
    """Syntactic shortcuts that settle satisfiability without saturating.

    Returns the applicable reasons (possibly both), or the empty tuple
    when no shortcut applies.  Falsum can only enter the set as the
    consequent of some implication, so a formula with no falsum
    consequent is satisfiable; and with no verum antecedent nothing can
    fire from {verum}, so saturation stops immediately at {verum}.
    """
    reasons = []
    if all(imp.consequent != BOT for imp in phi.implications):
        reasons.append(SHORTCUT_NO_BOT_CONSEQUENT)
    if not any(isinstance(imp.antecedent, Top) for imp in phi.implications):
        reasons.append(SHORTCUT_NO_TOP_ANTECEDENT)
    return tuple(reasons)


def extract_model(phi: HornFormula, final_set: frozenset[str]) -> dict[str, int]:
    """Read the least model off a falsum-free final set.

    Every symbol in the set maps to 1; every other symbol of ``phi`` maps
    to 0.  The resulting valuation satisfies the formula reading of
    ``phi``, and every model of ``phi`` assigns 1 wherever this one does.
    """
    if BOT in final_set:
        raise ValueError("no model: falsum is in the final set")
    model = {atom: 1 for atom in sorted(final_set) if atom not in (BOT, TOP)}
    for name in sorted(horn_symbols(phi)):
        model.setdefault(name, 0)
    return model
