"""Command-line front end: solve, trace, convert, and classify.

Exit codes follow the usual solver convention: 10 for SAT, 20 for UNSAT,
1 for parse errors and non-Horn inputs, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .formula import symbols
from .horn import HornFormula, HornImplication, NotHornError, Top, horn_from_clauses
from .normalform import BOT, TOP, Clause, ClauseBudgetError, CnfFormula, Literal, to_cnf
from .oracle import Classification, SymbolCapError, classify
from .parsing import DimacsError, ParseError, parse_dimacs, parse_formula
from .solver import SolveOutcome, TraceStep, extract_model, precheck, solve

__all__ = ["TraceDocument", "build_trace_document", "cli_main", "main"]

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_ERROR = 1

DEFAULT_CLAUSE_BUDGET = 100_000


def display_atom(atom: str) -> str:
    """ASCII spelling of an atom token (constants become bot/top)."""
    if atom == BOT:
        return "bot"
    if atom == TOP:
        return "top"
    return atom


def _render_literal(lit: Literal) -> str:
    name = display_atom(lit.atom)
    return name if lit.positive else "~" + name


def _render_clause(clause: Clause) -> str:
    return " | ".join(_render_literal(lit) for lit in clause.literals)


def render_implication(imp: HornImplication) -> str:
    if isinstance(imp.antecedent, Top):
        left = "top"
    else:
        left = " & ".join(display_atom(a) for a in imp.antecedent.atoms)
    return f"{left} -> {display_atom(imp.consequent)}"


def _render_set(atoms) -> str:
    return "{" + ", ".join(sorted(display_atom(a) for a in atoms)) + "}"


@dataclass(frozen=True)
class TraceDocument:
    """A full solver run, ready for text or JSON output."""

    input_formula: str
    horn_form: tuple[str, ...]
    steps: tuple[TraceStep, ...]
    final_set: tuple[str, ...]
    verdict: str
    model: dict[str, int] | None
    step_count: int
    shortcut: str | None

    def to_json(self) -> str:
        payload = {
            "input_formula": self.input_formula,
            "horn_form": list(self.horn_form),
            "steps": [
                {
                    "fired_index": step.fired_index,
                    "consequent_added": None
                    if step.consequent_added is None
                    else display_atom(step.consequent_added),
                    "set_before": sorted(display_atom(a) for a in step.set_before),
                    "set_after": sorted(display_atom(a) for a in step.set_after),
                    "remaining_after": step.remaining_after,
                }
                for step in self.steps
            ],
            "final_set": list(self.final_set),
            "verdict": self.verdict,
            "model": None if self.model is None else dict(sorted(self.model.items())),
            "step_count": self.step_count,
            "shortcut": self.shortcut,
        }
        return json.dumps(payload, indent=2)

    def to_text(self) -> str:
        lines = [f"input:    {self.input_formula}"]
        lines.append("horn:")
        for index, implication in enumerate(self.horn_form):
            lines.append(f"  [{index}] {implication}")
        if self.shortcut:
            lines.append(f"shortcut: {self.shortcut}")
        lines.append("trace:")
        for number, step in enumerate(self.steps, start=1):
            if step.fired_index is None:
                lines.append(
                    f"  {number}. stop ({step.remaining_after} remaining): "
                    f"{_render_set(step.set_after)}"
                )
            else:
                lines.append(
                    f"  {number}. fire [{step.fired_index}] {self.horn_form[step.fired_index]}: "
                    f"{_render_set(step.set_before)} => {_render_set(step.set_after)}"
                )
        lines.append("final:    {" + ", ".join(self.final_set) + "}")
        lines.append(f"steps:    {self.step_count}")
        lines.append(f"verdict:  {self.verdict}")
        if self.model is not None:
            lines.append(f"model:    {_model_line(self.model)}")
        return "\n".join(lines)


def build_trace_document(
    input_text: str,
    horn: HornFormula,
    outcome: SolveOutcome,
    model: dict[str, int] | None,
    shortcut: str | None,
) -> TraceDocument:
    return TraceDocument(
        input_formula=input_text.strip(),
        horn_form=tuple(render_implication(imp) for imp in horn.implications),
        steps=outcome.trace,
        final_set=tuple(sorted(display_atom(a) for a in outcome.final_set)),
        verdict="SAT" if outcome.satisfiable else "UNSAT",
        model=model,
        step_count=outcome.steps,
        shortcut=shortcut,
    )


def _model_line(model: dict[str, int]) -> str:
    return " ".join(f"{name}={model[name]}" for name in sorted(model))


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_cnf(args: argparse.Namespace) -> tuple[str, CnfFormula, set[str]]:
    """Read the input and produce clauses plus the source symbol set."""
    text = _read_input(args.path)
    if getattr(args, "dimacs", False):
        cnf = parse_dimacs(text)
        return text, cnf, cnf.symbols()
    phi = parse_formula(text)
    return text, to_cnf(phi, max_clauses=args.max_clauses), symbols(phi)


_PIPELINE_ERRORS = (ParseError, DimacsError, NotHornError, ClauseBudgetError, OSError)


def _run_solver(args: argparse.Namespace):
    text, cnf, source_symbols = _load_cnf(args)
    horn = horn_from_clauses(cnf)
    shortcut = None
    if not args.no_precheck:
        reasons = precheck(horn)
        if reasons:
            shortcut = "; ".join(reasons)
    outcome = solve(horn, early_stop=not args.no_early_stop)
    model = None
    if outcome.satisfiable:
        model = extract_model(horn, outcome.final_set)
        for name in source_symbols:
            model.setdefault(name, 0)
    return text, horn, outcome, model, shortcut


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        _, _, outcome, model, shortcut = _run_solver(args)
    except _PIPELINE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if shortcut:
        print(f"note: shortcut: {shortcut}", file=sys.stderr)
    if outcome.satisfiable:
        print("SAT")
        if model:
            print(_model_line(model))
        return EXIT_SAT
    print("UNSAT")
    return EXIT_UNSAT


def _cmd_trace(args: argparse.Namespace) -> int:
    try:
        text, horn, outcome, model, shortcut = _run_solver(args)
    except _PIPELINE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    document = build_trace_document(text, horn, outcome, model, shortcut)
    print(document.to_json() if args.json else document.to_text())
    return EXIT_SAT if outcome.satisfiable else EXIT_UNSAT


def _cmd_convert(args: argparse.Namespace) -> int:
    try:
        _, cnf, _ = _load_cnf(args)
    except _PIPELINE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print("clauses:")
    for clause in cnf.clauses:
        print(f"  {_render_clause(clause)}")
    try:
        horn = horn_from_clauses(cnf)
    except NotHornError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print("horn:")
    for imp in horn.implications:
        print(f"  {render_implication(imp)}")
    return 0


_CLASSIFY_LABELS = {
    Classification.VALID: "Valid",
    Classification.SATISFIABLE: "Satisfiable",
    Classification.CONTRADICTORY: "Contradictory",
}


def _cmd_classify(args: argparse.Namespace) -> int:
    try:
        phi = parse_formula(_read_input(args.path))
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        verdict = classify(phi, cap=args.max_symbols)
    except SymbolCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(_CLASSIFY_LABELS[verdict])
    return 0


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("path", help="input file, or - for standard input")
    parser.add_argument(
        "--dimacs", action="store_true", help="read DIMACS CNF instead of formula text"
    )
    parser.add_argument(
        "--max-clauses",
        type=int,
        default=DEFAULT_CLAUSE_BUDGET,
        metavar="N",
        help="abort CNF conversion beyond N clauses (default %(default)s)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hornsat",
        description="Decide Horn-clause satisfiability with step traces and least models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve_p = sub.add_parser("solve", help="decide satisfiability (exit 10 SAT, 20 UNSAT)")
    _add_input_options(solve_p)
    solve_p.add_argument(
        "--no-early-stop",
        action="store_true",
        help="saturate fully even after bot enters the set",
    )
    solve_p.add_argument(
        "--no-precheck",
        action="store_true",
        help="skip the syntactic satisfiability shortcuts",
    )
    solve_p.set_defaults(handler=_cmd_solve)

    trace_p = sub.add_parser("trace", help="solve and emit the full run as text or JSON")
    _add_input_options(trace_p)
    trace_p.add_argument("--json", action="store_true", help="emit one JSON object")
    trace_p.add_argument("--no-early-stop", action="store_true", help=argparse.SUPPRESS)
    trace_p.add_argument("--no-precheck", action="store_true", help=argparse.SUPPRESS)
    trace_p.set_defaults(handler=_cmd_trace)

    convert_p = sub.add_parser("convert", help="print the clause list and the implication form")
    _add_input_options(convert_p)
    convert_p.set_defaults(handler=_cmd_convert)

    classify_p = sub.add_parser("classify", help="truth-table verdict: Valid/Satisfiable/Contradictory")
    classify_p.add_argument("path", help="input file, or - for standard input")
    classify_p.add_argument(
        "--max-symbols",
        type=int,
        default=20,
        metavar="N",
        help="refuse enumeration beyond N symbols (default %(default)s)",
    )
    classify_p.set_defaults(handler=_cmd_classify)

    return parser


def cli_main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.handler(args)


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))
