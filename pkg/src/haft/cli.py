"""Command line front end.

    haft typecheck FILE            elaborate a term and print its type
    haft normalize FILE            reduce a term to normal form
    haft abstract FILE --var X     bracket-abstract a variable
    haft check FILE [--explain]    check a proof script
    haft dialectica FILE           translate a formula
    haft certify [--grid G]        self-interpretation of the axiom base
    haft verify-corollary          combinator laws over a type grid
    haft suite [--report-dir DIR]  the whole verification battery

Exit status: 0 on success, 1 when a proof or verification fails, 2
when an input cannot be read or parsed.
"""
from __future__ import annotations

import argparse
import sys

from .abstraction import bracket, grid_types, verify_corollary
from .dialectica import certify_axiom_base, self_interpreted, translate
from .kernel import CheckError, SchemaError, check
from .logic import format_formula, parse_formula_file
from .proofscript import explain, parse_proof_script
from .reduction import DEFAULT_FUEL, FuelExhausted, normalize
from .report import write_report
from .suite import render_suite, run_suite
from .syntax import (
    ParseError,
    TypingError,
    Var,
    parse_term_file,
    print_term,
    type_of,
)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _cmd_typecheck(args: argparse.Namespace) -> int:
    term, _ = parse_term_file(_read(args.file))
    print(f"term: {print_term(term)}")
    print(f"type: {type_of(term)}")
    return 0


def _cmd_normalize(args: argparse.Namespace) -> int:
    term, _ = parse_term_file(_read(args.file))
    report = normalize(term, fuel=args.fuel, trace=args.trace, strategy=args.strategy)
    if report.trace:
        for i, rule in enumerate(report.trace, start=1):
            print(f"step {i}: {rule}")
    print(f"normal form: {print_term(report.term)}")
    print(f"steps: {report.steps}")
    print(f"type: {type_of(report.term)}")
    return 0


def _cmd_abstract(args: argparse.Namespace) -> int:
    term, env = parse_term_file(_read(args.file))
    if args.var not in env:
        raise ParseError(f"variable {args.var!r} is not declared in the file")
    result = bracket(Var(args.var, env[args.var]), term)
    print(f"abstracted: {print_term(result.term)}")
    print(f"type: {type_of(result.term)}")
    print(f"growth: {result.growth:.2f}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    proof, hyps, _ = parse_proof_script(_read(args.file))
    if args.explain:
        print(explain(proof, hyps), end="")
    judgment = check(proof, hyps)
    print(f"checked: {judgment}")
    return 0


def _cmd_dialectica(args: argparse.Namespace) -> int:
    formula, _ = parse_formula_file(_read(args.file))
    form = translate(formula)

    def prefix(variables) -> str:
        return ", ".join(f"{v.name} : {v.type}" for v in variables) or "(none)"

    print(f"formula: {format_formula(formula)}")
    print(f"exist: {prefix(form.exist)}")
    print(f"univ: {prefix(form.univ)}")
    print(f"matrix: {format_formula(form.matrix)}")
    print(f"self-interpreted: {'yes' if self_interpreted(formula) else 'no'}")
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    report = certify_axiom_base(grid_types(args.grid))
    disagreeing = [row for row in report.rows if not row.agrees]
    for row in disagreeing:
        got = "yes" if row.self_interpreted else "no"
        want = "yes" if row.expected else "no"
        print(f"unexpected: {row.schema_id} [{row.detail}] got {got}, expected {want}")
    print(f"rows: {len(report.rows)}")
    print(f"agree: {len(report.rows) - len(disagreeing)}")
    induction = next(row for row in report.rows if row.schema_id == "induction")
    got = "yes" if induction.self_interpreted else "no"
    print(f"induction self-interpreted: {got} (expected no)")
    print(f"overall: {'ok' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def _cmd_verify_corollary(args: argparse.Namespace) -> int:
    report = verify_corollary(grid_types(args.grid), args.fuel)
    for law, label in (
        ("i", "identity-law"),
        ("b", "composition-law"),
        ("q", "transposition-law"),
    ):
        group = [c for c in report.checks if c.law == law]
        good = sum(1 for c in group if c.ok)
        print(f"{label}: {good}/{len(group)} ok")
    print(f"overall: {'ok' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def _cmd_suite(args: argparse.Namespace) -> int:
    report = run_suite(grid_types(args.grid), args.fuel)
    print(render_suite(report), end="")
    if args.report_dir:
        paths = write_report(report, args.report_dir)
        print("report: " + ", ".join(str(p) for p in paths))
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="haft",
        description=(
            "Term engine and proof kernel for arithmetic in all finite "
            "types with observational equality."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="verb")

    p = sub.add_parser("typecheck", help="elaborate a term file and print its type")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_typecheck)

    p = sub.add_parser("normalize", help="reduce a term file to normal form")
    p.add_argument("file")
    p.add_argument("--fuel", type=int, default=DEFAULT_FUEL, help="step budget")
    p.add_argument("--trace", action="store_true", help="print the rule of every step")
    p.add_argument(
        "--strategy", choices=("outermost", "innermost"), default="outermost"
    )
    p.set_defaults(handler=_cmd_normalize)

    p = sub.add_parser("abstract", help="bracket-abstract a variable out of a term")
    p.add_argument("file")
    p.add_argument("--var", required=True, help="declared variable to abstract")
    p.set_defaults(handler=_cmd_abstract)

    p = sub.add_parser("check", help="check a proof script")
    p.add_argument("file")
    p.add_argument(
        "--explain", action="store_true", help="print every step with its conclusion"
    )
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser(
        "dialectica", help="translate a formula file and test self-interpretation"
    )
    p.add_argument("file")
    p.set_defaults(handler=_cmd_dialectica)

    p = sub.add_parser(
        "certify", help="self-interpretation across the arithmetic axiom base"
    )
    p.add_argument("--grid", choices=("small", "full"), default="small")
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser(
        "verify-corollary", help="combinator reduction laws over a type grid"
    )
    p.add_argument("--grid", choices=("small", "full"), default="small")
    p.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    p.set_defaults(handler=_cmd_verify_corollary)

    p = sub.add_parser("suite", help="run the whole verification battery")
    p.add_argument("--grid", choices=("small", "full"), default="small")
    p.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    p.add_argument("--report-dir", help="also write suite.csv and suite.png here")
    p.set_defaults(handler=_cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, TypingError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (CheckError, SchemaError, FuelExhausted) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
