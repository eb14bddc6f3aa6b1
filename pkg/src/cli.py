"""
Command-line interface.

Subcommands:
    set eval       --curve FILE --x VALUE
    set combine    --op min|max|complement [--lambda L] --curve FILE [--curve2 FILE] --out FILE
    laws check     --curve FILE --lambda L
    mvl table      --op not|and|or|implies|equiv --n N [--csv]
    expr eval      --formula TEXT --env k=v,... --semantics classical|nvalued:N|fuzzy:LAMBDA
    expr parse     --formula TEXT
    expr table     --formula TEXT --n N [--csv]
    negation check --lambda L [--samples N]
    plot           --curve FILE... --out FILE.csv|FILE.svg [--samples N]

Exit codes: 0 success, 1 usage error, 2 domain error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from src.config import Config, get_default_config, setup_logging
from src.errors import DomainError, UsageError
from src.fuzzy import (
    NegationFamily,
    complement,
    contradiction_defect,
    excluded_middle_defect,
    mf_eval,
    pointwise_max,
    pointwise_min,
    self_complementary,
    check_negation_axioms,
)
from src.logic import (
    Connective,
    Environment,
    Semantics,
    evaluate,
    formula_table,
    formula_to_dict,
    parse,
    print_formula,
    truth_table,
    variables,
)
from src.reporters import (
    emit_csv,
    emit_svg,
    format_formula_table,
    format_law_reports,
    format_negation_report,
    format_number,
    format_truth_table,
    formula_table_csv,
    sample_grid,
    sample_series,
    truth_table_csv,
)
from src.utils import load_curve, save_curve

logger = logging.getLogger("fuzzylogic.cli")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting on bad input."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def _add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Print single-line JSON")


def _add_lambda(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument(
        "--lambda",
        dest="lam",
        type=float,
        required=required,
        default=0.0,
        help="Negation parameter (> -1; 0 is the classical 1 - x)",
    )


def build_parser(config: Config) -> argparse.ArgumentParser:
    """Build the argparse command tree."""
    parser = _ArgumentParser(
        prog="fuzzylogic",
        description="Graded-logic toolkit: fuzzy sets, negations, many-valued logic",
    )
    parser.add_argument("--verbose", action="store_true", help="Enable verbose logging")
    commands = parser.add_subparsers(dest="command", required=True)

    # set
    set_parser = commands.add_parser("set", help="Evaluate and combine curve files")
    set_commands = set_parser.add_subparsers(dest="action", required=True)

    set_eval = set_commands.add_parser("eval", help="Membership value A(x)")
    set_eval.add_argument("--curve", required=True, help="Curve JSON file")
    set_eval.add_argument("--x", type=float, required=True, help="Point of the universe")
    _add_json_flag(set_eval)

    set_combine = set_commands.add_parser("combine", help="min, max or complement of curves")
    set_combine.add_argument("--op", choices=["min", "max", "complement"], required=True)
    _add_lambda(set_combine, required=False)
    set_combine.add_argument("--curve", required=True, help="First curve JSON file")
    set_combine.add_argument("--curve2", help="Second curve JSON file (min and max)")
    set_combine.add_argument("--out", required=True, help="Output curve JSON file")
    set_combine.add_argument(
        "--tol", type=float, default=config.tolerances.complement,
        help="Complement tolerance for lambda != 0",
    )
    _add_json_flag(set_combine)

    # laws
    laws_parser = commands.add_parser("laws", help="Classical laws on a fuzzy set")
    laws_commands = laws_parser.add_subparsers(dest="action", required=True)
    laws_check = laws_commands.add_parser("check", help="Contradiction and excluded-middle defects")
    laws_check.add_argument("--curve", required=True, help="Curve JSON file")
    _add_lambda(laws_check, required=True)
    laws_check.add_argument(
        "--tol", type=float, default=config.tolerances.complement,
        help="Complement tolerance for lambda != 0",
    )
    _add_json_flag(laws_check)

    # mvl
    mvl_parser = commands.add_parser("mvl", help="n-valued Lukasiewicz logic")
    mvl_commands = mvl_parser.add_subparsers(dest="action", required=True)
    mvl_table = mvl_commands.add_parser("table", help="Truth table of a connective")
    mvl_table.add_argument("--op", choices=[c.value for c in Connective], required=True)
    mvl_table.add_argument("--n", type=int, required=True, help="Number of truth values")
    mvl_table.add_argument("--csv", action="store_true", help="Print CSV")
    _add_json_flag(mvl_table)

    # expr
    expr_parser = commands.add_parser("expr", help="Propositional formulas")
    expr_commands = expr_parser.add_subparsers(dest="action", required=True)

    expr_eval = expr_commands.add_parser("eval", help="Evaluate a formula")
    expr_eval.add_argument("--formula", required=True)
    expr_eval.add_argument("--env", default="", help="Bindings, e.g. p=0.5,q=1/2")
    expr_eval.add_argument("--semantics", default="classical",
                           help="classical, nvalued:N or fuzzy:LAMBDA")
    _add_json_flag(expr_eval)

    expr_parse = expr_commands.add_parser("parse", help="Canonical form of a formula")
    expr_parse.add_argument("--formula", required=True)
    _add_json_flag(expr_parse)

    expr_table = expr_commands.add_parser("table", help="Formula over every V_n assignment")
    expr_table.add_argument("--formula", required=True)
    expr_table.add_argument("--n", type=int, default=2, help="Number of truth values")
    expr_table.add_argument("--csv", action="store_true", help="Print CSV")

    # negation
    negation_parser = commands.add_parser("negation", help="Sugeno negation family")
    negation_commands = negation_parser.add_subparsers(dest="action", required=True)
    negation_check = negation_commands.add_parser("check", help="Sample the negation axioms")
    _add_lambda(negation_check, required=True)
    negation_check.add_argument("--samples", type=int, default=10_000)
    negation_check.add_argument("--seed", type=int, default=0)
    _add_json_flag(negation_check)

    # plot
    plot = commands.add_parser("plot", help="Sample curves into CSV or SVG")
    plot.add_argument("--curve", nargs="+", required=True, help="Curve JSON files")
    plot.add_argument("--out", required=True, help="Output .csv or .svg file")
    plot.add_argument("--samples", type=int, default=config.plot_params.samples)
    plot.add_argument("--complement", type=float, dest="complement_lam",
                      help="Also plot A^C under this negation parameter")
    plot.add_argument("--intersection", action="store_true",
                      help="Also plot A and A^C (needs --complement)")
    plot.add_argument("--width", type=int, default=config.plot_params.width)
    plot.add_argument("--height", type=int, default=config.plot_params.height)

    return parser


def _dumps(data) -> str:
    return json.dumps(data)


# -- command handlers -------------------------------------------------------


def _set_eval(args, config: Config, out: TextIO) -> None:
    fuzzy_set = load_curve(config.resolve_curve(args.curve))
    value = mf_eval(fuzzy_set, args.x)
    if args.json:
        print(_dumps({"x": args.x, "value": value.value}), file=out)
    else:
        print(format_number(value.value), file=out)


def _set_combine(args, config: Config, out: TextIO) -> None:
    first = load_curve(config.resolve_curve(args.curve))
    if args.op == "complement":
        result = complement(first, NegationFamily(args.lam), args.tol)
    else:
        if not args.curve2:
            raise UsageError(f"--op {args.op} needs --curve2")
        second = load_curve(config.resolve_curve(args.curve2))
        combine = pointwise_min if args.op == "min" else pointwise_max
        result = combine(first, second)

    save_curve(result, args.out)
    count = len(result.curve.breakpoints)
    if args.json:
        print(_dumps({"out": args.out, "breakpoints": count}), file=out)
    else:
        print(f"Wrote {count} breakpoints to {args.out}", file=out)


def _laws_check(args, config: Config, out: TextIO) -> None:
    fuzzy_set = load_curve(config.resolve_curve(args.curve))
    neg = NegationFamily(args.lam)
    reports = [
        contradiction_defect(fuzzy_set, neg, args.tol),
        excluded_middle_defect(fuzzy_set, neg, args.tol),
    ]
    self_comp = self_complementary(fuzzy_set, neg, config.tolerances.degree)
    if args.json:
        print(_dumps({
            "lambda": neg.lam,
            "contradiction": reports[0].to_dict(),
            "excluded_middle": reports[1].to_dict(),
            "self_complementary": {
                "holds": self_comp.holds,
                "max_deviation": self_comp.max_deviation,
            },
        }), file=out)
    else:
        print(format_law_reports(reports, self_comp, neg.lam), file=out)


def _mvl_table(args, config: Config, out: TextIO) -> None:
    table = truth_table(Connective(args.op), args.n)
    if args.csv:
        out.write(truth_table_csv(table))
    elif args.json:
        print(_dumps(table.to_dict()), file=out)
    else:
        print(format_truth_table(table), file=out)


def _expr_eval(args, config: Config, out: TextIO) -> None:
    formula = parse(args.formula)
    env = Environment.parse(args.env)
    semantics = Semantics.parse(args.semantics)
    value = evaluate(formula, env, semantics)
    if args.json:
        print(_dumps({
            "formula": print_formula(formula),
            "semantics": args.semantics,
            "value": value.value,
        }), file=out)
    else:
        print(format_number(value.value), file=out)


def _expr_parse(args, config: Config, out: TextIO) -> None:
    formula = parse(args.formula)
    if args.json:
        print(_dumps(formula_to_dict(formula)), file=out)
    else:
        print(print_formula(formula), file=out)


def _expr_table(args, config: Config, out: TextIO) -> None:
    formula = parse(args.formula)
    names = variables(formula)
    rows = formula_table(formula, args.n)
    text = print_formula(formula)
    if args.csv:
        out.write(formula_table_csv(names, rows, text))
    else:
        print(format_formula_table(names, rows, text), file=out)


def _negation_check(args, config: Config, out: TextIO) -> None:
    report = check_negation_axioms(NegationFamily(args.lam), args.samples, args.seed)
    if args.json:
        print(_dumps(report.to_dict()), file=out)
    else:
        print(format_negation_report(report), file=out)


def _plot(args, config: Config, out: TextIO) -> None:
    suffix = Path(args.out).suffix.lower()
    if suffix not in (".csv", ".svg"):
        raise UsageError(f"--out must end in .csv or .svg, got {args.out!r}")
    if args.intersection and args.complement_lam is None:
        raise UsageError("--intersection needs --complement")

    labelled = []
    for path in args.curve:
        label = Path(path).stem
        fuzzy_set = load_curve(config.resolve_curve(path))
        labelled.append((label, fuzzy_set))
        if args.complement_lam is not None:
            comp = complement(fuzzy_set, NegationFamily(args.complement_lam))
            labelled.append((f"{label}^C", comp))
            if args.intersection:
                labelled.append((f"{label}&{label}^C", pointwise_min(fuzzy_set, comp)))

    grid = sample_grid([s for _, s in labelled], args.samples)
    series = [sample_series(label, s, grid) for label, s in labelled]
    if suffix == ".csv":
        text = emit_csv(series)
    else:
        text = emit_svg(series, args.width, args.height, config.plot_params.dpi)

    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    print(f"Wrote {len(series)} series ({len(grid)} points) to {args.out}", file=out)


_HANDLERS = {
    ("set", "eval"): _set_eval,
    ("set", "combine"): _set_combine,
    ("laws", "check"): _laws_check,
    ("mvl", "table"): _mvl_table,
    ("expr", "eval"): _expr_eval,
    ("expr", "parse"): _expr_parse,
    ("expr", "table"): _expr_table,
    ("negation", "check"): _negation_check,
    ("plot", None): _plot,
}


def run(
    argv: List[str],
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    config: Optional[Config] = None,
) -> int:
    """Run one command; returns the exit code."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    config = config or get_default_config()
    parser = build_parser(config)

    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        err.write(parser.format_usage())
        print(e, file=err)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    setup_logging(logging.DEBUG if args.verbose else config.log_level)
    handler = _HANDLERS[(args.command, getattr(args, "action", None))]
    logger.info(f"Running {args.command} {getattr(args, 'action', '') or ''}".rstrip())

    try:
        handler(args, config, out)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        err.write(parser.format_usage())
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except (DomainError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=err)
        return EXIT_DOMAIN
    except RecursionError:
        # JSON output of very deep formulas
        logger.error(f"{args.command} failed: input nested too deeply")
        print("error: input nested too deeply", file=err)
        return EXIT_DOMAIN
    return EXIT_OK
