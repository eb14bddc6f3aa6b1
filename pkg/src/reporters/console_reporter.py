"""Human-readable formatting of results."""

from typing import Dict, List, Sequence, Tuple

from src.fuzzy.laws import LawReport, NegationAxiomReport, SelfComplementarity
from src.logic.mvl import MvlValue, TruthTable


def format_number(value: float) -> str:
    """Up to 12 significant digits, no trailing zeros, no negative zero."""
    text = f"{value:.12g}"
    return "0" if text == "-0" else text


def format_law_reports(
    reports: Sequence[LawReport],
    self_comp: SelfComplementarity,
    lam: float,
) -> str:
    """
    Format law reports for the console.

    Args:
        reports: Contradiction and excluded-middle reports
        self_comp: Result of the A = A^C check
        lam: Negation parameter the reports were computed with

    Returns:
        Multi-line summary
    """
    lines = [f"Negation lambda = {format_number(lam)}"]
    for report in reports:
        name = report.law.value.replace("_", " ").title()
        verdict = "holds" if report.holds_classically else "fails"
        lines.append(
            f"{name:<16} defect {format_number(report.defect.value)} "
            f"at x = {format_number(report.witness_x)} ({verdict})"
        )
        if report.error_bound:
            lines.append(f"{'':<16} error bound {format_number(report.error_bound)}")
    verdict = "yes" if self_comp.holds else "no"
    lines.append(
        f"{'A = A^C':<16} {verdict} (max deviation {format_number(self_comp.max_deviation)})"
    )
    return "\n".join(lines)


def format_truth_table(table: TruthTable) -> str:
    """Aligned grid with the operand values along the edges."""
    values = [str(v) for v in table.value_set.values()]
    op = table.connective.value
    if table.connective.arity == 1:
        grid = [["x", op]] + [[values[i], str(row[0])] for i, row in enumerate(table.rows)]
    else:
        grid = [[op, *values]] + [
            [values[i], *(str(v) for v in row)] for i, row in enumerate(table.rows)
        ]
    width = max(len(cell) for row in grid for cell in row)
    return "\n".join(" ".join(cell.rjust(width) for cell in row) for row in grid)


def format_negation_report(report: NegationAxiomReport) -> str:
    if report.below_classical:
        relation = "below 1 - x"
    elif report.above_classical:
        relation = "above 1 - x"
    else:
        relation = "not uniformly above or below 1 - x"
    lines = [
        f"Negation lambda = {format_number(report.lam)} ({report.samples} samples)",
        f"eta(0) = 1, eta(1) = 0:   {'yes' if report.boundary_holds else 'no'}",
        f"max |eta(eta(x)) - x|:    {format_number(report.max_involution_error)}",
        f"strictly decreasing:      {'yes' if report.strictly_decreasing else 'no'}",
        f"position:                 {relation}",
    ]
    return "\n".join(lines)


def format_formula_table(
    names: List[str],
    rows: List[Tuple[Dict[str, MvlValue], MvlValue]],
    text: str,
) -> str:
    grid = [[*names, text]]
    grid += [[*(str(assignment[name]) for name in names), str(value)] for assignment, value in rows]
    widths = [max(len(row[i]) for row in grid) for i in range(len(grid[0]))]
    return "\n".join(
        "  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)) for row in grid
    )
