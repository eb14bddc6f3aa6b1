"""CSV export of truth tables and formula tables."""

from typing import Dict, List, Tuple
import csv
import io

from src.logic.mvl import MvlValue, TruthTable


def _write_rows(rows: List[List[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def truth_table_csv(table: TruthTable) -> str:
    """
    Truth table as CSV with exact fractions ("1/2", never 0.5).

    Unary tables have the header ``x,<op>``; binary tables put the operator
    name in the corner and the second operand's values along the header.
    """
    values = [str(v) for v in table.value_set.values()]
    op = table.connective.value
    if table.connective.arity == 1:
        rows = [["x", op]] + [[values[i], str(row[0])] for i, row in enumerate(table.rows)]
    else:
        rows = [[op, *values]] + [
            [values[i], *(str(v) for v in row)] for i, row in enumerate(table.rows)
        ]
    return _write_rows(rows)


def formula_table_csv(
    names: List[str],
    rows: List[Tuple[Dict[str, MvlValue], MvlValue]],
    text: str,
) -> str:
    out = [[*names, text]]
    out += [[*(str(assignment[name]) for name in names), str(value)] for assignment, value in rows]
    return _write_rows(out)
