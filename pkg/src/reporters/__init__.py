"""Reporting utilities: console text, CSV tables, plot data."""

from .console_reporter import (
    format_number,
    format_law_reports,
    format_truth_table,
    format_negation_report,
    format_formula_table,
)
from .table_export import truth_table_csv, formula_table_csv
from .plot_data import PlotSeries, sample_grid, sample_series, emit_csv, emit_svg

__all__ = [
    "format_number",
    "format_law_reports",
    "format_truth_table",
    "format_negation_report",
    "format_formula_table",
    "truth_table_csv",
    "formula_table_csv",
    "PlotSeries",
    "sample_grid",
    "sample_series",
    "emit_csv",
    "emit_svg",
]
