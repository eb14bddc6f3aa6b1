"""Tests for console formatting, CSV tables and plot output."""

import math

import numpy as np
import pytest

from src.errors import DomainError
from src.fuzzy import FuzzySet, NegationFamily, Universe, complement, contradiction_defect
from src.fuzzy import excluded_middle_defect, self_complementary
from src.fuzzy.catalog import crisp_high_temperature, high_temperature
from src.fuzzy.operations import embed_crisp
from src.logic import Connective, formula_table, parse, truth_table
from src.reporters import (
    PlotSeries,
    emit_csv,
    emit_svg,
    format_formula_table,
    format_law_reports,
    format_number,
    format_truth_table,
    formula_table_csv,
    sample_grid,
    sample_series,
    truth_table_csv,
)


def temperature_series():
    temp = high_temperature()
    comp = complement(temp, NegationFamily(0.0))
    grid = sample_grid([temp, comp], 51)
    return [sample_series("temperature", temp, grid), sample_series("complement", comp, grid)]


def test_format_number():
    assert format_number(0.5) == "0.5"
    assert format_number(26.0) == "26"
    assert format_number(-0.0) == "0"
    assert format_number(1.0 / 3.0) == "0.333333333333"


def test_truth_table_csv_uses_fractions():
    assert truth_table_csv(truth_table(Connective.NOT, 3)) == "x,not\n0,1\n1/2,1/2\n1,0\n"
    assert truth_table_csv(truth_table(Connective.AND, 2)) == "and,0,1\n0,0,0\n1,0,1\n"


def test_truth_table_console_grid():
    assert format_truth_table(truth_table(Connective.NOT, 3)) == (
        "  x not\n"
        "  0   1\n"
        "1/2 1/2\n"
        "  1   0"
    )


def test_formula_table_outputs():
    f = parse("p | !p")
    rows = formula_table(f, 3)
    assert formula_table_csv(["p"], rows, "p | !p") == "p,p | !p\n0,1\n1/2,1/2\n1,1\n"
    text = format_formula_table(["p"], rows, "p | !p")
    assert text.splitlines()[0] == "  p  p | !p"


def test_law_report_text():
    temp = high_temperature()
    neg = NegationFamily(0.0)
    text = format_law_reports(
        [contradiction_defect(temp, neg), excluded_middle_defect(temp, neg)],
        self_complementary(temp, neg),
        0.0,
    )
    assert "Contradiction    defect 0.5 at x = 26 (fails)" in text
    assert "Excluded Middle  defect 0.5 at x = 26 (fails)" in text
    assert "A = A^C          no" in text


def test_emit_csv_rows():
    grid = np.array([22.0, 26.0, 30.0])
    series = [sample_series("temperature", high_temperature(), grid)]
    assert emit_csv(series) == "x,temperature\n22,0\n26,0.5\n30,1\n"


def test_emit_csv_keeps_jump_rows_distinct():
    crisp = embed_crisp(crisp_high_temperature())
    grid = sample_grid([crisp], 11)
    rows = emit_csv([sample_series("crisp", crisp, grid)]).splitlines()[1:]
    xs = [row.split(",")[0] for row in rows]
    assert len(set(xs)) == len(xs)
    assert [float(x) for x in xs] == grid.tolist()
    assert "30,1" in rows
    assert f"{math.nextafter(30.0, 0.0)!r},0" in rows


def test_emit_csv_edge_cases():
    assert emit_csv([]) == "x\n"
    header = emit_csv(temperature_series()).splitlines()[0]
    assert header.split(",") == ["x", "temperature", "complement"]

    a = PlotSeries("a", ((0.0, 0.0), (1.0, 1.0)))
    b = PlotSeries("b", ((0.0, 0.0), (2.0, 1.0)))
    with pytest.raises(DomainError):
        emit_csv([a, b])


def test_plot_series_validation():
    with pytest.raises(DomainError):
        PlotSeries("bad", ((1.0, 0.0), (0.0, 1.0)))
    with pytest.raises(DomainError):
        PlotSeries("bad", ((0.0, 2.0),))


def test_sample_grid_includes_both_sides_of_jumps():
    crisp = embed_crisp(crisp_high_temperature())
    grid = sample_grid([crisp], 11)
    assert 30.0 in grid
    below = grid[grid < 30.0].max()
    assert crisp.curve.value(below) == 0.0
    assert grid[0] == 0.0 and grid[-1] == 50.0
    assert np.all(np.diff(grid) > 0)


def test_sample_grid_errors():
    with pytest.raises(DomainError):
        sample_grid([], 10)
    with pytest.raises(DomainError):
        sample_grid([high_temperature()], 1)
    with pytest.raises(DomainError):
        sample_grid([high_temperature(), FuzzySet.constant(Universe(0.0, 1.0), 0.5)], 10)


def test_series_cross_at_26():
    temperature, comp = temperature_series()
    assert 26.0 in temperature.xs
    i = temperature.xs.index(26.0)
    assert temperature.ys[i] == pytest.approx(0.5)
    assert comp.ys[i] == pytest.approx(0.5)


def test_emit_svg_is_deterministic():
    series = temperature_series()
    first = emit_svg(series, 640, 400)
    second = emit_svg(series, 640, 400)
    assert first == second
    assert first.lstrip().startswith("<?xml")
    assert 'id="series-0"' in first
    assert 'id="series-1"' in first
    with pytest.raises(DomainError):
        emit_svg(series, 0, 400)
