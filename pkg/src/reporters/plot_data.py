"""Plot series sampled from fuzzy sets, written as CSV or SVG."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence, Tuple
import csv
import io
import logging
import math

import matplotlib
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure
import numpy as np

from src.config import PlotParams
from src.errors import DomainError
from src.fuzzy.degree import clamp_degree
from src.fuzzy.sets import FuzzySet
from src.reporters.console_reporter import format_number

logger = logging.getLogger("fuzzylogic.reporters")

_SVG_RC = {"svg.hashsalt": "fuzzylogic", "svg.fonttype": "none"}


@dataclass(frozen=True)
class PlotSeries:
    """A labelled polyline of (x, membership) points."""
    label: str
    points: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        points = tuple((float(x), clamp_degree(y)) for x, y in self.points)
        for (a, _), (b, _) in zip(points, points[1:]):
            if not a < b:
                raise DomainError(f"Series {self.label!r}: x must increase ({a} >= {b})")
        object.__setattr__(self, "points", points)

    @property
    def xs(self) -> Tuple[float, ...]:
        return tuple(x for x, _ in self.points)

    @property
    def ys(self) -> Tuple[float, ...]:
        return tuple(y for _, y in self.points)


def sample_grid(sets: Sequence[FuzzySet], samples: int = PlotParams.samples) -> np.ndarray:
    """
    Shared x-grid for several sets on one universe: uniform samples plus
    every knot, plus the float just below each jump so both sides show.
    """
    if not sets:
        raise DomainError("Nothing to sample")
    universe = sets[0].universe
    if any(s.universe != universe for s in sets[1:]):
        raise DomainError("All plotted sets must share one universe")
    if samples < 2:
        raise DomainError(f"Need at least 2 samples, got {samples}")

    xs = set(universe.linspace(samples).tolist())
    for s in sets:
        for bp in s.curve.breakpoints:
            xs.add(bp.x)
            if bp.is_jump and bp.x > universe.lo:
                xs.add(math.nextafter(bp.x, -math.inf))
    return np.array(sorted(x for x in xs if universe.lo <= x <= universe.hi))


def sample_series(label: str, fuzzy_set: FuzzySet, grid: np.ndarray) -> PlotSeries:
    ys = fuzzy_set.curve.evaluate_many(grid)
    return PlotSeries(label, tuple(zip(grid.tolist(), ys.tolist())))


def _x_labels(grid: Sequence[float]) -> list[str]:
    """Short x labels, widened to the shortest exact repr where two would collide."""
    labels = [format_number(x) for x in grid]
    for i in range(len(labels) - 1):
        if labels[i] != labels[i + 1]:
            continue
        for j in (i, i + 1):
            if float(labels[j]) != grid[j]:
                labels[j] = repr(grid[j])
    return labels


def emit_csv(series: Sequence[PlotSeries]) -> str:
    """
    Header ``x,label1,...`` and one row per grid point, LF line endings.

    x is printed like the values unless that would repeat the previous
    row's x (the sample just below a jump); such rows get the exact float.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["x", *(s.label for s in series)])
    if not series:
        return buffer.getvalue()

    grid = series[0].xs
    for s in series[1:]:
        if s.xs != grid:
            raise DomainError(f"Series {s.label!r} is sampled on a different grid")
    columns = [s.ys for s in series]
    for i, label in enumerate(_x_labels(grid)):
        writer.writerow([label, *(format_number(col[i]) for col in columns)])
    return buffer.getvalue()


def emit_svg(
    series: Sequence[PlotSeries],
    width: int = PlotParams.width,
    height: int = PlotParams.height,
    dpi: int = PlotParams.dpi,
) -> str:
    """
    Standalone SVG with one line per series (element id ``series-<i>``),
    x ticks at the grid bounds, y ticks at 0, 1/2 and 1, and a legend.
    Identical input gives identical bytes.
    """
    if width <= 0 or height <= 0:
        raise DomainError(f"Canvas size must be positive, got {width}x{height}")

    with matplotlib.rc_context(_SVG_RC):
        fig = Figure(figsize=(width / dpi, height / dpi), dpi=dpi)
        FigureCanvasSVG(fig)
        ax = fig.add_subplot()
        for i, s in enumerate(series):
            (line,) = ax.plot(s.xs, s.ys, label=s.label)
            line.set_gid(f"series-{i}")
        if series:
            lo = min(s.xs[0] for s in series)
            hi = max(s.xs[-1] for s in series)
            ax.set_xlim(lo, hi)
            ax.set_xticks([lo, hi])
            ax.legend(loc="best")
        ax.set_ylim(-0.05, 1.05)
        ax.set_yticks([0.0, 0.5, 1.0])
        ax.set_xlabel("x")
        ax.set_ylabel("membership")

        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    logger.debug(f"Rendered {len(series)} series as SVG")
    return buffer.getvalue()
