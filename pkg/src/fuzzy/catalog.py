"""Ready-made sets: high temperature, high income, maximum uncertainty."""

from src.fuzzy.operations import embed_crisp
from src.fuzzy.sets import FuzzySet, Interval, IntervalSet, Universe

TEMPERATURE_UNIVERSE = Universe(0.0, 50.0)
INCOME_UNIVERSE = Universe(0.0, 5000.0)


def high_temperature() -> FuzzySet:
    """0 up to 22 degrees, (x - 22) / 8 on [22, 30], 1 from 30 on."""
    return FuzzySet.ramp(TEMPERATURE_UNIVERSE, 22.0, 30.0)


def crisp_high_temperature() -> IntervalSet:
    """The classical set of high temperatures, x >= 30."""
    return IntervalSet(TEMPERATURE_UNIVERSE, (Interval.closed(30.0, 50.0),))


def crisp_high_income() -> IntervalSet:
    """A monthly income counts as high from 2000 on, so 1999 is not high."""
    return IntervalSet(INCOME_UNIVERSE, (Interval.closed(2000.0, 5000.0),))


def maximum_uncertainty(universe: Universe = TEMPERATURE_UNIVERSE) -> FuzzySet:
    """A(x) = 1/2 everywhere: the set that equals its own classical complement."""
    return FuzzySet.constant(universe, 0.5)


def catalog() -> dict:
    """Every bundled set by name, crisp ones embedded as characteristic curves."""
    return {
        "temperature": high_temperature(),
        "temperature_crisp": embed_crisp(crisp_high_temperature()),
        "half": maximum_uncertainty(),
        "high_income_crisp": embed_crisp(crisp_high_income()),
    }
