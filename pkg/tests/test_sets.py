"""Tests for universes, fuzzy sets and crisp sets."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import DomainError, UnsupportedVariantError
from src.fuzzy import (
    DiscreteSet,
    FuzzySet,
    Interval,
    IntervalSet,
    MembershipCurve,
    Universe,
    characteristic,
    embed_crisp,
    mf_eval,
)
from src.fuzzy.catalog import (
    TEMPERATURE_UNIVERSE,
    crisp_high_income,
    crisp_high_temperature,
    high_temperature,
)
from tests.strategies import interval_sets


def test_universe_validation():
    with pytest.raises(DomainError):
        Universe(5.0, 5.0)
    with pytest.raises(DomainError):
        Universe(0.0, float("inf"))
    universe = Universe(0, 50)
    assert universe.check(25) == 25.0
    with pytest.raises(DomainError):
        universe.check(51)
    with pytest.raises(DomainError):
        universe.check("26")


def test_fuzzy_set_rejects_knots_outside_universe():
    with pytest.raises(DomainError):
        FuzzySet(Universe(0.0, 10.0), MembershipCurve.from_points([(5.0, 0.0), (11.0, 1.0)]))


@pytest.mark.parametrize("x", [0.0, 10.0, 22.0])
def test_temperature_is_zero_up_to_22(x):
    assert mf_eval(high_temperature(), x).value == 0.0


@pytest.mark.parametrize("x", [30.0, 40.0, 50.0])
def test_temperature_is_one_from_30(x):
    assert mf_eval(high_temperature(), x).value == 1.0


def test_temperature_midpoint():
    assert mf_eval(high_temperature(), 26.0).value == pytest.approx(0.5, abs=1e-12)


def test_temperature_matches_formula_on_ramp():
    fuzzy_set = high_temperature()
    for i in range(81):
        x = 22.0 + i / 10
        assert mf_eval(fuzzy_set, x).value == pytest.approx((x - 22.0) / 8.0, abs=1e-12)


def test_mf_eval_outside_universe():
    with pytest.raises(DomainError):
        mf_eval(high_temperature(), -1.0)


def test_trapezoid_and_constant():
    universe = Universe(0.0, 10.0)
    trap = FuzzySet.trapezoid(universe, 1.0, 3.0, 5.0, 9.0)
    assert mf_eval(trap, 2.0).value == 0.5
    assert mf_eval(trap, 4.0).value == 1.0
    assert mf_eval(trap, 7.0).value == 0.5
    triangle = FuzzySet.trapezoid(universe, 1.0, 3.0, 3.0, 5.0)
    assert mf_eval(triangle, 3.0).value == 1.0
    with pytest.raises(DomainError):
        FuzzySet.trapezoid(universe, 3.0, 1.0, 5.0, 9.0)
    assert mf_eval(FuzzySet.constant(universe, 0.5), 7.0).value == 0.5


def test_falling_ramp():
    cold = FuzzySet.ramp(TEMPERATURE_UNIVERSE, 10.0, 20.0, rising=False)
    assert mf_eval(cold, 0.0).value == 1.0
    assert mf_eval(cold, 15.0).value == 0.5
    assert mf_eval(cold, 50.0).value == 0.0


def test_discrete_set_by_indication_and_description():
    six = DiscreteSet.indicate(6)
    described = DiscreteSet.describe(range(20), lambda x: 5 < x < 7)
    assert six == described
    assert characteristic(six, 6).value == 1.0
    assert characteristic(six, 5).value == 0.0


def test_discrete_set_algebra():
    reference = DiscreteSet.indicate(1, 2, 3, 4)
    evens = DiscreteSet.indicate(2, 4)
    assert list(evens.complement(reference)) == [1, 3]
    assert evens.intersection(DiscreteSet.indicate(4, 5)) == DiscreteSet.indicate(4)
    assert len(evens.union(DiscreteSet.indicate(1))) == 3
    with pytest.raises(DomainError):
        DiscreteSet.indicate(9).complement(reference)


def test_characteristic_checks_element_type():
    with pytest.raises(DomainError):
        characteristic(DiscreteSet.indicate(6), 6.5)
    with pytest.raises(DomainError):
        characteristic(DiscreteSet.indicate(1), True)
    with pytest.raises(DomainError):
        characteristic(crisp_high_temperature(), 60.0)


def test_crisp_high_income_boundary():
    income = crisp_high_income()
    assert characteristic(income, 1999).value == 0.0
    assert characteristic(income, 2000).value == 1.0
    assert characteristic(income, 2000.0).value == 1.0


def test_interval_endpoints():
    half_open = Interval.closed_open(0.0, 1.0)
    assert half_open.contains(0.0)
    assert not half_open.contains(1.0)
    assert str(half_open) == "[0, 1)"
    with pytest.raises(DomainError):
        Interval(2.0, 2.0, True, False)


def test_interval_set_rejects_overlap_and_escape():
    universe = Universe(0.0, 10.0)
    with pytest.raises(DomainError):
        IntervalSet(universe, (Interval.closed(0.0, 5.0), Interval.closed(5.0, 8.0)))
    with pytest.raises(DomainError):
        IntervalSet(universe, (Interval.closed(5.0, 12.0),))
    touching = IntervalSet(universe, (Interval.closed_open(0.0, 5.0), Interval.closed(5.0, 8.0)))
    assert touching.contains(5.0)


def test_interval_set_complement():
    universe = Universe(0.0, 10.0)
    crisp = IntervalSet(universe, (Interval.closed(2.0, 4.0), Interval.closed_open(6.0, 10.0)))
    comp = crisp.complement()
    assert str(comp) == "[0, 2) U (4, 6) U [10, 10]"
    for x in [0.0, 2.0, 3.0, 4.0, 5.0, 6.0, 9.9, 10.0]:
        assert comp.contains(x) != crisp.contains(x)
    assert IntervalSet.empty(universe).complement() == IntervalSet.whole(universe)


def test_embed_crisp_matches_characteristic():
    crisp = crisp_high_temperature()
    embedded = embed_crisp(crisp)
    assert embedded.curve.to_list() == [[30.0, 0.0, 1.0]]
    for x in [0.0, 10.0, 29.99, 30.0, 40.0, 50.0]:
        assert mf_eval(embedded, x) == characteristic(crisp, x)


@settings(max_examples=100, deadline=None)
@given(interval_sets(), st.lists(st.floats(0.0, 50.0), min_size=1, max_size=20))
def test_embed_crisp_agrees_with_characteristic_off_endpoints(crisp, xs):
    """Open, half-open and closed ends all embed to the indicator away from the ends."""
    embedded = embed_crisp(crisp)
    ends = set(crisp.endpoints())
    for x in xs:
        if x in ends:
            continue
        assert mf_eval(embedded, x) == characteristic(crisp, x)
    for lo, hi in zip(sorted(ends), sorted(ends)[1:]):
        mid = (lo + hi) / 2
        assert mf_eval(embedded, mid) == characteristic(crisp, mid)


def test_embed_crisp_empty_and_whole():
    universe = Universe(0.0, 10.0)
    assert embed_crisp(IntervalSet.empty(universe)).curve.is_constant
    whole = embed_crisp(IntervalSet.whole(universe))
    assert mf_eval(whole, 0.0).value == 1.0
    assert mf_eval(whole, 10.0).value == 1.0


def test_embed_crisp_rejects_discrete_sets():
    with pytest.raises(UnsupportedVariantError):
        embed_crisp(DiscreteSet.indicate(6))
