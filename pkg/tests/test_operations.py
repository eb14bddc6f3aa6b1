"""Tests for pointwise min/max, complements, height and floor."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.errors import DomainError
from src.fuzzy import (
    FuzzySet,
    MembershipCurve,
    NegationFamily,
    Universe,
    complement,
    embed_crisp,
    floor,
    height,
    mf_eval,
    pointwise_max,
    pointwise_min,
)
from src.fuzzy.catalog import crisp_high_temperature, high_temperature, maximum_uncertainty
from tests.strategies import UNIVERSE, fuzzy_sets

GRID = np.linspace(UNIVERSE.lo, UNIVERSE.hi, 100_001)


def values(fuzzy_set, xs=GRID):
    return fuzzy_set.curve.evaluate_many(xs)


def test_min_of_temperature_and_complement_peaks_at_26():
    temp = high_temperature()
    overlap = pointwise_min(temp, complement(temp, NegationFamily(0.0)))
    assert mf_eval(overlap, 26.0).value == pytest.approx(0.5, abs=1e-12)

    xs = np.linspace(0.0, 50.0, 100_001)
    oracle = np.minimum(values(temp, xs), 1.0 - values(temp, xs))
    np.testing.assert_allclose(values(overlap, xs), oracle, atol=1e-12)


def test_complement_examples():
    temp = high_temperature()
    assert mf_eval(complement(temp, NegationFamily(0.0)), 26.0).value == pytest.approx(0.5)

    half = maximum_uncertainty()
    third = complement(half, NegationFamily(1.0))
    assert third.curve.is_constant
    assert mf_eval(third, 13.0).value == pytest.approx(1.0 / 3.0, abs=1e-12)


def test_complement_of_crisp_set_is_crisp_complement():
    crisp = crisp_high_temperature()
    comp = complement(embed_crisp(crisp), NegationFamily(0.0))
    assert comp.equivalent(embed_crisp(crisp.complement()))
    assert mf_eval(comp, 29.0).value == 1.0
    assert mf_eval(comp, 30.0).value == 0.0


def test_complement_requires_positive_tolerance():
    with pytest.raises(DomainError):
        complement(high_temperature(), NegationFamily(1.0), tol=0.0)


def test_universes_must_match():
    other = FuzzySet.constant(Universe(0.0, 1.0), 0.5)
    with pytest.raises(DomainError):
        pointwise_min(high_temperature(), other)
    with pytest.raises(DomainError):
        pointwise_max(high_temperature(), other)


def test_operators_on_fuzzy_sets():
    temp = high_temperature()
    half = maximum_uncertainty()
    assert (temp & half).equivalent(pointwise_min(temp, half))
    assert (temp | half).equivalent(pointwise_max(temp, half))


def test_height_and_floor():
    half = maximum_uncertainty()
    assert floor(half)[0].value == 0.5
    zero = FuzzySet.constant(Universe(0.0, 50.0), 0.0)
    value, x = height(zero)
    assert (value.value, x) == (0.0, 0.0)

    temp = high_temperature()
    top, top_x = height(temp)
    assert (top.value, top_x) == (1.0, 30.0)
    bottom, bottom_x = floor(temp)
    assert (bottom.value, bottom_x) == (0.0, 0.0)


def test_height_and_floor_witness_may_be_a_left_limit():
    spike = FuzzySet(UNIVERSE, MembershipCurve.from_list([[0.0, 0.0, 0.0], [5.0, 0.8, 0.1]]))
    top, top_x = height(spike)
    assert (top.value, top_x) == (0.8, 5.0)
    assert mf_eval(spike, 5.0).value == 0.1

    dip = FuzzySet(UNIVERSE, MembershipCurve.from_list([[0.0, 1.0, 1.0], [5.0, 0.2, 0.9]]))
    bottom, bottom_x = floor(dip)
    assert (bottom.value, bottom_x) == (0.2, 5.0)
    assert mf_eval(dip, 5.0).value == 0.9


@settings(max_examples=20, deadline=None)
@given(fuzzy_sets(), fuzzy_sets())
def test_min_and_max_match_grid_oracle(a, b):
    np.testing.assert_allclose(
        values(pointwise_min(a, b)), np.minimum(values(a), values(b)), atol=1e-12
    )
    np.testing.assert_allclose(
        values(pointwise_max(a, b)), np.maximum(values(a), values(b)), atol=1e-12
    )


@settings(max_examples=10, deadline=None)
@given(fuzzy_sets(), fuzzy_sets(), st.integers(0, 2**32 - 1))
def test_min_and_max_match_inputs_at_random_points(a, b, seed):
    """mf_eval of the exact min/max agrees with min/max of the inputs to 1e-12."""
    low, high = pointwise_min(a, b), pointwise_max(a, b)
    for x in np.random.default_rng(seed).uniform(UNIVERSE.lo, UNIVERSE.hi, 10_000):
        va, vb = mf_eval(a, x).value, mf_eval(b, x).value
        assert abs(mf_eval(low, x).value - min(va, vb)) <= 1e-12
        assert abs(mf_eval(high, x).value - max(va, vb)) <= 1e-12


@settings(max_examples=20, deadline=None)
@given(fuzzy_sets(max_knots=4), st.floats(min_value=-0.5, max_value=2.0))
def test_complement_matches_grid_oracle(a, lam):
    neg = NegationFamily(lam)
    comp = complement(a, neg, tol=1e-7)
    oracle = np.array([neg(v) for v in values(a)])
    np.testing.assert_allclose(values(comp), oracle, atol=1e-6)


@settings(max_examples=50, deadline=None)
@given(fuzzy_sets(), fuzzy_sets())
def test_min_and_max_commute(a, b):
    assert pointwise_min(a, b).equivalent(pointwise_min(b, a), 1e-12)
    assert pointwise_max(a, b).equivalent(pointwise_max(b, a), 1e-12)


@settings(max_examples=50, deadline=None)
@given(fuzzy_sets())
def test_min_is_idempotent_and_zero_is_identity_for_max(a):
    assert pointwise_min(a, a).equivalent(a, 1e-12)
    zero = FuzzySet.constant(UNIVERSE, 0.0)
    assert pointwise_max(a, zero).equivalent(a, 1e-12)


@settings(max_examples=50, deadline=None)
@given(fuzzy_sets(), fuzzy_sets(), fuzzy_sets())
def test_min_and_max_associate(a, b, c):
    assert pointwise_min(pointwise_min(a, b), c).equivalent(
        pointwise_min(a, pointwise_min(b, c)), 1e-10
    )
    assert pointwise_max(pointwise_max(a, b), c).equivalent(
        pointwise_max(a, pointwise_max(b, c)), 1e-10
    )


@settings(max_examples=50, deadline=None)
@given(fuzzy_sets())
def test_max_is_idempotent(a):
    assert pointwise_max(a, a).equivalent(a, 1e-12)


@settings(max_examples=50, deadline=None)
@given(fuzzy_sets(), fuzzy_sets())
def test_de_morgan_under_classical_negation(a, b):
    neg = NegationFamily(0.0)
    lhs = complement(pointwise_min(a, b), neg)
    rhs = pointwise_max(complement(a, neg), complement(b, neg))
    assert lhs.equivalent(rhs, 1e-9)


@settings(max_examples=50, deadline=None)
@given(fuzzy_sets())
def test_classical_complement_is_involutive(a):
    neg = NegationFamily(0.0)
    assert complement(complement(a, neg), neg).equivalent(a, 1e-12)
