"""Evaluation and pointwise algebra over fuzzy and crisp sets."""

from __future__ import annotations
from numbers import Integral, Real
from typing import Tuple
import logging

from src.config import TOLERANCES
from src.errors import DomainError, UnsupportedVariantError
from src.fuzzy.connectives import NegationFamily
from src.fuzzy.degree import TruthDegree
from src.fuzzy.sets import CrispSet, DiscreteSet, FuzzySet, IntervalSet, interval_set_curve

logger = logging.getLogger("fuzzylogic.fuzzy")


def mf_eval(fuzzy_set: FuzzySet, x: float) -> TruthDegree:
    """Membership value A(x); right value at jumps."""
    x = fuzzy_set.universe.check(x)
    return TruthDegree(fuzzy_set.curve.value(x))


def characteristic(crisp: CrispSet, x: float) -> TruthDegree:
    """The indicator chi_A(x): exactly 1 or exactly 0."""
    if isinstance(crisp, DiscreteSet):
        if isinstance(x, bool) or not isinstance(x, Integral):
            raise DomainError(f"A discrete set is indexed by integers, got {x!r}")
        return TruthDegree(1.0 if crisp.contains(x) else 0.0)
    if isinstance(crisp, IntervalSet):
        if isinstance(x, bool) or not isinstance(x, Real):
            raise DomainError(f"An interval set is indexed by reals, got {x!r}")
        x = crisp.universe.check(x)
        return TruthDegree(1.0 if crisp.contains(x) else 0.0)
    raise UnsupportedVariantError(f"Unknown crisp set variant: {type(crisp).__name__}")


def embed_crisp(crisp: CrispSet) -> FuzzySet:
    """Equate an interval set with its characteristic function."""
    if not isinstance(crisp, IntervalSet):
        raise UnsupportedVariantError(
            f"Only interval sets can be embedded, got {type(crisp).__name__}"
        )
    return FuzzySet(crisp.universe, interval_set_curve(crisp))


def _check_same_universe(a: FuzzySet, b: FuzzySet) -> None:
    if a.universe != b.universe:
        raise DomainError(
            f"Universes differ: {a.universe.to_list()} vs {b.universe.to_list()}"
        )


def pointwise_min(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    """Intersection A and B under the min t-norm."""
    _check_same_universe(a, b)
    return FuzzySet(a.universe, a.curve.combine(b.curve, min))


def pointwise_max(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    """Union A or B under the max t-conorm."""
    _check_same_universe(a, b)
    return FuzzySet(a.universe, a.curve.combine(b.curve, max))


def complement(
    a: FuzzySet,
    neg: NegationFamily,
    tol: float = TOLERANCES.complement,
) -> FuzzySet:
    """
    The complement x -> eta(A(x)).

    Exact for the classical negation; for other members the image of each
    linear piece is refined until it is within tol at piece midpoints.
    """
    if not tol > 0:
        raise DomainError(f"Complement tolerance must be positive, got {tol!r}")
    if neg.is_classical:
        curve = a.curve.map_values(neg)
    else:
        curve = a.curve.map_values(neg, tol=tol, max_depth=TOLERANCES.max_subdivision_depth)
    logger.debug(f"Complement (lambda={neg.lam}) has {len(curve.breakpoints)} knots")
    return FuzzySet(a.universe, curve)


def height(a: FuzzySet) -> Tuple[TruthDegree, float]:
    """
    Supremum of A and the smallest x where it is reached or approached.

    When the supremum is the left limit at a jump, x is that jump point and
    A(x) itself is lower: the bound is approached from the left, not attained.
    """
    value, x = a.curve.extremum(a.universe.lo, a.universe.hi, largest=True)
    return TruthDegree(value), x


def floor(a: FuzzySet) -> Tuple[TruthDegree, float]:
    """Infimum of A; as with height, x may be a jump point where the bound
    is only a left limit."""
    value, x = a.curve.extremum(a.universe.lo, a.universe.hi, largest=False)
    return TruthDegree(value), x
