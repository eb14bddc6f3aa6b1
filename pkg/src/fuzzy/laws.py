"""Quantified checks of the classical laws and the negation axioms."""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import Dict, NamedTuple, Tuple
import logging

import numpy as np

from src.config import TOLERANCES
from src.errors import DomainError
from src.fuzzy.connectives import NegationFamily
from src.fuzzy.degree import TruthDegree
from src.fuzzy.operations import complement, floor, height, pointwise_max, pointwise_min
from src.fuzzy.sets import DiscreteSet, FuzzySet

logger = logging.getLogger("fuzzylogic.fuzzy")


class Law(Enum):
    CONTRADICTION = "contradiction"
    EXCLUDED_MIDDLE = "excluded_middle"


@dataclass(frozen=True)
class LawReport:
    """
    How far a set is from satisfying one classical law.

    ``defect`` is the height of A and A^C (contradiction) or one minus the
    floor of A or A^C (excluded middle); 0 means the law holds.
    """
    law: Law
    defect: TruthDegree
    witness_x: float
    error_bound: float = 0.0

    @property
    def holds_classically(self) -> bool:
        return self.defect.value <= TOLERANCES.degree

    def to_dict(self) -> Dict:
        return {
            "law": self.law.value,
            "defect": self.defect.value,
            "witness_x": self.witness_x,
            "holds_classically": self.holds_classically,
            "error_bound": self.error_bound,
        }


class SelfComplementarity(NamedTuple):
    holds: bool
    max_deviation: float


def _error_bound(neg: NegationFamily, tol: float) -> float:
    return 0.0 if neg.is_classical else tol


def contradiction_defect(
    a: FuzzySet,
    neg: NegationFamily,
    tol: float = TOLERANCES.complement,
) -> LawReport:
    """Height of A and A^C; zero exactly when A and A^C are disjoint."""
    overlap = pointwise_min(a, complement(a, neg, tol))
    value, x = height(overlap)
    return LawReport(Law.CONTRADICTION, value, x, _error_bound(neg, tol))


def excluded_middle_defect(
    a: FuzzySet,
    neg: NegationFamily,
    tol: float = TOLERANCES.complement,
) -> LawReport:
    """One minus the floor of A or A^C; zero exactly when A or A^C covers X."""
    cover = pointwise_max(a, complement(a, neg, tol))
    value, x = floor(cover)
    return LawReport(Law.EXCLUDED_MIDDLE, TruthDegree(1.0 - value.value), x, _error_bound(neg, tol))


def self_complementary(
    a: FuzzySet,
    neg: NegationFamily,
    tol: float = TOLERANCES.degree,
) -> SelfComplementarity:
    """
    Whether A = A^C, measured as sup |A(x) - eta(A(x))|.

    A(x) - eta(A(x)) is monotone in A(x), so on each linear piece its
    magnitude peaks at a piece end; the grid is the knots (both sides),
    the universe bounds and the piece midpoints.
    """
    if not tol > 0:
        raise DomainError(f"Tolerance must be positive, got {tol!r}")
    lo, hi = a.universe.lo, a.universe.hi
    curve = a.curve
    grid = sorted({lo, hi, *curve.xs})

    values = []
    for x in grid:
        values.append(curve.value(x))
        if x > lo:
            values.append(curve.left_limit(x))
    for left, right in zip(grid, grid[1:]):
        values.append(curve.value((left + right) / 2))

    deviation = max(abs(v - neg(v)) for v in values)
    return SelfComplementarity(deviation <= tol, deviation)


def check_crisp_laws(a: DiscreteSet, reference: DiscreteSet) -> Tuple[LawReport, LawReport]:
    """Both classical laws for a finite crisp set inside a finite reference set."""
    if not reference.elements:
        raise DomainError("The reference set must not be empty")
    comp = a.complement(reference)
    overlap = a.intersection(comp)
    cover = a.union(comp)
    missing = reference.elements - cover.elements

    contradiction = LawReport(
        Law.CONTRADICTION,
        TruthDegree(1.0 if overlap.elements else 0.0),
        float(min(overlap.elements or reference.elements)),
    )
    excluded = LawReport(
        Law.EXCLUDED_MIDDLE,
        TruthDegree(1.0 if missing else 0.0),
        float(min(missing or reference.elements)),
    )
    return contradiction, excluded


@dataclass(frozen=True)
class NegationAxiomReport:
    """Sampled evidence that a negation satisfies the negation axioms."""
    lam: float
    samples: int
    boundary_holds: bool
    max_involution_error: float
    strictly_decreasing: bool
    below_classical: bool
    above_classical: bool

    def holds(self, tol: float = 1e-9) -> bool:
        return self.boundary_holds and self.strictly_decreasing and self.max_involution_error <= tol

    def to_dict(self) -> Dict:
        return {
            "lambda": self.lam,
            "samples": self.samples,
            "boundary_holds": self.boundary_holds,
            "max_involution_error": self.max_involution_error,
            "strictly_decreasing": self.strictly_decreasing,
            "below_classical": self.below_classical,
            "above_classical": self.above_classical,
        }


def check_negation_axioms(
    neg: NegationFamily,
    samples: int = 10_000,
    seed: int = 0,
) -> NegationAxiomReport:
    """
    Check eta(0) = 1, eta(1) = 0, involution, strict decrease and the
    position of eta relative to 1 - x on seeded samples from (0, 1).
    """
    if samples < 2:
        raise DomainError(f"Need at least 2 samples, got {samples}")
    rng = np.random.default_rng(seed)
    xs = np.sort(rng.uniform(0.0, 1.0, samples))
    xs = xs[(xs > 0.0) & (xs < 1.0)]

    images = np.array([neg(float(x)) for x in xs])
    back = np.array([neg(float(y)) for y in images])

    # Only pairs far enough apart for the difference to survive rounding.
    gaps = np.diff(xs) > 1e-9
    decreasing = bool(np.all(np.diff(images)[gaps] < 0))

    classical = 1.0 - xs
    report = NegationAxiomReport(
        lam=neg.lam,
        samples=len(xs),
        boundary_holds=neg(0.0) == 1.0 and neg(1.0) == 0.0,
        max_involution_error=float(np.max(np.abs(back - xs))),
        strictly_decreasing=decreasing,
        below_classical=bool(np.all(images < classical)),
        above_classical=bool(np.all(images > classical)),
    )
    logger.debug(f"Negation axioms for lambda={neg.lam}: {report}")
    return report
