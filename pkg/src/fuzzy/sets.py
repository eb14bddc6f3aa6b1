"""Universes, fuzzy sets and crisp sets."""

from __future__ import annotations
from dataclasses import dataclass
from numbers import Integral, Real
from typing import Callable, FrozenSet, Iterable, Tuple, Union
import math

import numpy as np

from src.errors import DomainError
from src.fuzzy.curve import Breakpoint, MembershipCurve


@dataclass(frozen=True)
class Universe:
    """The reference set X: a closed real interval [lo, hi]."""
    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError(f"Universe bounds must be finite: [{self.lo}, {self.hi}]")
        if not self.lo < self.hi:
            raise DomainError(f"Universe needs lo < hi, got [{self.lo}, {self.hi}]")
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def check(self, x: float) -> float:
        """Return x as a float, raising DomainError if it lies outside."""
        if isinstance(x, bool) or not isinstance(x, Real):
            raise DomainError(f"Expected a real number, got {x!r}")
        if not self.contains(x):
            raise DomainError(f"x={x} is outside the universe [{self.lo}, {self.hi}]")
        return float(x)

    def linspace(self, samples: int) -> np.ndarray:
        return np.linspace(self.lo, self.hi, samples)

    def to_list(self) -> list:
        return [self.lo, self.hi]


@dataclass(frozen=True)
class FuzzySet:
    """A fuzzy subset A: X -> [0, 1] of a real-interval universe."""
    universe: Universe
    curve: MembershipCurve

    def __post_init__(self):
        lo, hi = self.universe.lo, self.universe.hi
        outside = [x for x in self.curve.xs if not lo <= x <= hi]
        if outside:
            raise DomainError(
                f"Breakpoints {outside} lie outside the universe [{lo}, {hi}]"
            )

    @classmethod
    def constant(cls, universe: Universe, value: float) -> FuzzySet:
        return cls(universe, MembershipCurve.constant(value, at=universe.lo))

    @classmethod
    def ramp(cls, universe: Universe, start: float, end: float, rising: bool = True) -> FuzzySet:
        """0 up to ``start``, linear to 1 at ``end`` (reversed if not rising)."""
        low, high = (0.0, 1.0) if rising else (1.0, 0.0)
        return cls(universe, MembershipCurve.from_points([(start, low), (end, high)]))

    @classmethod
    def trapezoid(cls, universe: Universe, a: float, b: float, c: float, d: float) -> FuzzySet:
        """Rises on [a, b], equals 1 on [b, c], falls on [c, d] (a < b <= c < d)."""
        if not a < b <= c < d:
            raise DomainError(f"Trapezoid needs a < b <= c < d, got {a}, {b}, {c}, {d}")
        points = [(a, 0.0), (b, 1.0), (c, 1.0), (d, 0.0)]
        if b == c:
            del points[2]
        return cls(universe, MembershipCurve.from_points(points))

    def __and__(self, other: FuzzySet) -> FuzzySet:
        from src.fuzzy.operations import pointwise_min
        return pointwise_min(self, other)

    def __or__(self, other: FuzzySet) -> FuzzySet:
        from src.fuzzy.operations import pointwise_max
        return pointwise_max(self, other)

    def equivalent(self, other: FuzzySet, tol: float = 1e-12) -> bool:
        return self.universe == other.universe and self.curve.equivalent(other.curve, tol)


# -- crisp sets -------------------------------------------------------------


@dataclass(frozen=True)
class DiscreteSet:
    """A finite crisp set of integers."""
    elements: FrozenSet[int]

    def __post_init__(self):
        elements = frozenset(self.elements)
        bad = [e for e in elements if isinstance(e, bool) or not isinstance(e, Integral)]
        if bad:
            raise DomainError(f"Discrete set elements must be integers: {bad}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def indicate(cls, *elements: int) -> DiscreteSet:
        """Describe the set by listing its elements, e.g. A = {6}."""
        return cls(frozenset(elements))

    @classmethod
    def describe(cls, reference: Iterable[int], predicate: Callable[[int], bool]) -> DiscreteSet:
        """Describe the set by a property, e.g. {x in N | 5 < x < 7}."""
        return cls(frozenset(x for x in reference if predicate(x)))

    def contains(self, x: int) -> bool:
        return x in self.elements

    def issubset(self, other: DiscreteSet) -> bool:
        return self.elements <= other.elements

    def complement(self, reference: DiscreteSet) -> DiscreteSet:
        if not self.issubset(reference):
            raise DomainError("Complement needs a reference set containing the set")
        return DiscreteSet(reference.elements - self.elements)

    def intersection(self, other: DiscreteSet) -> DiscreteSet:
        return DiscreteSet(self.elements & other.elements)

    def union(self, other: DiscreteSet) -> DiscreteSet:
        return DiscreteSet(self.elements | other.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))


@dataclass(frozen=True)
class Interval:
    """A real interval with independently open or closed endpoints."""
    lo: float
    hi: float
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError(f"Interval bounds must be finite: ({self.lo}, {self.hi})")
        if self.lo > self.hi:
            raise DomainError(f"Interval needs lo <= hi, got ({self.lo}, {self.hi})")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise DomainError(f"Degenerate interval at {self.lo} must be closed")
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))

    @classmethod
    def closed(cls, lo: float, hi: float) -> Interval:
        return cls(lo, hi, True, True)

    @classmethod
    def closed_open(cls, lo: float, hi: float) -> Interval:
        return cls(lo, hi, True, False)

    def contains(self, x: float) -> bool:
        above = x >= self.lo if self.lo_closed else x > self.lo
        below = x <= self.hi if self.hi_closed else x < self.hi
        return above and below

    def precedes(self, other: Interval) -> bool:
        """Whether this interval ends strictly before ``other`` begins."""
        if self.hi < other.lo:
            return True
        return self.hi == other.lo and not (self.hi_closed and other.lo_closed)

    def __str__(self) -> str:
        return (
            f"{'[' if self.lo_closed else '('}{self.lo:g}, "
            f"{self.hi:g}{']' if self.hi_closed else ')'}"
        )


@dataclass(frozen=True)
class IntervalSet:
    """A finite union of disjoint intervals inside a universe."""
    universe: Universe
    intervals: Tuple[Interval, ...] = ()

    def __post_init__(self):
        intervals = tuple(sorted(self.intervals, key=lambda iv: (iv.lo, not iv.lo_closed)))
        for iv in intervals:
            if iv.lo < self.universe.lo or iv.hi > self.universe.hi:
                raise DomainError(f"Interval {iv} is not inside the universe")
        for a, b in zip(intervals, intervals[1:]):
            if not a.precedes(b):
                raise DomainError(f"Intervals {a} and {b} overlap")
        object.__setattr__(self, "intervals", intervals)

    @classmethod
    def empty(cls, universe: Universe) -> IntervalSet:
        return cls(universe, ())

    @classmethod
    def whole(cls, universe: Universe) -> IntervalSet:
        return cls(universe, (Interval.closed(universe.lo, universe.hi),))

    def contains(self, x: float) -> bool:
        return any(iv.contains(x) for iv in self.intervals)

    def complement(self) -> IntervalSet:
        """The crisp complement X minus A."""
        gaps = []
        cursor = self.universe.lo
        cursor_closed = True
        for iv in self.intervals:
            gap_hi_closed = not iv.lo_closed
            if cursor < iv.lo or (cursor == iv.lo and cursor_closed and gap_hi_closed):
                gaps.append(Interval(cursor, iv.lo, cursor_closed, gap_hi_closed))
            cursor = iv.hi
            cursor_closed = not iv.hi_closed
        if cursor < self.universe.hi or (cursor == self.universe.hi and cursor_closed):
            gaps.append(Interval(cursor, self.universe.hi, cursor_closed, True))
        return IntervalSet(self.universe, tuple(gaps))

    def endpoints(self) -> Tuple[float, ...]:
        return tuple(sorted({e for iv in self.intervals for e in (iv.lo, iv.hi)}))

    def __str__(self) -> str:
        if not self.intervals:
            return "{}"
        return " U ".join(str(iv) for iv in self.intervals)


CrispSet = Union[DiscreteSet, IntervalSet]


def interval_set_curve(crisp: IntervalSet) -> MembershipCurve:
    """
    The characteristic function of an interval set as a curve.

    Each endpoint becomes a knot whose sides record membership just left
    and just right of it; at universe.hi the value is membership of hi
    itself, at universe.lo only the inside side matters.
    """
    universe = crisp.universe
    knots = []
    for x in crisp.endpoints():
        left = 1.0 if any(iv.lo < x <= iv.hi for iv in crisp.intervals) else 0.0
        right = 1.0 if any(iv.lo <= x < iv.hi for iv in crisp.intervals) else 0.0
        if x == universe.hi:
            right = 1.0 if crisp.contains(x) else 0.0
        if x == universe.lo:
            left = right
        knots.append(Breakpoint(x, left, right))
    if not knots:
        return MembershipCurve.constant(0.0, at=universe.lo)
    return MembershipCurve(tuple(knots)).normalized()
