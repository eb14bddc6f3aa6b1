"""Piecewise-linear membership curves with jump-capable breakpoints."""

from __future__ import annotations
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple
import logging
import math

import numpy as np

from src.config import TOLERANCES
from src.errors import DomainError
from src.fuzzy.degree import clamp_degree, degrees_close

logger = logging.getLogger("fuzzylogic.fuzzy")


@dataclass(frozen=True)
class Breakpoint:
    """
    A knot of a membership curve.

    ``left`` is the limit of the curve as x is approached from below,
    ``right`` the value at x and just above it. Equal sides make a plain
    knot, unequal sides a jump.
    """
    x: float
    left: float
    right: float

    def __post_init__(self):
        if not math.isfinite(self.x):
            raise DomainError(f"Breakpoint x must be finite, got {self.x!r}")
        left = clamp_degree(self.left)
        right = clamp_degree(self.right)
        if degrees_close(left, right):
            right = left
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @classmethod
    def knot(cls, x: float, value: float) -> Breakpoint:
        return cls(x, value, value)

    @property
    def is_jump(self) -> bool:
        return self.left != self.right

    def to_list(self) -> List[float]:
        return [self.x, self.left, self.right]


def _lerp(x0: float, y0: float, x1: float, y1: float, x: float) -> float:
    t = (x - x0) / (x1 - x0)
    return y0 + t * (y1 - y0)


@dataclass(frozen=True)
class MembershipCurve:
    """
    A function R -> [0, 1] given by ordered breakpoints.

    Between consecutive breakpoints the curve is the line from the right
    value of the left knot to the left value of the right knot; outside the
    knots it is constant. At a jump the curve takes the right value.
    """
    breakpoints: Tuple[Breakpoint, ...]
    _xs: Tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        bps = tuple(self.breakpoints)
        if not bps:
            raise DomainError("A membership curve needs at least one breakpoint")
        xs = tuple(bp.x for bp in bps)
        for a, b in zip(xs, xs[1:]):
            if not a < b:
                raise DomainError(
                    f"Breakpoint x-coordinates must be strictly increasing ({a} >= {b})"
                )
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "_xs", xs)

    # -- construction -----------------------------------------------------

    @classmethod
    def constant(cls, value: float, at: float = 0.0) -> MembershipCurve:
        return cls((Breakpoint.knot(at, value),))

    @classmethod
    def from_points(cls, points: Iterable[Tuple[float, float]]) -> MembershipCurve:
        """Build a continuous curve through (x, y) points."""
        return cls(tuple(Breakpoint.knot(x, y) for x, y in points))

    @classmethod
    def from_list(cls, triples: Iterable[Sequence[float]]) -> MembershipCurve:
        return cls(tuple(Breakpoint(x, left, right) for x, left, right in triples))

    def to_list(self) -> List[List[float]]:
        return [bp.to_list() for bp in self.breakpoints]

    # -- evaluation -------------------------------------------------------

    @property
    def xs(self) -> Tuple[float, ...]:
        return self._xs

    @property
    def is_constant(self) -> bool:
        return len(self.breakpoints) == 1 and not self.breakpoints[0].is_jump

    def value(self, x: float) -> float:
        """Curve value at x (right value at jumps)."""
        bps = self.breakpoints
        i = bisect_right(self._xs, x)
        if i == 0:
            return bps[0].left
        bp = bps[i - 1]
        if bp.x == x or i == len(bps):
            return bp.right
        nxt = bps[i]
        return _lerp(bp.x, bp.right, nxt.x, nxt.left, x)

    __call__ = value

    def left_limit(self, x: float) -> float:
        """Limit of the curve as x is approached from below."""
        i = bisect_left(self._xs, x)
        if i < len(self._xs) and self._xs[i] == x:
            return self.breakpoints[i].left
        return self.value(x)

    def evaluate_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorised ``value`` over an array of x."""
        xs = np.asarray(xs, dtype=float)
        knots = np.asarray(self._xs)
        left = np.array([bp.left for bp in self.breakpoints])
        right = np.array([bp.right for bp in self.breakpoints])

        idx = np.searchsorted(knots, xs, side="right")
        out = np.empty_like(xs)
        before = idx == 0
        after = idx == len(knots)
        inside = ~(before | after)

        out[before] = left[0]
        out[after] = right[-1]
        i = idx[inside] - 1
        x0, x1 = knots[i], knots[i + 1]
        y0, y1 = right[i], left[i + 1]
        out[inside] = y0 + (xs[inside] - x0) / (x1 - x0) * (y1 - y0)
        return out

    def segments(self) -> Iterable[Tuple[float, float, float, float]]:
        """Yield (x0, y0, x1, y1) for every linear piece between knots."""
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            yield a.x, a.right, b.x, b.left

    # -- normalization ----------------------------------------------------

    def normalized(self, tol: float = TOLERANCES.degree) -> MembershipCurve:
        """Drop plain knots that do not change the function."""
        kept: List[Breakpoint] = []
        for bp in self.breakpoints:
            while len(kept) >= 2:
                mid = kept[-1]
                prev = kept[-2]
                if mid.is_jump:
                    break
                expected = _lerp(prev.x, prev.right, bp.x, bp.left, mid.x)
                if not degrees_close(expected, mid.left, tol):
                    break
                kept.pop()
            kept.append(bp)

        # Flat end pieces merge into the constant extensions.
        while len(kept) >= 2 and not kept[-1].is_jump and degrees_close(
            kept[-2].right, kept[-1].left, tol
        ):
            kept.pop()
        while len(kept) >= 2 and not kept[0].is_jump and degrees_close(
            kept[0].right, kept[1].left, tol
        ):
            kept.pop(0)
        return MembershipCurve(tuple(kept))

    def equivalent(self, other: MembershipCurve, tol: float = TOLERANCES.degree) -> bool:
        """Whether both curves describe the same function, up to tol."""
        xs = sorted(set(self._xs) | set(other._xs))
        for x in xs:
            if not degrees_close(self.value(x), other.value(x), tol):
                return False
            if not degrees_close(self.left_limit(x), other.left_limit(x), tol):
                return False
        for a, b in zip(xs, xs[1:]):
            m = (a + b) / 2
            if not degrees_close(self.value(m), other.value(m), tol):
                return False
        return True

    # -- algebra ----------------------------------------------------------

    def combine(
        self,
        other: MembershipCurve,
        pick: Callable[[float, float], float],
    ) -> MembershipCurve:
        """
        Pointwise ``pick`` (min or max) of two curves, exactly.

        Output knots are the union of both knot sets plus every point where
        the two linear pieces cross.
        """
        xs = sorted(set(self._xs) | set(other._xs))
        out: List[Breakpoint] = []
        prev: Optional[float] = None
        for x in xs:
            if prev is not None:
                crossing = self._crossing(other, prev, x)
                if crossing is not None:
                    out.append(crossing)
            out.append(
                Breakpoint(
                    x,
                    pick(self.left_limit(x), other.left_limit(x)),
                    pick(self.value(x), other.value(x)),
                )
            )
            prev = x
        result = MembershipCurve(tuple(out)).normalized()
        logger.debug(
            f"Combined curves of {len(self.breakpoints)} and "
            f"{len(other.breakpoints)} knots into {len(result.breakpoints)}"
        )
        return result

    def _crossing(self, other: MembershipCurve, x0: float, x1: float) -> Optional[Breakpoint]:
        a0, b0 = self.value(x0), other.value(x0)
        a1, b1 = self.left_limit(x1), other.left_limit(x1)
        d0 = a0 - b0
        d1 = a1 - b1
        if d0 * d1 >= 0:
            return None
        t = d0 / (d0 - d1)
        xc = x0 + t * (x1 - x0)
        if not x0 < xc < x1:
            return None
        # Both pieces meet here; averaging keeps the result symmetric in the operands.
        ya = a0 + t * (a1 - a0)
        yb = b0 + t * (b1 - b0)
        return Breakpoint.knot(xc, (ya + yb) / 2)

    def map_values(
        self,
        fn: Callable[[float], float],
        tol: Optional[float] = None,
        max_depth: int = TOLERANCES.max_subdivision_depth,
    ) -> MembershipCurve:
        """
        Compose the curve with a degree map ``fn``.

        With ``tol`` None, ``fn`` is taken to be affine and the result is
        exact. Otherwise every linear piece is bisected until the chord is
        within ``tol`` of ``fn`` at the piece's midpoint.
        """
        out: List[Breakpoint] = []
        prev: Optional[Breakpoint] = None
        refined = 0
        for bp in self.breakpoints:
            if prev is not None and tol is not None:
                extra = _refine(fn, prev.x, prev.right, bp.x, bp.left, tol, max_depth)
                refined += len(extra)
                out.extend(extra)
            out.append(Breakpoint(bp.x, fn(bp.left), fn(bp.right)))
            prev = bp
        if refined:
            logger.debug(f"Inserted {refined} knots while mapping curve values")
        return MembershipCurve(tuple(out)).normalized()

    def extremum(self, lo: float, hi: float, largest: bool) -> Tuple[float, float]:
        """
        Supremum (``largest``) or infimum of the curve over [lo, hi].

        Returns (value, x). Extremes of a piecewise-linear curve sit at knots
        (either side of a jump) or at the interval ends; ties go to the
        smallest x. If the winner is a left limit, x is the jump point and
        value(x) differs from the returned value.
        """
        candidates: List[Tuple[float, float]] = [(lo, self.value(lo))]
        for bp in self.breakpoints:
            if lo < bp.x <= hi:
                candidates.append((bp.x, bp.left))
            if lo <= bp.x <= hi:
                candidates.append((bp.x, bp.right))
        candidates.append((hi, self.value(hi)))

        best_x, best = candidates[0]
        for x, y in candidates[1:]:
            if (y > best) if largest else (y < best):
                best_x, best = x, y
        return best, best_x


def _refine(
    fn: Callable[[float], float],
    x0: float,
    v0: float,
    x1: float,
    v1: float,
    tol: float,
    max_depth: int,
) -> List[Breakpoint]:
    """Interior knots approximating fn along the line (x0, v0) -> (x1, v1)."""
    if v0 == v1:
        return []
    knots: List[Breakpoint] = []
    stack = [(x0, v0, x1, v1, 0)]
    while stack:
        a, va, b, vb, depth = stack.pop()
        xm = (a + b) / 2
        vm = (va + vb) / 2
        ym = fn(vm)
        chord = (fn(va) + fn(vb)) / 2
        if abs(ym - chord) <= tol or depth >= max_depth or not a < xm < b:
            continue
        knots.append(Breakpoint.knot(xm, ym))
        stack.append((xm, vm, b, vb, depth + 1))
        stack.append((a, va, xm, vm, depth + 1))
    knots.sort(key=lambda bp: bp.x)
    return knots
