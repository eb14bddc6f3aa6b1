"""Truth degrees: real numbers in the unit interval."""

from __future__ import annotations
from dataclasses import dataclass
import math

from src.config import TOLERANCES
from src.errors import DomainError


def clamp_degree(value: float, tol: float = TOLERANCES.degree) -> float:
    """
    Validate a membership/truth value and clamp it into [0, 1].

    Values outside [0, 1] by no more than ``tol`` are clamped; anything
    further out (or NaN) raises DomainError.
    """
    value = float(value)
    if math.isnan(value) or value < -tol or value > 1.0 + tol:
        raise DomainError(f"Degree {value!r} is outside [0, 1]")
    return min(1.0, max(0.0, value))


def degrees_close(a: float, b: float, tol: float = TOLERANCES.degree) -> bool:
    """Absolute-tolerance comparison used for all degree equality checks."""
    return abs(a - b) <= tol


@dataclass(frozen=True, order=True)
class TruthDegree:
    """
    A degree of truth between 0 (false) and 1 (true).

    Construction clamps values within tolerance of the interval and rejects
    the rest.
    """
    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", clamp_degree(self.value))

    def __float__(self) -> float:
        return self.value

    @classmethod
    def true(cls) -> TruthDegree:
        return cls(1.0)

    @classmethod
    def false(cls) -> TruthDegree:
        return cls(0.0)

    def is_close(self, other: TruthDegree | float, tol: float = TOLERANCES.degree) -> bool:
        return degrees_close(self.value, float(other), tol)
