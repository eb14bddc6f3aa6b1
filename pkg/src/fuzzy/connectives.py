"""Degree-level connectives: the Sugeno negation family, min and max."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Union
import math

from src.errors import DomainError
from src.fuzzy.degree import TruthDegree, clamp_degree

DegreeLike = Union[TruthDegree, float]


def _as_float(a: DegreeLike) -> float:
    return clamp_degree(float(a))


@dataclass(frozen=True)
class NegationFamily:
    """
    The negation eta(x) = (1 - x) / (1 + lam * x), lam > -1.

    lam = 0 is the classical negation 1 - x. Every member satisfies
    eta(0) = 1, eta(1) = 0, eta(eta(x)) = x and is strictly decreasing.
    """
    lam: float = 0.0

    def __post_init__(self):
        lam = float(self.lam)
        if not math.isfinite(lam) or lam <= -1.0:
            raise DomainError(f"Negation parameter must be finite and > -1, got {self.lam!r}")
        object.__setattr__(self, "lam", lam)

    @classmethod
    def classical(cls) -> NegationFamily:
        return cls(0.0)

    @property
    def is_classical(self) -> bool:
        return self.lam == 0.0

    def __call__(self, a: float) -> float:
        """Raw float form, used by the curve algebra."""
        if self.lam == 0.0:
            return 1.0 - a
        return clamp_degree((1.0 - a) / (1.0 + self.lam * a))


def negate(neg: NegationFamily, a: DegreeLike) -> TruthDegree:
    return TruthDegree(neg(_as_float(a)))


def conj(a: DegreeLike, b: DegreeLike) -> TruthDegree:
    return TruthDegree(min(_as_float(a), _as_float(b)))


def disj(a: DegreeLike, b: DegreeLike) -> TruthDegree:
    return TruthDegree(max(_as_float(a), _as_float(b)))


def fixed_point(neg: NegationFamily) -> TruthDegree:
    """
    The unique x in (0, 1) with eta(x) = x.

    Solving lam*x^2 + 2x - 1 = 0 gives (sqrt(1 + lam) - 1) / lam, written
    here as 1 / (1 + sqrt(1 + lam)) so that lam = 0 needs no special case.
    """
    return TruthDegree(1.0 / (1.0 + math.sqrt(1.0 + neg.lam)))
