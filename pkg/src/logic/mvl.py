"""
n-valued Łukasiewicz logic.

Truth values of the n-valued system are k/(n-1) for k = 0..n-1 and are
stored as the exact pair (k, n). Connectives:

- not a      = 1 - a
- a and b    = min(a, b)
- a or b     = max(a, b)
- a implies b = min(1, 1 - a + b)
- a equiv b  = min(a -> b, b -> a) = 1 - |a - b|
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Tuple

from src.config import TOLERANCES
from src.errors import DomainError


@dataclass(frozen=True, order=True)
class MvlValue:
    """The truth value k/(n-1) of the n-valued system."""
    k: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"An n-valued system needs n >= 2, got {self.n}")
        if not 0 <= self.k <= self.n - 1:
            raise DomainError(f"Index {self.k} is outside 0..{self.n - 1}")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.k, self.n - 1)

    @property
    def degree(self) -> float:
        return self.k / (self.n - 1)

    def __str__(self) -> str:
        return str(self.fraction)


@dataclass(frozen=True)
class LogicValueSet:
    """V_n = {0, 1/(n-1), ..., 1}."""
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"An n-valued system needs n >= 2, got {self.n}")

    def values(self) -> Tuple[MvlValue, ...]:
        return tuple(MvlValue(k, self.n) for k in range(self.n))

    @property
    def false(self) -> MvlValue:
        return MvlValue(0, self.n)

    @property
    def true(self) -> MvlValue:
        return MvlValue(self.n - 1, self.n)

    def _index_of(self, degree: float) -> int | None:
        k = round(float(degree) * (self.n - 1))
        if 0 <= k <= self.n - 1 and abs(k / (self.n - 1) - degree) <= TOLERANCES.degree:
            return k
        return None

    def contains(self, degree: float) -> bool:
        return self._index_of(degree) is not None

    def value_of(self, degree: float) -> MvlValue:
        """The member of V_n equal to ``degree`` (within tolerance)."""
        k = self._index_of(degree)
        if k is None:
            raise DomainError(f"{degree} is not a truth value of the {self.n}-valued system")
        return MvlValue(k, self.n)


def _check_arity(a: MvlValue, b: MvlValue) -> int:
    if a.n != b.n:
        raise DomainError(f"Arity mismatch: {a.n}-valued vs {b.n}-valued")
    return a.n


def mvl_not(a: MvlValue) -> MvlValue:
    return MvlValue(a.n - 1 - a.k, a.n)


def mvl_and(a: MvlValue, b: MvlValue) -> MvlValue:
    n = _check_arity(a, b)
    return MvlValue(min(a.k, b.k), n)


def mvl_or(a: MvlValue, b: MvlValue) -> MvlValue:
    n = _check_arity(a, b)
    return MvlValue(max(a.k, b.k), n)


def mvl_implies(a: MvlValue, b: MvlValue) -> MvlValue:
    n = _check_arity(a, b)
    return MvlValue(min(n - 1, n - 1 - a.k + b.k), n)


def mvl_equiv(a: MvlValue, b: MvlValue) -> MvlValue:
    n = _check_arity(a, b)
    return MvlValue(n - 1 - abs(a.k - b.k), n)


class Connective(Enum):
    NOT = "not"
    AND = "and"
    OR = "or"
    IMPLIES = "implies"
    EQUIV = "equiv"

    @property
    def arity(self) -> int:
        return 1 if self is Connective.NOT else 2


_BINARY = {
    Connective.AND: mvl_and,
    Connective.OR: mvl_or,
    Connective.IMPLIES: mvl_implies,
    Connective.EQUIV: mvl_equiv,
}


@dataclass(frozen=True)
class TruthTable:
    """
    A connective tabulated over V_n.

    ``rows[i][j]`` is op(v_i, v_j) for binary connectives; unary tables
    have one entry per row.
    """
    connective: Connective
    value_set: LogicValueSet
    rows: Tuple[Tuple[MvlValue, ...], ...]

    @property
    def entries(self) -> List[MvlValue]:
        return [v for row in self.rows for v in row]

    def lookup(self, a: MvlValue, b: MvlValue | None = None) -> MvlValue:
        row = self.rows[a.k]
        return row[0] if b is None else row[b.k]

    def to_dict(self) -> Dict:
        return {
            "op": self.connective.value,
            "n": self.value_set.n,
            "values": [str(v) for v in self.value_set.values()],
            "table": [[str(v) for v in row] for row in self.rows],
        }


def truth_table(connective: Connective, n: int) -> TruthTable:
    value_set = LogicValueSet(n)
    values = value_set.values()
    if connective is Connective.NOT:
        rows = tuple((mvl_not(a),) for a in values)
    else:
        op = _BINARY[connective]
        rows = tuple(tuple(op(a, b) for b in values) for a in values)
    return TruthTable(connective, value_set, rows)
