"""Evaluation of formulas under classical, n-valued and fuzzy semantics."""

from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Tuple
import logging

from src.errors import DomainError, UnboundVariableError, UsageError
from src.fuzzy.connectives import NegationFamily, conj, disj, negate
from src.fuzzy.degree import TruthDegree
from src.logic.formula import IDENTIFIER, And, Const, Formula, Not, Or, Var, fold, variables
from src.logic.mvl import LogicValueSet, MvlValue, mvl_and, mvl_implies, mvl_not, mvl_or

logger = logging.getLogger("fuzzylogic.logic")


class SemanticsMode(Enum):
    CLASSICAL = "classical"
    NVALUED = "nvalued"
    FUZZY = "fuzzy"


@dataclass(frozen=True)
class Semantics:
    """
    How connectives are read.

    Classical is the 2-valued system. Fuzzy semantics read not as the
    chosen negation, and/or as min/max and a -> b as max(not a, b).
    """
    mode: SemanticsMode
    n: int = 2
    negation: NegationFamily = field(default_factory=NegationFamily.classical)

    def __post_init__(self):
        if self.mode is SemanticsMode.CLASSICAL and self.n != 2:
            raise DomainError("Classical semantics is the 2-valued system")
        if self.n < 2:
            raise DomainError(f"An n-valued system needs n >= 2, got {self.n}")

    @classmethod
    def classical(cls) -> Semantics:
        return cls(SemanticsMode.CLASSICAL)

    @classmethod
    def n_valued(cls, n: int) -> Semantics:
        return cls(SemanticsMode.NVALUED, n=n)

    @classmethod
    def fuzzy(cls, lam: float = 0.0) -> Semantics:
        return cls(SemanticsMode.FUZZY, negation=NegationFamily(lam))

    @classmethod
    def parse(cls, text: str) -> Semantics:
        """Read ``classical``, ``nvalued:N`` or ``fuzzy:LAMBDA``."""
        name, _, arg = text.strip().partition(":")
        try:
            if name == "classical" and not arg:
                return cls.classical()
            if name == "nvalued":
                return cls.n_valued(int(arg))
            if name == "fuzzy":
                return cls.fuzzy(float(arg) if arg else 0.0)
        except ValueError as e:
            if isinstance(e, DomainError):
                raise
            raise UsageError(f"Invalid semantics argument: {text!r}") from e
        raise UsageError(
            f"Unknown semantics {text!r}; use classical, nvalued:N or fuzzy:LAMBDA"
        )

    @property
    def value_set(self) -> Optional[LogicValueSet]:
        if self.mode is SemanticsMode.FUZZY:
            return None
        return LogicValueSet(self.n)


@dataclass(frozen=True)
class Environment:
    """Truth degrees bound to variable names."""
    bindings: Mapping[str, TruthDegree] = field(default_factory=dict)

    def __post_init__(self):
        bindings = {}
        for name, value in dict(self.bindings).items():
            if not IDENTIFIER.match(name):
                raise DomainError(f"Invalid variable name: {name!r}")
            bindings[name] = value if isinstance(value, TruthDegree) else TruthDegree(value)
        object.__setattr__(self, "bindings", bindings)

    @classmethod
    def of(cls, **values: float) -> Environment:
        return cls(values)

    @classmethod
    def parse(cls, text: str) -> Environment:
        """Read ``p=0.5,q=1/2``; values may be decimals or fractions."""
        bindings: Dict[str, TruthDegree] = {}
        for item in filter(None, (part.strip() for part in text.split(","))):
            name, sep, raw = item.partition("=")
            if not sep or not name.strip() or not raw.strip():
                raise UsageError(f"Invalid binding {item!r}; expected name=value")
            try:
                value = float(Fraction(raw.strip()))
            except (ValueError, ZeroDivisionError) as e:
                raise UsageError(f"Invalid value in binding {item!r}") from e
            bindings[name.strip()] = TruthDegree(value)
        return cls(bindings)

    def lookup(self, name: str) -> TruthDegree:
        try:
            return self.bindings[name]
        except KeyError:
            raise UnboundVariableError(name) from None


def _eval_mvl(f: Formula, env: Environment, value_set: LogicValueSet) -> MvlValue:
    def combine(node: Formula, args: List[MvlValue]) -> MvlValue:
        if isinstance(node, Var):
            return value_set.value_of(env.lookup(node.name).value)
        if isinstance(node, Const):
            return value_set.value_of(node.value)
        if isinstance(node, Not):
            return mvl_not(args[0])
        if isinstance(node, And):
            return mvl_and(*args)
        if isinstance(node, Or):
            return mvl_or(*args)
        return mvl_implies(*args)

    return fold(f, combine)


def _eval_fuzzy(f: Formula, env: Environment, neg: NegationFamily) -> TruthDegree:
    def combine(node: Formula, args: List[TruthDegree]) -> TruthDegree:
        if isinstance(node, Var):
            return env.lookup(node.name)
        if isinstance(node, Const):
            return TruthDegree(node.value)
        if isinstance(node, Not):
            return negate(neg, args[0])
        if isinstance(node, And):
            return conj(*args)
        if isinstance(node, Or):
            return disj(*args)
        return disj(negate(neg, args[0]), args[1])

    return fold(f, combine)


def evaluate(f: Formula, env: Environment, sem: Semantics) -> TruthDegree:
    """
    Truth degree of f under env, read with the given semantics.

    Under classical and n-valued semantics every binding in env must be a
    member of V_n, whether or not f mentions it.
    """
    if sem.mode is SemanticsMode.FUZZY:
        return _eval_fuzzy(f, env, sem.negation)
    value_set = sem.value_set
    for name, degree in env.bindings.items():
        if not value_set.contains(degree.value):
            raise DomainError(
                f"{name}={degree.value:g} is not a truth value of the {value_set.n}-valued system"
            )
    return TruthDegree(_eval_mvl(f, env, value_set).degree)


def assignments(names: List[str], n: int) -> Iterator[Dict[str, MvlValue]]:
    """Every assignment of V_n values to the names, first name slowest."""
    values = LogicValueSet(n).values()
    for combo in product(values, repeat=len(names)):
        yield dict(zip(names, combo))


def formula_table(f: Formula, n: int) -> List[Tuple[Dict[str, MvlValue], MvlValue]]:
    """f evaluated on every assignment of its variables over V_n."""
    names = variables(f)
    sem = Semantics.n_valued(n)
    value_set = LogicValueSet(n)
    rows = []
    for assignment in assignments(names, n):
        env = Environment({name: v.degree for name, v in assignment.items()})
        rows.append((assignment, value_set.value_of(evaluate(f, env, sem).value)))
    logger.debug(f"Tabulated {len(rows)} assignments over V_{n}")
    return rows


def is_tautology(f: Formula, n: int = 2) -> bool:
    """Whether f takes the value 1 under every assignment over V_n."""
    top = LogicValueSet(n).true
    return all(value == top for _, value in formula_table(f, n))
