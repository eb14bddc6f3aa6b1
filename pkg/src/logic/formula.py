"""Propositional formula AST, canonical printing and JSON form."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple, TypeVar, Union
import re

from src.errors import DomainError
from src.fuzzy.degree import clamp_degree

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not IDENTIFIER.match(self.name):
            raise DomainError(f"Invalid variable name: {self.name!r}")


@dataclass(frozen=True)
class Const:
    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", clamp_degree(self.value, tol=0.0))


@dataclass(frozen=True)
class Not:
    operand: Formula


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula


Formula = Union[Var, Const, Not, And, Or, Implies]

# Binding strength, loosest first.
_PRECEDENCE = {Implies: 1, Or: 2, And: 3, Not: 4, Var: 5, Const: 5}
_SYMBOL = {Implies: "->", Or: "|", And: "&"}
_TAG = {Var: "var", Const: "const", Not: "not", And: "and", Or: "or", Implies: "implies"}
_BINARY_BY_TAG = {"and": And, "or": Or, "implies": Implies}

T = TypeVar("T")


def _children(f: Formula) -> Tuple[Formula, ...]:
    if isinstance(f, Not):
        return (f.operand,)
    if isinstance(f, (And, Or, Implies)):
        return (f.left, f.right)
    return ()


def fold(f: Formula, combine: Callable[[Formula, List[T]], T]) -> T:
    """
    Bottom-up reduction of f with an explicit stack.

    ``combine(node, results)`` receives the results of the node's children
    in order (empty for atoms). Depth is bounded by memory, not the
    interpreter's recursion limit.
    """
    results: List[T] = []
    stack: List[Tuple[Formula, bool]] = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        children = _children(node)
        if not children or expanded:
            start = len(results) - len(children)
            args = results[start:]
            del results[start:]
            results.append(combine(node, args))
        else:
            stack.append((node, True))
            stack.extend((child, False) for child in reversed(children))
    return results[0]


def _paren(text: str, parens: bool) -> str:
    return f"({text})" if parens else text


def _render(f: Formula, texts: List[str]) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Const):
        return repr(f.value)
    if isinstance(f, Not):
        return "!" + _paren(texts[0], _PRECEDENCE[type(f.operand)] < _PRECEDENCE[Not])
    prec = _PRECEDENCE[type(f)]
    left_prec = _PRECEDENCE[type(f.left)]
    right_prec = _PRECEDENCE[type(f.right)]
    if isinstance(f, Implies):
        left = _paren(texts[0], left_prec <= prec)
        right = _paren(texts[1], right_prec < prec)
    else:
        left = _paren(texts[0], left_prec < prec)
        right = _paren(texts[1], right_prec <= prec)
    return f"{left} {_SYMBOL[type(f)]} {right}"


def print_formula(f: Formula) -> str:
    """
    Render with the fewest parentheses that parse back to the same tree.

    ``&`` and ``|`` associate to the left, ``->`` to the right.
    """
    return fold(f, _render)


def variables(f: Formula) -> List[str]:
    """Sorted names of the variables occurring in f."""
    found: set = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            found.add(node.name)
        stack.extend(_children(node))
    return sorted(found)


def is_monotone(f: Formula) -> bool:
    """Whether f uses only variables, constants, & and |."""
    stack = [f]
    while stack:
        node = stack.pop()
        if not isinstance(node, (Var, Const, And, Or)):
            return False
        stack.extend(_children(node))
    return True


def _to_dict(f: Formula, parts: List[Dict[str, Any]]) -> Dict[str, Any]:
    tag = _TAG[type(f)]
    if isinstance(f, Var):
        return {"type": tag, "name": f.name}
    if isinstance(f, Const):
        return {"type": tag, "value": f.value}
    if isinstance(f, Not):
        return {"type": tag, "operand": parts[0]}
    return {"type": tag, "left": parts[0], "right": parts[1]}


def formula_to_dict(f: Formula) -> Dict[str, Any]:
    return fold(f, _to_dict)


def formula_from_dict(data: Dict[str, Any]) -> Formula:
    try:
        tag = data["type"]
        if tag == "var":
            return Var(data["name"])
        if tag == "const":
            return Const(float(data["value"]))
        if tag == "not":
            return Not(formula_from_dict(data["operand"]))
        node = _BINARY_BY_TAG[tag]
        return node(formula_from_dict(data["left"]), formula_from_dict(data["right"]))
    except (KeyError, TypeError) as e:
        raise DomainError(f"Malformed formula JSON: {e}") from e

