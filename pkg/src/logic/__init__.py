"""Many-valued logic kernel and the propositional formula language."""

from .mvl import (
    MvlValue,
    LogicValueSet,
    Connective,
    TruthTable,
    mvl_not,
    mvl_and,
    mvl_or,
    mvl_implies,
    mvl_equiv,
    truth_table,
)
from .formula import (
    Formula,
    Var,
    Const,
    Not,
    And,
    Or,
    Implies,
    fold,
    print_formula,
    variables,
    is_monotone,
    formula_to_dict,
    formula_from_dict,
)
from .parser import parse, tokenize
from .evaluator import (
    Semantics,
    SemanticsMode,
    Environment,
    evaluate,
    assignments,
    formula_table,
    is_tautology,
)

__all__ = [
    "MvlValue",
    "LogicValueSet",
    "Connective",
    "TruthTable",
    "mvl_not",
    "mvl_and",
    "mvl_or",
    "mvl_implies",
    "mvl_equiv",
    "truth_table",
    "Formula",
    "Var",
    "Const",
    "Not",
    "And",
    "Or",
    "Implies",
    "fold",
    "print_formula",
    "variables",
    "is_monotone",
    "formula_to_dict",
    "formula_from_dict",
    "parse",
    "tokenize",
    "Semantics",
    "SemanticsMode",
    "Environment",
    "evaluate",
    "assignments",
    "formula_table",
    "is_tautology",
]
