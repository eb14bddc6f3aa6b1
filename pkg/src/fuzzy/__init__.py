"""Fuzzy and crisp sets, negations and the classical laws."""

from .degree import TruthDegree, clamp_degree, degrees_close
from .curve import Breakpoint, MembershipCurve
from .sets import (
    Universe,
    FuzzySet,
    CrispSet,
    DiscreteSet,
    Interval,
    IntervalSet,
)
from .connectives import NegationFamily, negate, conj, disj, fixed_point
from .operations import (
    mf_eval,
    characteristic,
    embed_crisp,
    pointwise_min,
    pointwise_max,
    complement,
    height,
    floor,
)
from .laws import (
    Law,
    LawReport,
    SelfComplementarity,
    NegationAxiomReport,
    contradiction_defect,
    excluded_middle_defect,
    self_complementary,
    check_crisp_laws,
    check_negation_axioms,
)

__all__ = [
    "TruthDegree",
    "clamp_degree",
    "degrees_close",
    "Breakpoint",
    "MembershipCurve",
    "Universe",
    "FuzzySet",
    "CrispSet",
    "DiscreteSet",
    "Interval",
    "IntervalSet",
    "NegationFamily",
    "negate",
    "conj",
    "disj",
    "fixed_point",
    "mf_eval",
    "characteristic",
    "embed_crisp",
    "pointwise_min",
    "pointwise_max",
    "complement",
    "height",
    "floor",
    "Law",
    "LawReport",
    "SelfComplementarity",
    "NegationAxiomReport",
    "contradiction_defect",
    "excluded_middle_defect",
    "self_complementary",
    "check_crisp_laws",
    "check_negation_axioms",
]
