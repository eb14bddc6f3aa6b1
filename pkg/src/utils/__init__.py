"""Utility functions for loading, saving and validating curve data."""

from .data_loader import (
    load_json,
    save_json,
    parse_curve,
    curve_to_dict,
    load_curve,
    save_curve,
)
from .validators import (
    CurveValidator,
    ValidationResult,
)

__all__ = [
    "load_json",
    "save_json",
    "parse_curve",
    "curve_to_dict",
    "load_curve",
    "save_curve",
    "CurveValidator",
    "ValidationResult",
]
