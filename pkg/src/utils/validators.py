"""Validation of curve file contents before they become FuzzySets."""

from dataclasses import dataclass, field
from typing import Any, Dict, List
import math

from src.config import TOLERANCES


@dataclass
class ValidationResult:
    """Results of curve data validation."""
    is_valid: bool = True
    violations: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def add_violation(self, message: str) -> None:
        """Add a validation violation."""
        self.violations.append(message)
        self.is_valid = False

    def add_warning(self, message: str) -> None:
        """Add a validation warning (non-fatal)."""
        self.warnings.append(message)

    def to_dict(self) -> Dict:
        """Convert to dictionary for JSON serialization."""
        return {
            "is_valid": self.is_valid,
            "violations": self.violations,
            "warnings": self.warnings,
        }


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


class CurveValidator:
    """
    Checks the JSON form {"universe": [lo, hi], "breakpoints": [[x, left, right], ...]}.
    """

    def __init__(self, tolerance: float = TOLERANCES.degree):
        self.tolerance = tolerance

    def validate(self, data: Any) -> ValidationResult:
        result = ValidationResult()
        if not isinstance(data, dict):
            result.add_violation("top level must be a JSON object")
            return result

        universe = self._validate_universe(data.get("universe"), result)
        self._validate_breakpoints(data.get("breakpoints"), universe, result)
        return result

    def _validate_universe(self, universe: Any, result: ValidationResult):
        if not (isinstance(universe, list) and len(universe) == 2 and all(map(_is_number, universe))):
            result.add_violation("'universe' must be a list [lo, hi] of finite numbers")
            return None
        lo, hi = universe
        if not lo < hi:
            result.add_violation(f"universe needs lo < hi, got [{lo}, {hi}]")
            return None
        return lo, hi

    def _validate_breakpoints(self, breakpoints: Any, universe, result: ValidationResult) -> None:
        if not isinstance(breakpoints, list) or not breakpoints:
            result.add_violation("'breakpoints' must be a non-empty list")
            return

        previous = None
        for i, bp in enumerate(breakpoints):
            if not (isinstance(bp, list) and len(bp) == 3 and all(map(_is_number, bp))):
                result.add_violation(f"breakpoint {i} must be [x, left, right] of finite numbers")
                continue
            x, left, right = bp
            if previous is not None and not x > previous:
                result.add_violation(f"breakpoint {i}: x={x} does not increase (previous {previous})")
            previous = x
            if universe and not universe[0] <= x <= universe[1]:
                result.add_violation(f"breakpoint {i}: x={x} is outside the universe")
            for side, value in (("left", left), ("right", right)):
                if value < -self.tolerance or value > 1 + self.tolerance:
                    result.add_violation(f"breakpoint {i}: {side} value {value} is outside [0, 1]")
                elif value < 0 or value > 1:
                    result.add_warning(f"breakpoint {i}: {side} value {value} clamped into [0, 1]")
