"""Data loading and saving utilities for curve files."""

import json
import logging
from pathlib import Path
from typing import Any, Dict

from src.errors import CurveFileError
from src.fuzzy.curve import MembershipCurve
from src.fuzzy.sets import FuzzySet, Universe
from src.utils.validators import CurveValidator

logger = logging.getLogger("fuzzylogic.utils")


def load_json(filepath: str | Path) -> Dict[str, Any]:
    """
    Load JSON data from a file.

    Args:
        filepath: Path to the JSON file

    Returns:
        Parsed JSON data

    Raises:
        FileNotFoundError: If file doesn't exist
        json.JSONDecodeError: If file is not valid JSON
    """
    filepath = Path(filepath)
    if not filepath.exists():
        raise FileNotFoundError(f"File not found: {filepath}")

    with open(filepath, "r", encoding="utf-8") as f:
        return json.load(f)


def save_json(data: Any, filepath: str | Path) -> None:
    """
    Save data to a JSON file.

    Args:
        data: Data to save (must be JSON-serializable)
        filepath: Path to save to
    """
    filepath = Path(filepath)
    filepath.parent.mkdir(parents=True, exist_ok=True)

    with open(filepath, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2)

    logger.debug(f"Saved data to {filepath}")


def parse_curve(data: Dict[str, Any], source: str = "<data>") -> FuzzySet:
    """
    Build a FuzzySet from its JSON form.

    Raises:
        CurveFileError: If the data violates the curve format
    """
    result = CurveValidator().validate(data)
    for warning in result.warnings:
        logger.warning(f"{source}: {warning}")
    if not result.is_valid:
        raise CurveFileError(source, "; ".join(result.violations))

    universe = Universe(*data["universe"])
    curve = MembershipCurve.from_list(data["breakpoints"])
    return FuzzySet(universe, curve)


def curve_to_dict(fuzzy_set: FuzzySet) -> Dict[str, Any]:
    """JSON form of a FuzzySet."""
    return {
        "universe": fuzzy_set.universe.to_list(),
        "breakpoints": fuzzy_set.curve.to_list(),
    }


def load_curve(filepath: str | Path) -> FuzzySet:
    """
    Load a curve file.

    Raises:
        CurveFileError: If the file is missing, not UTF-8 JSON, or malformed
    """
    filepath = Path(filepath)
    try:
        data = load_json(filepath)
    except FileNotFoundError:
        raise CurveFileError(str(filepath), "file not found") from None
    except json.JSONDecodeError as e:
        raise CurveFileError(str(filepath), f"invalid JSON ({e.msg} at line {e.lineno})") from e
    except UnicodeDecodeError:
        raise CurveFileError(str(filepath), "not UTF-8 text") from None

    fuzzy_set = parse_curve(data, source=str(filepath))
    logger.debug(f"Loaded {len(fuzzy_set.curve.breakpoints)} breakpoints from {filepath}")
    return fuzzy_set


def save_curve(fuzzy_set: FuzzySet, filepath: str | Path) -> None:
    save_json(curve_to_dict(fuzzy_set), filepath)
