"""Graded-logic toolkit: fuzzy sets, negations and many-valued logic."""

from .config import Config, Tolerances, PlotParams, setup_logging, get_default_config

__version__ = "0.1.0"

__all__ = [
    "Config",
    "Tolerances",
    "PlotParams",
    "setup_logging",
    "get_default_config",
]
