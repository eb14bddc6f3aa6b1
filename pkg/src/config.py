"""Configuration module for the graded-logic toolkit."""

from dataclasses import dataclass, field
from pathlib import Path
import logging


def setup_logging(level: int = logging.INFO) -> logging.Logger:
    """Configure and return the application logger."""
    logger = logging.getLogger("fuzzylogic")
    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    logger.setLevel(level)
    return logger


@dataclass(frozen=True)
class Tolerances:
    """Numeric tolerances shared by the fuzzy and logic modules."""
    degree: float = 1e-12
    complement: float = 1e-9
    max_subdivision_depth: int = 40


@dataclass(frozen=True)
class PlotParams:
    """Sampling and canvas parameters for plot output."""
    samples: int = 512
    width: int = 640
    height: int = 400
    dpi: int = 100


TOLERANCES = Tolerances()


@dataclass
class Config:
    """Configuration class for command execution."""

    tolerances: Tolerances = field(default_factory=Tolerances)
    plot_params: PlotParams = field(default_factory=PlotParams)

    # Logging
    log_level: int = logging.WARNING

    # Base directories (computed)
    _base_dir: Path = field(init=False)
    _data_dir: Path = field(init=False)

    def __post_init__(self):
        self._base_dir = Path(__file__).parent.parent
        self._data_dir = self._base_dir / "data"

    @property
    def data_dir(self) -> Path:
        return self._data_dir

    @property
    def curves_dir(self) -> Path:
        return self._data_dir / "curves"

    def resolve_curve(self, path: str | Path) -> Path:
        """
        Resolve a curve file argument.

        Paths that exist are used as given; otherwise the name is looked up
        among the bundled curves, so ``temperature.json`` works from anywhere.
        """
        candidate = Path(path)
        if candidate.exists() or candidate.is_absolute():
            return candidate
        bundled = self.curves_dir / candidate.name
        return bundled if bundled.exists() else candidate


def get_default_config() -> Config:
    """Return default configuration."""
    return Config()
