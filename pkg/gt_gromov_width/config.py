"""Configuration management for gt_gromov_width."""

import logging
import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Application configuration loaded from environment variables."""

    # Numerical tolerances
    TOLERANCE: float = float(os.getenv("GTWIDTH_TOL", "1e-9"))
    HERMITIAN_TOL: float = float(os.getenv("GTWIDTH_HERMITIAN_TOL", "1e-12"))
    MAX_SWEEPS: int = int(os.getenv("GTWIDTH_MAX_SWEEPS", "60"))

    # Verification suites
    DEFAULT_TRIALS: int = int(os.getenv("GTWIDTH_TRIALS", "100"))
    DEFAULT_SEED: int = int(os.getenv("GTWIDTH_SEED", "20240601"))
    ORACLE_MAX_N: int = int(os.getenv("GTWIDTH_ORACLE_MAX_N", "4"))

    # Run log
    DATABASE_URL: str = os.getenv("GTWIDTH_DATABASE_URL", "sqlite:///gtwidth_runs.db")

    LOG_LEVEL: str = os.getenv("GTWIDTH_LOG_LEVEL", "WARNING").upper()
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    @classmethod
    def validate(cls) -> None:
        """Validate configuration values."""
        errors = []

        if not cls.TOLERANCE > 0:
            errors.append("GTWIDTH_TOL must be positive")
        if not cls.HERMITIAN_TOL > 0:
            errors.append("GTWIDTH_HERMITIAN_TOL must be positive")
        if cls.MAX_SWEEPS < 1:
            errors.append("GTWIDTH_MAX_SWEEPS must be at least 1")
        if cls.DEFAULT_TRIALS < 1:
            errors.append("GTWIDTH_TRIALS must be at least 1")
        if cls.ORACLE_MAX_N < 1:
            errors.append("GTWIDTH_ORACLE_MAX_N must be at least 1")
        if not cls.DATABASE_URL:
            errors.append("GTWIDTH_DATABASE_URL is required")
        if not isinstance(logging.getLevelName(cls.LOG_LEVEL), int):
            errors.append(f"GTWIDTH_LOG_LEVEL is not a logging level: {cls.LOG_LEVEL}")

        if errors:
            raise ValueError("Configuration errors:\n- " + "\n- ".join(errors))

    @classmethod
    def configure_logging(cls, verbose: bool = False) -> None:
        """Set up root logging once for command-line use."""
        level = logging.DEBUG if verbose else cls.LOG_LEVEL
        logging.basicConfig(level=level, format=cls.LOG_FORMAT)
