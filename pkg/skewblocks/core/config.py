"""
skewblocks Configuration - Environment-driven settings

Every knob has a default and an environment override, so a desk run and a
CI run can share the same code path:

    export SKEWBLOCKS_N_CEILING=12
    export SKEWBLOCKS_THREADS=1

Usage:
    from skewblocks.core.config import config

    ceiling = config.N_CEILING
    workers = config.resolve_workers(config.THREADS)
"""

import os
import logging
from fractions import Fraction
from typing import Any, Dict, Union

from skewblocks.core.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

# Load .env if present, but don't fail if dotenv isn't available
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    logger.warning("python-dotenv not available, skipping .env loading")


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from e


class SkewBlocksConfig:
    """
    Centralized configuration for skewblocks.
    Loads from environment variables with sensible defaults.

    Scope: enumeration ceilings, worker counts, evidence depths
    """

    # ===== RESOURCE GUARDS =====
    # Longest permutation any enumeration in this process may build.
    # 14 keeps worst-case desk runs under minutes.
    N_CEILING: int = _int_env("SKEWBLOCKS_N_CEILING", 14)

    # Longest pattern wilf_classes will sweep over (k! patterns per sweep)
    PATTERN_LENGTH_CEILING: int = _int_env("SKEWBLOCKS_PATTERN_LENGTH_CEILING", 4)

    # ===== PARALLELISM =====
    # Worker processes for subtree counting: positive integer or "auto"
    THREADS: Union[int, str] = os.getenv("SKEWBLOCKS_THREADS", "auto")

    # ===== EVIDENCE DEPTHS =====
    # Count vectors Av_1..Av_N compared when grouping patterns empirically
    WILF_DEPTH: int = _int_env("SKEWBLOCKS_WILF_DEPTH", 8)

    # Maclaurin coefficients checked for nonnegativity before a rational
    # function is accepted as a counting series
    COEFFICIENT_CHECK_ORDER: int = _int_env("SKEWBLOCKS_COEFFICIENT_CHECK_ORDER", 30)

    # Width of the rational interval a pole is refined to
    ROOT_WIDTH: Fraction = Fraction(os.getenv("SKEWBLOCKS_ROOT_WIDTH", "1/1000000000"))

    # ===== LOGGING =====
    LOG_LEVEL: str = os.getenv("SKEWBLOCKS_LOG_LEVEL", "WARNING").upper()

    @classmethod
    def resolve_workers(cls, threads: Union[int, str, None] = None) -> int:
        """
        Turn a threads setting into a concrete worker count.

        Args:
            threads: Positive integer, "auto", or None (use THREADS)

        Returns:
            Number of worker processes (>= 1)
        """
        if threads is None:
            threads = cls.THREADS
        if isinstance(threads, str):
            if threads.strip().lower() == "auto":
                return os.cpu_count() or 1
            try:
                threads = int(threads)
            except ValueError as e:
                raise ConfigurationError(
                    f"threads must be a positive integer or 'auto', got {threads!r}"
                ) from e
        if threads < 1:
            raise ConfigurationError(f"threads must be at least 1, got {threads}")
        return threads

    @classmethod
    def to_dict(cls) -> Dict[str, Any]:
        """Export all config values as a dictionary (useful for debugging)."""
        return {
            key: getattr(cls, key)
            for key in dir(cls)
            if key.isupper() and not key.startswith('_')
        }

    @classmethod
    def validate(cls) -> None:
        """
        Validate configuration consistency.
        Raises ConfigurationError if a value is out of range.
        """
        if cls.N_CEILING < 1:
            raise ConfigurationError(f"N_CEILING must be at least 1, got {cls.N_CEILING}")

        if cls.PATTERN_LENGTH_CEILING < 2:
            raise ConfigurationError(
                f"PATTERN_LENGTH_CEILING must be at least 2, got {cls.PATTERN_LENGTH_CEILING}"
            )

        if cls.WILF_DEPTH < 1:
            raise ConfigurationError(f"WILF_DEPTH must be at least 1, got {cls.WILF_DEPTH}")

        if cls.COEFFICIENT_CHECK_ORDER < 1:
            raise ConfigurationError(
                f"COEFFICIENT_CHECK_ORDER must be at least 1, got {cls.COEFFICIENT_CHECK_ORDER}"
            )

        if cls.ROOT_WIDTH <= 0:
            raise ConfigurationError(f"ROOT_WIDTH must be positive, got {cls.ROOT_WIDTH}")

        if cls.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ConfigurationError(f"Unknown LOG_LEVEL {cls.LOG_LEVEL!r}")

        cls.resolve_workers(cls.THREADS)


# Global singleton instance
config = SkewBlocksConfig()
