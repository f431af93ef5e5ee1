"""Configuration, exceptions and worker plumbing shared by every skewblocks module."""

from .config import SkewBlocksConfig, config
from .exceptions import (
    ConfigurationError,
    InvalidPermutationError,
    NotACountingSeriesError,
    PreconditionError,
    ResourceGuardError,
    SerializationError,
    SeriesError,
    SkewBlocksError,
)
from .worker_pool import WorkerPool

__all__ = [
    "SkewBlocksConfig",
    "config",
    "ConfigurationError",
    "InvalidPermutationError",
    "NotACountingSeriesError",
    "PreconditionError",
    "ResourceGuardError",
    "SerializationError",
    "SeriesError",
    "SkewBlocksError",
    "WorkerPool",
]
