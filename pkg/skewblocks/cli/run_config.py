"""
Per-invocation settings for the command line.

Defaults come from the config singleton, so SKEWBLOCKS_* environment
variables reach every command; flags override them for one run.
"""

from pathlib import Path
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from skewblocks.core.config import config

OutputFormat = Literal["csv", "json", "text"]


class RunConfig(BaseModel):
    """
    Attributes:
        n_ceiling: Upper bound on every enumeration of this run
        threads: Worker processes, or "auto" for one per CPU
        output_format: csv, json or text
        output_path: Write the emission here instead of stdout
        verbose: Log at DEBUG on stderr
    """
    model_config = ConfigDict(frozen=True)

    n_ceiling: int = Field(default_factory=lambda: config.N_CEILING, ge=1)
    threads: Union[int, Literal["auto"]] = Field(default_factory=lambda: config.THREADS)
    output_format: OutputFormat = "text"
    output_path: Optional[Path] = None
    verbose: bool = False

    @field_validator("threads", mode="before")
    @classmethod
    def _check_threads(cls, value):
        if isinstance(value, str):
            if value.strip().lower() == "auto":
                return "auto"
            value = int(value)
        if value < 1:
            raise ValueError(f"threads must be at least 1, got {value}")
        return value

    @property
    def workers(self) -> int:
        return config.resolve_workers(self.threads)

    @property
    def log_level(self) -> str:
        return "DEBUG" if self.verbose else config.LOG_LEVEL

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        """Build from parsed argparse flags, skipping the ones not given."""
        values = {
            "n_ceiling": getattr(args, "ceiling", None),
            "threads": getattr(args, "threads", None),
            "output_format": getattr(args, "format", None),
            "output_path": getattr(args, "output", None),
            "verbose": getattr(args, "verbose", None),
        }
        return cls(**{key: value for key, value in values.items() if value is not None})
