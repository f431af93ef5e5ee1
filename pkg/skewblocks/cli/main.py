"""
Entry point for the skewblocks command line.

Exit codes:
    0  success, or the checked claim holds
    1  the checked claim is falsified
    2  usage error (bad pattern, failed precondition, bad configuration)
    3  refused by the enumeration ceiling
"""

import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from skewblocks.cli.commands import EXIT_RESOURCE, EXIT_USAGE, HANDLERS
from skewblocks.cli.parser import build_parser
from skewblocks.cli.run_config import RunConfig
from skewblocks.core.exceptions import ResourceGuardError, SkewBlocksError

logger = logging.getLogger(__name__)


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _emit(text: str, output_path: Optional[Path]) -> None:
    if output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {output_path}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0

    try:
        run = RunConfig.from_args(args)
    except (ValidationError, SkewBlocksError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    _configure_logging(run.log_level)
    logger.debug(f"Run configuration: {run.model_dump()}")

    try:
        emission, code = HANDLERS[args.command](args, run)
    except ResourceGuardError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except SkewBlocksError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    _emit(emission.render(run.output_format), run.output_path)
    return code


if __name__ == "__main__":
    sys.exit(main())
