"""
Entry point of the cqsres command line.
Report output goes to stdout; logs are rendered by structlog on stderr.
"""

import logging
import sys
from typing import Optional, Sequence

import structlog
from pydantic import ValidationError

from config import Settings
from src.cli.command_runner import EXIT_USAGE, build_parser, execute


def setup_logging(log_level: str = "WARNING", log_file: Optional[str] = None) -> None:
    """Setup logging configuration."""
    formatter = structlog.stdlib.ProcessorFormatter(
        processor=structlog.dev.ConsoleRenderer(colors=False),
        foreign_pre_chain=[
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso"),
        ],
    )
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    for handler in handlers:
        handler.setFormatter(formatter)

    root = logging.getLogger()
    root.handlers = handlers
    root.setLevel(getattr(logging, log_level.upper()))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = Settings()
    except ValidationError as exc:
        print(f"cqsres: invalid settings: {exc}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(args.log_level, settings.observability.log_file)
    return execute(args, settings=settings)


if __name__ == "__main__":
    sys.exit(main())
