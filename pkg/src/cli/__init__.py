"""Command line front end: parsing, dispatch, rendering and the sweep driver."""

from .command_runner import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE, CommandRunner, build_parser, execute, run
from .sweep import SweepSummary, check_pair, coprime_pairs, sweep

__all__ = [
    "EXIT_DOMAIN_ERROR",
    "EXIT_OK",
    "EXIT_USAGE",
    "CommandRunner",
    "build_parser",
    "execute",
    "run",
    "SweepSummary",
    "check_pair",
    "coprime_pairs",
    "sweep",
]
