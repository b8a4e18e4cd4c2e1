"""Argument parsing and dispatch for the ``cqsres`` command line."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from config import Settings
from src.braid import BraidWord, mn_schedule, trace_word
from src.cfrac import CqsFraction, hj_dual, hj_expand
from src.chain import contracts_to, parse_resolution
from src.components import ComponentReport, ComponentService, enumerate_zero_fractions
from src.errors import BraidWordSyntaxError, ChainSyntaxError, ResolutionError
from src.observability.telemetry_service import TelemetryService
from src.quiver import check_Q_abc, dolgachev, enumerate_c, render_dot

from . import formatters
from .sweep import sweep

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2

FRACTION_GRAMMAR = "fraction := DELTA '/' OMEGA with 0 < OMEGA < DELTA coprime"


class UsageError(Exception):
    """Command line arguments that parse but cannot be used."""


class FractionArgumentError(ValueError):
    GRAMMAR = FRACTION_GRAMMAR


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default=None, help="Output format")
    common.add_argument("--out", default=None, help="Write output to FILE instead of stdout")
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized checks")
    common.add_argument("--jobs", type=int, default=None, help="Worker processes for sweep")
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="Logging level (default: WARNING)",
    )

    parser = argparse.ArgumentParser(
        prog="cqsres",
        description="M- and N-resolutions, antiflips and quivers of cyclic quotient surface singularities",
    )
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name: str, help_text: str) -> argparse.ArgumentParser:
        return verbs.add_parser(name, help=help_text, parents=[common])

    for name, help_text in [
        ("expand", "Hirzebruch-Jung expansion of DELTA/OMEGA"),
        ("dual", "Expansion of the dual DELTA/(DELTA-OMEGA)"),
        ("zero-fractions", "Zero continued fractions indexing the components"),
    ]:
        verb(name, help_text).add_argument("fraction")

    for name, help_text in [
        ("components", "Full report of every deformation component"),
        ("mres", "M-resolutions of the components"),
        ("nres", "N-resolutions of the components"),
        ("delta", "delta-vectors of the components"),
        ("quiver", "Quivers of the N-resolutions"),
    ]:
        sub = verb(name, help_text)
        sub.add_argument("fraction")
        sub.add_argument("--component", type=int, default=None, help="1-based component position")

    antiflip = verb("antiflip", "Apply a braid word of antiflips to a chain")
    antiflip.add_argument("--chain", required=True, help="Chain such as [2|1]-(1)-[3|1]")
    antiflip.add_argument("--target", required=True, help="Fraction the chain contracts to")
    antiflip.add_argument("--word", required=True, help="Braid word such as R2,R1,R2")

    verb("schedule", "Right antiflips taking an M-resolution to its N-resolution").add_argument("m", type=int)

    qabc = verb("qabc", "Realizability of the triangle quiver Q_{a,b,c}")
    qabc.add_argument("a", type=int)
    qabc.add_argument("b", type=int)
    qabc.add_argument("c", type=int, nargs="?", default=None)
    qabc.add_argument("--c-max", type=int, default=None, help="List every realizable c up to this bound")

    dolg = verb("dolgachev", "Wahl degeneration data of the Dolgachev surface X_{p,q}")
    dolg.add_argument("p", type=int)
    dolg.add_argument("q", type=int)

    verb("sweep", "Cross-validate every invariant for delta up to DELTA_MAX").add_argument("delta_max", type=int)
    return parser


def _fraction(text: str) -> CqsFraction:
    try:
        return CqsFraction.parse(text)
    except ValueError as exc:
        raise FractionArgumentError(str(exc)) from exc


def _select(reports: List[ComponentReport], position: Optional[int]) -> List[ComponentReport]:
    if position is None:
        return reports
    if not 1 <= position <= len(reports):
        raise UsageError(f"--component must be between 1 and {len(reports)}")
    return [reports[position - 1]]


class CommandRunner:
    """Maps each verb onto one library call and renders the result."""

    def __init__(
        self,
        settings: Settings,
        *,
        telemetry_service: Optional[TelemetryService] = None,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._settings = settings
        self._telemetry = telemetry_service
        self._logger = logger or logging.getLogger(self.__class__.__name__)
        self._components = ComponentService(telemetry_service=telemetry_service)
        self._handlers: Dict[str, Callable[[argparse.Namespace, str], tuple[str, int]]] = {
            "expand": self._expand,
            "dual": self._dual,
            "zero-fractions": self._zero_fractions,
            "components": self._report,
            "mres": self._report,
            "nres": self._report,
            "delta": self._report,
            "quiver": self._report,
            "antiflip": self._antiflip,
            "schedule": self._schedule,
            "qabc": self._qabc,
            "dolgachev": self._dolgachev,
            "sweep": self._sweep,
        }

    def run(self, args: argparse.Namespace) -> tuple[str, int]:
        fmt = args.format or self._settings.output.default_format
        self._logger.info("Running %s with format %s", args.verb, fmt)
        return self._handlers[args.verb](args, fmt)

    def _expand(self, args: argparse.Namespace, fmt: str) -> tuple[str, int]:
        f = _fraction(args.fraction)
        entries = hj_expand(f)
        if fmt == "json":
            return formatters.to_json({"fraction": str(f), "hj": list(entries)}), EXIT_OK
        return formatters.hj_text(entries), EXIT_OK

    def _dual(self, args: argparse.Namespace, fmt: str) -> tuple[str, int]:
        f = _fraction(args.fraction)
        entries = hj_dual(f)
        if fmt == "json":
            return formatters.to_json({"fraction": str(f.dual()), "hj": list(entries)}), EXIT_OK
        return formatters.hj_text(entries), EXIT_OK

    def _zero_fractions(self, args: argparse.Namespace, fmt: str) -> tuple[str, int]:
        f = _fraction(args.fraction)
        fractions = enumerate_zero_fractions(f)
        if fmt == "json":
            payload = [{"k": list(z.k), "b": list(z.b), "artin_convention": z.artin_convention} for z in fractions]
            return formatters.to_json(payload), EXIT_OK
        return "".join(f"{z}\n" for z in fractions), EXIT_OK

    def _report(self, args: argparse.Namespace, fmt: str) -> tuple[str, int]:
        f = _fraction(args.fraction)
        reports = self._components.components(f)
        total = len(reports)
        selected = _select(reports, getattr(args, "component", None))
        verb = args.verb

        if fmt == "dot":
            if verb not in ("components", "quiver"):
                raise UsageError(f"--format dot is only available for components and quiver, not {verb}")
            return formatters.components_dot(selected, first=args.component or 1), EXIT_OK
        if fmt == "json":
            payload = [formatters.component_dict(report) for report in selected]
            return formatters.to_json(payload), EXIT_OK

        if verb == "components":
            if len(selected) == total:
                return formatters.components_text(selected), EXIT_OK
            position = args.component
            return formatters.component_text(selected[0], position, total), EXIT_OK
        if verb == "mres":
            return formatters.resolution_lines([(r.zero_fraction, r.m_res) for r in selected]), EXIT_OK
        if verb == "nres":
            return formatters.resolution_lines([(r.zero_fraction, r.n_res) for r in selected]), EXIT_OK
        if verb == "delta":
            return "".join(f"{r.zero_fraction} {r.delta}\n" for r in selected), EXIT_OK
        blocks = [
            f"{r.zero_fraction}\n" + "".join(f"{formatters.INDENT}{line}\n" for line in formatters.quiver_lines(r.quiver))
            for r in selected
        ]
        return "".join(blocks), EXIT_OK

    def _antiflip(self, args: argparse.Namespace, fmt: str) -> tuple[str, int]:
        target = _fraction(args.target)
        start = parse_resolution(args.chain, target)
        contracts_to(start)
        word = BraidWord.parse(args.word)
        word.check_range(start.r)
        steps = trace_word(start, word, telemetry=self._telemetry)
        if fmt == "json":
            return formatters.to_json(formatters.antiflip_dict(steps, start)), EXIT_OK
        if fmt == "dot":
            raise UsageError("--format dot is only available for components and quiver")
        return formatters.antiflip_text(steps, start), EXIT_OK

    def _schedule(self, args: argparse.Namespace, fmt: str) -> tuple[str, int]:
        word = mn_schedule(args.m)
        if fmt == "json":
            return formatters.to_json({"m": args.m, "word": [str(step) for step in word]}), EXIT_OK
        return f"{word}\n", EXIT_OK

    def _qabc(self, args: argparse.Namespace, fmt: str) -> tuple[str, int]:
        a, b = args.a, args.b
        if args.c_max is not None:
            found = enumerate_c(a, b, args.c_max)
            if fmt == "json":
                payload = {str(c): formatters.witness_dict(w) for c, w in found.items()}
                return formatters.to_json(payload), EXIT_OK
            return "".join(formatters.witness_text(a, b, c, w) for c, w in found.items()), EXIT_OK
        if args.c is None:
            raise UsageError("qabc needs C or --c-max")
        witness = check_Q_abc(a, b, args.c)
        if fmt == "json":
            return formatters.to_json(formatters.witness_dict(witness)), EXIT_OK
        return formatters.witness_text(a, b, args.c, witness), EXIT_OK

    def _dolgachev(self, args: argparse.Namespace, fmt: str) -> tuple[str, int]:
        report = dolgachev(args.p, args.q)
        if fmt == "json":
            return formatters.to_json(formatters.dolgachev_dict(report)), EXIT_OK
        if fmt == "dot":
            return render_dot(report.quiver, f"dolgachev {args.p} {args.q}"), EXIT_OK
        return formatters.dolgachev_text(report), EXIT_OK

    def _sweep(self, args: argparse.Namespace, fmt: str) -> tuple[str, int]:
        config = self._settings.sweep
        summary = sweep(
            args.delta_max,
            jobs=args.jobs or config.jobs,
            seed=config.seed if args.seed is None else args.seed,
            braid_checks=config.braid_checks,
            telemetry=self._telemetry,
        )
        code = EXIT_OK if summary.ok else EXIT_DOMAIN_ERROR
        if fmt == "json":
            return formatters.to_json(summary.to_dict()), code
        return summary.to_text(), code


def _grammar_hint(exc: BaseException) -> Optional[str]:
    if isinstance(exc, (ChainSyntaxError, BraidWordSyntaxError, FractionArgumentError)):
        return exc.GRAMMAR
    return None


def execute(
    args: argparse.Namespace,
    settings: Optional[Settings] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Run parsed arguments and map failures onto exit codes."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        settings = settings or Settings()
    except ValidationError as exc:
        stderr.write(f"cqsres: invalid settings: {exc}\n")
        return EXIT_USAGE

    telemetry = TelemetryService(settings)
    telemetry.initialize()
    try:
        output, code = CommandRunner(settings, telemetry_service=telemetry).run(args)
    except ResolutionError as exc:
        logger.debug("Domain error", exc_info=exc)
        notes = "".join(f" ({note})" for note in getattr(exc, "__notes__", []))
        stderr.write(f"cqsres: {type(exc).__name__}: {exc}{notes}\n")
        return EXIT_DOMAIN_ERROR
    except (UsageError, ValueError) as exc:
        stderr.write(f"cqsres: {exc}\n")
        hint = _grammar_hint(exc)
        if hint:
            stderr.write(f"expected: {hint}\n")
        return EXIT_USAGE
    finally:
        telemetry.shutdown()

    if args.out:
        Path(args.out).write_text(output, encoding="utf-8")
    else:
        formatters.emit(output, stdout, settings.output.color)
    return code


def run(argv: Optional[Sequence[str]] = None, *, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Parse ``argv`` and execute it; argparse errors become exit code 2."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return execute(args, stdout=stdout, stderr=stderr)


__all__ = [
    "EXIT_OK",
    "EXIT_DOMAIN_ERROR",
    "EXIT_USAGE",
    "UsageError",
    "CommandRunner",
    "build_parser",
    "execute",
    "run",
]
