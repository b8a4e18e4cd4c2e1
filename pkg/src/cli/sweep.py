"""Cross-validation sweep over every coprime pair with delta up to a bound."""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Iterator, List, Optional, Tuple

from src.braid import check_braid_relations, n_resolution_of, replay_to_m_resolution
from src.cfrac import CqsFraction, hj_dual, hj_eval, hj_expand, riemenschneider_zero
from src.chain import extremal_delta_identity, print_chain
from src.components import (
    ComponentService,
    artin_group_sizes,
    blowup_oracle,
    rebuild_n_resolution,
    zero_fraction_keys,
)
from src.errors import ResolutionError
from src.observability.telemetry_service import TelemetryService
from src.quiver import euler_pairing, path_count_matrix, rank_identity

logger = logging.getLogger(__name__)

# (delta, omega, component position, number of curves)
BraidCandidate = Tuple[int, int, int, int]


@dataclass(slots=True)
class PairOutcome:
    delta: int
    omega: int
    components: int = 0
    failures: List[str] = field(default_factory=list)
    braid_candidates: List[BraidCandidate] = field(default_factory=list)


@dataclass(slots=True)
class SweepSummary:
    pairs: int = 0
    components: int = 0
    failures: int = 0
    first_failure: Optional[str] = None
    braid_checks: int = 0
    braid_vacuous: int = 0

    def add_failure(self, message: str) -> None:
        self.failures += 1
        if self.first_failure is None:
            self.first_failure = message

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_text(self) -> str:
        text = (
            f"checked {self.pairs} pairs, {self.components} components, {self.failures} failures\n"
            f"braid relations: {self.braid_checks} checks, {self.braid_vacuous} vacuous\n"
        )
        if self.first_failure:
            text += f"first failure: {self.first_failure}\n"
        return text

    def to_dict(self) -> Dict[str, object]:
        return {
            "pairs": self.pairs,
            "components": self.components,
            "failures": self.failures,
            "first_failure": self.first_failure,
            "braid_checks": self.braid_checks,
            "braid_vacuous": self.braid_vacuous,
        }


def coprime_pairs(delta_max: int) -> Iterator[Tuple[int, int]]:
    for delta in range(2, delta_max + 1):
        for omega in range(1, delta):
            if gcd(delta, omega) == 1:
                yield delta, omega


def check_pair(delta: int, omega: int) -> PairOutcome:
    """Run every per-pair invariant; failures are collected, never raised."""
    f = CqsFraction(delta, omega)
    outcome = PairOutcome(delta, omega)

    def fail(message: str) -> None:
        outcome.failures.append(f"{f}: {message}")

    if hj_eval(hj_expand(f)) != (delta, omega):
        fail("expansion does not evaluate back")
    if not riemenschneider_zero(f):
        fail("dual expansions do not join to a zero fraction")
    try:
        reports = ComponentService().components(f)
    except ResolutionError as exc:
        fail(f"{type(exc).__name__}: {exc}")
        return outcome
    outcome.components = len(reports)

    keys = zero_fraction_keys(report.zero_fraction for report in reports)
    if not f.is_du_val and keys != blowup_oracle(hj_dual(f)):
        fail("zero fractions differ from the blow-up oracle")

    for position, report in enumerate(reports):
        label = f"component {report.zero_fraction}"
        m_res, n_res, quiver = report.m_res, report.n_res, report.quiver
        try:
            if n_resolution_of(m_res) != n_res:
                fail(f"{label}: schedule gives {print_chain(n_resolution_of(m_res))}, expected {print_chain(n_res)}")
            if replay_to_m_resolution(n_res) != m_res:
                fail(f"{label}: inverse schedule does not return to {print_chain(m_res)}")
            if rebuild_n_resolution(m_res) != n_res:
                fail(f"{label}: N-resolution rebuilt from {print_chain(m_res)} differs")
        except ResolutionError as exc:
            fail(f"{label}: {type(exc).__name__}: {exc}")
        if not rank_identity(m_res, n_res):
            fail(f"{label}: rank identity fails")
        if path_count_matrix(quiver.arrows) != quiver.hom:
            fail(f"{label}: path counts differ from hom dimensions")
        if quiver.is_connected() == quiver.is_semisimple and quiver.size > 1:
            fail(f"{label}: connectivity does not match semisimplicity")
        for i in range(1, n_res.r + 1):
            if euler_pairing(n_res, i) != quiver.hom[i][i - 1]:
                fail(f"{label}: Euler pairing at curve {i} differs from hom")
        if m_res.r == 1 and not extremal_delta_identity(m_res):
            fail(f"{label}: extremal identity fails")
        if report.is_artin:
            sizes = tuple(value for value in report.zero_fraction.d if value)
            if sizes != artin_group_sizes(f):
                fail(f"{label}: Artin group sizes {sizes} differ from {artin_group_sizes(f)}")
        if m_res.r >= 2:
            outcome.braid_candidates.append((delta, omega, position, m_res.r))
    return outcome


def _check_pair_star(pair: Tuple[int, int]) -> PairOutcome:
    return check_pair(*pair)


def _braid_checks(candidates: List[BraidCandidate], count: int, seed: int, summary: SweepSummary) -> None:
    if not candidates:
        logger.warning("No resolution with two or more curves; skipping braid relation checks")
        return
    rng = random.Random(seed)
    service = ComponentService()
    cache: Dict[Tuple[int, int], list] = {}
    for _ in range(count):
        delta, omega, position, r = rng.choice(candidates)
        i, j = rng.sample(range(1, r + 1), 2)
        if (delta, omega) not in cache:
            cache[(delta, omega)] = service.components(CqsFraction(delta, omega))
        m_res = cache[(delta, omega)][position].m_res
        result = check_braid_relations(m_res, i, j)
        summary.braid_checks += 1
        if result.vacuous:
            summary.braid_vacuous += 1
        if not result:
            summary.add_failure(f"braid relation ({i}, {j}) on {print_chain(m_res)}: {result.reason}")


def sweep(
    delta_max: int,
    *,
    jobs: int = 1,
    seed: int = 20240417,
    braid_checks: int = 500,
    telemetry: Optional[TelemetryService] = None,
) -> SweepSummary:
    """Check every invariant on all coprime (delta, omega) with delta <= delta_max."""
    if delta_max < 2:
        raise ValueError(f"sweep needs delta_max >= 2, got {delta_max}")
    pairs = list(coprime_pairs(delta_max))
    logger.info("Sweeping %s pairs with %s worker(s)", len(pairs), jobs)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_check_pair_star, pairs, chunksize=16))
    else:
        outcomes = [check_pair(delta, omega) for delta, omega in pairs]

    summary = SweepSummary()
    candidates: List[BraidCandidate] = []
    for outcome in outcomes:
        summary.pairs += 1
        summary.components += outcome.components
        for failure in outcome.failures:
            summary.add_failure(failure)
        candidates.extend(outcome.braid_candidates)
        if telemetry:
            telemetry.record_sweep_pair(f"{outcome.delta}/{outcome.omega}", outcome.components, len(outcome.failures))
    _braid_checks(candidates, braid_checks, seed, summary)
    logger.info("Sweep finished: %s failures", summary.failures)
    return summary


__all__ = [
    "PairOutcome",
    "SweepSummary",
    "coprime_pairs",
    "check_pair",
    "sweep",
]
