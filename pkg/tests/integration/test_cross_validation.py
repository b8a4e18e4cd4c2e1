"""Exhaustive cross-validation over every coprime pair with delta <= 100."""

import pytest

from src.cli import coprime_pairs, check_pair, sweep

pytestmark = [pytest.mark.integration, pytest.mark.slow]


@pytest.mark.parametrize("delta", range(2, 101))
def test_every_pair_passes_all_checks(delta: int):
    failures = [
        failure
        for pair in coprime_pairs(delta)
        if pair[0] == delta
        for failure in check_pair(*pair).failures
    ]
    assert failures == []


def test_seeded_braid_relation_checks():
    summary = sweep(60, seed=20240417, braid_checks=500)
    assert summary.ok, summary.first_failure
    assert summary.braid_checks == 500
    assert summary.braid_vacuous < summary.braid_checks
