"""Unit tests for the cross-validation sweep."""

import logging

import pytest

from src.cli import SweepSummary, check_pair, coprime_pairs, sweep


def test_coprime_pairs():
    pairs = list(coprime_pairs(5))
    assert len(pairs) == 9
    assert pairs[0] == (2, 1)
    assert (4, 2) not in pairs


def test_check_pair_19_7():
    outcome = check_pair(19, 7)
    assert outcome.failures == []
    assert outcome.components == 3
    assert [candidate[2:] for candidate in outcome.braid_candidates] == [(0, 3), (1, 2)]


def test_check_pair_du_val():
    outcome = check_pair(5, 4)
    assert outcome.failures == []
    assert outcome.components == 1


def test_sweep_without_braid_candidates(caplog):
    with caplog.at_level(logging.WARNING):
        summary = sweep(2)
    assert summary.ok
    assert summary.pairs == 1
    assert summary.braid_checks == 0
    assert "skipping braid relation checks" in caplog.text


def test_sweep_runs_seeded_braid_checks(mock_telemetry_service):
    summary = sweep(14, seed=11, braid_checks=25, telemetry=mock_telemetry_service)
    assert summary.ok, summary.first_failure
    assert summary.pairs == len(list(coprime_pairs(14)))
    assert summary.braid_checks == 25
    assert mock_telemetry_service.record_sweep_pair.call_count == summary.pairs


def test_sweep_rejects_small_bound():
    with pytest.raises(ValueError):
        sweep(1)


def test_summary_keeps_first_failure():
    summary = SweepSummary(pairs=2, components=3)
    summary.add_failure("19/7: first")
    summary.add_failure("19/8: second")
    assert not summary.ok
    assert summary.to_dict()["failures"] == 2
    assert summary.to_text().endswith("first failure: 19/7: first\n")


def test_du_val_chain_is_a_braid_candidate():
    summary = sweep(3, braid_checks=7)
    assert summary.ok, summary.first_failure
    assert summary.pairs == 3
    assert summary.braid_checks == 7
