"""Unit tests for the ComponentService."""

from unittest.mock import patch

import pytest

from src.cfrac import CqsFraction
from src.chain import ChainStyle, print_chain
from src.components import ComponentService, components
from src.errors import ConstructionFailed
from src.quiver import rank_identity


def test_components_of_19_7(f_19_7, mock_telemetry_service):
    service = ComponentService(telemetry_service=mock_telemetry_service)
    reports = service.components(f_19_7)

    assert [report.dimension for report in reports] == [6, 4, 2]
    assert [report.is_artin for report in reports] == [True, False, False]
    assert mock_telemetry_service.start_activity.call_count == 3
    assert mock_telemetry_service.record_component_build.call_count == 3
    mock_telemetry_service.record_error.assert_not_called()


def test_every_report_satisfies_rank_identity():
    for report in components(CqsFraction(89, 33)):
        assert rank_identity(report.m_res, report.n_res)
        assert report.quiver.ranks == report.n_res.indices


TABLE_85_49 = [
    (
        (1, 2, 2, 2, 2, 1),
        10,
        (0, 2, 3, 0, 0),
        "(2)-(4)-(5)-(2)-(2)",
        "[26|15]-(1)-[26|15]-(1)-[26|15]-(1)-[5|3]-(1)-(2)",
    ),
    (
        (1, 2, 3, 2, 1, 3),
        6,
        (0, 8, 1),
        "(2)-(4)-[3|1]-(2)",
        "[26|15]-(1)-[19|11]-(1)-(2)",
    ),
    (
        (2, 1, 3, 2, 2, 1),
        8,
        (1, 7, 0, 0),
        "(2)-[2|1]-(5)-(2)-(2)",
        "[26|15]-(1)-[26|15]-(1)-[26|15]-(1)-[3|2]-(1)",
    ),
    ((2, 2, 3, 1, 2, 4), 2, (5,), "(2)-[7|2]", "[12|7]-(1)"),
    ((3, 1, 3, 2, 1, 4), 2, (5,), "[3|2]-(1)-[4|1]", "[19|11]-(1)-[3|2]"),
]


def test_components_of_85_49():
    reports = components(CqsFraction(85, 49))
    rows = [
        (
            report.zero_fraction.k,
            report.dimension,
            report.delta.values,
            print_chain(report.m_res, ChainStyle.DISPLAY),
            print_chain(report.n_res, ChainStyle.DISPLAY),
        )
        for report in reports
    ]
    assert rows == TABLE_85_49
    assert [report.is_artin for report in reports] == [True, False, False, False, False]


def test_components_of_4_1():
    reports = components(CqsFraction(4, 1))
    assert [report.zero_fraction.k for report in reports] == [(1, 2, 1), (2, 1, 2)]
    assert sum(report.is_artin for report in reports) == 1


def test_du_val_has_single_artin_component():
    (report,) = components(CqsFraction(5, 4))
    assert report.is_artin
    assert report.zero_fraction.artin_convention
    assert report.quiver.is_semisimple


def test_failed_build_is_recorded(f_19_7, mock_telemetry_service):
    service = ComponentService(telemetry_service=mock_telemetry_service)
    with patch(
        "src.components.component_service.m_resolution",
        side_effect=ConstructionFailed("prefix is not Wahl data"),
    ):
        with pytest.raises(ConstructionFailed) as excinfo:
            service.components(f_19_7)

    mock_telemetry_service.record_error.assert_called_once_with(
        "components", "ConstructionFailed", "prefix is not Wahl data"
    )
    assert any("[1,2,2,1]" in note for note in excinfo.value.__notes__)
