"""Unit tests for contraction, partial contraction and crepant resolutions."""

import pytest

from src.cfrac import CqsFraction, WahlSingularity
from src.chain import (
    WahlResolution,
    contract_string,
    contracts_to,
    crepant_resolution,
    full_string,
    partial_contraction,
    print_chain,
    validate,
)
from src.errors import NotContractible


def test_full_string(make_resolution):
    W = make_resolution("[2|1]-(1)-[3|1]")
    assert full_string(W) == (4, 1, 5, 2)


def test_contract_string():
    assert contract_string((4, 1, 5, 2)) == CqsFraction(19, 7)
    assert contract_string((1,)) == CqsFraction.smooth()
    assert contract_string((2, 5, 1, 3, 5, 2)) == CqsFraction(94, 55)
    with pytest.raises(NotContractible):
        contract_string((1, 1, 1, 1, 1))


def test_contracts_to_checks_target():
    sings = (WahlSingularity(2, 1), WahlSingularity(3, 1))
    assert contracts_to(WahlResolution(CqsFraction(19, 7), sings, (1,))) == CqsFraction(19, 7)
    with pytest.raises(NotContractible):
        contracts_to(WahlResolution(CqsFraction(19, 8), sings, (1,)))


def test_partial_contraction(make_resolution):
    W = make_resolution("*-(3)-[2|1]-(2)-*")
    assert partial_contraction(W, 1, 1) == CqsFraction(4, 1)
    assert partial_contraction(W, 0, W.r) == CqsFraction(19, 7)
    with pytest.raises(IndexError):
        partial_contraction(W, 2, 1)


def test_validate(make_resolution):
    W = make_resolution("[5|2]-(1)-[2|1]")
    assert validate(W) is W


def test_crepant_resolution_of_wahl_type():
    W = crepant_resolution(CqsFraction(8, 3))
    assert print_chain(W) == "[2|1]-(1)-[2|1]"


def test_crepant_resolution_of_du_val():
    W = crepant_resolution(CqsFraction(4, 3))
    assert print_chain(W) == "*-(2)-*-(2)-*-(2)-*"


def test_crepant_resolution_rejects_non_T():
    with pytest.raises(NotContractible):
        crepant_resolution(CqsFraction(19, 7))


def test_reversed_resolution(make_resolution):
    W = make_resolution("[2|1]-(1)-[3|1]")
    mirrored = W.reversed()
    assert print_chain(mirrored) == "[3|2]-(1)-[2|1]"
    assert mirrored.target == CqsFraction(19, 11)
    assert contracts_to(mirrored) == CqsFraction(19, 11)
