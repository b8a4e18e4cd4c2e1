"""Wahl resolutions: models, intersection numbers, contraction and notation."""

from .chain_models import DiscrepancyProfile, WahlResolution
from .chain_notation import ChainParts, ChainStyle, parse_chain, parse_resolution, print_chain
from .contraction import (
    chain_string,
    contract_string,
    contracts_to,
    crepant_resolution,
    full_string,
    partial_contraction,
    validate,
)
from .intersection import (
    curve_from_delta,
    delta_signed,
    discrepancies,
    extremal_delta_identity,
    k_dot_gamma,
    signed_deltas,
    signed_invariant,
    toric_k_dot_gamma,
)

__all__ = [
    "DiscrepancyProfile",
    "WahlResolution",
    "ChainParts",
    "ChainStyle",
    "parse_chain",
    "parse_resolution",
    "print_chain",
    "chain_string",
    "contract_string",
    "contracts_to",
    "crepant_resolution",
    "full_string",
    "partial_contraction",
    "validate",
    "curve_from_delta",
    "delta_signed",
    "discrepancies",
    "extremal_delta_identity",
    "k_dot_gamma",
    "signed_deltas",
    "signed_invariant",
    "toric_k_dot_gamma",
]
