"""Exact Hirzebruch-Jung continued-fraction arithmetic."""

from .continued_fraction import (
    CqsFraction,
    HJString,
    blow_down,
    format_hj,
    hj_dual,
    hj_eval,
    hj_expand,
    is_canonical,
    parse_hj,
    riemenschneider_zero,
)
from .wahl_chains import TSingularity, WahlSingularity, parse_T, parse_wahl, wahl_cf, wahl_cf_dual

__all__ = [
    "CqsFraction",
    "HJString",
    "blow_down",
    "format_hj",
    "hj_dual",
    "hj_eval",
    "hj_expand",
    "is_canonical",
    "parse_hj",
    "riemenschneider_zero",
    "TSingularity",
    "WahlSingularity",
    "parse_T",
    "parse_wahl",
    "wahl_cf",
    "wahl_cf_dual",
]
