"""Combinatorial data of the Dolgachev degeneration with multiple fibers of orders p and q."""

from __future__ import annotations

import logging
from math import gcd
from typing import Optional, Tuple

from src.braid import n_resolution_of
from src.cfrac import WahlSingularity, hj_eval
from src.chain import WahlResolution, chain_string, contract_string, contracts_to, curve_from_delta, print_chain
from src.errors import InvalidParameters, InvariantViolation

from .hom_dimensions import hom_dims
from .quiver_models import DolgachevReport, Quiver

logger = logging.getLogger(__name__)

QUOTED = "quoted"
COMPUTED = "computed"


def _validate(p: int, q: int) -> None:
    if p < 2 or q < 2:
        raise InvalidParameters(f"p and q must be at least 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise InvalidParameters(f"p = {p} and q = {q} are not coprime")
    if q % 3 == 0:
        raise InvalidParameters(f"q = {q} is divisible by 3")


def predicted_fractions(p: int, q: int) -> Optional[Tuple[Tuple[int, int], ...]]:
    """Wahl data of the N-resolution in the closed form known for p >= 3.

    The first nine points satisfy n/(n - a) = [q, 2^{q-2}, 3, 2^{p-3}] and the
    last one is (q, q - 1).
    """
    if p < 3:
        return None
    entries = (q,) + (2,) * (q - 2) + (3,) + (2,) * (p - 3)
    n, complement = hj_eval(entries)
    return ((n, n - complement),) * 9 + ((q, q - 1),)


def _m_resolution(p: int, q: int) -> WahlResolution:
    sings = [WahlSingularity(q, q - 1)] + [WahlSingularity(p, 1)] * 9
    deltas = [p * q - p - q] + [0] * 8
    curves = [curve_from_delta(sings[i], sings[i + 1], deltas[i]) for i in range(9)]
    target = contract_string(chain_string(sings, curves))
    return WahlResolution.build(target, sings, curves)


def _check_quiver(quiver: Quiver, weight: int) -> None:
    top = quiver.size - 1
    for i, j, value in quiver.hom_entries():
        if i != top:
            raise InvariantViolation(f"unexpected hom(E_{i}, E_{j}) = {value}")
    for j in range(top):
        if quiver.hom[top][j] != weight:
            raise InvariantViolation(f"hom(E_{top}, E_{j}) = {quiver.hom[top][j]}, expected {weight}")


def dolgachev(p: int, q: int) -> DolgachevReport:
    _validate(p, q)
    weight = p * q - p - q
    m_res = _m_resolution(p, q)
    contracts_to(m_res)
    n_res = n_resolution_of(m_res)
    logger.info("Dolgachev (%s, %s): %s -> %s", p, q, print_chain(m_res), print_chain(n_res))

    predicted = predicted_fractions(p, q)
    if predicted is not None:
        observed = tuple((point.n, point.a) for point in n_res.sings)
        if observed != predicted:
            raise InvariantViolation(f"N-resolution points {observed} differ from the closed form {predicted}")

    quiver = hom_dims(n_res)
    _check_quiver(quiver, weight)
    return DolgachevReport(
        p=p,
        q=q,
        target=m_res.target,
        delta=(weight,) + (0,) * 8,
        m_res=m_res,
        n_res=n_res,
        quiver=quiver,
        predicted_fractions=predicted,
        gram_matrix=((-1, 3 * weight), (0, -1)),
        provenance={
            "gram_matrix": QUOTED,
            "full_collection": QUOTED,
            "predicted_fractions": QUOTED if predicted is not None else "unavailable",
            "quiver": COMPUTED,
        },
    )


__all__ = [
    "predicted_fractions",
    "dolgachev",
]
