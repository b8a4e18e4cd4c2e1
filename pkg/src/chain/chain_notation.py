"""Parser and printer for the chain notation ``[2|1]-(1)-[3|1]``."""

from __future__ import annotations

import re
from enum import Enum
from typing import NamedTuple, Optional, Tuple, Union

from src.cfrac import CqsFraction, WahlSingularity, format_hj, wahl_cf
from src.errors import ChainSyntaxError

from .chain_models import WahlResolution

_NODE = re.compile(r"\[(\d+)\|(\d+)\]|\*")
_LINK = re.compile(r"-\((\d+)\)-")


class ChainStyle(str, Enum):
    """How a chain is rendered."""

    GRAMMAR = "grammar"
    DISPLAY = "display"
    HJ = "hj"


class ChainParts(NamedTuple):
    sings: Tuple[WahlSingularity, ...]
    curves: Tuple[int, ...]


def _positive(text: str, source: str, position: int) -> int:
    if len(text) > 1 and text.startswith("0"):
        raise ChainSyntaxError("leading zero in integer", text=source, position=position)
    value = int(text)
    if value < 1:
        raise ChainSyntaxError("integers must be >= 1", text=source, position=position)
    return value


def _node(source: str, position: int) -> Tuple[WahlSingularity, int]:
    match = _NODE.match(source, position)
    if not match:
        raise ChainSyntaxError("expected '[n|a]' or '*'", text=source, position=position)
    if match.group(0) == "*":
        return WahlSingularity.smooth(), match.end()
    n = _positive(match.group(1), source, match.start(1))
    a = _positive(match.group(2), source, match.start(2))
    try:
        return WahlSingularity(n, a), match.end()
    except ValueError as exc:
        raise ChainSyntaxError(str(exc), text=source, position=position) from exc


def parse_chain(text: str) -> ChainParts:
    """Parse ``chain := node ("-(" INT ")-" node)*``."""
    source = text.strip()
    sings = []
    curves = []
    point, position = _node(source, 0)
    sings.append(point)
    while position < len(source):
        link = _LINK.match(source, position)
        if not link:
            raise ChainSyntaxError("expected '-(c)-'", text=source, position=position)
        curves.append(_positive(link.group(1), source, link.start(1)))
        point, position = _node(source, link.end())
        sings.append(point)
    return ChainParts(tuple(sings), tuple(curves))


def parse_resolution(text: str, target: CqsFraction) -> WahlResolution:
    parts = parse_chain(text)
    return WahlResolution(target, parts.sings, parts.curves)


def _render_point(point: WahlSingularity, style: ChainStyle) -> Optional[str]:
    if point.is_smooth:
        return None if style is not ChainStyle.GRAMMAR else "*"
    if style is ChainStyle.HJ:
        return format_hj(wahl_cf(point))
    return str(point)


def print_chain(chain: Union[WahlResolution, ChainParts], style: ChainStyle = ChainStyle.GRAMMAR) -> str:
    """Render a chain.

    ``GRAMMAR`` is the parseable form; ``DISPLAY`` drops smooth points so the
    minimal resolution reads ``(3)-(4)-(2)``; ``HJ`` additionally writes every
    Wahl point as its continued fraction, ``[4]-(1)-[5,2]``.
    """
    style = ChainStyle(style)
    tokens = []
    for index, point in enumerate(chain.sings):
        if index:
            tokens.append(f"({chain.curves[index - 1]})")
        rendered = _render_point(point, style)
        if rendered is not None:
            tokens.append(rendered)
    return "-".join(tokens) or "*"


__all__ = [
    "ChainStyle",
    "ChainParts",
    "parse_chain",
    "parse_resolution",
    "print_chain",
]
