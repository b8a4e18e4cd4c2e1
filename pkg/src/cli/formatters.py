"""Text, JSON and DOT rendering of command results."""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional, Sequence, TextIO

from rich.console import Console

from src.braid import AntiflipResult
from src.cfrac import format_hj
from src.chain import ChainStyle, WahlResolution, print_chain
from src.components import ComponentReport, ZeroFraction
from src.quiver import DolgachevReport, ExtremalWitness, Quiver, quiver_dot

INDENT = "  "


def _edge_list(entries: Sequence[tuple[int, int, int]]) -> str:
    if not entries:
        return "none"
    return ", ".join(f"E{i}->E{j} x{value}" for i, j, value in entries)


def quiver_lines(quiver: Quiver) -> List[str]:
    ranks = " ".join(f"E{i}={quiver.ranks[i]}" for i in range(quiver.size - 1, -1, -1))
    return [
        f"ranks: {ranks}",
        f"hom: {_edge_list(quiver.hom_entries())}",
        f"arrows: {_edge_list(quiver.edges())}",
    ]


def component_text(report: ComponentReport, position: int, total: int) -> str:
    lines = [
        f"{report.target} component {position} of {total}",
        f"zero fraction: {report.zero_fraction}",
        f"dimension: {report.dimension}",
        f"delta: {report.delta}",
        f"M-resolution: {print_chain(report.m_res)}",
        f"M display: {print_chain(report.m_res, ChainStyle.DISPLAY)}",
        f"N-resolution: {print_chain(report.n_res)}",
        f"N display: {print_chain(report.n_res, ChainStyle.DISPLAY)}",
        *quiver_lines(report.quiver),
    ]
    return lines[0] + "\n" + "".join(f"{INDENT}{line}\n" for line in lines[1:])


def components_text(reports: Sequence[ComponentReport]) -> str:
    return "\n".join(component_text(report, i, len(reports)) for i, report in enumerate(reports, start=1))


def component_dict(report: ComponentReport) -> Dict[str, Any]:
    return {
        "target": str(report.target),
        "zero_fraction": list(report.zero_fraction.k),
        "artin_convention": report.zero_fraction.artin_convention,
        "dimension": report.dimension,
        "delta": list(report.delta.values),
        "m_resolution": print_chain(report.m_res),
        "n_resolution": print_chain(report.n_res),
        "quiver": report.quiver.to_dict(),
    }


def components_dot(reports: Sequence[ComponentReport], first: int = 1) -> str:
    return "".join(
        "".join(quiver_dot(report.quiver, f"{report.target} component {i}"))
        for i, report in enumerate(reports, start=first)
    )


def resolution_lines(pairs: Sequence[tuple[ZeroFraction, WahlResolution]]) -> str:
    return "".join(f"{z} {print_chain(W)}\n" for z, W in pairs)


def antiflip_text(steps: Sequence[AntiflipResult], start: WahlResolution) -> str:
    final = steps[-1].resolution if steps else start
    return print_chain(final) + "\n"


def antiflip_dict(steps: Sequence[AntiflipResult], start: WahlResolution) -> Dict[str, Any]:
    return {
        "target": str(start.target),
        "start": print_chain(start),
        "steps": [
            {
                "generator": f"{step.direction.value}{step.index}",
                "case": step.case.value,
                "chain": print_chain(step.resolution),
            }
            for step in steps
        ],
        "chain": print_chain(steps[-1].resolution if steps else start),
    }


def witness_text(a: int, b: int, c: int, witness: Optional[ExtremalWitness]) -> str:
    if witness is None:
        return f"Q_{{{a},{b},{c}}}: not realizable\n"
    if witness.chain is None:
        return f"Q_{{{a},{b},{c}}}: realizable (degenerate index)\n"
    return (
        f"Q_{{{a},{b},{c}}}: {print_chain(witness.chain)} over {witness.chain.target}"
        f" (lambda={witness.lam}, epsilon_a={witness.epsilon_a}, epsilon_b={witness.epsilon_b})\n"
    )


def witness_dict(witness: Optional[ExtremalWitness]) -> Optional[Dict[str, Any]]:
    if witness is None:
        return None
    return {
        "a": witness.a,
        "b": witness.b,
        "c": witness.c,
        "lambda": witness.lam,
        "epsilon_a": witness.epsilon_a,
        "epsilon_b": witness.epsilon_b,
        "chain": print_chain(witness.chain) if witness.chain else None,
        "target": str(witness.chain.target) if witness.chain else None,
    }


def dolgachev_text(report: DolgachevReport) -> str:
    lines = [
        f"dolgachev p={report.p} q={report.q} target {report.target}",
        f"delta: ({','.join(str(v) for v in report.delta)})",
        f"M-resolution: {print_chain(report.m_res)}",
        f"M chains: {print_chain(report.m_res, ChainStyle.HJ)}",
        f"N-resolution: {print_chain(report.n_res)}",
        f"N chains: {print_chain(report.n_res, ChainStyle.HJ)}",
        *quiver_lines(report.quiver),
        f"gram matrix ({report.provenance['gram_matrix']}): {list(map(list, report.gram_matrix))}",
        f"full collection ({report.provenance['full_collection']}): {'yes' if report.full_collection else 'no'}",
    ]
    return lines[0] + "\n" + "".join(f"{INDENT}{line}\n" for line in lines[1:])


def dolgachev_dict(report: DolgachevReport) -> Dict[str, Any]:
    return {
        "p": report.p,
        "q": report.q,
        "target": str(report.target),
        "delta": list(report.delta),
        "m_resolution": print_chain(report.m_res),
        "n_resolution": print_chain(report.n_res),
        "quiver": report.quiver.to_dict(),
        "predicted_fractions": [list(pair) for pair in report.predicted_fractions]
        if report.predicted_fractions
        else None,
        "gram_matrix": [list(row) for row in report.gram_matrix],
        "full_collection": report.full_collection,
        "provenance": dict(report.provenance),
    }


def hj_text(entries: Sequence[int]) -> str:
    return format_hj(entries) + "\n"


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def emit(text: str, stream: TextIO, color: str = "auto") -> None:
    """Write ``text``; highlighting only when ``color`` asks for it and the stream allows it."""
    isatty = getattr(stream, "isatty", None)
    use_color = color == "always" or (color == "auto" and bool(isatty and isatty()))
    if not use_color:
        stream.write(text)
        return
    console = Console(file=stream, force_terminal=True, highlight=True, soft_wrap=True)
    console.print(text, end="", markup=False)


__all__ = [
    "quiver_lines",
    "component_text",
    "components_text",
    "component_dict",
    "components_dot",
    "resolution_lines",
    "antiflip_text",
    "antiflip_dict",
    "witness_text",
    "witness_dict",
    "dolgachev_text",
    "dolgachev_dict",
    "hj_text",
    "to_json",
    "emit",
]
