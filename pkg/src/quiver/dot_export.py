"""Graphviz rendering of a quiver."""

from __future__ import annotations

from typing import Iterator

from .quiver_models import Quiver

MAX_PARALLEL_EDGES = 6


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r"\""))


def _vertex(i: int) -> str:
    return _gvquote(f"E{i}")


def quiver_dot(quiver: Quiver, name: str = "quiver") -> Iterator[str]:
    """Produce a dot file as an iterable of lines.

    Each arrow count up to six is drawn as parallel edges; larger counts are a
    single edge labelled with the multiplicity.
    """
    yield f"digraph {_gvquote(name)} {{\n"
    yield "  rankdir=LR;\n"
    for i in range(quiver.size - 1, -1, -1):
        yield f"  {_vertex(i)} [label={_gvquote(f'E{i} (rank {quiver.ranks[i]})')}];\n"
    for source, target, multiplicity in quiver.edges():
        if multiplicity > MAX_PARALLEL_EDGES:
            yield f"  {_vertex(source)} -> {_vertex(target)} [label={_gvquote(f'x{multiplicity}')}];\n"
            continue
        for _ in range(multiplicity):
            yield f"  {_vertex(source)} -> {_vertex(target)};\n"
    yield "}\n"


def render_dot(quiver: Quiver, name: str = "quiver") -> str:
    return "".join(quiver_dot(quiver, name))


__all__ = [
    "quiver_dot",
    "render_dot",
]
