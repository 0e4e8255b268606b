"""Subdivision, line, semitotal and para-line graphs.

S, T1 and T2 keep the original vertices at their indices and append one
vertex per edge in canonical edge order, so ``n_v + i`` is the vertex standing
for edge ``i`` in all three.
"""
from __future__ import annotations

from enum import Enum
from typing import List

from .graph import Graph, _from_sorted, degrees


class TransformKind(Enum):
    SUBDIVISION = "subdivision"
    LINE = "line"
    VERTEX_SEMITOTAL = "vertex-semitotal"
    EDGE_SEMITOTAL = "edge-semitotal"
    PARA_LINE = "para-line"


def _subdivision_edges(g: Graph):
    n = g.vertex_count
    for i, (u, v) in enumerate(g.edges):
        yield (u, n + i)
        yield (v, n + i)


def _line_edges(g: Graph, offset: int = 0):
    incident = [[] for _ in range(g.vertex_count)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    # in a simple graph two edges share at most one endpoint, so no duplicates
    out = []
    for inc in incident:
        for a in range(len(inc)):
            ea = inc[a] + offset
            out.extend((ea, eb + offset) for eb in inc[a + 1:])
    return out


def subdivision(g: Graph) -> Graph:
    return _from_sorted(g.vertex_count + len(g.edges), sorted(_subdivision_edges(g)))


def line_graph(g: Graph) -> Graph:
    return _from_sorted(len(g.edges), sorted(_line_edges(g)))


def vertex_semitotal(g: Graph) -> Graph:
    edges = list(_subdivision_edges(g))
    edges.extend(g.edges)
    return _from_sorted(g.vertex_count + len(g.edges), sorted(edges))


def edge_semitotal(g: Graph) -> Graph:
    edges = list(_subdivision_edges(g))
    edges.extend(_line_edges(g, offset=g.vertex_count))
    return _from_sorted(g.vertex_count + len(g.edges), sorted(edges))


def para_line(g: Graph) -> Graph:
    return line_graph(subdivision(g))


_TRANSFORMS = {
    TransformKind.SUBDIVISION: subdivision,
    TransformKind.LINE: line_graph,
    TransformKind.VERTEX_SEMITOTAL: vertex_semitotal,
    TransformKind.EDGE_SEMITOTAL: edge_semitotal,
    TransformKind.PARA_LINE: para_line,
}


def apply_transform(kind: TransformKind, g: Graph) -> Graph:
    return _TRANSFORMS[TransformKind(kind)](g)


def derived_degrees(kind: TransformKind, g: Graph) -> List[int]:
    """Degree sequence of ``apply_transform(kind, g)`` without building it.

    Vertex order matches the materialized graph. Useful when the derived
    graph is far larger than ``g`` (line graphs of dense graphs).
    """
    kind = TransformKind(kind)
    d = degrees(g).degrees
    if kind is TransformKind.SUBDIVISION:
        return list(d) + [2] * len(g.edges)
    if kind is TransformKind.VERTEX_SEMITOTAL:
        return [2 * x for x in d] + [2] * len(g.edges)
    if kind is TransformKind.EDGE_SEMITOTAL:
        return list(d) + [d[u] + d[v] for u, v in g.edges]
    if kind is TransformKind.LINE:
        return [d[u] + d[v] - 2 for u, v in g.edges]
    # PL = L(S): the S-edge joining original u to edge-vertex e has degree d(u) + 2 - 2
    return [d[u] for u, _ in sorted((w, i) for i, e in enumerate(g.edges) for w in e)]
