"""Immutable undirected simple graphs with dense 0-based vertex indices.

Edges are stored canonically as ``(u, v)`` with ``u < v`` in ascending order,
so two graphs compare equal exactly when they have the same vertex count and
edge set. Labels ride along as metadata and never take part in equality.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple

from .errors import InvalidEdge, SelfLoopRejected

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: Tuple[Edge, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __repr__(self):
        return f"Graph(vertex_count={self.vertex_count}, edge_count={len(self.edges)})"

    @cached_property
    def adjacency(self) -> Tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def _degrees(self) -> Tuple[int, ...]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def with_labels(self, labels: Optional[Sequence[str]]) -> "Graph":
        if labels is not None and len(labels) != self.vertex_count:
            raise ValueError("need exactly one label per vertex")
        return Graph(self.vertex_count, self.edges,
                     None if labels is None else tuple(labels))


@dataclass(frozen=True)
class DegreeSequence:
    degrees: Tuple[int, ...]

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    @property
    def max(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min(self) -> int:
        return min(self.degrees, default=0)


def build_graph(vertex_count: int, edge_list: Iterable[Sequence[int]],
                labels: Optional[Sequence[str]] = None) -> Graph:
    """Validate and canonicalize an edge list into a :class:`Graph`.

    Duplicate pairs (in either orientation) collapse to one edge.
    """
    if vertex_count < 0:
        raise ValueError("vertex_count must be nonnegative")
    canon = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise InvalidEdge(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise SelfLoopRejected(f"self-loop at vertex {u}")
        canon.add((u, v) if u < v else (v, u))
    g = Graph(vertex_count, tuple(sorted(canon)))
    return g.with_labels(labels) if labels is not None else g


def _from_sorted(vertex_count: int, edges: Iterable[Edge], labels=None) -> Graph:
    # internal constructor: caller guarantees canonical, sorted, unique edges
    return Graph(vertex_count, tuple(edges), None if labels is None else tuple(labels))


def degrees(g: Graph) -> DegreeSequence:
    return DegreeSequence(g._degrees)


def edge_count(g: Graph) -> int:
    return len(g.edges)


def complement(g: Graph) -> Graph:
    adj = g.adjacency
    n = g.vertex_count
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if v not in adj[u]]
    return _from_sorted(n, edges, g.labels)


def complete_graph(n: int) -> Graph:
    return _from_sorted(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return _from_sorted(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- serialization ---------------------------------------------------------

def to_edgelist(g: Graph) -> str:
    """``u v`` per line, canonical order, LF endings."""
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def parse_edgelist(text: str, vertex_count: Optional[int] = None) -> Graph:
    """Parse ``u v`` lines; blank lines and ``#`` comments are ignored.

    Without an explicit ``vertex_count`` the graph spans ``0..max endpoint``.
    """
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidEdge(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidEdge(f"line {lineno}: non-integer endpoint in {line!r}") from None
    if vertex_count is None:
        vertex_count = 1 + max((max(p) for p in pairs), default=-1)
    return build_graph(vertex_count, pairs)


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        if g.labels is not None:
            lines.append(f'  {v} [label="{_dot_escape(g.labels[v])}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: Graph) -> dict:
    d = {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        d["labels"] = list(g.labels)
    return d


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g), indent=2) + "\n"


def from_json(text: str) -> Graph:
    d = json.loads(text)
    return build_graph(int(d["vertex_count"]), d.get("edges", []), d.get("labels"))
