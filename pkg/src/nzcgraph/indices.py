"""Degree-based topological indices, computed exactly.

Three routes produce an :class:`IndexBundle`:

* :func:`bundle` works from the definitions on a materialized :class:`Graph`
  (edge sums and a full non-edge pair scan). This is the oracle.
* :func:`bundle_from_vectors` enumerates the nonzero vectors of F_q^n and
  tests every vertex pair by support intersection without storing edges, for
  sizes whose edge set would not fit in memory.
* :func:`bundle_from_quotient` sums over support classes and never touches
  individual vertices.

All arithmetic on index values uses Python integers.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

import numpy as np

from .graph import Graph, degrees
from .space import SpaceParams, SupportQuotient, vector_masks


@dataclass(frozen=True)
class IndexBundle:
    vertex_count: int
    edge_count: int
    m1: int
    m2: int
    forgotten: int
    co_m1: int
    co_m2: int

    def as_tuple(self):
        return (self.m1, self.m2, self.forgotten, self.co_m1, self.co_m2)

    def to_dict(self) -> dict:
        return {k: str(v) for k, v in asdict(self).items()}


def m1(g: Graph) -> int:
    return sum(d * d for d in degrees(g))


def m1_edge_form(g: Graph) -> int:
    deg = degrees(g)
    return sum(deg[u] + deg[v] for u, v in g.edges)


def m2(g: Graph) -> int:
    deg = degrees(g)
    return sum(deg[u] * deg[v] for u, v in g.edges)


def forgotten(g: Graph) -> int:
    return sum(d ** 3 for d in degrees(g))


def forgotten_edge_form(g: Graph) -> int:
    deg = degrees(g)
    return sum(deg[u] ** 2 + deg[v] ** 2 for u, v in g.edges)


def _non_edges(g: Graph):
    adj = g.adjacency
    n = g.vertex_count
    for u in range(n):
        au = adj[u]
        for v in range(u + 1, n):
            if v not in au:
                yield u, v


def m1_coindex(g: Graph) -> int:
    deg = degrees(g)
    return sum(deg[u] + deg[v] for u, v in _non_edges(g))


def m2_coindex(g: Graph) -> int:
    deg = degrees(g)
    return sum(deg[u] * deg[v] for u, v in _non_edges(g))


def bundle(g: Graph) -> IndexBundle:
    deg = degrees(g).degrees
    s2 = s3 = 0
    for d in deg:
        s2 += d * d
        s3 += d * d * d
    p2 = 0
    for u, v in g.edges:
        p2 += deg[u] * deg[v]
    co1 = co2 = 0
    for u, v in _non_edges(g):
        co1 += deg[u] + deg[v]
        co2 += deg[u] * deg[v]
    return IndexBundle(g.vertex_count, len(g.edges), s2, p2, s3, co1, co2)


def bundle_from_vectors(params: SpaceParams, block: int = 512) -> IndexBundle:
    """Pairwise support-intersection oracle that never stores the edge set.

    Memory is ``O(block * (q^n - 1))``; time is quadratic in the vertex count.
    """
    masks = vector_masks(params)
    nv = len(masks)
    deg = np.empty(nv, dtype=np.int64)
    for lo in range(0, nv, block):
        adj = (masks[lo:lo + block, None] & masks[None, :]) != 0
        deg[lo:lo + block] = adj.sum(axis=1) - 1  # every vertex meets itself
    degf = deg.astype(np.float64)
    nbr_sum = np.empty(nv, dtype=np.int64)
    for lo in range(0, nv, block):
        adj = ((masks[lo:lo + block, None] & masks[None, :]) != 0).astype(np.float64)
        # exact: partial sums stay far below 2**53 under any sane cap
        nbr_sum[lo:lo + block] = np.rint(adj @ degf).astype(np.int64) - deg[lo:lo + block]
    d = [int(x) for x in deg.tolist()]
    s = [int(x) for x in nbr_sum.tolist()]
    s1 = sum(d)
    s2 = sum(x * x for x in d)
    s3 = sum(x * x * x for x in d)
    twice_m2 = sum(a * b for a, b in zip(d, s))
    if s1 % 2 or twice_m2 % 2:
        raise AssertionError("handshake parity violated in vector oracle")
    m = s1 // 2
    p2 = twice_m2 // 2
    # every unordered distinct pair contributes deg(u)deg(v) to m2 or co_m2
    all_pairs = (s1 * s1 - s2) // 2
    co1 = sum(x * (nv - 1 - x) for x in d)
    return IndexBundle(nv, m, s2, p2, s3, co1, all_pairs - p2)


def class_power_sum(sq: SupportQuotient, power: int) -> int:
    """Sum of ``degree ** power`` over all vertices, one term per class."""
    return sum(c.size * c.degree ** power for c in sq.classes)


def bundle_from_quotient(sq: SupportQuotient) -> IndexBundle:
    classes = sq.classes
    nv = sq.vertex_count
    m = sq.edge_count
    s2 = class_power_sum(sq, 2)
    s3 = class_power_sum(sq, 3)
    # edges inside a class: every class is a clique
    p2 = sum(comb(c.size, 2) * c.degree * c.degree for c in classes)
    co2 = 0
    for i, a in enumerate(classes):
        wa = a.size * a.degree
        for b in classes[i + 1:]:
            term = wa * b.size * b.degree
            if a.mask & b.mask:
                p2 += term
            else:
                co2 += term
    co1 = 2 * m * (nv - 1) - s2
    return IndexBundle(nv, m, s2, p2, s3, co1, co2)
