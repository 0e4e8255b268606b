"""Brute-force reference computations shared by the tests.

Nothing here imports nzcgraph: vectors are compared coordinate by coordinate
and indices are summed straight from an adjacency matrix.
"""
from itertools import combinations, product


def nonzero_vectors(q, n):
    # radix order with coords[0] least significant
    vecs = [tuple(reversed(v)) for v in product(range(q), repeat=n)]
    vecs.sort(key=lambda v: sum(c * q ** i for i, c in enumerate(v)))
    return [v for v in vecs if any(v)]


def share_nonzero(a, b):
    return any(x != 0 and y != 0 for x, y in zip(a, b))


def adjacency_matrix(q, n):
    vecs = nonzero_vectors(q, n)
    return [[i != j and share_nonzero(a, b) for j, b in enumerate(vecs)]
            for i, a in enumerate(vecs)]


def indices_from_matrix(adj):
    nv = len(adj)
    deg = [sum(row) for row in adj]
    m1 = sum(d * d for d in deg)
    f = sum(d ** 3 for d in deg)
    m2 = co1 = co2 = edges = 0
    for u, v in combinations(range(nv), 2):
        if adj[u][v]:
            edges += 1
            m2 += deg[u] * deg[v]
        else:
            co1 += deg[u] + deg[v]
            co2 += deg[u] * deg[v]
    return {"vertices": nv, "edges": edges, "m1": m1, "m2": m2, "F": f,
            "co_m1": co1, "co_m2": co2, "degrees": deg}


def complement_matrix(adj):
    nv = len(adj)
    return [[i != j and not adj[i][j] for j in range(nv)] for i in range(nv)]


def matrix_from_edges(nv, edges):
    adj = [[False] * nv for _ in range(nv)]
    for u, v in edges:
        adj[u][v] = adj[v][u] = True
    return adj
