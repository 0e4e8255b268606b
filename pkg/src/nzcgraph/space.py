"""Nonzero component graphs of F_q^n, built explicitly or as a support quotient.

Vertices are the nonzero coordinate vectors. Two vectors are adjacent when
their supports (the positions holding a nonzero coordinate) intersect. Only
the zero/nonzero pattern matters, so ``q`` is used purely as a cardinality.

Canonical vertex order reads ``coords`` as a radix-``q`` integer with
``coords[0]`` as the least significant digit; vertex ``i`` is the vector whose
value is ``i + 1``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Tuple

import numpy as np

from .errors import ExplicitTooLarge, InvalidParams
from .graph import Graph, _from_sorted

DEFAULT_EXPLICIT_CAP = 100_000


def default_explicit_cap() -> int:
    env = os.environ.get("NZC_EXPLICIT_CAP")
    return int(env) if env else DEFAULT_EXPLICIT_CAP


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


@dataclass(frozen=True)
class SpaceParams:
    q: int
    n: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2:
            raise InvalidParams(f"q must be an integer >= 2, got {self.q!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidParams(f"n must be an integer >= 1, got {self.n!r}")

    @property
    def is_prime_power(self) -> bool:
        return is_prime_power(self.q)

    @property
    def order(self) -> int:
        return self.q ** self.n - 1


@dataclass(frozen=True)
class VectorLabel:
    coords: Tuple[int, ...]
    q: int

    def __post_init__(self):
        if any(not 0 <= c < self.q for c in self.coords):
            raise InvalidParams(f"coordinates must lie in [0, {self.q - 1}]: {self.coords}")
        if not any(self.coords):
            raise InvalidParams("the null vector is not a vertex")

    @property
    def support(self) -> frozenset:
        """1-based basis positions with a nonzero coefficient."""
        return frozenset(i + 1 for i, c in enumerate(self.coords) if c)

    def __str__(self):
        return ",".join(map(str, self.coords))


def support_of(label: VectorLabel) -> int:
    """Support as a bitmask; bit ``i`` set when coordinate ``i`` is nonzero."""
    mask = 0
    for i, c in enumerate(label.coords):
        if c:
            mask |= 1 << i
    return mask


def mask_positions(mask: int) -> frozenset:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _check_cap(params: SpaceParams, cap: Optional[int]) -> None:
    cap = default_explicit_cap() if cap is None else cap
    if params.order > cap:
        raise ExplicitTooLarge(params.order, cap)


def vector_coords(params: SpaceParams) -> np.ndarray:
    """All nonzero vectors in canonical order, shape ``(q^n - 1, n)``."""
    q, n = params.q, params.n
    values = np.arange(1, q ** n, dtype=np.int64)
    return np.stack([(values // q ** j) % q for j in range(n)], axis=1)


def vector_masks(params: SpaceParams) -> np.ndarray:
    coords = vector_coords(params)
    weights = np.int64(1) << np.arange(params.n, dtype=np.int64)
    return ((coords != 0) * weights).sum(axis=1).astype(np.int64)


def _labels(coords: np.ndarray) -> List[str]:
    return [",".join(map(str, row)) for row in coords.tolist()]


def build_explicit(params: SpaceParams, cap: Optional[int] = None) -> Graph:
    """Enumerate every nonzero vector and join pairs whose support masks meet."""
    _check_cap(params, cap)
    coords = vector_coords(params)
    masks = vector_masks(params)
    edges = []
    for u in range(len(masks) - 1):
        hits = np.flatnonzero(masks[u + 1:] & masks[u]) + (u + 1)
        edges.extend((u, v) for v in hits.tolist())
    return _from_sorted(len(masks), edges, _labels(coords))


@dataclass(frozen=True)
class SupportClass:
    mask: int
    size: int
    degree: int

    @property
    def weight(self) -> int:
        return bin(self.mask).count("1")


@dataclass(frozen=True)
class SupportQuotient:
    params: SpaceParams
    classes: Tuple[SupportClass, ...]

    @property
    def vertex_count(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def edge_count(self) -> int:
        return sum(c.size * c.degree for c in self.classes) // 2


def class_size(q: int, k: int) -> int:
    return (q - 1) ** k


def class_degree(q: int, n: int, k: int) -> int:
    """Degree of a vector with ``k`` nonzero coordinates."""
    return (q ** k - 1) * q ** (n - k) - 1


def build_quotient(params: SpaceParams) -> SupportQuotient:
    q, n = params.q, params.n
    masks = sorted(range(1, 1 << n), key=lambda m: (bin(m).count("1"), m))
    classes = []
    for mask in masks:
        k = bin(mask).count("1")
        classes.append(SupportClass(mask, class_size(q, k), class_degree(q, n, k)))
    return SupportQuotient(params, tuple(classes))


def _class_members(mask: int, params: SpaceParams) -> List[int]:
    """Radix values of all vectors whose support is exactly ``mask``."""
    q, n = params.q, params.n
    positions = [i for i in range(n) if mask >> i & 1]
    values = []
    for digits in product(range(1, q), repeat=len(positions)):
        values.append(sum(d * q ** p for d, p in zip(digits, positions)))
    return values


def expand_quotient(sq: SupportQuotient, cap: Optional[int] = None) -> Graph:
    """Blow each class up into a clique and fully join intersecting classes.

    Class members are given their coordinate vectors and the result is
    relabelled into canonical radix order, so it can be compared directly
    with :func:`build_explicit`.
    """
    params = sq.params
    _check_cap(params, cap)
    q, n = params.q, params.n
    # radix value v maps to canonical index v - 1
    members = [[v - 1 for v in _class_members(c.mask, params)] for c in sq.classes]
    for c, mem in zip(sq.classes, members):
        if len(mem) != c.size:
            raise AssertionError(f"class {c.mask:b} has {len(mem)} members, expected {c.size}")
    edges = set()
    for a, ca in enumerate(sq.classes):
        ma = members[a]
        for i, u in enumerate(ma):
            for v in ma[i + 1:]:
                edges.add((u, v) if u < v else (v, u))
        for b in range(a + 1, len(sq.classes)):
            if not ca.mask & sq.classes[b].mask:
                continue
            for u in ma:
                for v in members[b]:
                    edges.add((u, v) if u < v else (v, u))
    total = q ** n - 1
    labels = [",".join(str(v // q ** j % q) for j in range(n)) for v in range(1, total + 1)]
    return _from_sorted(total, sorted(edges), labels)
