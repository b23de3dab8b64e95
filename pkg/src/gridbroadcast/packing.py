"""Multipackings: exact ball counting and validity checks.

A set ``M`` is a multipacking when every ball ``N_r(v)`` holds at most ``r``
members, for every vertex ``v`` and every ``r >= 1``.  Only radii up to
``ecc(v)`` need checking: beyond that the ball is the whole vertex set and the
``r = ecc(v)`` check already bounds ``|M|``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

import numpy as np

from .graphs import (
    GraphError,
    GridShape,
    Universe,
    Vertex,
    bfs_distances,
    grid_distance,
    member_ids,
    vertex_label,
)

#: above this many vertices, general graphs are validated one BFS per centre
ALL_PAIRS_CAP = 4096


class ViolationWitness(NamedTuple):
    center: object
    radius: int
    count: int


def ball_count(universe: Universe, members: Iterable, center, r: int) -> int:
    """Number of members within distance ``r`` of ``center`` (direct enumeration)."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    members = list(members)
    if isinstance(universe, GridShape):
        if not universe.contains(center):
            raise GraphError(f"centre {tuple(center)} outside grid {universe}")
        return sum(1 for u in members if grid_distance(center, u) <= r)
    dist = bfs_distances(universe, center).dist
    return sum(1 for u in members if dist[u] <= r)


class GridBallCounter:
    """O(1) ball counts on a grid.

    With ``u = x + y`` and ``w = x - y + m - 1`` an L1 ball becomes an
    axis-aligned square, so a 2D prefix-sum table over the members' rotated
    coordinates answers any ball query with four lookups.
    """

    def __init__(self, shape: GridShape, members: Iterable):
        self.shape = shape
        ids = member_ids(shape, members)
        size = shape.n + shape.m - 1
        table = np.zeros((size + 1, size + 1), dtype=np.int64)
        for vid in ids:
            x, y = vid % shape.n, vid // shape.n
            table[x + y + 1, x - y + shape.m] += 1
        self._prefix = table.cumsum(axis=0).cumsum(axis=1)
        self._size = size
        xs, ys = np.meshgrid(np.arange(shape.n), np.arange(shape.m))
        # centre arrays in vertex-id order
        self._u = (xs + ys).ravel()
        self._w = (xs - ys + shape.m - 1).ravel()

    def _rect(self, u, w, r):
        lo_u = np.clip(u - r, 0, self._size)
        hi_u = np.clip(u + r + 1, 0, self._size)
        lo_w = np.clip(w - r, 0, self._size)
        hi_w = np.clip(w + r + 1, 0, self._size)
        p = self._prefix
        return p[hi_u, hi_w] - p[lo_u, hi_w] - p[hi_u, lo_w] + p[lo_u, lo_w]

    def count(self, center, r: int) -> int:
        x, y = center
        return int(self._rect(x + y, x - y + self.shape.m - 1, r))

    def counts(self, r: int) -> np.ndarray:
        """Ball counts at radius ``r`` for every centre, indexed by vertex id."""
        return self._rect(self._u, self._w, r)


def _count_table(universe: Universe, ids: list[int]) -> np.ndarray:
    """``table[c, r]`` = members within distance ``r`` of centre id ``c``."""
    if isinstance(universe, GridShape):
        counter = GridBallCounter(universe, [universe.vertex(i) for i in ids])
        top = universe.n + universe.m - 2
        return np.stack([counter.counts(r) for r in range(top + 1)], axis=1)
    n = universe.vertex_count
    if n <= ALL_PAIRS_CAP:
        dist = universe.distances[:, ids] if ids else np.zeros((n, 0), dtype=np.int32)
    else:
        dist = np.array([np.asarray(bfs_distances(universe, c).dist)[ids] for c in range(n)])
    top = int(dist.max()) if dist.size else 0
    table = np.zeros((n, top + 1), dtype=np.int64)
    rows = np.repeat(np.arange(n), dist.shape[1])
    np.add.at(table, (rows, dist.ravel()), 1)
    return table.cumsum(axis=1)


def check_multipacking(universe: Universe, members: Iterable) -> ViolationWitness | None:
    """Return ``None`` if valid, else the violation with smallest radius, then smallest centre id."""
    ids = member_ids(universe, members)
    if len(ids) <= 1:
        return None
    table = _count_table(universe, ids)
    radii = np.arange(table.shape[1])
    over = table > radii
    over[:, 0] = False
    hits = np.argwhere(over.T)  # rows sorted by (r, centre)
    if not len(hits):
        return None
    r, c = (int(v) for v in hits[0])
    return ViolationWitness(vertex_label(universe, c), r, int(table[c, r]))


def is_multipacking(universe: Universe, members: Iterable) -> bool:
    return check_multipacking(universe, members) is None


def max_violation_ratio(universe: Universe, members: Iterable) -> Fraction:
    """max over centres v and radii r >= 1 of ``|N_r(v) & M| / r``; at most 1 iff valid."""
    ids = member_ids(universe, members)
    if not ids:
        raise ValueError("max_violation_ratio needs a non-empty member set")
    table = _count_table(universe, ids)
    if table.shape[1] < 2:
        # single-vertex universe: the only ball of radius 1 holds the one member
        return Fraction(len(ids), 1)
    best = Fraction(0)
    for r in range(1, table.shape[1]):
        best = max(best, Fraction(int(table[:, r].max()), r))
    return best


@dataclass(frozen=True)
class Multipacking:
    universe: Universe
    members: tuple = field(default=())

    def __post_init__(self):
        if isinstance(self.universe, GridShape):
            object.__setattr__(self, "members", tuple(Vertex(int(v[0]), int(v[1])) for v in self.members))
        else:
            object.__setattr__(self, "members", tuple(int(v) for v in self.members))
        member_ids(self.universe, self.members)

    def __len__(self):
        return len(self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    def violation(self) -> ViolationWitness | None:
        return check_multipacking(self.universe, self.members)

    def is_valid(self) -> bool:
        return self.violation() is None

    def sorted_members(self) -> list:
        if isinstance(self.universe, GridShape):
            return sorted(self.members, key=lambda v: (v[1], v[0]))
        return sorted(self.members)

    def transpose(self) -> "Multipacking":
        if not isinstance(self.universe, GridShape):
            raise TypeError("only grid multipackings can be transposed")
        return Multipacking(self.universe.transpose(), tuple((y, x) for x, y in self.members))

