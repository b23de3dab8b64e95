"""Graph representations, distances and the standard families (grids, paths, cycles).

Grid vertices are ``Vertex(x, y)`` with ``x`` horizontal in ``[0, n-1]`` and
``y`` vertical in ``[0, m-1]``, origin at the bottom-left corner.  When a grid
is turned into a :class:`Graph`, vertex ``(x, y)`` gets id ``y * n + x``.
All results are invariant under swapping ``n`` and ``m`` (transpose).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np


class GraphError(ValueError):
    """Invalid graph or vertex input."""


class DisconnectedGraphError(GraphError):
    pass


class Vertex(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class GridShape:
    """The grid ``P_n x P_m``: ``n`` columns along x, ``m`` rows along y."""

    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, (int, np.integer)) and isinstance(self.m, (int, np.integer))):
            raise GraphError(f"grid extents must be integers, got {self.n!r}, {self.m!r}")
        if self.n < 1 or self.m < 1:
            raise GraphError(f"grid extents must be positive, got {self.n}x{self.m}")

    @property
    def vertex_count(self) -> int:
        return self.n * self.m

    def contains(self, v) -> bool:
        x, y = v
        return 0 <= x < self.n and 0 <= y < self.m

    def index(self, v) -> int:
        x, y = v
        if not self.contains(v):
            raise GraphError(f"vertex {tuple(v)} outside {self.n}x{self.m} grid")
        return int(y) * self.n + int(x)

    def vertex(self, vid: int) -> Vertex:
        return Vertex(vid % self.n, vid // self.n)

    def vertices(self) -> list[Vertex]:
        return [self.vertex(i) for i in range(self.vertex_count)]

    def transpose(self) -> "GridShape":
        return GridShape(self.m, self.n)

    @property
    def radius(self) -> int:
        return self.n // 2 + self.m // 2

    def eccentricity(self, v) -> int:
        x, y = v
        return max(x, self.n - 1 - x) + max(y, self.m - 1 - y)

    @cached_property
    def graph(self) -> "Graph":
        return make_grid(self)

    def __str__(self):
        return f"{self.n}x{self.m}"


class DistanceRow(NamedTuple):
    source: int
    dist: tuple[int, ...]


class Graph:
    """Immutable simple undirected graph on vertices ``0 .. vertex_count-1``."""

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        adj = tuple(tuple(sorted(int(u) for u in nbrs)) for nbrs in adjacency)
        n = len(adj)
        for v, nbrs in enumerate(adj):
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"duplicate edge at vertex {v}")
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"neighbour {u} of vertex {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if v not in adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._adj = adj

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range")
            adj[u].append(v)
            adj[v].append(u)
        return cls(adj)

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self._adj) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(vertex_count={self.vertex_count}, edges={self.edge_count})"

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return len(_bfs(self, 0)) == self.vertex_count

    @cached_property
    def distances(self) -> np.ndarray:
        """All-pairs distance matrix; raises on disconnected graphs."""
        n = self.vertex_count
        out = np.empty((n, n), dtype=np.int32)
        for s in range(n):
            out[s] = bfs_distances(self, s).dist
        out.setflags(write=False)
        return out

    @cached_property
    def eccentricities(self) -> np.ndarray:
        if self.vertex_count == 0:
            raise GraphError("empty graph has no eccentricities")
        ecc = self.distances.max(axis=1)
        ecc.setflags(write=False)
        return ecc


Universe = Union[GridShape, Graph]


def _bfs(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for u in g.neighbors(v):
            if u not in dist:
                dist[u] = d
                queue.append(u)
    return dist


def grid_distance(a, b) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def bfs_distances(g: Graph, source: int) -> DistanceRow:
    if not 0 <= source < g.vertex_count:
        raise GraphError(f"source {source} not a vertex")
    dist = _bfs(g, source)
    if len(dist) != g.vertex_count:
        missing = next(v for v in range(g.vertex_count) if v not in dist)
        raise DisconnectedGraphError(f"vertex {missing} unreachable from {source}")
    return DistanceRow(source, tuple(dist[v] for v in range(g.vertex_count)))


def as_graph(universe: Universe) -> Graph:
    return universe.graph if isinstance(universe, GridShape) else universe


def eccentricity(universe: Universe, v) -> int:
    if isinstance(universe, GridShape):
        if not universe.contains(v):
            raise GraphError(f"vertex {tuple(v)} outside grid {universe}")
        return universe.eccentricity(v)
    return int(max(bfs_distances(universe, v).dist))


def radius(universe: Universe) -> int:
    if isinstance(universe, GridShape):
        return universe.radius
    if universe.vertex_count == 0:
        raise GraphError("empty graph has no radius")
    return int(universe.eccentricities.min())


def diameter(universe: Universe) -> int:
    if isinstance(universe, GridShape):
        return universe.n + universe.m - 2
    if universe.vertex_count == 0:
        raise GraphError("empty graph has no diameter")
    return int(universe.eccentricities.max())


def center(universe: Universe):
    """Smallest-id vertex of minimum eccentricity (a ``Vertex`` for grids)."""
    if isinstance(universe, GridShape):
        return Vertex((universe.n - 1) // 2, (universe.m - 1) // 2)
    radius(universe)
    return int(np.argmin(universe.eccentricities))


def make_grid(shape: GridShape | tuple[int, int], m: int | None = None) -> Graph:
    if m is not None:
        shape = GridShape(shape, m)
    elif not isinstance(shape, GridShape):
        shape = GridShape(*shape)
    n, m = shape.n, shape.m
    adj = []
    for vid in range(n * m):
        x, y = vid % n, vid // n
        nbrs = []
        if y > 0:
            nbrs.append(vid - n)
        if x > 0:
            nbrs.append(vid - 1)
        if x < n - 1:
            nbrs.append(vid + 1)
        if y < m - 1:
            nbrs.append(vid + n)
        adj.append(nbrs)
    return Graph(adj)


def make_path(z: int) -> Graph:
    if z < 1:
        raise GraphError(f"path order must be >= 1, got {z}")
    return Graph.from_edges(z, [(i, i + 1) for i in range(z - 1)])


def make_cycle(z: int) -> Graph:
    if z < 3:
        raise GraphError(f"cycle order must be >= 3, got {z}")
    return Graph.from_edges(z, [(i, (i + 1) % z) for i in range(z)])


def member_ids(universe: Universe, members: Iterable) -> list[int]:
    """Vertex ids of ``members``; rejects out-of-bounds and duplicated entries."""
    if isinstance(universe, GridShape):
        ids = [universe.index(v) for v in members]
    else:
        ids = []
        for v in members:
            if not (isinstance(v, (int, np.integer)) and 0 <= v < universe.vertex_count):
                raise GraphError(f"vertex {v!r} not in graph")
            ids.append(int(v))
    if len(set(ids)) != len(ids):
        raise GraphError("duplicated member")
    return ids


def vertex_label(universe: Universe, vid: int):
    return universe.vertex(vid) if isinstance(universe, GridShape) else vid
