"""Dominating broadcasts: cost, domination check and the radius broadcast.

A vertex ``u`` is dominated by ``v`` when ``f(v) >= 1`` and ``d(u, v) <= f(v)``,
i.e. the broadcast is a cover of the graph by balls of positive radii.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

import numpy as np

from .graphs import (
    GraphError,
    GridShape,
    Universe,
    Vertex,
    as_graph,
    center,
    make_path,
    member_ids,
    radius,
    vertex_label,
)


class UncoveredWitness(NamedTuple):
    vertex: object


@dataclass(frozen=True)
class BroadcastAssignment:
    """Sparse power map; vertices absent from ``powers`` broadcast with power 0."""

    universe: Universe
    powers: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for v, p in dict(self.powers).items():
            if isinstance(self.universe, GridShape):
                v = Vertex(int(v[0]), int(v[1]))
            if int(p) < 1:
                raise GraphError(f"broadcast power at {v} must be >= 1, got {p}")
            clean[v] = int(p)
        member_ids(self.universe, clean)
        object.__setattr__(self, "powers", clean)

    @property
    def cost(self) -> int:
        return sum(self.powers.values())

    def uncovered(self) -> UncoveredWitness | None:
        return check_dominating(self)

    def is_dominating(self) -> bool:
        return check_dominating(self) is None


def cost(b: BroadcastAssignment) -> int:
    return b.cost


def _covered_mask(b: BroadcastAssignment) -> np.ndarray:
    universe = b.universe
    if isinstance(universe, GridShape):
        xs, ys = np.meshgrid(np.arange(universe.n), np.arange(universe.m))
        xs, ys = xs.ravel(), ys.ravel()
        covered = np.zeros(universe.vertex_count, dtype=bool)
        for (x, y), p in b.powers.items():
            covered |= np.abs(xs - x) + np.abs(ys - y) <= p
        return covered
    covered = np.zeros(universe.vertex_count, dtype=bool)
    if not b.powers:
        return covered
    dist = universe.distances
    for v, p in b.powers.items():
        covered |= dist[v] <= p
    return covered


def check_dominating(b: BroadcastAssignment) -> UncoveredWitness | None:
    """``None`` if every vertex is dominated, else the smallest-id undominated vertex."""
    covered = _covered_mask(b)
    missing = np.flatnonzero(~covered)
    if missing.size:
        return UncoveredWitness(vertex_label(b.universe, int(missing[0])))
    return None


def is_dominating(b: BroadcastAssignment) -> bool:
    return check_dominating(b) is None


def radius_broadcast(universe: Universe) -> BroadcastAssignment:
    """A single centre broadcasting at the radius (power 1 on a one-vertex graph)."""
    if as_graph(universe).vertex_count == 0:
        raise GraphError("empty graph has no broadcast")
    c = center(universe)
    return BroadcastAssignment(universe, {c: max(radius(universe), 1)})


def path_broadcast(universe: Universe) -> BroadcastAssignment:
    """Power-1 broadcasts on every third vertex of a path or ``1 x L`` grid; cost ``ceil(L/3)``."""
    if isinstance(universe, GridShape):
        if min(universe.n, universe.m) != 1:
            raise GraphError(f"{universe} is not a path")
        length = universe.n * universe.m
        place = (lambda i: Vertex(i, 0)) if universe.m == 1 else (lambda i: Vertex(0, i))
    else:
        length = universe.vertex_count
        if length < 1 or universe != make_path(length):
            raise GraphError("path_broadcast expects make_path numbering")
        place = int
    centres = [min(i, length - 1) for i in range(1, length + 2, 3)][: -(-length // 3)]
    return BroadcastAssignment(universe, {place(c): 1 for c in centres})
