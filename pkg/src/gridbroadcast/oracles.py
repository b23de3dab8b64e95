"""Exact branch-and-bound solvers for mp(G) and gamma_b(G) on small graphs.

Both searches work on vertex bitsets stored in Python ints.  They are slow by
design (exponential) and guarded by a vertex cap; their job is to be an
independent ground truth for the grid constructions.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .broadcast import BroadcastAssignment
from .graphs import (
    DisconnectedGraphError,
    GraphError,
    GridShape,
    Universe,
    as_graph,
    vertex_label,
)
from .packing import Multipacking

DEFAULT_CAP = 64


class CapExceededError(GraphError):
    """Instance too large for an exact solve."""


@dataclass
class SolveResult:
    optimum: int
    witness: object
    nodes_explored: int
    wall_time: float


def _prepare(universe: Universe, cap: int):
    g = as_graph(universe)
    n = g.vertex_count
    if n == 0:
        raise GraphError("empty graph")
    if n > cap:
        raise CapExceededError(
            f"{n} vertices exceeds the exact-solver cap of {cap}; raise the cap explicitly "
            "(e.g. --oracle-cap) if you accept an exponential search"
        )
    if not g.is_connected():
        raise DisconnectedGraphError("exact solvers need a connected graph")
    dist = g.distances.tolist()
    ecc = [max(row) for row in dist]
    return g, n, dist, ecc


def _balls(n, dist, ecc, min_radius):
    """``balls[v][r]`` = bitmask of N_r(v) for r in 0..max(ecc(v), min_radius)."""
    out = []
    for v in range(n):
        row = dist[v]
        masks = []
        for r in range(max(ecc[v], min_radius) + 1):
            mask = 0
            for u in range(n):
                if row[u] <= r:
                    mask |= 1 << u
            masks.append(mask)
        out.append(masks)
    return out


def _packing_constraints(n, dist, ecc, balls):
    """Per vertex ``u``: the distinct non-vacuous (mask, r) ball constraints containing ``u``."""
    best: dict[int, int] = {}
    for v in range(n):
        for r in range(1, ecc[v] + 1):
            mask = balls[v][r]
            if mask.bit_count() > r and best.get(mask, r + 1) > r:
                best[mask] = r
    per_vertex: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for mask, r in sorted(best.items(), key=lambda item: (item[1], item[0])):
        m = mask
        while m:
            low = m & -m
            per_vertex[low.bit_length() - 1].append((mask, r))
            m ^= low
    return per_vertex


def _label_members(universe, ids):
    return [vertex_label(universe, i) for i in sorted(ids)]


def exact_mp(universe: Universe, initial_lower_bound: int | None = None, cap: int = DEFAULT_CAP) -> SolveResult:
    """Maximum multipacking by include-first branch and bound.

    Vertices are branched in order of degree, then id.  Adding a vertex that
    saturates some ball constraint removes every other vertex of that ball
    from the candidate pool.  Subtrees are cut with ``radius(G)`` and with a
    ball-partition bound: disjoint balls ``N_r(u)`` carved from the remaining
    candidates can each absorb at most ``r - |N_r(u) & chosen|`` more members.
    """
    start = time.perf_counter()
    g, n, dist, ecc = _prepare(universe, cap)
    balls = _balls(n, dist, ecc, 0)
    constraints = _packing_constraints(n, dist, ecc, balls)
    ceiling = max(min(ecc), 1)
    order = sorted(range(n), key=lambda v: (g.degree(v), v))
    rank_bit = [1 << v for v in order]

    best_size = (initial_lower_bound - 1) if initial_lower_bound else 0
    best_set: list[int] | None = None
    nodes = 0

    def bound(cand: int, chosen: int) -> int:
        total = 0
        left = cand
        while left:
            low = left & -left
            u = low.bit_length() - 1
            gain, take, cover = 0, 1, low
            for r in range(1, ecc[u] + 1):
                ball = balls[u][r]
                cov = (left & ball).bit_count()
                cap_r = max(r - (chosen & ball).bit_count(), 0)
                if cov - min(cov, cap_r) > gain:
                    gain, take, cover = cov - min(cov, cap_r), min(cov, cap_r), left & ball
            total += take
            left &= ~cover
        return total

    def search(pos: int, cand: int, chosen: int, size: int, members: list[int]):
        nonlocal best_size, best_set, nodes
        nodes += 1
        if size > best_size:
            best_size, best_set = size, list(members)
        if best_size >= ceiling:
            return
        while pos < n and not cand & rank_bit[pos]:
            pos += 1
        if pos == n:
            return
        if size + cand.bit_count() <= best_size or size + bound(cand, chosen) <= best_size:
            return
        u = order[pos]
        bit = rank_bit[pos]
        new_chosen = chosen | bit
        new_cand = cand & ~bit
        for mask, r in constraints[u]:
            if (new_chosen & mask).bit_count() >= r:
                new_cand &= ~mask
        members.append(u)
        search(pos + 1, new_cand, new_chosen, size + 1, members)
        members.pop()
        if best_size >= ceiling:
            return
        search(pos + 1, cand & ~bit, chosen, size, members)

    search(0, (1 << n) - 1, 0, 0, [])
    if best_set is None:
        raise ValueError(f"no multipacking of size >= {initial_lower_bound}")
    witness = Multipacking(universe, _label_members(universe, best_set))
    return SolveResult(best_size, witness, nodes, time.perf_counter() - start)


def exact_gamma_b(universe: Universe, cap: int = DEFAULT_CAP) -> SolveResult:
    """Minimum-cost dominating broadcast as weighted set cover over balls.

    Candidates are the balls ``(v, r)``, ``1 <= r <= ecc(v)``, weighted ``r``;
    a ball contained in a cheaper-or-equal one is dropped.  The search always
    branches on the deepest uncovered vertex (largest eccentricity, then fewest
    covering balls, then id) and bounds with a greedy multipacking drawn from
    the uncovered vertices, which every cover must pay for one unit each.
    """
    start = time.perf_counter()
    g, n, dist, ecc = _prepare(universe, cap)
    balls = _balls(n, dist, ecc, 1)
    constraints = _packing_constraints(n, dist, [max(e, 1) for e in ecc], balls)

    cheapest: dict[int, tuple[int, int]] = {}
    for v in range(n):
        for r in range(1, max(ecc[v], 1) + 1):
            mask = balls[v][r]
            if mask not in cheapest or (r, v) < cheapest[mask]:
                cheapest[mask] = (r, v)
    items = sorted(((r, v, mask) for mask, (r, v) in cheapest.items()), key=lambda t: (t[0], -t[2].bit_count(), t[1]))
    kept = []
    for r, v, mask in items:
        # a strict superset that costs no more makes this ball redundant
        if any(r2 <= r and mask2 != mask and mask & mask2 == mask for r2, _, mask2 in items):
            continue
        kept.append((r, v, mask))
    covering: list[list[int]] = [[] for _ in range(n)]
    for idx, (r, v, mask) in enumerate(kept):
        for u in range(n):
            if mask >> u & 1:
                covering[u].append(idx)
    for u in range(n):
        covering[u].sort(key=lambda i: (-kept[i][2].bit_count() / kept[i][0], kept[i][0], kept[i][1]))
    depth_order = sorted(range(n), key=lambda u: (-ecc[u], len(covering[u]), u))

    best_cost = max(min(ecc), 1)
    c = min(range(n), key=lambda v: (ecc[v], v))
    best_power = {c: best_cost}
    nodes = 0

    def packing_bound(uncovered: int) -> int:
        chosen = 0
        size = 0
        for u in depth_order:
            if not uncovered >> u & 1:
                continue
            trial = chosen | (1 << u)
            if all((trial & mask).bit_count() <= r for mask, r in constraints[u]):
                chosen = trial
                size += 1
        return size

    def search(uncovered: int, spent: int, picks: list[int], banned: set[int]):
        nonlocal best_cost, best_power, nodes
        nodes += 1
        if not uncovered:
            if spent < best_cost:
                best_cost = spent
                best_power = {kept[i][1]: kept[i][0] for i in picks}
            return
        if spent + packing_bound(uncovered) >= best_cost:
            return
        u = next(u for u in depth_order if uncovered >> u & 1)
        tried = []
        for idx in covering[u]:
            r, _, mask = kept[idx]
            if idx in banned or spent + r >= best_cost:
                continue
            picks.append(idx)
            search(uncovered & ~mask, spent + r, picks, banned | set(tried))
            picks.pop()
            tried.append(idx)

    search((1 << n) - 1, 0, [], set())
    powers = {}
    for v, p in best_power.items():
        label = vertex_label(universe, v)
        powers[label] = max(powers.get(label, 0), p)
    witness = BroadcastAssignment(universe, powers)
    return SolveResult(best_cost, witness, nodes, time.perf_counter() - start)


def crosscheck_grid(n: int, m: int, cap: int = DEFAULT_CAP) -> dict:
    """Run both oracles on ``n x m`` and compare with the closed forms and the construction."""
    from .constructions import build_multipacking, gamma_b_value, mp_value

    shape = GridShape(n, m)
    mp = exact_mp(shape, cap=cap)
    gb = exact_gamma_b(shape, cap=cap)
    packing, plan = build_multipacking(n, m)
    report = {
        "n": n,
        "m": m,
        "exact_mp": mp.optimum,
        "exact_gamma_b": gb.optimum,
        "mp_value": mp_value(n, m),
        "gamma_b_value": gamma_b_value(n, m),
        "construction_size": packing.size,
        "method": plan.methods(),
        "gap": mp.optimum != gb.optimum,
    }
    problems = []
    if mp.optimum != report["mp_value"]:
        problems.append("exact_mp != mp_value")
    if gb.optimum != report["gamma_b_value"]:
        problems.append("exact_gamma_b != gamma_b_value")
    if packing.size != mp.optimum:
        problems.append("construction size != exact_mp")
    report["discrepancies"] = problems
    return report
