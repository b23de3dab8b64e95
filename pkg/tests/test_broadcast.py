import random

import pytest

from gridbroadcast.broadcast import (
    BroadcastAssignment,
    UncoveredWitness,
    check_dominating,
    cost,
    is_dominating,
    path_broadcast,
    radius_broadcast,
)
from gridbroadcast.graphs import Graph, GraphError, GridShape, make_cycle, make_grid, make_path, radius
from gridbroadcast.oracles import exact_gamma_b, exact_mp
from gridbroadcast.packing import is_multipacking


def test_cost():
    assert cost(BroadcastAssignment(GridShape(4, 4))) == 0
    assert cost(BroadcastAssignment(GridShape(4, 4), {(1, 1): 4})) == 4
    assert cost(BroadcastAssignment(make_path(9), {1: 2, 4: 3})) == 5


def test_domination_examples():
    assert is_dominating(BroadcastAssignment(GridShape(4, 4), {(1, 1): 4}))
    # (1,1) reaches (3,3) at distance 4 only with the non-strict threshold
    assert check_dominating(BroadcastAssignment(GridShape(4, 4), {(1, 1): 3})) == UncoveredWitness((3, 3))
    b = BroadcastAssignment(make_path(9), {1: 1, 4: 1, 7: 1})
    assert is_dominating(b) and b.cost == 3
    assert check_dominating(BroadcastAssignment(make_cycle(5))) == UncoveredWitness(0)


def test_uncovered_is_smallest_id():
    b = BroadcastAssignment(make_path(9), {4: 1})
    assert check_dominating(b) == UncoveredWitness(0)
    b = BroadcastAssignment(GridShape(5, 5), {(0, 0): 2})
    assert check_dominating(b).vertex == (3, 0)


def test_grid_and_general_domination_agree():
    rng = random.Random(3)
    for _ in range(50):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        shape = GridShape(n, m)
        powers = {v: rng.randint(1, 3) for v in rng.sample(shape.vertices(), rng.randint(0, min(3, n * m)))}
        on_grid = check_dominating(BroadcastAssignment(shape, powers))
        on_graph = check_dominating(BroadcastAssignment(make_grid(shape), {shape.index(v): p for v, p in powers.items()}))
        assert (on_grid is None) == (on_graph is None)
        if on_grid is not None:
            assert shape.index(on_grid.vertex) == on_graph.vertex


@pytest.mark.parametrize("n,m,expected", [(8, 8, 8), (5, 7, 5), (2, 2, 2)])
def test_radius_broadcast_on_grids(n, m, expected):
    b = radius_broadcast(GridShape(n, m))
    assert b.cost == expected and b.is_dominating()


def test_radius_broadcast_single_vertex():
    b = radius_broadcast(make_path(1))
    assert b.powers == {0: 1} and b.cost == 1 and b.is_dominating()
    assert radius_broadcast(GridShape(1, 1)).cost == 1


def test_radius_broadcast_on_random_graphs():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 12)
        edges = {(rng.randrange(v), v) for v in range(1, n)} | {tuple(sorted(rng.sample(range(n), 2))) for _ in range(rng.randint(0, 6))}
        g = Graph.from_edges(n, edges)
        b = radius_broadcast(g)
        assert b.is_dominating() and b.cost == radius(g)


def test_path_broadcast():
    for length in range(1, 20):
        b = path_broadcast(make_path(length))
        assert b.is_dominating() and b.cost == -(-length // 3)
        assert path_broadcast(GridShape(1, length)).is_dominating()
    with pytest.raises(GraphError):
        path_broadcast(GridShape(2, 3))


def test_invalid_powers_rejected():
    with pytest.raises(GraphError):
        BroadcastAssignment(GridShape(3, 3), {(0, 0): 0})
    with pytest.raises(GraphError):
        BroadcastAssignment(GridShape(3, 3), {(3, 3): 1})


def test_weak_duality_on_small_graphs():
    rng = random.Random(11)
    graphs = [make_grid(n, m) for n in range(1, 5) for m in range(1, 5)] + [make_cycle(z) for z in range(3, 10)]
    for g in graphs:
        mp = exact_mp(g)
        gb = exact_gamma_b(g)
        assert mp.optimum <= gb.optimum
        # every valid packing is bounded by every dominating broadcast
        members = []
        for v in rng.sample(range(g.vertex_count), g.vertex_count):
            if is_multipacking(g, members + [v]):
                members.append(v)
        assert len(members) <= gb.witness.cost <= radius_broadcast(g).cost


def test_optimal_broadcasts_are_minimal():
    for g in [make_grid(3, 4), make_grid(6, 4), make_path(9), make_cycle(12)]:
        powers = exact_gamma_b(g).witness.powers
        for v in powers:
            rest = {u: p for u, p in powers.items() if u != v}
            assert not BroadcastAssignment(g, rest).is_dominating()
