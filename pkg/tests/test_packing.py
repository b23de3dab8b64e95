import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIXTURE_6x5, FIXTURE_7x4, FIXTURE_6x6, grid_adjacency, naive_violation
from gridbroadcast.graphs import GraphError, GridShape, make_cycle, make_grid, make_path
from gridbroadcast.packing import (
    GridBallCounter,
    Multipacking,
    ViolationWitness,
    ball_count,
    check_multipacking,
    is_multipacking,
    max_violation_ratio,
)


def test_ball_count_examples():
    # distances from (3,1): 4, 4, 5, 5, 0
    assert ball_count(GridShape(7, 4), FIXTURE_7x4, (3, 1), 2) == 1
    assert ball_count(GridShape(7, 4), FIXTURE_7x4, (3, 1), 4) == 3
    assert ball_count(GridShape(5, 5), [], (2, 2), 3) == 0
    # distances from (0,0): 0, 5, 4, 9, 5
    assert ball_count(GridShape(6, 5), FIXTURE_6x5, (0, 0), 5) == 4


def test_ball_count_general_graph():
    assert ball_count(make_cycle(6), [0, 3], 1, 2) == 2
    assert ball_count(make_path(5), [0, 4], 2, 1) == 0


def test_counter_matches_enumeration():
    rng = random.Random(0)
    for n, m in [(7, 4), (5, 9), (1, 6), (8, 8)]:
        shape = GridShape(n, m)
        members = rng.sample(shape.vertices(), min(6, n * m))
        counter = GridBallCounter(shape, members)
        for v in shape.vertices():
            for r in range(n + m):
                assert counter.count(v, r) == ball_count(shape, members, v, r)


@pytest.mark.parametrize("n,m,members", [(6, 5, FIXTURE_6x5), (7, 4, FIXTURE_7x4), (6, 6, FIXTURE_6x6)])
def test_figure_sets_are_multipackings(n, m, members):
    assert check_multipacking(GridShape(n, m), members) is None
    assert max_violation_ratio(GridShape(n, m), members) <= 1


def test_adjacent_members_violate_at_radius_one():
    witness = check_multipacking(make_path(3), [0, 1])
    assert witness == ViolationWitness(0, 1, 2)
    assert max_violation_ratio(make_path(3), [0, 1]) == 2


def test_singletons_and_empty_are_valid():
    assert is_multipacking(make_path(1), [0])
    assert is_multipacking(GridShape(3, 3), [(1, 1)])
    assert is_multipacking(GridShape(3, 3), [])


def test_input_errors():
    with pytest.raises(GraphError):
        check_multipacking(GridShape(3, 3), [(3, 0)])
    with pytest.raises(GraphError):
        check_multipacking(GridShape(3, 3), [(1, 1), (1, 1)])
    with pytest.raises(GraphError):
        check_multipacking(make_path(3), [5])
    with pytest.raises(ValueError):
        max_violation_ratio(GridShape(3, 3), [])


def test_violation_reports_smallest_radius_then_centre():
    # (0,0) and (2,0) are two apart: radius-1 ball at (1,0) holds both
    witness = check_multipacking(GridShape(4, 4), [(0, 0), (2, 0)])
    assert witness == ViolationWitness((1, 0), 1, 2)


def test_fast_path_agrees_with_naive_double_loop():
    rng = random.Random(1)
    for n in range(1, 9):
        for m in range(1, 9):
            shape = GridShape(n, m)
            adj = grid_adjacency(n, m)
            for _ in range(4):
                k = rng.randrange(0, min(n * m, 7) + 1)
                ids = rng.sample(range(n * m), k)
                expected = naive_violation(adj, ids)
                got = check_multipacking(shape, [shape.vertex(i) for i in ids])
                got_general = check_multipacking(make_grid(shape), ids)
                if expected is None:
                    assert got is None and got_general is None
                else:
                    c, r, count = expected
                    assert got == (shape.vertex(c), r, count)
                    assert got_general == (c, r, count)


def test_multipacking_object():
    mp = Multipacking(GridShape(6, 5), FIXTURE_6x5)
    assert mp.size == len(mp) == 5
    assert mp.is_valid()
    assert mp.sorted_members()[0] == (0, 0)
    t = mp.transpose()
    assert t.universe == GridShape(5, 6) and t.is_valid()


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 9), st.integers(1, 9), st.integers(0, 2**32 - 1))
def test_ball_count_monotone_in_radius(n, m, seed):
    rng = random.Random(seed)
    shape = GridShape(n, m)
    members = rng.sample(shape.vertices(), rng.randrange(0, n * m + 1))
    counter = GridBallCounter(shape, members)
    for r in range(n + m):
        assert (counter.counts(r) <= counter.counts(r + 1)).all()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(6, 5, FIXTURE_6x5), (7, 4, FIXTURE_7x4), (6, 6, FIXTURE_6x6)]), st.integers(0, 2**32 - 1))
def test_subsets_of_valid_packings_stay_valid(case, seed):
    n, m, members = case
    rng = random.Random(seed)
    subset = rng.sample(members, rng.randrange(0, len(members) + 1))
    assert is_multipacking(GridShape(n, m), subset)


@pytest.mark.parametrize("k", range(1, 13))
def test_every_third_vertex_of_a_path(k):
    # every ball of radius r holds at most ceil((2r+1)/3) of {0, 3, ..., 3k}
    g = make_path(3 * k + 1)
    members = list(range(0, 3 * k + 1, 3))
    for c in range(3 * k + 1):
        for r in range(1, 3 * k + 1):
            assert ball_count(g, members, c, r) <= -(-(2 * r + 1) // 3)
    assert is_multipacking(g, members)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_valid_packings_never_exceed_radius(n, m, seed):
    rng = random.Random(seed)
    shape = GridShape(n, m)
    chosen = []
    for v in rng.sample(shape.vertices(), n * m):
        if is_multipacking(shape, chosen + [v]):
            chosen.append(v)
    assert len(chosen) <= max(shape.radius, 1)
    if chosen:
        assert max_violation_ratio(shape, chosen) <= 1


def test_ratio_is_exact_fraction():
    # pairwise distance 4, all three at distance 2 from (2, 2)
    ratio = max_violation_ratio(GridShape(5, 3), [(0, 2), (2, 0), (4, 2)])
    assert ratio == Fraction(3, 2)
