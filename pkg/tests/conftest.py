from collections import deque
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

FIXTURE_6x5 = [(0, 0), (5, 0), (0, 4), (5, 4), (2, 3)]
FIXTURE_7x4 = [(0, 0), (6, 0), (0, 3), (6, 3), (3, 1)]
FIXTURE_6x6 = [(0, 0), (0, 5), (5, 0), (5, 5), (1, 2), (4, 2)]
FIXTURE_8x6 = [(0, 0), (0, 5), (7, 0), (7, 5), (3, 0), (3, 5), (6, 3)]
FIXTURE_12x6 = [(0, 0), (0, 5), (4, 0), (5, 5), (7, 0), (8, 5), (11, 0), (11, 5), (2, 3)]


def naive_distances(adjacency):
    """All-pairs BFS written independently of the package."""
    n = len(adjacency)
    table = []
    for s in range(n):
        dist = [None] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in adjacency[v]:
                if dist[u] is None:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        table.append(dist)
    return table


def naive_violation(adjacency, members):
    """Smallest (r, centre) with more than r members in the ball, by a double loop."""
    dist = naive_distances(adjacency)
    n = len(adjacency)
    top = max(max(row) for row in dist)
    for r in range(1, top + 1):
        for c in range(n):
            count = sum(1 for u in members if dist[c][u] <= r)
            if count > r:
                return c, r, count
    return None


def grid_adjacency(n, m):
    adj = []
    for vid in range(n * m):
        x, y = vid % n, vid // n
        adj.append([vid + dx + dy * n for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)) if 0 <= x + dx < n and 0 <= y + dy < m])
    return adj


@pytest.fixture
def golden():
    def read(name):
        return (GOLDEN / f"{name}.txt").read_text().rstrip("\n")

    return read
