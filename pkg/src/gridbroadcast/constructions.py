"""Optimal multipackings of grids, and duality certificates.

Every grid ``n x m`` gets a multipacking of size ``mp(P_n x P_m)``:

* height 1, 2, 3: periodic patterns along the long side;
* both sides even and at least 8: i-patterns on the four sides, each side
  shortened by the three vertices next to the following corner;
* one side 4 or 6 and the other long enough: i-patterns on the two long sides;
* a handful of small grids: hand-made tables;
* odd extents: solve the even grid one smaller and open an empty line in the
  middle.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .broadcast import BroadcastAssignment, check_dominating, path_broadcast, radius_broadcast
from .graphs import GridShape, Universe, Vertex, as_graph
from .packing import Multipacking, check_multipacking


class InapplicableCaseError(ValueError):
    """A construction was asked for a grid outside its range."""


def i_pattern_indices(z: int, i: int) -> list[int]:
    """Every third index up to ``3(i-1)``, then every fourth from ``3i``, within ``[0, z-1]``."""
    if i < 0 or z < 0 or 3 * i > z:
        raise InapplicableCaseError(f"{i}-pattern needs a path of order >= {3 * i}, got {z}")
    return list(range(0, 3 * i, 3)) + list(range(3 * i, z, 4))


def pattern_window_bound(i: int, length: int) -> int:
    """Most i-pattern indices a window of ``length + 1`` consecutive indices can hit."""
    if i < 0 or length < 0:
        raise ValueError("i and length must be non-negative")
    return -(-(length + 1 + i) // 4)


def _side(shape: GridShape, anchor, step, z: int, i: int) -> list[Vertex]:
    (ax, ay), (dx, dy) = anchor, step
    return [Vertex(ax + t * dx, ay + t * dy) for t in i_pattern_indices(z, i)]


@dataclass(frozen=True)
class ConstructionPlan:
    shape: GridShape
    method: str
    expected_size: int
    sub_plans: tuple = field(default=())
    transposed: bool = False
    detail: str = ""

    def methods(self) -> list[str]:
        chain = [self.method]
        for sub in self.sub_plans:
            chain.extend(sub.methods())
        return chain


def path_packing(length: int) -> Multipacking:
    """Every third vertex of the ``length x 1`` grid."""
    return Multipacking(GridShape(length, 1), [(x, 0) for x in range(0, length, 3)])


def height2_packing(n: int) -> Multipacking:
    members = [(i, 0) for i in range(0, n, 5)] + [(i, 1) for i in range(2, n, 5)]
    return Multipacking(GridShape(n, 2), members)


def height3_packing(n: int) -> Multipacking:
    members = [(i, 0) for i in range(0, n, 4)] + [(i, 2) for i in range(1, n, 4)]
    return Multipacking(GridShape(n, 3), members)


def large_grid_packing(n: int, m: int) -> Multipacking:
    """Four-side construction for even ``n, m >= 8``."""
    if n % 2 or m % 2 or n < 8 or m < 8:
        raise InapplicableCaseError(f"large-grid construction needs even sides >= 8, got {n}x{m}")
    shape = GridShape(n, m)
    k, kp = n // 2, m // 2
    top_i, bottom_i = (1, 1) if k % 2 == 0 else (2, 0)
    right_i, left_i = (1, 1) if kp % 2 == 0 else (2, 0)
    members = (
        _side(shape, (0, m - 1), (1, 0), n - 3, top_i)
        + _side(shape, (n - 1, 0), (-1, 0), n - 3, bottom_i)
        + _side(shape, (n - 1, m - 1), (0, -1), m - 3, right_i)
        + _side(shape, (0, 0), (0, 1), m - 3, left_i)
    )
    return Multipacking(shape, members)


def long_grid_pattern_pair(n: int, m: int) -> tuple[int, int]:
    """(bottom, top) i-patterns for the two-side construction, or raise if it does not apply.

    ``(3, -1)`` marks the height-4 case with ``n / 2`` odd: a 3-pattern on the
    bottom and a *shifted* 0-pattern on the top (see :func:`long_grid_packing`).
    """
    if n % 2 or m not in (4, 6):
        raise InapplicableCaseError(f"long-grid construction needs even n and m in (4, 6), got {n}x{m}")
    k, kp = n // 2, m // 2
    if k % 2 == kp % 2:
        if 3 * kp - 4 > k:
            raise InapplicableCaseError(f"{n}x{m} too short for the long-grid construction")
        return 2 * kp - 3, 2 * kp - 3
    if 3 * kp - 1 > k:
        raise InapplicableCaseError(f"{n}x{m} too short for the long-grid construction")
    if 2 * kp - 5 < 0:
        return 3, -1
    return 2 * kp - 5, 2 * kp - 1


def shifted_zero_pattern(z: int) -> list[int]:
    """Index 0, then every fourth index from 5."""
    return [0] + list(range(5, z, 4))


def long_grid_packing(n: int, m: int) -> Multipacking:
    """Two-side construction for long grids of height 4 or 6.

    A plain 0-pattern opposite a 3-pattern is not a multipacking on
    ``4 x (4q+2)`` grids (e.g. radius 4 around (3, 2) on 10 x 4 holds five
    members), so that case runs the 3-pattern along the bottom from the left
    and the shifted 0-pattern along the top.
    """
    bottom_i, top_i = long_grid_pattern_pair(n, m)
    shape = GridShape(n, m)
    if top_i < 0:
        members = [(x, m - 1) for x in shifted_zero_pattern(n)] + _side(shape, (0, 0), (1, 0), n, bottom_i)
        return Multipacking(shape, members)
    members = _side(shape, (0, m - 1), (1, 0), n, top_i) + _side(shape, (n - 1, 0), (-1, 0), n, bottom_i)
    return Multipacking(shape, members)


# hand-made sets; 6x4 was found by exact search (the four corners)
_TABLE = {
    (6, 4): [(0, 0), (5, 0), (0, 3), (5, 3)],
    (6, 5): [(0, 0), (5, 0), (0, 4), (5, 4), (2, 3)],
    (7, 4): [(0, 0), (6, 0), (0, 3), (6, 3), (3, 1)],
    (6, 6): [(0, 0), (0, 5), (5, 0), (5, 5), (1, 2), (4, 2)],
    (8, 6): [(0, 0), (0, 5), (7, 0), (7, 5), (3, 0), (3, 5), (6, 3)],
    (12, 6): [(0, 0), (0, 5), (4, 0), (5, 5), (7, 0), (8, 5), (11, 0), (11, 5), (2, 3)],
}


def table_packing(n: int, m: int) -> Multipacking | None:
    """The hard-coded set for ``n x m`` or its transpose; ``None`` when not tabulated."""
    if (n, m) in _TABLE:
        return Multipacking(GridShape(n, m), _TABLE[n, m])
    if (m, n) in _TABLE:
        return Multipacking(GridShape(n, m), [(y, x) for x, y in _TABLE[m, n]])
    return None


def insert_blank_line(packing: Multipacking, axis: str, position: int) -> Multipacking:
    """Open an empty column (``axis='x'``) or row (``axis='y'``) at ``position``."""
    shape = packing.universe
    if not isinstance(shape, GridShape):
        raise TypeError("insert_blank_line works on grid multipackings")
    if axis == "x":
        extent, grown = shape.n, GridShape(shape.n + 1, shape.m)
        members = [(x + (x >= position), y) for x, y in packing.members]
    elif axis == "y":
        extent, grown = shape.m, GridShape(shape.n, shape.m + 1)
        members = [(x, y + (y >= position)) for x, y in packing.members]
    else:
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    if not 1 <= position <= extent:
        raise ValueError(f"position {position} outside [1, {extent}]")
    return Multipacking(grown, members)


def mp_value(n: int, m: int) -> int:
    """Multipacking number of ``P_n x P_m``."""
    if n < 1 or m < 1:
        raise ValueError(f"grid extents must be positive, got {n}x{m}")
    long_side, short = max(n, m), min(n, m)
    if short == 1:
        return -(-long_side // 3)
    if short == 2:
        return -(-2 * long_side // 5)
    if short == 3:
        return long_side // 2 + (long_side % 4 != 0)
    if (long_side, short) == (6, 4):
        return 4
    return n // 2 + m // 2


def gamma_b_value(n: int, m: int) -> int:
    """Broadcast number of ``P_n x P_m``: the radius, or ``ceil(L/3)`` for a path."""
    if n < 1 or m < 1:
        raise ValueError(f"grid extents must be positive, got {n}x{m}")
    if min(n, m) == 1:
        return -(-max(n, m) // 3)
    return n // 2 + m // 2


def optimal_broadcast(n: int, m: int) -> BroadcastAssignment:
    shape = GridShape(n, m)
    if min(n, m) == 1:
        return path_broadcast(shape)
    return radius_broadcast(shape)


def build_multipacking(n: int, m: int) -> tuple[Multipacking, ConstructionPlan]:
    """A multipacking of ``n x m`` with ``mp_value(n, m)`` members and the plan that built it."""
    shape = GridShape(n, m)
    if m > n:
        packing, plan = build_multipacking(m, n)
        plan = ConstructionPlan(shape, plan.method, plan.expected_size, plan.sub_plans, not plan.transposed, plan.detail)
        return packing.transpose(), plan
    expected = mp_value(n, m)

    if m == 1:
        return path_packing(n), ConstructionPlan(shape, "height1-extension", expected)
    if m == 2:
        return height2_packing(n), ConstructionPlan(shape, "height2", expected)
    if m == 3:
        return height3_packing(n), ConstructionPlan(shape, "height3", expected)

    table = table_packing(n, m)
    if table is not None:
        return table, ConstructionPlan(shape, "table", expected)

    if n % 2 == 0 and m % 2 == 0:
        if m >= 8:
            return large_grid_packing(n, m), ConstructionPlan(shape, "large", expected)
        try:
            bottom_i, top_i = long_grid_pattern_pair(n, m)
        except InapplicableCaseError:
            pass
        else:
            top = f"{top_i}-pattern" if top_i >= 0 else "shifted 0-pattern"
            detail = f"bottom {bottom_i}-pattern, top {top}"
            return long_grid_packing(n, m), ConstructionPlan(shape, "long", expected, detail=detail)
        raise AssertionError(f"no construction covers {n}x{m}")

    if n % 2:
        axis, position, smaller = "x", (n - 1) // 2, (n - 1, m)
    else:
        axis, position, smaller = "y", (m - 1) // 2, (n, m - 1)
    sub_packing, sub_plan = build_multipacking(*smaller)
    packing = insert_blank_line(sub_packing, axis, position)
    plan = ConstructionPlan(shape, "odd-reduction", expected, (sub_plan,), detail=f"blank {axis}={position}")
    return packing, plan


class CertificateMismatch(Exception):
    """The pair does not prove joint optimality; ``failures`` names the checks that failed."""

    def __init__(self, failures: list[str]):
        super().__init__("; ".join(failures))
        self.failures = failures


@dataclass(frozen=True)
class DualityCertificate:
    universe: Universe
    multipacking: Multipacking
    broadcast: BroadcastAssignment
    value: int


def certify_optimality(universe: Universe, packing, broadcast) -> DualityCertificate:
    """A valid multipacking and a dominating broadcast of equal value prove both optimal.

    Raises :class:`CertificateMismatch` listing every failed check otherwise.
    """
    if not isinstance(packing, Multipacking):
        packing = Multipacking(universe, packing)
    if not isinstance(broadcast, BroadcastAssignment):
        broadcast = BroadcastAssignment(universe, broadcast)
    if as_graph(packing.universe) != as_graph(universe) or as_graph(broadcast.universe) != as_graph(universe):
        raise CertificateMismatch(["witnesses live on a different graph"])
    failures = []
    violation = check_multipacking(universe, packing.members)
    if violation is not None:
        failures.append(f"multipacking invalid: {violation.count} members within radius {violation.radius} of {violation.center}")
    uncovered = check_dominating(broadcast)
    if uncovered is not None:
        failures.append(f"broadcast not dominating: {uncovered.vertex} uncovered")
    if packing.size != broadcast.cost:
        failures.append(f"value gap: |M| = {packing.size} but cost(f) = {broadcast.cost}")
    if failures:
        raise CertificateMismatch(failures)
    return DualityCertificate(universe, packing, broadcast, packing.size)
