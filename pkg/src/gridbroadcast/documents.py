"""JSON instance documents and ASCII rendering.

Document layout::

    {"graph": {"family": "grid", "n": 6, "m": 5},
     "multipacking": [[0, 0], [5, 0], ...],       # sorted by (y, x)
     "broadcast": {"2,2": 5},                       # "x,y" -> power
     "size": 5, "gamma_b": 5, "optimal_pair": true, "method": ["table"]}

Other graph families: ``{"family": "path", "z": 9}``, ``{"family": "cycle",
"z": 9}`` and ``{"family": "edges", "vertex_count": 4, "edges": [[0, 1], ...]}``;
their members are plain vertex ids and broadcast keys are ``"v"``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .broadcast import BroadcastAssignment
from .graphs import Graph, GraphError, GridShape, Universe, make_cycle, make_path
from .packing import Multipacking

SUMMARY_KEYS = ("size", "mp_value", "gamma_b", "optimal_pair", "method")


class DocumentError(ValueError):
    """Malformed instance document."""


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def universe_from_descriptor(desc: dict) -> Universe:
    if not isinstance(desc, dict):
        raise DocumentError("'graph' must be an object")
    family = desc.get("family")
    try:
        if family == "grid":
            return GridShape(_int(desc.get("n"), "n"), _int(desc.get("m"), "m"))
        if family == "path":
            return make_path(_int(desc.get("z"), "z"))
        if family == "cycle":
            return make_cycle(_int(desc.get("z"), "z"))
        if family == "edges":
            edges = desc.get("edges", [])
            if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
                raise DocumentError("'edges' must be a list of [u, v] pairs")
            return Graph.from_edges(_int(desc.get("vertex_count"), "vertex_count"), [(_int(u, "u"), _int(v, "v")) for u, v in edges])
    except GraphError as exc:
        raise DocumentError(str(exc)) from exc
    raise DocumentError(f"unknown graph family {family!r}")


def _normalize_descriptor(desc: dict) -> dict:
    family = desc["family"]
    if family == "grid":
        return {"family": "grid", "n": desc["n"], "m": desc["m"]}
    if family in ("path", "cycle"):
        return {"family": family, "z": desc["z"]}
    edges = sorted(sorted(e) for e in desc.get("edges", []))
    return {"family": "edges", "vertex_count": desc["vertex_count"], "edges": [list(e) for e in edges]}


@dataclass
class InstanceDocument:
    graph: dict
    multipacking: list | None = None
    broadcast: dict | None = None
    summary: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.universe = universe_from_descriptor(self.graph)
        self.graph = _normalize_descriptor(self.graph)
        grid = isinstance(self.universe, GridShape)
        if self.multipacking is not None:
            if not isinstance(self.multipacking, list):
                raise DocumentError("'multipacking' must be a list")
            if grid:
                if not all(isinstance(v, (list, tuple)) and len(v) == 2 for v in self.multipacking):
                    raise DocumentError("grid members must be [x, y] pairs")
                members = [[_int(x, "x"), _int(y, "y")] for x, y in self.multipacking]
                self.multipacking = sorted(members, key=lambda v: (v[1], v[0]))
            else:
                self.multipacking = sorted(_int(v, "member") for v in self.multipacking)
        if self.broadcast is not None:
            if not isinstance(self.broadcast, dict):
                raise DocumentError("'broadcast' must be an object")
            clean = {}
            for key, power in self.broadcast.items():
                vertex = _parse_key(key, grid)
                clean[_format_key(vertex, grid)] = _int(power, "power")
            self.broadcast = dict(sorted(clean.items(), key=lambda kv: _sort_key(_parse_key(kv[0], grid), grid)))
        self._check_bounds(grid)

    def _check_bounds(self, grid):
        vertices = [tuple(v) if grid else v for v in self.multipacking or []]
        vertices += [_parse_key(k, grid) for k in self.broadcast or {}]
        for v in vertices:
            inside = self.universe.contains(v) if grid else 0 <= v < self.universe.vertex_count
            if not inside:
                raise DocumentError(f"vertex {v} lies outside the graph")

    def packing(self) -> Multipacking | None:
        if self.multipacking is None:
            return None
        members = [tuple(v) for v in self.multipacking] if isinstance(self.universe, GridShape) else self.multipacking
        try:
            return Multipacking(self.universe, members)
        except GraphError as exc:
            raise DocumentError(str(exc)) from exc

    def broadcast_assignment(self) -> BroadcastAssignment | None:
        if self.broadcast is None:
            return None
        grid = isinstance(self.universe, GridShape)
        try:
            return BroadcastAssignment(self.universe, {_parse_key(k, grid): p for k, p in self.broadcast.items()})
        except GraphError as exc:
            raise DocumentError(str(exc)) from exc

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"graph": dict(self.graph)}
        if self.multipacking is not None:
            out["multipacking"] = [list(v) if isinstance(v, (list, tuple)) else v for v in self.multipacking]
        if self.broadcast is not None:
            out["broadcast"] = dict(self.broadcast)
        for key in SUMMARY_KEYS:
            if key in self.summary:
                out[key] = self.summary[key]
        return out

    @classmethod
    def from_dict(cls, data) -> "InstanceDocument":
        if not isinstance(data, dict):
            raise DocumentError("document must be a JSON object")
        if "graph" not in data:
            raise DocumentError("document has no 'graph'")
        unknown = set(data) - {"graph", "multipacking", "broadcast", *SUMMARY_KEYS}
        if unknown:
            raise DocumentError(f"unknown keys: {sorted(unknown)}")
        summary = {k: data[k] for k in SUMMARY_KEYS if k in data}
        return cls(data["graph"], data.get("multipacking"), data.get("broadcast"), summary)

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "InstanceDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)

    def __eq__(self, other):
        return isinstance(other, InstanceDocument) and self.to_dict() == other.to_dict()


def _parse_key(key, grid):
    if grid:
        if isinstance(key, (list, tuple)):
            return (_int(key[0], "x"), _int(key[1], "y"))
        try:
            x, y = str(key).split(",")
            return (int(x), int(y))
        except ValueError:
            raise DocumentError(f"broadcast key {key!r} is not 'x,y'") from None
    try:
        return int(key)
    except (TypeError, ValueError):
        raise DocumentError(f"broadcast key {key!r} is not a vertex id") from None


def _format_key(vertex, grid):
    return f"{vertex[0]},{vertex[1]}" if grid else str(vertex)


def _sort_key(vertex, grid):
    return (vertex[1], vertex[0]) if grid else vertex


def grid_document(packing: Multipacking | None, broadcast: BroadcastAssignment | None = None, **summary) -> InstanceDocument:
    shape = (packing if packing is not None else broadcast).universe
    return InstanceDocument(
        {"family": "grid", "n": shape.n, "m": shape.m},
        None if packing is None else [list(v) for v in packing.members],
        None if broadcast is None else {f"{x},{y}": p for (x, y), p in broadcast.powers.items()},
        summary,
    )


def render_ascii(shape: GridShape, members=(), powers=None) -> str:
    """``m`` lines of ``n`` characters, top row first: ``X`` member, ``.`` empty.

    Broadcast powers, when given, overwrite their cell with the power digit
    (``*`` for powers above 9).
    """
    rows = [["."] * shape.n for _ in range(shape.m)]
    for x, y in members:
        rows[y][x] = "X"
    for (x, y), p in (powers or {}).items():
        rows[y][x] = str(p) if p <= 9 else "*"
    return "\n".join("".join(row) for row in reversed(rows))
