"""Command-line interface.

Exit codes: 0 success, 1 semantic failure (invalid witness, theorem
discrepancy), 2 usage or parse error, 3 exact-solver cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from .broadcast import check_dominating
from .constructions import (
    CertificateMismatch,
    build_multipacking,
    certify_optimality,
    gamma_b_value,
    mp_value,
    optimal_broadcast,
)
from .documents import DocumentError, InstanceDocument, grid_document, render_ascii
from .graphs import GraphError, GridShape, make_cycle, make_path
from .oracles import DEFAULT_CAP, CapExceededError, exact_gamma_b, exact_mp
from .packing import check_multipacking

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_document(path: str) -> InstanceDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    return InstanceDocument.loads(text)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cmd_construct(args) -> int:
    n, m = args.n, args.m
    packing, plan = build_multipacking(n, m)
    broadcast = optimal_broadcast(n, m)
    gamma_b = gamma_b_value(n, m)
    if args.format == "ascii":
        print(render_ascii(packing.universe, packing.members))
        return EXIT_OK
    if args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["x", "y"])
        writer.writerows(packing.sorted_members())
        sys.stdout.write(out.getvalue())
        return EXIT_OK
    doc = grid_document(
        packing,
        broadcast,
        size=packing.size,
        mp_value=mp_value(n, m),
        gamma_b=gamma_b,
        optimal_pair=packing.size == broadcast.cost,
        method=plan.methods(),
    )
    print(doc.dumps())
    return EXIT_OK


def cmd_validate(args) -> int:
    doc = _read_document(args.input)
    packing = doc.packing()
    broadcast = doc.broadcast_assignment()
    if packing is None and broadcast is None:
        raise DocumentError("document has neither 'multipacking' nor 'broadcast'")
    verdict: dict = {"verdict": "valid"}
    status = EXIT_OK
    if packing is not None:
        witness = check_multipacking(doc.universe, packing.members)
        verdict["multipacking"] = {"size": packing.size, "valid": witness is None}
        if witness is not None:
            status = EXIT_FAIL
            verdict["multipacking"]["violation"] = {
                "center": list(witness.center) if isinstance(witness.center, tuple) else witness.center,
                "radius": witness.radius,
                "count": witness.count,
            }
    if broadcast is not None:
        uncovered = check_dominating(broadcast)
        verdict["broadcast"] = {"cost": broadcast.cost, "dominating": uncovered is None}
        if uncovered is not None:
            status = EXIT_FAIL
            v = uncovered.vertex
            verdict["broadcast"]["uncovered"] = list(v) if isinstance(v, tuple) else v
    if packing is not None and broadcast is not None and status == EXIT_OK:
        verdict["certified_optimal"] = packing.size == broadcast.cost
    if status != EXIT_OK:
        verdict["verdict"] = "invalid"
    print(json.dumps(verdict, indent=2))
    return status


def _solve_universe(family: str, dims: list[str]):
    expected = {"grid": 2, "path": 1, "cycle": 1}
    if family not in expected:
        raise UsageError(f"unknown family {family!r}; use grid, path or cycle")
    if len(dims) != expected[family]:
        raise UsageError(f"{family} takes {expected[family]} dimension(s), got {len(dims)}")
    try:
        sizes = [int(d) for d in dims]
        if family == "grid":
            return GridShape(*sizes)
        return make_path(sizes[0]) if family == "path" else make_cycle(sizes[0])
    except (ValueError, GraphError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_solve(args) -> int:
    tokens = ([args.family] if args.family else []) + args.rest
    if not tokens:
        raise UsageError("usage: solve FAMILY DIMS... mp|gammab  (or solve --input FILE mp|gammab)")
    problem = tokens[-1]
    if problem not in ("mp", "gammab"):
        raise UsageError(f"problem must be 'mp' or 'gammab', got {problem!r}")
    if args.input:
        if len(tokens) != 1:
            raise UsageError("with --input give only the problem: solve --input FILE mp|gammab")
        universe = _read_document(args.input).universe
    else:
        universe = _solve_universe(tokens[0], tokens[1:-1])
    solver = exact_mp if problem == "mp" else exact_gamma_b
    result = solver(universe, cap=args.oracle_cap)
    witness = result.witness
    if problem == "mp":
        payload = [list(v) if isinstance(v, tuple) else v for v in witness.sorted_members()]
    else:
        payload = {",".join(map(str, v)) if isinstance(v, tuple) else str(v): p for v, p in witness.powers.items()}
    print(
        json.dumps(
            {
                "problem": problem,
                "optimum": result.optimum,
                "witness": payload,
                "nodes_explored": result.nodes_explored,
                "wall_time": round(result.wall_time, 6),
            },
            indent=2,
        )
    )
    return EXIT_OK


def verify_cell(n: int, m: int, oracle_cap: int, seed: int = 0) -> dict:
    """Construct, validate and certify one grid; run the oracles when ``n*m <= oracle_cap``."""
    shape = GridShape(n, m)
    packing, plan = build_multipacking(n, m)
    expected = mp_value(n, m)
    problems = []
    valid = check_multipacking(shape, packing.members) is None
    if not valid:
        problems.append("invalid multipacking")
    if packing.size != expected:
        problems.append(f"size {packing.size} != mp_value {expected}")
    gap_expected = expected != gamma_b_value(n, m)
    try:
        certify_optimality(shape, packing, optimal_broadcast(n, m))
        certified = True
    except CertificateMismatch as exc:
        certified = False
        if not gap_expected:
            problems.append(f"certificate failed: {exc}")
    if certified and gap_expected:
        problems.append("certified a grid whose values should differ")
    if packing.size > 1:
        rng = random.Random(f"{seed}:{n}:{m}")
        subset = rng.sample(packing.members, rng.randrange(1, packing.size))
        if check_multipacking(shape, subset) is not None:
            problems.append("subset of a valid packing fails")
    row = {
        "n": n,
        "m": m,
        "size": packing.size,
        "expected": expected,
        "gamma_b": gamma_b_value(n, m),
        "method": ">".join(plan.methods()),
        "valid": valid,
        "certified": certified,
        "oracle_mp": "",
        "oracle_gamma_b": "",
    }
    if n * m <= oracle_cap:
        row["oracle_mp"] = exact_mp(shape, cap=max(oracle_cap, n * m)).optimum
        row["oracle_gamma_b"] = exact_gamma_b(shape, cap=max(oracle_cap, n * m)).optimum
        if row["oracle_mp"] != expected:
            problems.append(f"exact_mp {row['oracle_mp']} != {expected}")
        if row["oracle_gamma_b"] != row["gamma_b"]:
            problems.append(f"exact_gamma_b {row['oracle_gamma_b']} != {row['gamma_b']}")
    row["status"] = "; ".join(problems) if problems else ("expected-gap" if gap_expected else "ok")
    row["discrepancy"] = bool(problems)
    return row


def _verify_cell_star(task):
    return verify_cell(*task)


def cmd_verify_theorem(args) -> int:
    if args.max_n < 4 or args.max_m < 4:
        raise UsageError("verify-theorem bounds must be at least 4")
    tasks = [(n, m, args.oracle_cap, args.seed) for n in range(4, args.max_n + 1) for m in range(4, args.max_m + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_verify_cell_star, tasks, chunksize=8))
    else:
        rows = [verify_cell(*t) for t in tasks]
    columns = ["n", "m", "size", "expected", "gamma_b", "method", "valid", "certified", "oracle_mp", "oracle_gamma_b", "status"]
    if args.format == "json":
        print(json.dumps([{c: r[c] for c in columns} for r in rows], indent=2))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([str(r[c]).lower() if isinstance(r[c], bool) else r[c] for c in columns])
    bad = [r for r in rows if r["discrepancy"]]
    gaps = [r for r in rows if r["status"] == "expected-gap"]
    print(
        f"{len(rows)} cells, {len(bad)} discrepancies, {len(gaps)} expected gap cells: "
        + ", ".join(f"({r['n']},{r['m']})" for r in gaps),
        file=sys.stderr,
    )
    for r in bad:
        print(f"DISCREPANCY ({r['n']},{r['m']}): {r['status']}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_render(args) -> int:
    doc = _read_document(args.input)
    if not isinstance(doc.universe, GridShape):
        raise UsageError("render needs a grid instance")
    packing = doc.packing()
    broadcast = doc.broadcast_assignment()
    print(
        render_ascii(
            doc.universe,
            packing.members if packing else (),
            broadcast.powers if broadcast and args.powers else None,
        )
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridbroadcast", description="Optimal multipackings and broadcasts on grids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an optimal multipacking of the n x m grid")
    p.add_argument("n", type=_positive)
    p.add_argument("m", type=_positive)
    p.add_argument("--format", choices=["json", "ascii", "csv"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("validate", help="check the witnesses in a document")
    p.add_argument("input", nargs="?", default="-", help="document path, '-' for stdin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="exact mp or gamma_b: solve grid N M mp | solve cycle Z gammab")
    p.add_argument("family", nargs="?", help="grid, path or cycle")
    p.add_argument("rest", nargs="*", help="dimensions followed by mp|gammab")
    p.add_argument("--input", help="read the graph from a document instead")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify-theorem", help="sweep 4 <= n <= MAX_N, 4 <= m <= MAX_M")
    p.add_argument("max_n", type=int)
    p.add_argument("max_m", type=int)
    p.add_argument("--oracle-cap", type=int, default=36, help="run exact solvers where n*m <= this")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("render", help="ASCII drawing of a grid document")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--powers", action="store_true", help="overlay broadcast powers")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
