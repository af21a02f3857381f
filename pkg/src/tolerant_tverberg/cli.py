"""Command-line front end.

Exit codes: 0 success (and "tolerant" for verify), 1 refuted (verify
only), 2 any error.  All numeric JSON output uses exact "num/den"
strings, and identical inputs, seeds and flags produce byte-identical
files.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import jsonio
from .core import Point, PointSet, TverbergError, to_scalar
from .generate import DEFAULT_GRID, random_point_set
from .lifting import tolerant_tverberg_lifted
from .merging import chunk_and_merge
from .one_d import max_tolerance_1d, tolerant_tverberg_1d
from .reduction import center_to_tolerant_instance
from .solvers import BRUTE_FORCE_CAP, brute_force_tverberg, get_solver
from .svgplot import render_svg
from .verification import DEFAULT_BUDGET, exact_tolerance, is_centerpoint, tukey_depth, verify_tolerance

DEFAULT_SEED = 0


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_point(raw: str, dim: int, pid: int = 0) -> Point:
    coords = tuple(to_scalar(part.strip()) for part in raw.split(","))
    if len(coords) != dim:
        raise TverbergError(
            f"dimension: point {raw!r} has {len(coords)} coords, expected {dim}"
        )
    return Point(pid, coords)


def _cmd_compute(args: argparse.Namespace) -> int:
    points = jsonio.load_point_set(args.input)
    stats: dict[str, Any] = {"n": len(points), "dim": points.dim, "m": args.m}

    if args.algorithm == "one_d":
        result = tolerant_tverberg_1d(points, args.m)
        partition, tolerance = result.partition, result.achieved_tolerance
    elif args.algorithm == "lift":
        if args.t is None:
            raise TverbergError("algorithm 'lift' requires --t")
        partition = tolerant_tverberg_lifted(points, args.m, args.t)
        tolerance = args.t
    elif args.algorithm == "chunk_merge":
        if args.solver is None:
            raise TverbergError("algorithm 'chunk_merge' requires --solver")
        solver = get_solver(args.solver, points.dim)
        merged = chunk_and_merge(
            points, args.m, solver, seed=args.seed if args.shuffle else None
        )
        partition, tolerance = merged.partition, merged.tolerance
        stats["blocks"] = len(points) // solver.points_needed(args.m)
        stats["solver"] = args.solver
    elif args.algorithm == "brute":
        maybe = brute_force_tverberg(points, args.m, cap=args.cap)
        if maybe is None:
            raise TverbergError(f"no Tverberg {args.m}-partition exists")
        partition, tolerance = maybe, 0
    else:  # pragma: no cover - argparse restricts choices
        raise TverbergError(f"unknown algorithm {args.algorithm!r}")

    out = {
        "parts": [sorted(part) for part in partition.parts],
        "guaranteed_tolerance": tolerance,
        "algorithm": args.algorithm,
        "stats": stats,
    }
    _write(args.output, jsonio.dumps(out))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    points = jsonio.load_point_set(args.input)
    partition = jsonio.load_partition(args.partition)
    verdict = verify_tolerance(points, partition, args.t, budget=args.budget)
    if verdict.tolerant:
        return 0
    witness = sorted(verdict.witness_removal or frozenset())
    _write(args.output, jsonio.dumps({"removal_ids": witness}))
    return 1


def _cmd_tolerance(args: argparse.Namespace) -> int:
    points = jsonio.load_point_set(args.input)
    partition = jsonio.load_partition(args.partition)
    print(exact_tolerance(points, partition, budget=args.budget))
    return 0


def _cmd_depth(args: argparse.Namespace) -> int:
    points = jsonio.load_point_set(args.input)
    c = _parse_point(args.point, points.dim)
    depth = tukey_depth(c, points, budget=args.budget)
    center = is_centerpoint(c, points, budget=args.budget)
    print(f"depth={depth} centerpoint={'true' if center else 'false'}")
    return 0


def _cmd_reduce_center(args: argparse.Namespace) -> int:
    points = jsonio.load_point_set(args.input)
    c = _parse_point(args.point, points.dim)
    instance = center_to_tolerant_instance(points, c)
    obj = jsonio.point_set_to_obj(instance.lifted_points)
    obj["parts"] = [sorted(part) for part in instance.partition.parts]
    obj["t"] = instance.t
    obj["gadget_minus_ids"] = sorted(instance.gadget_minus_ids)
    obj["gadget_plus_ids"] = sorted(instance.gadget_plus_ids)
    _write(args.output, jsonio.dumps(obj))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    points = random_point_set(args.n, args.dim, grid=args.grid, seed=args.seed)
    _write(args.output, jsonio.dumps(jsonio.point_set_to_obj(points)))
    return 0


def _cmd_plot(args: argparse.Namespace) -> int:
    points = jsonio.load_point_set(args.input)
    partition = jsonio.load_partition(args.partition) if args.partition else None
    removed = frozenset()
    if args.removal:
        removed = frozenset(int(tok) for tok in args.removal.split(","))
    _write(args.output, render_svg(points, partition, removed))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tverberg",
        description="Tolerant Tverberg partitions with exact verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a tolerant Tverberg partition")
    p.add_argument("--input", required=True, help="point set JSON")
    p.add_argument(
        "--algorithm",
        required=True,
        choices=["one_d", "lift", "chunk_merge", "brute"],
    )
    p.add_argument("--m", type=int, required=True, help="number of parts")
    p.add_argument("--t", type=int, default=None, help="tolerance target (lift)")
    p.add_argument("--solver", default=None, help="block solver: brute, 1d, lift")
    p.add_argument("--shuffle", action="store_true", help="shuffle before chunking")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP, help="brute-force size cap")
    p.add_argument("--output", default=None, help="partition JSON (default stdout)")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="test a claimed tolerance; exit 1 with witness if refuted")
    p.add_argument("--input", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--output", default=None, help="witness JSON on refutation")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("tolerance", help="print the exact tolerance of a partition")
    p.add_argument("--input", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_tolerance)

    p = sub.add_parser("depth", help="Tukey depth and centerpoint test for a query point")
    p.add_argument("--input", required=True)
    p.add_argument("--point", required=True, help="comma-separated exact coordinates")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("reduce-center", help="emit the tolerance instance encoding a centerpoint test")
    p.add_argument("--input", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_reduce_center)

    p = sub.add_parser("gen", help="generate a seeded random general-position instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("plot", help="render a 2-D instance to SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--partition", default=None)
    p.add_argument("--removal", default=None, help="comma-separated removed ids")
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TverbergError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
