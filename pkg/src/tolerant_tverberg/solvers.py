"""Regular (tolerance-0) Tverberg solvers behind one contract.

The merge driver only needs to know how many points a solver requires
per m-partition and what tolerance each block is good for; anything
honoring that contract plugs in.  Known deterministic approximation
algorithms from the literature would slot in the same way:

    Miller & Sheehy (2010):  n_A(m) = 2m(d+1)^2,  time m^O(log d) d^O(log d) n
    Mulzer & Werner (2013):  n_A(m) = 4m(d+1)^3,  time d^O(log d) n

Neither is implemented here; the rows above document what the driver
would guarantee on top of them (tolerance floor(n / n_A(m)) - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import (
    IndexedPartition,
    PointSet,
    TverbergError,
    validate_partition,
)
from .lifting import tolerant_tverberg_lifted
from .lp import common_intersection_point
from .one_d import tolerant_tverberg_1d

BRUTE_FORCE_CAP = 12


@dataclass(frozen=True)
class SolverContract:
    """A named solver with its minimum input size per part count.

    For any point set with at least points_needed(m) points in the
    dimension the contract was built for, solve(P, m) returns a valid
    Tverberg m-partition with at least guaranteed_tolerance.
    """

    name: str
    points_needed: Callable[[int], int]
    guaranteed_tolerance: int
    solve: Callable[[PointSet, int], IndexedPartition]


def restricted_growth_strings(n: int, blocks: int):
    """All partitions of n items into exactly ``blocks`` nonempty blocks,
    encoded as restricted growth strings, in lexicographic order."""
    if blocks < 1 or blocks > n:
        return
    a = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            if mx + 1 == blocks:
                yield tuple(a)
            return
        top = min(mx + 1, blocks - 1)
        for v in range(top + 1):
            new_mx = mx if v <= mx else v
            if new_mx + 1 + (n - i - 1) >= blocks:  # can still open enough blocks
                a[i] = v
                yield from rec(i + 1, new_mx)

    yield from rec(0, -1)


def brute_force_tverberg(
    point_set: PointSet, m: int, cap: int = BRUTE_FORCE_CAP
) -> IndexedPartition | None:
    """First partition (in canonical restricted-growth order) whose part
    hulls share a point, or None after exhausting all of them.

    The enumeration is Bell-number sized, hence the hard cap.
    """
    n = len(point_set)
    if n > cap:
        raise TverbergError(f"instance too large for brute force: {n} > cap {cap}")
    points = list(point_set.points)
    for rgs in restricted_growth_strings(n, m):
        sets: list[list] = [[] for _ in range(m)]
        for p, block in zip(points, rgs):
            sets[block].append(p)
        if common_intersection_point(sets, point_set.dim) is not None:
            return IndexedPartition(
                tuple(frozenset(p.id for p in s) for s in sets)
            )
    return None


def _solve_brute(point_set: PointSet, m: int) -> IndexedPartition:
    partition = brute_force_tverberg(point_set, m)
    if partition is None:
        raise TverbergError(
            f"no Tverberg {m}-partition exists for this {len(point_set)}-point set"
        )
    return partition


def _solve_1d(point_set: PointSet, m: int) -> IndexedPartition:
    return tolerant_tverberg_1d(point_set, m).partition


def _solve_lifted(point_set: PointSet, m: int) -> IndexedPartition:
    return tolerant_tverberg_lifted(point_set, m, 0)


def get_solver(name: str, dim: int) -> SolverContract:
    """Look up a solver by CLI name for a given ambient dimension."""
    if name == "brute":
        return SolverContract(
            name="brute",
            points_needed=lambda m: (dim + 1) * (m - 1) + 1,
            guaranteed_tolerance=0,
            solve=_solve_brute,
        )
    if name == "1d":
        if dim != 1:
            raise TverbergError("solver '1d' only applies to 1-D point sets")
        return SolverContract(
            name="1d",
            points_needed=lambda m: 2 * m - 1,
            guaranteed_tolerance=0,
            solve=_solve_1d,
        )
    if name == "lift":
        return SolverContract(
            name="lift",
            points_needed=lambda m: (2 ** (dim - 1)) * (2 * m - 1),
            guaranteed_tolerance=0,
            solve=_solve_lifted,
        )
    raise TverbergError(f"unknown solver {name!r} (choose from: brute, 1d, lift)")


def check_solver_output(
    point_set: PointSet, partition: IndexedPartition
) -> bool:
    """Sanity predicate shared by tests: valid cover and intersecting hulls."""
    if not validate_partition(point_set, partition):
        return False
    by_id = point_set.by_id()
    sets = [[by_id[pid] for pid in sorted(part)] for part in partition.parts]
    return common_intersection_point(sets, point_set.dim) is not None
