"""Seeded random instances in general position.

Coordinates are integers drawn uniformly from [0, grid]; offending
points are redrawn until no d+1 points are affinely dependent (for
d = 1: until all coordinates are distinct).  The same seed always
yields the same set.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .core import Point, PointSet, TverbergError

DEFAULT_GRID = 1000
_MAX_REDRAWS = 10000


def random_point_set(n: int, dim: int, grid: int = DEFAULT_GRID, seed: int = 0) -> PointSet:
    if n < 1 or dim < 1 or grid < 1:
        raise TverbergError(f"bad generator parameters: n={n}, dim={dim}, grid={grid}")
    rng = random.Random(seed)
    coords = [[rng.randint(0, grid) for _ in range(dim)] for _ in range(n)]

    for _ in range(_MAX_REDRAWS):
        bad = _degenerate_index(coords, dim)
        if bad is None:
            break
        coords[bad] = [rng.randint(0, grid) for _ in range(dim)]
    else:
        raise TverbergError(
            f"could not reach general position for n={n}, dim={dim}, grid={grid}"
        )

    points = tuple(
        Point(i + 1, tuple(Fraction(c) for c in row)) for i, row in enumerate(coords)
    )
    return PointSet(dim, points)


def _degenerate_index(coords: list[list[int]], dim: int) -> int | None:
    """Index of a point taking part in a degeneracy, or None if clean."""
    seen: dict[tuple, int] = {}
    for i, row in enumerate(coords):
        key = tuple(row)
        if key in seen:
            return i
        seen[key] = i
    if dim == 1:
        return None  # distinctness is all 1-D needs
    for subset in combinations(range(len(coords)), dim + 1):
        base = coords[subset[0]]
        mat = [
            [coords[j][k] - base[k] for k in range(dim)] for j in subset[1:]
        ]
        if _det(mat) == 0:
            return subset[-1]
    return None


def _det(mat: list[list[int]]) -> Fraction:
    """Fraction-free-enough determinant by Gaussian elimination."""
    size = len(mat)
    m = [[Fraction(v) for v in row] for row in mat]
    det = Fraction(1)
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] * inv
            if factor != 0:
                for k in range(col, size):
                    m[r][k] -= factor * m[col][k]
    return det
