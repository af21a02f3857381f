"""Exact-arithmetic point and partition model shared by the whole package.

All coordinates are ``fractions.Fraction`` values, so every geometric
decision made downstream (hull membership, LP feasibility, tolerance
verdicts) is exact.  Every type here is immutable after construction and
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

# Exact rational scalar used for every coordinate and every LP entry.
# Fraction keeps a canonical reduced representation with positive
# denominator, and its arithmetic is exact.
Scalar = Fraction

# A removal set is just a set of point ids drawn from one PointSet.
RemovalSet = frozenset[int]


class TverbergError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(TverbergError):
    """Dimension mismatch between points, sets or query objects."""


class RankError(TverbergError):
    """Rank selection query outside 1..len(list)."""


class TooFewPointsError(TverbergError):
    """Input point set smaller than the algorithm's requirement."""


class IncompatibleBlocksError(TverbergError):
    """Merge blocks disagree on part count, dimension or share ids."""


class InvalidPartitionError(TverbergError):
    """A partition does not match the point set it is applied to."""


class BudgetExceededError(TverbergError):
    """Subset enumeration would exceed the configured budget."""


class ShapeError(TverbergError):
    """Malformed LP constraint rows."""


def to_scalar(value: int | str | Fraction) -> Fraction:
    """Convert an exact representation to a Scalar.

    Accepts ints, Fractions, "num/den" strings and decimal strings
    ("0.25" becomes 1/4 exactly).  Floats are rejected: binary floats
    are not a faithful carrier for exact rational input.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TverbergError(f"not an exact scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise TverbergError(f"not an exact scalar: {value!r}") from exc
    raise TverbergError(f"not an exact scalar: {value!r} (floats are not accepted)")


@dataclass(frozen=True)
class Point:
    """A point with a stable integer identity.

    The id survives projection and lifting, which is what lets a
    partition computed for a projected set be mapped back to the
    original points.
    """

    id: int
    coords: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class PointSet:
    """An ordered collection of points in a common ambient dimension."""

    dim: int
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise DimensionError(f"dimension must be positive, got {self.dim}")
        seen: set[int] = set()
        for p in self.points:
            if len(p.coords) != self.dim:
                raise DimensionError(
                    f"point {p.id} has {len(p.coords)} coords, expected {self.dim}"
                )
            if p.id in seen:
                raise TverbergError(f"duplicate point id {p.id}")
            seen.add(p.id)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def ids(self) -> frozenset[int]:
        return frozenset(p.id for p in self.points)

    def point(self, pid: int) -> Point:
        for p in self.points:
            if p.id == pid:
                return p
        raise TverbergError(f"no point with id {pid}")

    def by_id(self) -> dict[int, Point]:
        return {p.id: p for p in self.points}

    def subset(self, ids: Iterable[int]) -> "PointSet":
        keep = set(ids)
        return PointSet(self.dim, tuple(p for p in self.points if p.id in keep))

    @classmethod
    def from_coords(
        cls,
        rows: Sequence[Sequence[int | str | Fraction]],
        start_id: int = 1,
    ) -> "PointSet":
        """Build a PointSet from coordinate rows, ids start_id, start_id+1, ..."""
        if not rows:
            raise TooFewPointsError("too few points: empty coordinate list")
        dim = len(rows[0])
        pts = tuple(
            Point(start_id + i, tuple(to_scalar(c) for c in row))
            for i, row in enumerate(rows)
        )
        return cls(dim, pts)


@dataclass(frozen=True)
class IndexedPartition:
    """A partition of a point set into m nonempty id sets.

    Part order is meaningful: several algorithms give part 0 a special
    structural role.
    """

    parts: tuple[frozenset[int], ...]

    @property
    def m(self) -> int:
        return len(self.parts)

    def all_ids(self) -> frozenset[int]:
        out: set[int] = set()
        for part in self.parts:
            out |= part
        return frozenset(out)

    @classmethod
    def from_iterables(cls, parts: Iterable[Iterable[int]]) -> "IndexedPartition":
        return cls(tuple(frozenset(part) for part in parts))


def validate_partition(point_set: PointSet, partition: IndexedPartition) -> bool:
    """True iff parts are nonempty, pairwise disjoint and cover exactly
    the ids of ``point_set``.  Total: never raises."""
    total = 0
    union: set[int] = set()
    for part in partition.parts:
        if not part:
            return False
        total += len(part)
        union |= part
    if total != len(union):  # overlap
        return False
    return union == set(p.id for p in point_set.points)


def order_key_1d(p: Point) -> tuple[Fraction, int]:
    """Sort key realizing the strict total order on 1-D points."""
    return (p.coords[0], p.id)


def total_order_1d(a: Point, b: Point) -> int:
    """Strict total order on 1-D points: by coordinate, exact ties by id.

    Returns -1, 0 or +1; 0 only when a and b are the same point.
    """
    if a.dim != 1 or b.dim != 1:
        raise DimensionError("dimension: total_order_1d needs 1-D points")
    ka, kb = order_key_1d(a), order_key_1d(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def lex_key(p: Point) -> tuple:
    """Symbolic tie-break order used in any dimension: coordinates read
    from the last axis down to the first, then id.

    A deterministic stand-in for an infinitesimal rotation: no two
    distinct points ever compare equal.
    """
    return tuple(reversed(p.coords)) + (p.id,)
