"""JSON wire formats for point sets and partitions.

Point set:   {"dim": d, "points": [{"id": 7, "coords": ["1/2", 3, "0.25"]}, ...]}
Partition:   {"parts": [[ids...], [ids...], ...]}

Coordinates are accepted as integers, decimal strings or "num/den"
strings; they are always emitted as "num/den" strings so output is
exact and byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import IndexedPartition, Point, PointSet, TverbergError, to_scalar


def scalar_to_json(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def point_set_to_obj(point_set: PointSet) -> dict[str, Any]:
    return {
        "dim": point_set.dim,
        "points": [
            {"id": p.id, "coords": [scalar_to_json(c) for c in p.coords]}
            for p in point_set.points
        ],
    }


def point_set_from_obj(obj: Any) -> PointSet:
    if not isinstance(obj, dict) or "dim" not in obj or "points" not in obj:
        raise TverbergError("point set JSON must have 'dim' and 'points'")
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise TverbergError("'dim' must be an integer")
    if not isinstance(obj["points"], list):
        raise TverbergError("'points' must be a list")
    points = []
    for entry in obj["points"]:
        if not isinstance(entry, dict) or "id" not in entry or "coords" not in entry:
            raise TverbergError("each point needs 'id' and 'coords'")
        pid = entry["id"]
        if not isinstance(pid, int) or isinstance(pid, bool):
            raise TverbergError(f"point id must be an integer, got {pid!r}")
        if not isinstance(entry["coords"], list):
            raise TverbergError(f"coords of point {pid} must be a list")
        coords = tuple(to_scalar(c) for c in entry["coords"])
        points.append(Point(pid, coords))
    return PointSet(dim, tuple(points))


def partition_to_obj(partition: IndexedPartition) -> dict[str, Any]:
    return {"parts": [sorted(part) for part in partition.parts]}


def partition_from_obj(obj: Any) -> IndexedPartition:
    if not isinstance(obj, dict) or "parts" not in obj:
        raise TverbergError("partition JSON must have 'parts'")
    if not isinstance(obj["parts"], list):
        raise TverbergError("'parts' must be a list")
    parts = []
    for part in obj["parts"]:
        if not isinstance(part, list) or any(
            not isinstance(i, int) or isinstance(i, bool) for i in part
        ):
            raise TverbergError("each part must be a list of integer ids")
        parts.append(frozenset(part))
    return IndexedPartition(tuple(parts))


def dumps(obj: Any) -> str:
    """Serialize with a fixed layout so identical results are byte-identical."""
    return json.dumps(obj, indent=2) + "\n"


def load_point_set(path: str) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        return point_set_from_obj(json.load(fh))


def load_partition(path: str) -> IndexedPartition:
    with open(path, "r", encoding="utf-8") as fh:
        return partition_from_obj(json.load(fh))
