"""Worst-case linear rank selection on 1-D point lists.

Deterministic median-of-medians with groups of five.  The interleaved
partition construction needs guaranteed linear selection, and a
deterministic pivot keeps its output reproducible.
"""

from __future__ import annotations

from typing import Sequence

from .core import DimensionError, Point, RankError, order_key_1d


def select(points: Sequence[Point], k: int) -> Point:
    """Return the k-th smallest point (1-based) under the 1-D total order.

    The caller's sequence is never reordered.
    """
    if not 1 <= k <= len(points):
        raise RankError(f"rank out of range: k={k}, n={len(points)}")
    for p in points:
        if p.dim != 1:
            raise DimensionError("dimension: select needs 1-D points")
    return _select(list(points), k)


def _median5(group: list[Point]) -> Point:
    group = sorted(group, key=order_key_1d)
    return group[(len(group) - 1) // 2]


def _select(items: list[Point], k: int) -> Point:
    while True:
        if len(items) <= 5:
            items.sort(key=order_key_1d)
            return items[k - 1]
        medians = [_median5(items[i : i + 5]) for i in range(0, len(items), 5)]
        pivot = _select(medians, (len(medians) + 1) // 2)
        pk = order_key_1d(pivot)
        lows = [p for p in items if order_key_1d(p) < pk]
        highs = [p for p in items if order_key_1d(p) > pk]
        # the (coord, id) key is a strict total order, so exactly one
        # element equals the pivot
        if k <= len(lows):
            items = lows
        elif k == len(lows) + 1:
            return pivot
        else:
            items = highs
            k -= len(lows) + 1
