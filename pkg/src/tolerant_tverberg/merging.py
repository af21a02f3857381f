"""Raising tolerance by merging partitions of disjoint point sets.

If k disjoint sets each carry an m-partition with tolerances t_1..t_k,
taking part-wise unions yields an m-partition of the union with
tolerance sum(t_i) + k - 1: any removal of that many points must leave
some block with at most t_i of its points gone, and that block's hulls
keep a common point on their own.  Chunking one set into blocks and
solving each with a regular solver turns this into a simple
tolerance-approximation driver.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import (
    IncompatibleBlocksError,
    IndexedPartition,
    PointSet,
    TooFewPointsError,
    validate_partition,
)
from .solvers import SolverContract


@dataclass(frozen=True)
class MergeBlock:
    points: PointSet
    partition: IndexedPartition
    tolerance: int


@dataclass(frozen=True)
class MergeResult:
    points: PointSet
    partition: IndexedPartition
    tolerance: int


def merge_partitions(blocks: list[MergeBlock]) -> MergeResult:
    """Part-wise union of the blocks' partitions.

    Blocks must agree on part count and dimension and have disjoint ids.
    """
    if not blocks:
        raise IncompatibleBlocksError("incompatible blocks: no blocks given")
    m = blocks[0].partition.m
    dim = blocks[0].points.dim
    seen: set[int] = set()
    for block in blocks:
        if block.partition.m != m:
            raise IncompatibleBlocksError(
                f"incompatible blocks: part counts {m} vs {block.partition.m}"
            )
        if block.points.dim != dim:
            raise IncompatibleBlocksError(
                f"incompatible blocks: dims {dim} vs {block.points.dim}"
            )
        if block.tolerance < 0:
            raise IncompatibleBlocksError("incompatible blocks: negative tolerance")
        if not validate_partition(block.points, block.partition):
            raise IncompatibleBlocksError("incompatible blocks: invalid partition")
        ids = block.points.ids()
        if ids & seen:
            raise IncompatibleBlocksError("incompatible blocks: overlapping ids")
        seen |= ids

    parts = []
    for j in range(m):
        merged: set[int] = set()
        for block in blocks:
            merged |= block.partition.parts[j]
        parts.append(frozenset(merged))

    all_points = tuple(p for block in blocks for p in block.points.points)
    tolerance = sum(block.tolerance for block in blocks) + len(blocks) - 1
    return MergeResult(
        points=PointSet(dim, all_points),
        partition=IndexedPartition(tuple(parts)),
        tolerance=tolerance,
    )


def chunk_and_merge(
    point_set: PointSet,
    m: int,
    solver: SolverContract,
    seed: int | None = None,
) -> MergeResult:
    """Split into floor(n / n_A(m)) blocks, solve each, merge.

    Blocks are formed in input order (or shuffled under ``seed``); the
    first k-1 blocks have exactly n_A(m) points and the last absorbs the
    remainder, which any solver tolerates since extra points only grow
    hulls.
    """
    per_block = solver.points_needed(m)
    n = len(point_set)
    if n < per_block:
        raise TooFewPointsError(
            f"too few points for one block: need {per_block}, got {n}"
        )

    order = list(point_set.points)
    if seed is not None:
        random.Random(seed).shuffle(order)

    k = n // per_block
    blocks: list[MergeBlock] = []
    for i in range(k):
        lo = i * per_block
        hi = lo + per_block if i < k - 1 else n
        sub = PointSet(point_set.dim, tuple(order[lo:hi]))
        blocks.append(
            MergeBlock(
                points=sub,
                partition=solver.solve(sub, m),
                tolerance=solver.guaranteed_tolerance,
            )
        )
    return merge_partitions(blocks)
