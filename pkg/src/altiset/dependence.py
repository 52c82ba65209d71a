"""Dependence direction of a planar point set.

A point set decomposes into a minimal number of strictly increasing (or
decreasing) subsets; the two counts and their log-ratio give a rank-style
correlation direction indicator in [-1, 1].  All monotonicity is strict:
two points sharing an x (or a y) never fit in one increasing block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateInputError, InjectivityError
from .layers import LayerDecomposition, upper_layers
from .relation import FiniteRelation, Universe, union


@dataclass(frozen=True)
class PointSet2D:
    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        pts = tuple((float(x), float(y)) for x, y in self.points)
        if len(set(pts)) != len(pts):
            raise InjectivityError("duplicate points are not allowed")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)


def _direction_relation(points: PointSet2D, increasing: bool) -> FiniteRelation:
    """Union of <_y with >_x (increasing) or <_x (decreasing)."""
    universe = Universe(len(points))
    xs = [p[0] for p in points.points]
    ys = [p[1] for p in points.points]
    by_y = FiniteRelation.induce(universe, ys, strict=True)
    by_x = FiniteRelation.induce(universe, xs, strict=True)
    second = by_x.inverse() if increasing else by_x
    return union([by_y, second])


def _layers_for(points: PointSet2D, increasing: bool) -> LayerDecomposition:
    if len(points) == 0:
        raise DegenerateInputError("point set is empty")
    return upper_layers(_direction_relation(points, increasing))


def increasingness_index(points: PointSet2D) -> int:
    """Minimal number of strictly increasing subsets covering the points."""
    return _layers_for(points, increasing=True).class_count


def decreasingness_index(points: PointSet2D) -> int:
    """Minimal number of strictly decreasing subsets covering the points."""
    return _layers_for(points, increasing=False).class_count


def epsilon(points: PointSet2D) -> float:
    """log_n of (decreasingness / increasingness); 1 = direct, -1 = indirect."""
    n = len(points)
    if n <= 1:
        raise DegenerateInputError(f"epsilon needs at least 2 points, got {n}")
    plus = increasingness_index(points)
    minus = decreasingness_index(points)
    return math.log(minus / plus) / math.log(n)


def increasing_decomposition(points: PointSet2D) -> list[list[int]]:
    """Partition into exactly increasingness_index strictly increasing blocks.

    Block i is the i-th successive altiset layer; blocks hold point
    indices sorted ascending.
    """
    decomp = _layers_for(points, increasing=True)
    blocks = []
    for i in range(1, decomp.class_count + 1):
        blocks.append(sorted(decomp.upper_layer(i)))
    return blocks


def is_increasing_set(points: PointSet2D, indices: Sequence[int]) -> bool:
    """True iff the subset is the plot of a strictly increasing function."""
    chosen = [points.points[i] for i in indices]
    for a in range(len(chosen)):
        for b in range(len(chosen)):
            if a == b:
                continue
            (xa, ya), (xb, yb) = chosen[a], chosen[b]
            if not ((xa < xb and ya < yb) or (xa > xb and ya > yb)):
                return False
    return True


def minimal_increasing_cover_bruteforce(points: PointSet2D, increasing: bool = True) -> int:
    """Exhaustive minimum over all partitions into monotone subsets (oracle).

    Enumerates set partitions with pruning; intended for |S| <= 8.
    """
    n = len(points)
    if n == 0:
        raise DegenerateInputError("point set is empty")
    pts = points.points

    def compatible(i: int, block: list[int]) -> bool:
        xi, yi = pts[i]
        for j in block:
            xj, yj = pts[j]
            if increasing:
                ok = (xi < xj and yi < yj) or (xi > xj and yi > yj)
            else:
                ok = (xi < xj and yi > yj) or (xi > xj and yi < yj)
            if not ok:
                return False
        return True

    best = n

    def search(i: int, blocks: list[list[int]]):
        nonlocal best
        if len(blocks) >= best:
            return
        if i == n:
            best = len(blocks)
            return
        for block in blocks:
            if compatible(i, block):
                block.append(i)
                search(i + 1, blocks)
                block.pop()
        blocks.append([i])
        search(i + 1, blocks)
        blocks.pop()

    search(0, [])
    return best
