"""Significance domains and the measure-driven evolution of valuation.

The abstract measure is realized as a fixed deterministic grid of cell
centers: measures are exact multiples of the cell area, so the valuation
evolution has a finite image and its fixed point is detected by exact
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import AltisetError, DimensionError, GridError

DEFAULT_RESOLUTION = 128
DEFAULT_INFLATE = 0.25


@dataclass(frozen=True)
class GridMeasure:
    """A fixed lattice of cell centers over a bounding box."""

    xmin: float
    xmax: float
    ymin: float
    ymax: float
    nx: int
    ny: int

    def __post_init__(self):
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise GridError("bounding box is degenerate")
        if self.nx < 1 or self.ny < 1:
            raise GridError("resolution must be >= 1 in both axes")

    @property
    def cell_area(self) -> float:
        return (self.xmax - self.xmin) * (self.ymax - self.ymin) / (self.nx * self.ny)

    @property
    def box_area(self) -> float:
        return (self.xmax - self.xmin) * (self.ymax - self.ymin)

    def centers(self) -> tuple[np.ndarray, np.ndarray]:
        """Flat arrays of cell-center x and y coordinates."""
        dx = (self.xmax - self.xmin) / self.nx
        dy = (self.ymax - self.ymin) / self.ny
        xs = self.xmin + dx * (np.arange(self.nx) + 0.5)
        ys = self.ymin + dy * (np.arange(self.ny) + 0.5)
        gx, gy = np.meshgrid(xs, ys, indexing="ij")
        return gx.ravel(), gy.ravel()

    @classmethod
    def around(
        cls,
        points: Sequence[tuple[float, float]],
        inflate: float = DEFAULT_INFLATE,
        nx: int = DEFAULT_RESOLUTION,
        ny: Optional[int] = None,
    ) -> "GridMeasure":
        """Bounding box of the points inflated per side; degenerate spans
        get a unit pad so single points still produce a box."""
        if not points:
            raise GridError("cannot build a grid around zero points")
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        spanx = (xmax - xmin) or 1.0
        spany = (ymax - ymin) or 1.0
        return cls(
            xmin - inflate * spanx,
            xmax + inflate * spanx,
            ymin - inflate * spany,
            ymax + inflate * spany,
            nx,
            ny if ny is not None else nx,
        )


def _sq_dists(grid: GridMeasure, summits: Sequence[tuple[float, float]]) -> np.ndarray:
    """Squared distance from every cell center to every summit: (cells, summits)."""
    gx, gy = grid.centers()
    sx = np.array([s[0] for s in summits])
    sy = np.array([s[1] for s in summits])
    return (gx[:, None] - sx[None, :]) ** 2 + (gy[:, None] - sy[None, :]) ** 2


def inverse_altiset_member(
    summits: Sequence[tuple[float, float]],
    altitudes: Sequence[float],
    a: int,
    x: tuple[float, float],
) -> bool:
    """Is summit a significant when the reference point sits at x?"""
    if not (0 <= a < len(summits)):
        raise IndexError(f"summit index {a} out of range")
    if len(altitudes) != len(summits):
        raise DimensionError("altitudes and summits differ in length")
    da = (summits[a][0] - x[0]) ** 2 + (summits[a][1] - x[1]) ** 2
    ha = altitudes[a]
    for b in range(len(summits)):
        if b == a:
            continue
        db = (summits[b][0] - x[0]) ** 2 + (summits[b][1] - x[1]) ** 2
        hb = altitudes[b]
        if hb >= ha and db <= da and (hb > ha or db < da):
            return False
    return True


def inverse_altiset_mask(
    summits: Sequence[tuple[float, float]],
    altitudes: Sequence[float],
    a: int,
    grid: GridMeasure,
) -> np.ndarray:
    """Boolean mask over grid cells whose reference point keeps a significant."""
    if not (0 <= a < len(summits)):
        raise IndexError(f"summit index {a} out of range")
    sq = _sq_dists(grid, summits)
    h = np.array(altitudes, dtype=float)
    da = sq[:, a]
    ha = h[a]
    dominated = np.zeros(sq.shape[0], dtype=bool)
    for b in range(len(summits)):
        if b == a:
            continue
        db = sq[:, b]
        dominated |= (h[b] >= ha) & (db <= da) & ((h[b] > ha) | (db < da))
    return ~dominated


def inverse_altiset_measure(
    summits: Sequence[tuple[float, float]],
    altitudes: Sequence[float],
    a: int,
    grid: GridMeasure,
) -> float:
    """Grid measure of the significance domain of summit a."""
    return grid.cell_area * int(inverse_altiset_mask(summits, altitudes, a, grid).sum())


def voronoi_mu(
    x: int,
    excluded: Sequence[int],
    summits: Sequence[tuple[float, float]],
    grid: GridMeasure,
) -> float:
    """Measure of the region weakly closer to summit x than to every
    competitor outside the excluded set (ties count for both sides)."""
    excluded = frozenset(excluded)
    if x in excluded:
        raise AltisetError(f"summit {x} must not be in the excluded set")
    sq = _sq_dists(grid, summits)
    mine = sq[:, x]
    ok = np.ones(sq.shape[0], dtype=bool)
    for b in range(len(summits)):
        if b == x or b in excluded:
            continue
        ok &= sq[:, b] >= mine
    return grid.cell_area * int(ok.sum())


@dataclass(frozen=True)
class ValuationTrace:
    """Successive valuations h_0, h_1, ... with the detected stop index."""

    valuations: tuple[tuple[float, ...], ...]
    stop_index: int

    @property
    def final(self) -> tuple[float, ...]:
        return self.valuations[self.stop_index]


def evolve(
    summits: Sequence[tuple[float, float]],
    h0: Sequence[float],
    grid: GridMeasure,
    max_steps: int = 1000,
) -> ValuationTrace:
    """Iterate h_{i+1}(x) = mu(x, {y: h_i(y) < h_i(x)}) to its fixed point.

    The fixed point exists because the grid measure has a finite image;
    exceeding max_steps therefore signals an implementation bug.
    """
    if max_steps < 1:
        raise DimensionError(f"max_steps must be >= 1, got {max_steps}")
    if len(h0) != len(summits):
        raise DimensionError("initial valuation length does not match summits")
    current = tuple(float(v) for v in h0)
    trace = [current]
    for _ in range(max_steps):
        nxt = []
        for x in range(len(summits)):
            below = [y for y in range(len(summits)) if current[y] < current[x]]
            nxt.append(voronoi_mu(x, below, summits, grid))
        nxt = tuple(nxt)
        trace.append(nxt)
        if nxt == current:
            return ValuationTrace(tuple(trace), len(trace) - 2)
        current = nxt
    raise AltisetError(f"valuation evolution did not stop within {max_steps} steps")
