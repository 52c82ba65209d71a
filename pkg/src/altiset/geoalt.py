"""Geometric altisets: summits that are simultaneously high and close.

A summit is significant for a reference point when no other summit is at
least as high and at least as near with one of the two strict.  Three
computation routes (distance sweep, altitude sweep, block recursion) must
agree with the definitional pairwise oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionError, SpaceKindError, SubsetIndexError

EUCLIDEAN_2D = "euclidean-2d"
REAL_LINE = "real-line"
REAL_LINE_LEFT = "real-line-left-restricted"

_SPACES = (EUCLIDEAN_2D, REAL_LINE, REAL_LINE_LEFT)

# absolute tolerance for distance ties on non-exact (float) coordinates
DISTANCE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SummitField:
    """Finite summits with altitudes in a metric space, plus a reference."""

    space: str
    summits: tuple
    altitudes: tuple[float, ...]
    reference: tuple

    def __post_init__(self):
        if self.space not in _SPACES:
            raise SpaceKindError(f"unknown space kind {self.space!r}")
        if self.space == EUCLIDEAN_2D:
            summits = tuple((float(x), float(y)) for x, y in self.summits)
            ref = (float(self.reference[0]), float(self.reference[1]))
        else:
            summits = tuple(float(x) for x in self.summits)
            ref = float(self.reference)
            if self.space == REAL_LINE_LEFT and any(s > ref for s in summits):
                raise SpaceKindError("left-restricted space requires summits <= reference")
        if len(self.altitudes) != len(summits):
            raise DimensionError(
                f"{len(self.altitudes)} altitudes for {len(summits)} summits"
            )
        object.__setattr__(self, "space", self.space)
        object.__setattr__(self, "summits", summits)
        object.__setattr__(self, "altitudes", tuple(float(h) for h in self.altitudes))
        object.__setattr__(self, "reference", ref)

    def __len__(self) -> int:
        return len(self.summits)

    def distances(self) -> list[float]:
        if self.space == EUCLIDEAN_2D:
            rx, ry = self.reference
            return [math.hypot(x - rx, y - ry) for x, y in self.summits]
        return [abs(s - self.reference) for s in self.summits]


def _dist_le(a: float, b: float) -> bool:
    return a <= b + DISTANCE_TOLERANCE


def _dist_eq(a: float, b: float) -> bool:
    return abs(a - b) <= DISTANCE_TOLERANCE


def geo_altiset_oracle(field: SummitField) -> frozenset[int]:
    """Definitional pairwise check: excluded iff some summit is at least as
    high and at least as close, with one of the comparisons strict."""
    h = field.altitudes
    d = field.distances()
    out = set()
    for a in range(len(field)):
        dominated = False
        for b in range(len(field)):
            if b == a:
                continue
            if h[b] >= h[a] and _dist_le(d[b], d[a]) and (
                h[b] > h[a] or (_dist_le(d[b], d[a]) and not _dist_eq(d[b], d[a]))
            ):
                dominated = True
                break
        if not dominated:
            out.add(a)
    return frozenset(out)


def skyline_circular(field: SummitField) -> frozenset[int]:
    """Distance sweep: walk distance groups outward-in reversed — nearest
    first — keeping the best altitude seen strictly nearer."""
    d = field.distances()
    h = field.altitudes
    order = sorted(range(len(field)), key=lambda i: d[i])
    out: set[int] = set()
    best = -math.inf
    i = 0
    while i < len(order):
        # group of (tolerance-)equal distances
        group = [order[i]]
        j = i + 1
        while j < len(order) and _dist_eq(d[order[j]], d[group[0]]):
            group.append(order[j])
            j += 1
        group_max = max(h[g] for g in group)
        if group_max > best:
            out.update(g for g in group if h[g] == group_max)
            best = group_max
        i = j
    return frozenset(out)


def skyline_contour(field: SummitField) -> frozenset[int]:
    """Altitude sweep: walk altitude groups top-down keeping the smallest
    distance among strictly higher summits."""
    d = field.distances()
    h = field.altitudes
    order = sorted(range(len(field)), key=lambda i: -h[i])
    out: set[int] = set()
    best = math.inf
    i = 0
    while i < len(order):
        group = [order[i]]
        j = i + 1
        while j < len(order) and h[order[j]] == h[group[0]]:
            group.append(order[j])
            j += 1
        group_min = min(d[g] for g in group)
        if not _dist_le(best, group_min):  # group_min strictly below best
            out.update(g for g in group if _dist_eq(d[g], group_min))
            best = group_min
        i = j
    return frozenset(out)


def _subfield(field: SummitField, indices: Sequence[int]) -> SummitField:
    return SummitField(
        field.space,
        tuple(field.summits[i] for i in indices),
        tuple(field.altitudes[i] for i in indices),
        field.reference,
    )


def skyline_recursive(field: SummitField, block_size: int) -> frozenset[int]:
    """Block decomposition: per-block altisets, merge, repeat.

    Correct for any block partition because the two criteria are linearly
    induced; blocks are cut in input order.
    """
    if block_size < 1:
        raise DimensionError(f"block size must be >= 1, got {block_size}")
    current = list(range(len(field)))
    while len(current) > block_size:
        survivors: list[int] = []
        for start in range(0, len(current), block_size):
            block = current[start : start + block_size]
            local = geo_altiset_oracle(_subfield(field, block))
            survivors.extend(block[i] for i in sorted(local))
        if len(survivors) == len(current):
            break
        current = survivors
    final = geo_altiset_oracle(_subfield(field, current))
    return frozenset(current[i] for i in final)


def record_events(times: Sequence[float], altitudes: Sequence[float]) -> frozenset[int]:
    """Events that were records at their time: no earlier-or-simultaneous
    event is at least as high with time or altitude strict."""
    if len(times) != len(altitudes):
        raise DimensionError(f"{len(times)} times for {len(altitudes)} altitudes")
    out = set()
    n = len(times)
    for a in range(n):
        dominated = False
        for b in range(n):
            if b == a:
                continue
            if (
                altitudes[b] >= altitudes[a]
                and times[b] <= times[a]
                and (altitudes[b] > altitudes[a] or times[b] < times[a])
            ):
                dominated = True
                break
        if not dominated:
            out.add(a)
    return frozenset(out)


def record_events_field(field: SummitField) -> frozenset[int]:
    """record_events over a real-line field; summits are event times."""
    if field.space == EUCLIDEAN_2D:
        raise SpaceKindError("record events need a real-line space")
    return record_events(field.summits, field.altitudes)
