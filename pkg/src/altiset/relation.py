"""Finite binary relations and the adjustment operators.

A relation is stored as a dense boolean adjacency matrix over an indexed
universe; row = first argument.  All operators are pure and return fresh
relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DimensionError, SubsetIndexError


@dataclass(frozen=True)
class Universe:
    """An indexed finite carrier set, optionally labelled."""

    size: int
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.size < 0:
            raise DimensionError(f"universe size must be >= 0, got {self.size}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.size:
                raise DimensionError(
                    f"{len(self.labels)} labels for universe of size {self.size}"
                )
            if len(set(self.labels)) != self.size:
                raise DimensionError("labels must be pairwise distinct")

    def check_subset(self, subset: Iterable[int]) -> tuple[int, ...]:
        """Validate indices and return them sorted ascending, deduplicated."""
        idx = sorted(set(subset))
        if idx and (idx[0] < 0 or idx[-1] >= self.size):
            raise SubsetIndexError(f"subset {idx} out of range for size {self.size}")
        return tuple(idx)


@dataclass(frozen=True)
class FiniteRelation:
    """A binary relation on a Universe, as a boolean adjacency matrix."""

    universe: Universe
    adjacency: np.ndarray = field(repr=False)

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=bool)
        n = self.universe.size
        if adj.shape != (n, n):
            raise DimensionError(
                f"adjacency shape {adj.shape} does not match universe size {n}"
            )
        adj = adj.copy()
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[int, int]]) -> "FiniteRelation":
        n = universe.size
        adj = np.zeros((n, n), dtype=bool)
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise SubsetIndexError(f"pair ({a},{b}) out of range for size {n}")
            adj[a, b] = True
        return cls(universe, adj)

    @classmethod
    def empty(cls, universe: Universe) -> "FiniteRelation":
        n = universe.size
        return cls(universe, np.zeros((n, n), dtype=bool))

    @classmethod
    def full(cls, universe: Universe) -> "FiniteRelation":
        n = universe.size
        return cls(universe, np.ones((n, n), dtype=bool))

    @classmethod
    def induce(cls, universe: Universe, keys: Sequence, strict: bool = True) -> "FiniteRelation":
        """Pull a (strict) linear order back along a key function."""
        if len(keys) != universe.size:
            raise DimensionError(
                f"{len(keys)} keys for universe of size {universe.size}"
            )
        n = universe.size
        adj = np.zeros((n, n), dtype=bool)
        for a in range(n):
            for b in range(n):
                adj[a, b] = keys[a] < keys[b] if strict else keys[a] <= keys[b]
        return cls(universe, adj)

    # -- basic queries ----------------------------------------------------

    def pairs(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(self.adjacency)
        return list(zip(rows.tolist(), cols.tolist()))

    def __contains__(self, pair: tuple[int, int]) -> bool:
        a, b = pair
        return bool(self.adjacency[a, b])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteRelation):
            return NotImplemented
        return self.universe.size == other.universe.size and bool(
            np.array_equal(self.adjacency, other.adjacency)
        )

    def __hash__(self):
        return hash((self.universe.size, self.adjacency.tobytes()))

    # -- adjustment operators ---------------------------------------------

    def inverse(self) -> "FiniteRelation":
        return FiniteRelation(self.universe, self.adjacency.T)

    def asym_interior(self) -> "FiniteRelation":
        """Strict-domination part: keep (a,b) only when (b,a) is absent."""
        return FiniteRelation(self.universe, self.adjacency & ~self.adjacency.T)

    def transitive_closure(self) -> "FiniteRelation":
        adj = self.adjacency.copy()
        while True:
            step = adj | (adj @ adj)
            if np.array_equal(step, adj):
                return FiniteRelation(self.universe, adj)
            adj = step

    def complementary_inversion(self) -> "FiniteRelation":
        return FiniteRelation(self.universe, ~self.adjacency.T)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.adjacency, self.adjacency.T))

    def find_asym_cycle(self) -> Optional[list[int]]:
        """A cycle of the digraph (A, asym R), or None if acyclic.

        Iterative DFS with an explicit stack; returned list has first ==
        last index.
        """
        succ = self.asym_interior().adjacency
        n = self.universe.size
        WHITE, GREY, BLACK = 0, 1, 2
        color = [WHITE] * n
        parent = [-1] * n
        for root in range(n):
            if color[root] != WHITE:
                continue
            stack = [(root, 0)]
            color[root] = GREY
            while stack:
                v, nxt = stack.pop()
                found = False
                for w in range(nxt, n):
                    if not succ[v, w]:
                        continue
                    if color[w] == GREY:
                        cycle = [v]
                        u = v
                        while u != w:
                            u = parent[u]
                            cycle.append(u)
                        cycle.reverse()
                        cycle.append(cycle[0])
                        return cycle
                    if color[w] == WHITE:
                        stack.append((v, w + 1))
                        parent[w] = v
                        color[w] = GREY
                        stack.append((w, 0))
                        found = True
                        break
                if not found:
                    color[v] = BLACK
        return None

    def has_aa_property(self) -> bool:
        """True iff the asymmetric interior is acyclic as a digraph."""
        return self.find_asym_cycle() is None

    # -- significance ------------------------------------------------------

    def altiset(self, subset: Optional[Iterable[int]] = None) -> frozenset[int]:
        """All significant (non-dominated) elements of the restriction to subset.

        a is significant iff no b in the subset strictly dominates it,
        i.e. (a,b) in R and (b,a) not in R.
        """
        if subset is None:
            idx = np.arange(self.universe.size)
        else:
            idx = np.array(self.universe.check_subset(subset), dtype=int)
        if idx.size == 0:
            return frozenset()
        sub = self.adjacency[np.ix_(idx, idx)]
        dominated = (sub & ~sub.T).any(axis=1)
        return frozenset(int(i) for i in idx[~dominated])

    def restrict(self, subset: Iterable[int]) -> tuple["FiniteRelation", tuple[int, ...]]:
        """Relation on a re-indexed sub-universe, plus old-index mapping."""
        idx = self.universe.check_subset(subset)
        ids = np.array(idx, dtype=int)
        labels = None
        if self.universe.labels is not None:
            labels = tuple(self.universe.labels[i] for i in idx)
        sub_universe = Universe(len(idx), labels)
        adj = self.adjacency[np.ix_(ids, ids)] if idx else np.zeros((0, 0), bool)
        return FiniteRelation(sub_universe, adj), idx


def union(relations: Sequence[FiniteRelation]) -> FiniteRelation:
    """Element-wise OR of a nonempty list of relations on one universe."""
    if not relations:
        raise DimensionError("union of an empty list of relations")
    first = relations[0]
    adj = first.adjacency.copy()
    for r in relations[1:]:
        if r.universe.size != first.universe.size:
            raise DimensionError(
                f"universe sizes differ: {r.universe.size} vs {first.universe.size}"
            )
        adj |= r.adjacency
    return FiniteRelation(first.universe, adj)


def altiset_bruteforce(rel: FiniteRelation, subset: Optional[Iterable[int]] = None) -> frozenset[int]:
    """Definitional double-loop significance predicate (test oracle)."""
    if subset is None:
        idx = list(range(rel.universe.size))
    else:
        idx = list(rel.universe.check_subset(subset))
    out = set()
    for a in idx:
        if all((a, b) not in rel or (b, a) in rel for b in idx):
            out.add(a)
    return frozenset(out)
