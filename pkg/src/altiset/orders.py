"""Systems of linearly induced orders.

Each order is given by a key vector and a direction: "gain" (larger key is
better) or "price" (smaller is better).  A gain order contributes the
reflexive order <=_f, a price order its inverse.  The quotient by
indistinguishability carries a strict characteristic order whose maxima are
exactly the significant classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DimensionError, PartitionError
from .relation import FiniteRelation, Universe, union

GAIN = "gain"
PRICE = "price"


@dataclass(frozen=True)
class KeyedOrder:
    """A linearly induced order: key per element plus a direction flag."""

    keys: tuple
    direction: str = GAIN

    def __post_init__(self):
        object.__setattr__(self, "keys", tuple(self.keys))
        if self.direction not in (GAIN, PRICE):
            raise DimensionError(f"direction must be gain|price, got {self.direction!r}")

    def relation(self, universe: Universe) -> FiniteRelation:
        """The order this entry contributes: strict induced order + diagonal.

        Equal-keyed distinct elements are incomparable, not mutually
        related; that keeps the order antisymmetric.
        """
        if len(self.keys) != universe.size:
            raise DimensionError(
                f"{len(self.keys)} keys for universe of size {universe.size}"
            )
        n = universe.size
        adj = np.zeros((n, n), dtype=bool)
        for a in range(n):
            for b in range(n):
                if a == b:
                    adj[a, b] = True
                elif self.direction == GAIN:
                    adj[a, b] = self.keys[a] < self.keys[b]
                else:
                    adj[a, b] = self.keys[a] > self.keys[b]
        return FiniteRelation(universe, adj)


@dataclass(frozen=True)
class OrderSystem:
    universe: Universe
    orders: tuple[KeyedOrder, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(self.orders))
        if not self.orders:
            raise DimensionError("an OrderSystem needs at least one order")
        for o in self.orders:
            if len(o.keys) != self.universe.size:
                raise DimensionError(
                    f"{len(o.keys)} keys for universe of size {self.universe.size}"
                )


@dataclass(frozen=True)
class QuotientView:
    """Indistinguishability classes with the strict characteristic order."""

    classes: tuple[tuple[int, ...], ...]
    class_order: FiniteRelation
    maximal_classes: frozenset[int]

    def class_of(self, element: int) -> int:
        for k, cls in enumerate(self.classes):
            if element in cls:
                return k
        raise IndexError(f"element {element} in no class")


def system_union(system: OrderSystem) -> FiniteRelation:
    """R = union of the reflexive relations of all orders."""
    return union([o.relation(system.universe) for o in system.orders])


def indistinguishability(system: OrderSystem) -> tuple[tuple[int, ...], ...]:
    """Partition by equality under every key function.

    Classes are ordered (and indexed) by their smallest member.
    """
    groups: dict[tuple, list[int]] = {}
    for a in range(system.universe.size):
        sig = tuple(o.keys[a] for o in system.orders)
        groups.setdefault(sig, []).append(a)
    classes = sorted(groups.values(), key=lambda c: c[0])
    return tuple(tuple(c) for c in classes)


def _restricted(system: OrderSystem, subset: Iterable[int]) -> tuple[OrderSystem, tuple[int, ...]]:
    idx = system.universe.check_subset(subset)
    sub = Universe(len(idx))
    orders = tuple(
        KeyedOrder(tuple(o.keys[i] for i in idx), o.direction) for o in system.orders
    )
    return OrderSystem(sub, orders), idx


def quotient(system: OrderSystem, subset: Optional[Iterable[int]] = None) -> QuotientView:
    """Indistinguishability classes + strict characteristic order + maxima."""
    if subset is not None:
        restricted, idx = _restricted(system, subset)
        view = quotient(restricted)
        classes = tuple(tuple(idx[i] for i in cls) for cls in view.classes)
        return QuotientView(classes, view.class_order, view.maximal_classes)

    classes = indistinguishability(system)
    k = len(classes)
    rel = system_union(system)
    adj = np.zeros((k, k), dtype=bool)
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            adj[i, j] = bool(rel.adjacency[ci[0], cj[0]])
    class_rel = FiniteRelation(Universe(k), adj)
    class_order = class_rel.asym_interior()
    maximal = frozenset(
        i for i in range(k) if not class_order.adjacency[i, :].any()
    )
    return QuotientView(classes, class_order, maximal)


def altiset_of_system(system: OrderSystem, subset: Optional[Iterable[int]] = None) -> frozenset[int]:
    """Union of the maximal indistinguishability classes."""
    view = quotient(system, subset)
    out: set[int] = set()
    for i in view.maximal_classes:
        out.update(view.classes[i])
    return frozenset(out)


def decompose_altiset(system: OrderSystem, blocks: Sequence[Iterable[int]]) -> frozenset[int]:
    """Altiset over the union of per-block altisets (one decomposition level)."""
    seen: set[int] = set()
    merged: set[int] = set()
    for block in blocks:
        idx = system.universe.check_subset(block)
        if seen.intersection(idx):
            raise PartitionError(f"blocks overlap at {sorted(seen.intersection(idx))}")
        seen.update(idx)
        merged.update(altiset_of_system(system, idx))
    return altiset_of_system(system, merged)


def check_form_equivalences(f_keys: Sequence, g_keys: Sequence, a: int, b: int) -> tuple[bool, bool, bool, bool]:
    """The four implication-pair forms of aligned-orders significance at (a,b)."""
    if len(f_keys) != len(g_keys):
        raise DimensionError("key vectors differ in length")
    fa, fb = f_keys[a], f_keys[b]
    ga, gb = g_keys[a], g_keys[b]

    def imp(p, q):
        return (not p) or q

    form1 = imp(fa < fb, ga < gb) and imp(ga > gb, fa > fb)
    form2 = imp(fa <= fb, ga <= gb) and imp(ga >= gb, fa >= fb)
    form3 = imp(fa < fb, ga < gb) and imp(fa == fb, ga <= gb)
    form4 = imp(ga > gb, fa > fb) and imp(ga == gb, fa >= fb)
    return form1, form2, form3, form4
