"""Dataset parsing and emission for the CLI and test fixtures.

Formats are strict: schema violations raise ParseError naming the field
(and the line for CSV).  emit/parse round-trip to identical values.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Optional, Sequence

from .collective import SubsetFamily, ValuedGroundSet
from .dependence import PointSet2D
from .errors import AltisetError, ParseError
from .geoalt import EUCLIDEAN_2D, REAL_LINE, SummitField
from .orders import KeyedOrder, OrderSystem
from .relation import FiniteRelation, Universe


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    return doc


# -- relations ------------------------------------------------------------


def parse_relation(text: str) -> FiniteRelation:
    doc = _load_json(text)
    size = doc.get("size")
    if not isinstance(size, int) or size < 0:
        raise ParseError('"size" must be a non-negative integer')
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(l, str) for l in labels):
            raise ParseError('"labels" must be a list of strings')
    pairs = doc.get("pairs", [])
    if not isinstance(pairs, list):
        raise ParseError('"pairs" must be a list of [a, b] index pairs')
    checked = []
    for k, p in enumerate(pairs):
        if (
            not isinstance(p, list)
            or len(p) != 2
            or not all(isinstance(v, int) for v in p)
        ):
            raise ParseError(f'"pairs"[{k}] must be a pair of integers')
        a, b = p
        if not (0 <= a < size and 0 <= b < size):
            raise ParseError(f'"pairs"[{k}] = [{a}, {b}] out of range for size {size}')
        checked.append((a, b))
    universe = Universe(size, tuple(labels) if labels is not None else None)
    try:
        return FiniteRelation.from_pairs(universe, checked)
    except AltisetError as exc:
        raise ParseError(str(exc)) from exc


def emit_relation(rel: FiniteRelation) -> str:
    doc: dict = {"size": rel.universe.size}
    if rel.universe.labels is not None:
        doc["labels"] = list(rel.universe.labels)
    doc["pairs"] = sorted([a, b] for a, b in rel.pairs())
    return json.dumps(doc, sort_keys=True)


# -- order systems --------------------------------------------------------


def parse_order_system(text: str) -> OrderSystem:
    doc = _load_json(text)
    size = doc.get("size")
    if not isinstance(size, int) or size < 0:
        raise ParseError('"size" must be a non-negative integer')
    orders = doc.get("orders")
    if not isinstance(orders, list) or not orders:
        raise ParseError('"orders" must be a nonempty list')
    keyed = []
    for k, o in enumerate(orders):
        if not isinstance(o, dict):
            raise ParseError(f'"orders"[{k}] must be an object')
        keys = o.get("keys")
        if not isinstance(keys, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in keys
        ):
            raise ParseError(f'"orders"[{k}].keys must be a list of numbers')
        if len(keys) != size:
            raise ParseError(f'"orders"[{k}].keys has {len(keys)} entries for size {size}')
        direction = o.get("direction", "gain")
        if direction not in ("gain", "price"):
            raise ParseError(f'"orders"[{k}].direction must be "gain" or "price"')
        keyed.append(KeyedOrder(tuple(keys), direction))
    return OrderSystem(Universe(size), tuple(keyed))


def emit_order_system(system: OrderSystem) -> str:
    doc = {
        "orders": [
            {"direction": o.direction, "keys": list(o.keys)} for o in system.orders
        ],
        "size": system.universe.size,
    }
    return json.dumps(doc, sort_keys=True)


# -- CSV helpers ----------------------------------------------------------


def _read_numeric_csv(text: str, columns: int, names: Sequence[str]) -> list[tuple[float, ...]]:
    """Rows of exactly `columns` numeric cells; one header row tolerated."""
    rows: list[tuple[float, ...]] = []
    reader = csv.reader(io.StringIO(text))
    for lineno, row in enumerate(reader, start=1):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != columns:
            raise ParseError(
                f"line {lineno}: expected {columns} columns ({', '.join(names)}), got {len(row)}"
            )
        try:
            rows.append(tuple(float(c) for c in row))
        except ValueError as exc:
            if lineno == 1:
                continue  # header row
            raise ParseError(f"line {lineno}: non-numeric cell in {row}") from exc
    return rows


def parse_points_csv(text: str) -> PointSet2D:
    rows = _read_numeric_csv(text, 2, ("x", "y"))
    if not rows:
        raise ParseError("no data rows")
    try:
        return PointSet2D(tuple(rows))
    except AltisetError as exc:
        raise ParseError(str(exc)) from exc


def emit_points_csv(points: PointSet2D) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["x", "y"])
    for x, y in points.points:
        writer.writerow([repr(x), repr(y)])
    return out.getvalue()


def parse_summits_csv(text: str, reference, space: Optional[str] = None) -> SummitField:
    """Columns x,h (real line) or x,y,h (plane); space inferred from width
    unless given."""
    first_width = None
    for line in text.splitlines():
        if line.strip():
            first_width = len(next(csv.reader([line])))
            break
    if first_width not in (2, 3):
        raise ParseError("expected 2 (x,h) or 3 (x,y,h) columns")
    if first_width == 3:
        if space is not None and space != EUCLIDEAN_2D:
            raise ParseError(f"3 columns (x,y,h) need a planar space, not {space}")
        rows = _read_numeric_csv(text, 3, ("x", "y", "h"))
        summits = tuple((r[0], r[1]) for r in rows)
        kind = EUCLIDEAN_2D
    else:
        if space == EUCLIDEAN_2D:
            raise ParseError("planar space needs 3 columns (x,y,h), got 2")
        rows = _read_numeric_csv(text, 2, ("x", "h"))
        summits = tuple(r[0] for r in rows)
        kind = space or REAL_LINE
    if not rows:
        raise ParseError("no data rows")
    altitudes = tuple(r[-1] for r in rows)
    try:
        return SummitField(kind, summits, altitudes, reference)
    except AltisetError as exc:
        raise ParseError(str(exc)) from exc


def emit_summits_csv(field: SummitField) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if field.space == EUCLIDEAN_2D:
        writer.writerow(["x", "y", "h"])
        for (x, y), h in zip(field.summits, field.altitudes):
            writer.writerow([repr(x), repr(y), repr(h)])
    else:
        writer.writerow(["x", "h"])
        for x, h in zip(field.summits, field.altitudes):
            writer.writerow([repr(x), repr(h)])
    return out.getvalue()


# -- collective families --------------------------------------------------


def parse_family(text: str) -> SubsetFamily:
    doc = _load_json(text)
    elements = doc.get("elements")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise ParseError('"elements" must be a list of strings')
    h = doc.get("h")
    if not isinstance(h, dict):
        raise ParseError('"h" must be an object mapping element -> number')
    for e in elements:
        if e not in h:
            raise ParseError(f'"h" is missing element {e!r}')
        if not isinstance(h[e], (int, float)) or isinstance(h[e], bool):
            raise ParseError(f'"h"[{e!r}] must be a number')
    family = doc.get("family")
    if not isinstance(family, list) or not family:
        raise ParseError('"family" must be a nonempty list of element lists')
    members = []
    for k, m in enumerate(family):
        if not isinstance(m, list) or not all(isinstance(e, str) for e in m):
            raise ParseError(f'"family"[{k}] must be a list of element names')
        stray = set(m) - set(elements)
        if stray:
            raise ParseError(f'"family"[{k}] has unknown elements {sorted(stray)}')
        members.append(frozenset(m))
    try:
        ground = ValuedGroundSet(tuple(elements), {e: float(h[e]) for e in elements})
        return SubsetFamily(ground, tuple(members))
    except AltisetError as exc:
        raise ParseError(str(exc)) from exc


def emit_family(family: SubsetFamily) -> str:
    doc = {
        "elements": list(family.ground.elements),
        "family": [sorted(m) for m in family.members],
        "h": {e: family.ground.valuation[e] for e in family.ground.elements},
    }
    return json.dumps(doc, sort_keys=True)
