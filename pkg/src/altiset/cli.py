"""Command-line front end: ingest datasets, run one analysis, emit JSON.

Exit codes: 0 success, 1 domain error (cyclic relation, duplicate points,
degenerate input), 2 I/O or parse error, 64 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import Optional

from . import __version__, datasets
from .collective import collective_altiset
from .dependence import (
    PointSet2D,
    decreasingness_index,
    epsilon,
    increasing_decomposition,
    increasingness_index,
)
from .domains import DEFAULT_INFLATE, DEFAULT_RESOLUTION, GridMeasure, evolve
from .errors import AltisetError, ParseError
from .geoalt import (
    DISTANCE_TOLERANCE,
    EUCLIDEAN_2D,
    REAL_LINE,
    geo_altiset_oracle,
    record_events_field,
    skyline_circular,
    skyline_contour,
    skyline_recursive,
)
from .layers import upper_layers

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read(path: str) -> tuple[str, str]:
    """File text plus its sha256 digest."""
    with open(path, "rb") as fh:
        raw = fh.read()
    return raw.decode("utf-8"), hashlib.sha256(raw).hexdigest()


def _document(command: str, digest: str, settings: dict, result: dict, timestamp: bool) -> str:
    meta = {
        "command": command,
        "input_sha256": digest,
        "settings": settings,
        "version": __version__,
    }
    if timestamp:
        meta["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    return json.dumps({"meta": meta, "result": result}, sort_keys=True, indent=2) + "\n"


def _parse_subset(spec: Optional[str]) -> Optional[list[int]]:
    if spec is None:
        return None
    try:
        return [int(s) for s in spec.split(",") if s.strip()]
    except ValueError as exc:
        raise ParseError(f"bad subset spec {spec!r}: {exc}") from exc


def _parse_ref(spec: str) -> tuple:
    parts = [p for p in spec.split(",") if p.strip()]
    try:
        values = [float(p) for p in parts]
    except ValueError as exc:
        raise ParseError(f"bad reference {spec!r}: {exc}") from exc
    if len(values) == 1:
        return (values[0],)
    if len(values) == 2:
        return (values[0], values[1])
    raise ParseError(f"reference must be X or X,Y, got {spec!r}")


def _default_resolution() -> int:
    env = os.environ.get("ALTISET_GRID")
    if env:
        try:
            value = int(env)
            if value >= 1:
                return value
        except ValueError:
            pass
        raise ParseError(f"ALTISET_GRID must be a positive integer, got {env!r}")
    return DEFAULT_RESOLUTION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="altiset", description=__doc__)
    parser.add_argument("--no-timestamp", action="store_true", help="omit meta.timestamp")
    parser.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("altiset", help="significant elements of a relation")
    p.add_argument("--relation", required=True, help="relation JSON file")
    p.add_argument("--subset", default=None, help="comma-separated indices to restrict to")

    p = sub.add_parser("layers", help="successive altiset layers and d(R)")
    p.add_argument("--relation", required=True, help="relation JSON file")

    p = sub.add_parser("correlate", help="dependence direction of an x,y CSV")
    p.add_argument("input", help="CSV file with two numeric columns x,y")

    p = sub.add_parser("collective", help="significant members of a subset family")
    p.add_argument("input", help="family JSON file")

    p = sub.add_parser("skyline", help="high-and-close summits for a reference point")
    p.add_argument("input", help="CSV with columns x[,y],h")
    p.add_argument("--ref", required=True, help="reference point X or X,Y")
    p.add_argument(
        "--method",
        choices=["oracle", "circular", "contour", "recursive", "records"],
        default="oracle",
    )
    p.add_argument("--block-size", type=int, default=16)

    p = sub.add_parser("evolve", help="measure-driven evolution of valuation")
    p.add_argument("input", help="CSV with columns x,y,h (h = initial valuation)")
    p.add_argument("--grid", default=None, help="resolution WxH (default 128x128)")
    p.add_argument("--inflate", type=float, default=DEFAULT_INFLATE)
    p.add_argument("--max-steps", type=int, default=1000)
    p.add_argument("--trace", default=None, help="write the full trace JSON here")
    return parser


def _run_altiset(args, digest, text):
    rel = datasets.parse_relation(text)
    subset = _parse_subset(args.subset)
    result = {"altiset": sorted(rel.altiset(subset)), "size": rel.universe.size}
    if rel.universe.labels:
        result["labels"] = [rel.universe.labels[i] for i in result["altiset"]]
    settings = {"subset": subset}
    return settings, result


def _run_layers(args, digest, text):
    rel = datasets.parse_relation(text)
    decomp = upper_layers(rel)
    result = {
        "d": decomp.class_count,
        "lower_index": list(decomp.lower_index),
        "upper_index": list(decomp.upper_index),
    }
    return {}, result


def _run_correlate(args, digest, text):
    points = datasets.parse_points_csv(text)
    result = {
        "blocks": increasing_decomposition(points),
        "epsilon": epsilon(points),
        "iota_minus": decreasingness_index(points),
        "iota_plus": increasingness_index(points),
    }
    return {}, result


def _run_collective(args, digest, text):
    family = datasets.parse_family(text)
    indices = sorted(collective_altiset(family))
    result = {
        "indices": indices,
        "survivors": [sorted(family.members[i]) for i in indices],
    }
    return {}, result


def _run_skyline(args, digest, text):
    ref = _parse_ref(args.ref)
    reference = ref if len(ref) == 2 else ref[0]
    space = EUCLIDEAN_2D if len(ref) == 2 else REAL_LINE
    field = datasets.parse_summits_csv(text, reference, space)
    if args.method == "circular":
        chosen = skyline_circular(field)
    elif args.method == "contour":
        chosen = skyline_contour(field)
    elif args.method == "recursive":
        chosen = skyline_recursive(field, args.block_size)
    elif args.method == "records":
        chosen = record_events_field(field)
    else:
        chosen = geo_altiset_oracle(field)
    settings = {
        "block_size": args.block_size if args.method == "recursive" else None,
        "distance_tolerance": DISTANCE_TOLERANCE,
        "method": args.method,
        "reference": list(ref),
    }
    return settings, {"altiset": sorted(chosen), "size": len(field)}


def _run_evolve(args, digest, text):
    field = datasets.parse_summits_csv(text, (0.0, 0.0), EUCLIDEAN_2D)
    summits = field.summits
    if args.grid:
        try:
            nx, ny = (int(v) for v in args.grid.lower().split("x"))
        except ValueError as exc:
            raise ParseError(f"bad grid spec {args.grid!r}; expected WxH") from exc
    else:
        nx = ny = _default_resolution()
    grid = GridMeasure.around(summits, inflate=args.inflate, nx=nx, ny=ny)
    trace = evolve(summits, field.altitudes, grid, max_steps=args.max_steps)
    settings = {
        "box": [grid.xmin, grid.xmax, grid.ymin, grid.ymax],
        "grid": [grid.nx, grid.ny],
        "inflate": args.inflate,
        "max_steps": args.max_steps,
    }
    result = {
        "final": list(trace.final),
        "steps": len(trace.valuations) - 1,
        "stop_index": trace.stop_index,
    }
    if args.trace:
        doc = {
            "stop_index": trace.stop_index,
            "valuations": [list(v) for v in trace.valuations],
        }
        with open(args.trace, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=2)
            fh.write("\n")
    return settings, result


_RUNNERS = {
    "altiset": ("relation", _run_altiset),
    "layers": ("relation", _run_layers),
    "correlate": ("input", _run_correlate),
    "collective": ("input", _run_collective),
    "skyline": ("input", _run_skyline),
    "evolve": ("input", _run_evolve),
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    source_attr, runner = _RUNNERS[args.command]
    try:
        text, digest = _read(getattr(args, source_attr))
        settings, result = runner(args, digest, text)
    except ParseError as exc:
        print(f"altiset: parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"altiset: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except AltisetError as exc:
        print(f"altiset: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    document = _document(args.command, digest, settings, result, not args.no_timestamp)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(document)
    else:
        sys.stdout.write(document)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
