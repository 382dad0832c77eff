"""Command-line front end: polygon files in; exact areas, lattice-point
counts, primitive triangulations, and SVG renderings out.

Exit codes: 0 success, 1 I/O failure, 2 parse error (file or command
line), 3 invalid polygon, 4 enumeration guard exceeded, 5 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import TextIO

from .core import (
    GeometryError,
    InternalInvariantError,
    LatticePoint,
    LatticePolygon,
    PolygonError,
    twice_polygon_area,
    validate_polygon,
)
from .pick import (
    DEFAULT_BOX_LIMIT,
    BoxTooLargeError,
    boundary_count,
    interior_count_oracle,
    polygon_lattice_points,
    verify_pick,
)
from .triangulate import LatticeTriangle, Triangulation, primitive_triangulation

EXIT_OK = 0
EXIT_IO = 1
EXIT_PARSE = 2
EXIT_INVALID_POLYGON = 3
EXIT_GUARD = 4
EXIT_INTERNAL = 5

_INT_TOKEN = re.compile(r"[+-]?[0-9]+\Z")


class PolygonParseError(GeometryError):
    """Input text does not describe a polygon; carries a 1-based position."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None):
        position = ""
        if line is not None:
            position = f" (line {line}" + \
                (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + position)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class PolygonDocument:
    """A polygon as read from a file: raw vertices in input order plus
    the validated polygon built from them."""

    vertices: tuple[LatticePoint, ...]
    source: str
    format: str
    polygon: LatticePolygon


def _parse_plain(text: str) -> list[LatticePoint]:
    vertices = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise PolygonParseError(
                f"expected two integers per vertex line, got {len(tokens)} tokens",
                line=lineno)
        coords = []
        for tok in tokens:
            if not _INT_TOKEN.match(tok):
                raise PolygonParseError(f"non-integer coordinate {tok!r}",
                                        line=lineno, column=raw.index(tok) + 1)
            coords.append(int(tok))
        vertices.append(LatticePoint(coords[0], coords[1]))
    return vertices


def _parse_structured(text: str) -> list[LatticePoint]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolygonParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(data, list):
        raise PolygonParseError("expected a top-level array of [x, y] pairs")
    vertices = []
    for idx, item in enumerate(data):
        if not isinstance(item, list) or len(item) != 2 or \
                any(isinstance(c, bool) or not isinstance(c, int) for c in item):
            raise PolygonParseError(f"element {idx} is not an [x, y] integer pair")
        vertices.append(LatticePoint(item[0], item[1]))
    return vertices


def _sniff_format(text: str, source: str) -> str:
    if source.endswith(".json"):
        return "structured"
    return "structured" if text.lstrip().startswith("[") else "plain"


def parse_polygon(text: str, fmt: str = "auto",
                  source: str = "<input>") -> PolygonDocument:
    """Parse polygon text in the plain (one "x y" per line, # comments)
    or structured (JSON array of [x, y] pairs) format and validate it."""
    if fmt == "auto":
        fmt = _sniff_format(text, source)
    if fmt == "plain":
        vertices = _parse_plain(text)
    elif fmt == "structured":
        vertices = _parse_structured(text)
    else:
        raise ValueError(f"unknown polygon format {fmt!r}")
    return PolygonDocument(tuple(vertices), source, fmt,
                           validate_polygon(vertices))


def _load(path: str, fmt: str) -> PolygonDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_polygon(fh.read(), fmt, source=path)


def _cmd_area(args: argparse.Namespace, out: TextIO) -> int:
    doc = _load(args.file, args.format)
    doubled = twice_polygon_area(doc.polygon)
    out.write(f"twice_area={doubled}\n")
    out.write(f"area={Fraction(doubled, 2)}\n")
    return EXIT_OK


def _cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    doc = _load(args.file, args.format)
    interior = interior_count_oracle(doc.polygon, args.max_box_points)
    boundary = boundary_count(doc.polygon)
    out.write(f"interior={interior} boundary={boundary}\n")
    return EXIT_OK


def _cmd_pick(args: argparse.Namespace, out: TextIO) -> int:
    doc = _load(args.file, args.format)
    counts = verify_pick(doc.polygon, args.max_box_points)
    out.write(f"interior={counts.interior} boundary={counts.boundary} "
              f"twice_area={counts.twice_area} OK\n")
    return EXIT_OK


def _coords(tri: LatticeTriangle) -> str:
    return (f"{tri.v0.x} {tri.v0.y} {tri.v1.x} {tri.v1.y} "
            f"{tri.v2.x} {tri.v2.y}")


def _cmd_triangulate(args: argparse.Namespace, out: TextIO) -> int:
    doc = _load(args.file, args.format)
    result = primitive_triangulation(doc.polygon)
    for tri in result.triangles:
        out.write(_coords(tri) + "\n")
    if args.events:
        for num, event in enumerate(result.events, start=1):
            out.write(f"event {num} {event.rule.value} "
                      f"point {event.point.x} {event.point.y}\n")
            out.write(f"  parent {_coords(event.parent)}\n")
            for child in event.children:
                out.write(f"  child {_coords(child)}\n")
    return EXIT_OK


def render_svg(poly: LatticePolygon, triangulation: Triangulation,
               interior_points: list[LatticePoint],
               boundary_points: list[LatticePoint],
               scale: int = 24, margin: int = 1) -> str:
    """Render the polygon, its primitive triangulation, and its lattice
    points (boundary filled, interior hollow) as standalone SVG text.
    All emitted coordinates are integers, so output is byte-stable."""
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)

    def sx(x: int) -> int:
        return (x - xmin + margin) * scale

    def sy(y: int) -> int:
        return (ymax - y + margin) * scale

    width = (xmax - xmin + 2 * margin) * scale
    height = (ymax - ymin + 2 * margin) * scale
    radius = max(2, scale // 6)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}">',
        '  <g fill="none" stroke="#999999" stroke-width="1">',
    ]
    for tri in triangulation.triangles:
        pts = " ".join(f"{sx(v.x)},{sy(v.y)}" for v in tri.vertices)
        lines.append(f'    <polygon points="{pts}"/>')
    lines.append("  </g>")
    outline = " ".join(f"{sx(v.x)},{sy(v.y)}" for v in poly.vertices)
    lines.append(f'  <polygon points="{outline}" fill="none" '
                 f'stroke="#000000" stroke-width="2"/>')
    lines.append('  <g fill="#000000">')
    for p in boundary_points:
        lines.append(f'    <circle cx="{sx(p.x)}" cy="{sy(p.y)}" r="{radius}"/>')
    lines.append("  </g>")
    lines.append('  <g fill="#ffffff" stroke="#000000" stroke-width="1">')
    for p in interior_points:
        lines.append(f'    <circle cx="{sx(p.x)}" cy="{sy(p.y)}" r="{radius}"/>')
    lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _cmd_svg(args: argparse.Namespace, out: TextIO) -> int:
    doc = _load(args.file, args.format)
    result = primitive_triangulation(doc.polygon)
    interior, boundary = polygon_lattice_points(doc.polygon, args.max_box_points)
    text = render_svg(doc.polygon, result, interior, boundary)
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticepick",
        description="Exact lattice-polygon areas, point counts, and "
                    "primitive triangulations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, func) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="polygon file")
        p.add_argument("--format", choices=("auto", "plain", "structured"),
                       default="auto", help="input format (default: auto-detect)")
        p.set_defaults(func=func)
        return p

    def add_guard(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-box-points", type=int, default=DEFAULT_BOX_LIMIT,
                       help="bounding-box size guard for point enumeration")

    add("area", "print the doubled and exact rational area", _cmd_area)
    add_guard(add("count", "print interior and boundary lattice-point counts",
                  _cmd_count))
    add_guard(add("pick", "verify the area identity and print the counts",
                  _cmd_pick))
    tri = add("triangulate", "print the primitive triangulation, one "
              "triangle per line", _cmd_triangulate)
    tri.add_argument("--events", action="store_true",
                     help="append the split-event log")
    svg = add("svg", "render polygon, triangulation, and lattice points",
              _cmd_svg)
    svg.add_argument("-o", "--output", required=True, help="output SVG file")
    add_guard(svg)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_PARSE
    try:
        return args.func(args, sys.stdout)
    except PolygonParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PolygonError as exc:
        print(f"error: invalid polygon: {exc}", file=sys.stderr)
        return EXIT_INVALID_POLYGON
    except BoxTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
