"""Exact integer lattice geometry: points, predicates, gcd machinery,
and validated simple polygons.

Everything in this module is pure integer arithmetic.  Predicates decide
by the sign of exact determinants, never by floating point, so results
are reproducible and rounding-free at any permitted coordinate
magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

#: Coordinates beyond this magnitude are rejected when polygons are
#: built.  The bound keeps the file formats portable to fixed-width
#: implementations; the arithmetic here is exact regardless.
COORDINATE_LIMIT = 2**31


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class DegenerateSegmentError(GeometryError):
    """Operation on a segment whose endpoints coincide."""


class DegenerateTriangleError(GeometryError):
    """Operation on three collinear (zero-area) points."""


class PreconditionError(GeometryError):
    """An operation was invoked outside its documented contract."""


class InternalInvariantError(GeometryError):
    """A mathematically guaranteed invariant failed; this is a bug."""


class PolygonError(GeometryError):
    """A vertex list does not describe a valid simple lattice polygon.

    ``indices`` identifies the offending vertices (or edge start
    indices) in input order.
    """

    def __init__(self, message: str, indices: tuple[int, ...] = ()):
        super().__init__(message)
        self.indices = indices


class TooFewVerticesError(PolygonError):
    pass


class CoordinateRangeError(PolygonError):
    pass


class RepeatedVertexError(PolygonError):
    pass


class ZeroAreaError(PolygonError):
    pass


class SelfIntersectionError(PolygonError):
    pass


@dataclass(frozen=True)
class LatticePoint:
    """A point of the integer lattice."""

    x: int
    y: int

    def __sub__(self, other: "LatticePoint") -> "LatticeVector":
        return LatticeVector(self.x - other.x, self.y - other.y)

    def __add__(self, vec: "LatticeVector") -> "LatticePoint":
        return LatticePoint(self.x + vec.dx, self.y + vec.dy)


@dataclass(frozen=True)
class LatticeVector:
    """Difference of two lattice points."""

    dx: int
    dy: int

    def cross(self, other: "LatticeVector") -> int:
        return self.dx * other.dy - other.dx * self.dy

    def dot(self, other: "LatticeVector") -> int:
        return self.dx * other.dx + self.dy * other.dy


@dataclass(frozen=True)
class BezoutResult:
    """gcd ``g`` of a pair (p, q) with coefficients p*s + q*t == g."""

    g: int
    s: int
    t: int


class PointLocation(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


def twice_signed_area(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> int:
    """Doubled signed area of triangle abc: positive iff a, b, c wind
    counterclockwise, zero iff collinear.  Doubling keeps the value an
    exact integer."""
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)


def extended_gcd(p: int, q: int) -> BezoutResult:
    """Greatest common divisor with Bezout coefficients, p*s + q*t == g.

    The coefficients are canonical: the two-row iterative scheme runs on
    (|p|, |q|) and the signs are folded back afterwards, so equal inputs
    always produce identical output and the returned |s| is the smallest
    among valid coefficient pairs.  gcd(0, 0) is 0 with s = t = 0.
    """
    if p == 0 and q == 0:
        return BezoutResult(0, 0, 0)
    r0, r1 = abs(p), abs(q)
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        quot = r0 // r1
        r0, r1 = r1, r0 - quot * r1
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    return BezoutResult(r0, -s0 if p < 0 else s0, -t0 if q < 0 else t0)


def edge_gcd(a: LatticePoint, b: LatticePoint) -> int:
    """gcd of the coordinate deltas of segment ab; equals the number of
    lattice points on the half-open segment [a, b)."""
    if a == b:
        raise DegenerateSegmentError(f"segment endpoints coincide at {a}")
    return math.gcd(abs(b.x - a.x), abs(b.y - a.y))


def segment_lattice_points(a: LatticePoint, b: LatticePoint) -> list[LatticePoint]:
    """All lattice points on the closed segment ab, ordered from a to b.

    There are edge_gcd(a, b) + 1 of them, evenly spaced.
    """
    k = edge_gcd(a, b)
    sx = (b.x - a.x) // k
    sy = (b.y - a.y) // k
    return [LatticePoint(a.x + j * sx, a.y + j * sy) for j in range(k + 1)]


def point_on_segment(p: LatticePoint, a: LatticePoint, b: LatticePoint) -> bool:
    """Whether p lies on the closed segment ab (endpoints included)."""
    if a == b:
        return p == a
    return twice_signed_area(a, b, p) == 0 and _in_box(p, a, b)


def _in_box(p: LatticePoint, a: LatticePoint, b: LatticePoint) -> bool:
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def _segments_share_point(p1: LatticePoint, p2: LatticePoint,
                          q1: LatticePoint, q2: LatticePoint) -> bool:
    """Whether closed segments p1p2 and q1q2 have any point in common."""
    d1 = twice_signed_area(q1, q2, p1)
    d2 = twice_signed_area(q1, q2, p2)
    d3 = twice_signed_area(p1, p2, q1)
    d4 = twice_signed_area(p1, p2, q2)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) \
            and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        return True
    if d1 == 0 and _in_box(p1, q1, q2):
        return True
    if d2 == 0 and _in_box(p2, q1, q2):
        return True
    if d3 == 0 and _in_box(q1, p1, p2):
        return True
    if d4 == 0 and _in_box(q2, p1, p2):
        return True
    return False


def _shoelace(vertices: Sequence[LatticePoint]) -> int:
    total = 0
    n = len(vertices)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        total += a.x * b.y - b.x * a.y
    return total


def _edge_quads(vertices: Sequence[LatticePoint]) -> list[tuple[int, int, int, int]]:
    n = len(vertices)
    return [(vertices[i].x, vertices[i].y,
             vertices[(i + 1) % n].x, vertices[(i + 1) % n].y)
            for i in range(n)]


def _classify_point(px: int, py: int,
                    quads: Sequence[tuple[int, int, int, int]]) -> PointLocation:
    """Classify (px, py) against a closed ring given as edge coordinate
    quadruples.  Boundary is decided by exact collinearity, interior by
    even-odd parity of a horizontal ray with a half-open vertex rule."""
    inside = False
    for x1, y1, x2, y2 in quads:
        if (x2 - x1) * (py - y1) == (y2 - y1) * (px - x1) \
                and min(x1, x2) <= px <= max(x1, x2) \
                and min(y1, y2) <= py <= max(y1, y2):
            return PointLocation.BOUNDARY
        if (y1 > py) != (y2 > py):
            # exact comparison of px against the ray crossing abscissa
            side = (x1 - px) * (y2 - y1) + (py - y1) * (x2 - x1)
            if (side > 0) == (y2 > y1):
                inside = not inside
    return PointLocation.INTERIOR if inside else PointLocation.EXTERIOR


@dataclass(frozen=True)
class LatticePolygon:
    """A simple lattice polygon stored counterclockwise.

    Construction validates everything: vertex count, coordinate bounds,
    degenerate edges, orientation, and exact boundary simplicity (every
    non-adjacent edge pair is tested, O(n^2)).  Use validate_polygon to
    build one from raw vertices of either orientation.
    """

    vertices: tuple[LatticePoint, ...]

    def __post_init__(self) -> None:
        _check_polygon(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[LatticePoint, LatticePoint]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _check_polygon(vs: tuple[LatticePoint, ...]) -> None:
    n = len(vs)
    if n < 3:
        raise TooFewVerticesError(f"need at least 3 vertices, got {n}")
    for i, v in enumerate(vs):
        if abs(v.x) > COORDINATE_LIMIT or abs(v.y) > COORDINATE_LIMIT:
            raise CoordinateRangeError(
                f"vertex {i} at {v} exceeds |coordinate| <= 2**31", (i,))
    for i in range(n):
        j = (i + 1) % n
        if vs[i] == vs[j]:
            raise RepeatedVertexError(f"vertices {i} and {j} coincide", (i, j))
    # adjacent edges may be collinear but must not fold back onto each other
    for i in range(n):
        a, b, c = vs[i - 1], vs[i], vs[(i + 1) % n]
        if twice_signed_area(a, b, c) == 0 and (b - a).dot(c - b) < 0:
            raise SelfIntersectionError(
                f"edge {i} folds back onto edge {(i - 1) % n}",
                ((i - 1) % n, i))
    # non-adjacent edges must not share any point
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if _segments_share_point(vs[i], vs[(i + 1) % n],
                                     vs[j], vs[(j + 1) % n]):
                raise SelfIntersectionError(
                    f"edges {i} and {j} intersect", (i, j))
    area2 = _shoelace(vs)
    if area2 == 0:
        raise ZeroAreaError("polygon has zero area")
    if area2 < 0:
        raise PolygonError("vertices must wind counterclockwise; "
                           "use validate_polygon to normalize orientation")


def validate_polygon(vertices: Sequence[LatticePoint]) -> LatticePolygon:
    """Build a LatticePolygon from raw vertices, reversing clockwise
    input so the result always winds counterclockwise.  Raises a
    PolygonError subclass describing the first problem found."""
    vs = tuple(vertices)
    if len(vs) >= 3 and _shoelace(vs) < 0:
        vs = vs[:1] + vs[:0:-1]
    return LatticePolygon(vs)


def twice_polygon_area(poly: LatticePolygon) -> int:
    """Doubled area of the polygon by the shoelace sum; always a
    positive integer for a validated polygon."""
    return _shoelace(poly.vertices)


def point_in_polygon(p: LatticePoint, poly: LatticePolygon) -> PointLocation:
    """Exact classification of p as interior, boundary, or exterior."""
    return _classify_point(p.x, p.y, _edge_quads(poly.vertices))
