"""Lattice-point counting and the area identity twice_area = 2i + u - 2.

The fast routes are boundary_count (a gcd sum over edges) and the
shoelace area.  The slow routes enumerate lattice points directly:
interior_count_oracle classifies every bounding-box point with the
exact ray test, and the triangle-specialized counters enumerate by
exact row intervals.  verify_pick and verify_additivity pit the routes
against each other and fail loudly on any disagreement, which is the
whole point of keeping both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DegenerateTriangleError,
    GeometryError,
    InternalInvariantError,
    LatticePoint,
    LatticePolygon,
    PointLocation,
    PreconditionError,
    _classify_point,
    _edge_quads,
    _segments_share_point,
    edge_gcd,
    point_in_polygon,
    point_on_segment,
    segment_lattice_points,
    twice_polygon_area,
    twice_signed_area,
    validate_polygon,
)

#: Default ceiling on bounding-box lattice points for the enumeration
#: oracles; boxes beyond it raise BoxTooLargeError instead of scanning.
DEFAULT_BOX_LIMIT = 10**8


class BoxTooLargeError(GeometryError):
    """Bounding box exceeds the enumeration guard."""


class InvalidCutError(GeometryError):
    """A requested polygon cut does not split it into two simple parts."""


@dataclass(frozen=True)
class PickCount:
    """Interior count, boundary count, and doubled area of one polygon.
    Construction enforces twice_area == 2*interior + boundary - 2, so a
    PickCount cannot exist unless the identity holds."""

    interior: int
    boundary: int
    twice_area: int

    def __post_init__(self) -> None:
        if self.boundary < 3:
            raise InternalInvariantError("a polygon has at least 3 boundary points")
        if self.twice_area != 2 * self.interior + self.boundary - 2:
            raise InternalInvariantError(
                f"area identity violated: twice_area={self.twice_area}, "
                f"interior={self.interior}, boundary={self.boundary}")


@dataclass(frozen=True)
class AdditivityWitness:
    """Counts collected from a polygon split in two along a cut path,
    with ``d`` the number of lattice points on the cut (shared endpoints
    counted once).  Construction enforces the transfer identities."""

    interior: int
    boundary: int
    interior_1: int
    boundary_1: int
    interior_2: int
    boundary_2: int
    cut_points: int

    def __post_init__(self) -> None:
        i, u, d = self.interior, self.boundary, self.cut_points
        i1, u1 = self.interior_1, self.boundary_1
        i2, u2 = self.interior_2, self.boundary_2
        if i != i1 + i2 + d - 2:
            raise InternalInvariantError("interior transfer identity violated")
        if u != u1 + u2 - 2 * d + 2:
            raise InternalInvariantError("boundary transfer identity violated")
        if 2 * i + u - 2 != (2 * i1 + u1 - 2) + (2 * i2 + u2 - 2):
            raise InternalInvariantError("doubled area additivity violated")


def boundary_count(poly: LatticePolygon) -> int:
    """Number of lattice points on the polygon boundary: the sum of
    edge gcds, each edge contributing its half-open point count."""
    return sum(edge_gcd(a, b) for a, b in poly.edges())


def _guarded_box(poly: LatticePolygon, max_box_points: int) -> tuple[int, int, int, int]:
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    count = (xmax - xmin + 1) * (ymax - ymin + 1)
    if count > max_box_points:
        raise BoxTooLargeError(
            f"bounding box holds {count} lattice points, over the limit "
            f"of {max_box_points}")
    return xmin, xmax, ymin, ymax


def _scan_box(poly: LatticePolygon, max_box_points: int) -> tuple[int, int]:
    xmin, xmax, ymin, ymax = _guarded_box(poly, max_box_points)
    quads = _edge_quads(poly.vertices)
    interior = boundary = 0
    for y in range(ymin, ymax + 1):
        for x in range(xmin, xmax + 1):
            loc = _classify_point(x, y, quads)
            if loc is PointLocation.INTERIOR:
                interior += 1
            elif loc is PointLocation.BOUNDARY:
                boundary += 1
    return interior, boundary


def interior_count_oracle(poly: LatticePolygon,
                          max_box_points: int = DEFAULT_BOX_LIMIT) -> int:
    """Count interior lattice points by brute force: classify every
    point of the bounding box.  Slow but assumption-free; the guard
    rejects boxes over ``max_box_points``."""
    return _scan_box(poly, max_box_points)[0]


def boundary_count_oracle(poly: LatticePolygon,
                          max_box_points: int = DEFAULT_BOX_LIMIT) -> int:
    """Boundary twin of interior_count_oracle, for checking
    boundary_count against plain enumeration."""
    return _scan_box(poly, max_box_points)[1]


def polygon_lattice_points(poly: LatticePolygon,
                           max_box_points: int = DEFAULT_BOX_LIMIT,
                           ) -> tuple[list[LatticePoint], list[LatticePoint]]:
    """All (interior, boundary) lattice points of the polygon in
    row-major order, by the same enumeration as the count oracles."""
    xmin, xmax, ymin, ymax = _guarded_box(poly, max_box_points)
    quads = _edge_quads(poly.vertices)
    interior: list[LatticePoint] = []
    boundary: list[LatticePoint] = []
    for y in range(ymin, ymax + 1):
        for x in range(xmin, xmax + 1):
            loc = _classify_point(x, y, quads)
            if loc is PointLocation.INTERIOR:
                interior.append(LatticePoint(x, y))
            elif loc is PointLocation.BOUNDARY:
                boundary.append(LatticePoint(x, y))
    return interior, boundary


def _ccw_triangle(a: LatticePoint, b: LatticePoint, c: LatticePoint,
                  ) -> tuple[LatticePoint, LatticePoint, LatticePoint]:
    s = twice_signed_area(a, b, c)
    if s == 0:
        raise DegenerateTriangleError(f"collinear vertices {a}, {b}, {c}")
    return (a, b, c) if s > 0 else (a, c, b)


def _row_bounds(a: LatticePoint, b: LatticePoint, c: LatticePoint):
    """Per-edge half-plane data for row scanning a ccw triangle.

    A counterclockwise edge keeps the triangle on its left, so
    dy*x <= dx*(y - py) + dy*px bounds x from above when dy > 0 and
    from below when dy < 0.  Horizontal edges only repeat the row range
    and are skipped (``flat_y`` records their row for boundary work).
    """
    uppers = []
    lowers = []
    flat_y = None
    for p, q in ((a, b), (b, c), (c, a)):
        dy = q.y - p.y
        dx = q.x - p.x
        if dy > 0:
            uppers.append((dx, dy, p.x, p.y))
        elif dy < 0:
            lowers.append((dx, dy, p.x, p.y))
        else:
            flat_y = p.y
    return uppers, lowers, flat_y


def closed_triangle_count(a: LatticePoint, b: LatticePoint, c: LatticePoint,
                          stop_above: int | None = None) -> int:
    """Number of lattice points in the closed triangle abc, by exact
    row intervals.  With ``stop_above`` set, the scan returns as soon
    as the running count exceeds it (the result is then only known to
    be > stop_above)."""
    a, b, c = _ccw_triangle(a, b, c)
    uppers, lowers, _ = _row_bounds(a, b, c)
    total = 0
    for y in range(min(a.y, b.y, c.y), max(a.y, b.y, c.y) + 1):
        hi = min((dx * (y - py) + dy * px) // dy for dx, dy, px, py in uppers)
        lo = max(-((dx * (y - py) + dy * px) // -dy) for dx, dy, px, py in lowers)
        if hi >= lo:
            total += hi - lo + 1
            if stop_above is not None and total > stop_above:
                return total
    return total


def triangle_lattice_counts(a: LatticePoint, b: LatticePoint, c: LatticePoint,
                            ) -> tuple[int, int]:
    """(interior, boundary) lattice-point counts of triangle abc by row
    enumeration; the triangle-shaped fast variant of the box oracles."""
    a, b, c = _ccw_triangle(a, b, c)
    uppers, lowers, flat_y = _row_bounds(a, b, c)
    edges = ((a, b), (b, c), (c, a))
    interior = boundary = 0
    for y in range(min(a.y, b.y, c.y), max(a.y, b.y, c.y) + 1):
        hi = min((dx * (y - py) + dy * px) // dy for dx, dy, px, py in uppers)
        lo = max(-((dx * (y - py) + dy * px) // -dy) for dx, dy, px, py in lowers)
        if hi < lo:
            continue
        row = hi - lo + 1
        if y == flat_y:
            # the extreme row with a horizontal edge is boundary wall to wall
            boundary += row
            continue
        on_edge = set()
        for p, q in edges:
            dy = q.y - p.y
            if dy == 0 or not min(p.y, q.y) <= y <= max(p.y, q.y):
                continue
            r = (q.x - p.x) * (y - p.y) + dy * p.x
            if r % dy == 0:
                on_edge.add(r // dy)
        boundary += len(on_edge)
        interior += row - len(on_edge)
    return interior, boundary


def pick_twice_area(interior: int, boundary: int) -> int:
    """Doubled area from the counts: 2*interior + boundary - 2.
    Requires boundary >= 3 (every polygon has at least its vertices)."""
    if boundary < 3:
        raise PreconditionError(f"boundary count must be >= 3, got {boundary}")
    return 2 * interior + boundary - 2


def verify_pick(poly: LatticePolygon,
                max_box_points: int = DEFAULT_BOX_LIMIT) -> PickCount:
    """Count interior points by enumeration and boundary points by gcd
    sum, and check the result against the shoelace area.  The returned
    PickCount re-asserts the identity on construction; disagreement is
    unreachable unless there is a bug."""
    interior = interior_count_oracle(poly, max_box_points)
    boundary = boundary_count(poly)
    if boundary < len(poly.vertices):
        raise InternalInvariantError(
            "boundary count fell below the vertex count")
    return PickCount(interior, boundary, twice_polygon_area(poly))


def _chord_edge_conflict(p: LatticePoint, q: LatticePoint,
                         e1: LatticePoint, e2: LatticePoint) -> bool:
    """True if polygon edge e1e2 touches cut segment pq anywhere other
    than a single-point contact at p or q."""
    if not _segments_share_point(p, q, e1, e2):
        return False
    if twice_signed_area(p, q, e1) == 0 and twice_signed_area(p, q, e2) == 0:
        # collinear: measure the 1-D overlap along the dominant axis
        if abs(q.x - p.x) >= abs(q.y - p.y):
            c1, c2 = sorted((p.x, q.x))
            d1, d2 = sorted((e1.x, e2.x))
            pk, qk = p.x, q.x
        else:
            c1, c2 = sorted((p.y, q.y))
            d1, d2 = sorted((e1.y, e2.y))
            pk, qk = p.y, q.y
        lo, hi = max(c1, d1), min(c2, d2)
        return lo != hi or lo not in (pk, qk)
    return not (point_on_segment(p, e1, e2) or point_on_segment(q, e1, e2))


def _require_chord_inside(poly: LatticePolygon, p: LatticePoint,
                          q: LatticePoint) -> None:
    for e1, e2 in poly.edges():
        if _chord_edge_conflict(p, q, e1, e2):
            raise InvalidCutError(
                f"cut segment {p}-{q} touches the boundary away from its endpoints")
    # no boundary contact besides the endpoints, so the open segment lies
    # entirely inside or entirely outside; test its midpoint at doubled scale
    doubled = [(2 * x1, 2 * y1, 2 * x2, 2 * y2)
               for x1, y1, x2, y2 in _edge_quads(poly.vertices)]
    if _classify_point(p.x + q.x, p.y + q.y, doubled) is not PointLocation.INTERIOR:
        raise InvalidCutError(f"cut segment {p}-{q} leaves the polygon")


def _ring_with_points(poly: LatticePolygon,
                      extra: tuple[LatticePoint, ...]) -> list[LatticePoint]:
    ring: list[LatticePoint] = []
    vs = poly.vertices
    for i, v in enumerate(vs):
        ring.append(v)
        w = vs[(i + 1) % len(vs)]
        between = [p for p in extra
                   if p != v and p != w and point_on_segment(p, v, w)]
        between.sort(key=lambda p: (p.x - v.x) ** 2 + (p.y - v.y) ** 2)
        ring.extend(between)
    return ring


def verify_additivity(poly: LatticePolygon, a: LatticePoint, d: LatticePoint,
                      b: LatticePoint,
                      max_box_points: int = DEFAULT_BOX_LIMIT) -> AdditivityWitness:
    """Split ``poly`` along the path A-D-B and check that the lattice
    counts of the parts recombine exactly.

    A and B must be boundary lattice points and D an interior one;
    passing D equal to A degenerates the path to the single chord A-B.
    The cut segments must stay strictly inside the polygon except at
    their boundary endpoints, otherwise InvalidCutError is raised.  The
    returned witness re-asserts the transfer identities on construction.
    """
    if a == b:
        raise InvalidCutError("cut endpoints A and B must differ")
    for name, pt in (("A", a), ("B", b)):
        if point_in_polygon(pt, poly) is not PointLocation.BOUNDARY:
            raise InvalidCutError(f"cut point {name}={pt} is not on the boundary")
    chord = d == a
    if not chord:
        if point_in_polygon(d, poly) is not PointLocation.INTERIOR:
            raise InvalidCutError(f"cut point D={d} is not an interior lattice point")
        if twice_signed_area(a, d, b) == 0 and (a - d).dot(b - d) > 0:
            raise InvalidCutError("cut segments A-D and B-D overlap each other")
        segments = ((a, d), (b, d))
    else:
        segments = ((a, b),)
    for p, q in segments:
        _require_chord_inside(poly, p, q)

    ring = _ring_with_points(poly, (a, b))
    ia, ib = ring.index(a), ring.index(b)

    def arc(i: int, j: int) -> list[LatticePoint]:
        return ring[i:j + 1] if i <= j else ring[i:] + ring[:j + 1]

    tail = [] if chord else [d]
    try:
        part1 = validate_polygon(arc(ia, ib) + tail)
        part2 = validate_polygon(arc(ib, ia) + tail)
    except GeometryError as exc:
        raise InvalidCutError(
            f"cut does not produce two simple polygons: {exc}") from exc

    whole = verify_pick(poly, max_box_points)
    first = verify_pick(part1, max_box_points)
    second = verify_pick(part2, max_box_points)
    if chord:
        cut_points = set(segment_lattice_points(a, b))
    else:
        cut_points = set(segment_lattice_points(a, d))
        cut_points |= set(segment_lattice_points(b, d))
    return AdditivityWitness(
        interior=whole.interior, boundary=whole.boundary,
        interior_1=first.interior, boundary_1=first.boundary,
        interior_2=second.interior, boundary_2=second.boundary,
        cut_points=len(cut_points))
