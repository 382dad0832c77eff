"""Refining a simple lattice polygon into triangles of doubled area 1.

The pipeline has two stages.  Ear clipping first cuts the polygon into
n - 2 lattice triangles using only polygon vertices.  Each triangle is
then refined recursively: a triangle with a non-primitive edge splits at
a lattice point of that edge, and a triangle whose edges are all
primitive but whose doubled area exceeds 1 splits at the interior point
located by the Bezout construction.  Every split strictly reduces the
children's areas, so the process terminates with exactly
twice_polygon_area unit-doubled-area ("primitive") triangles.

The whole refinement is deterministic: ears are clipped at the first
eligible vertex in ring order, edges are examined in a fixed order, and
children are processed depth-first in construction order.  Re-running
on the same polygon reproduces the identical triangle list and event
log.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    DegenerateTriangleError,
    InternalInvariantError,
    LatticePoint,
    LatticePolygon,
    PreconditionError,
    edge_gcd,
    twice_polygon_area,
    twice_signed_area,
)
from .bezout import interior_split_point, normalize


class SplitRule(Enum):
    EDGE_GCD = "edge-gcd-split"
    INTERIOR_POINT = "interior-point-split"
    DEGENERATE_THREE_WAY = "degenerate-three-way"


@dataclass(frozen=True)
class LatticeTriangle:
    """A non-degenerate lattice triangle stored counterclockwise with
    its doubled area cached."""

    v0: LatticePoint
    v1: LatticePoint
    v2: LatticePoint
    twice_area: int

    def __post_init__(self) -> None:
        if self.twice_area <= 0 or \
                twice_signed_area(self.v0, self.v1, self.v2) != self.twice_area:
            raise InternalInvariantError("triangle must be counterclockwise "
                                         "with a consistent doubled area")

    @classmethod
    def from_points(cls, p: LatticePoint, q: LatticePoint,
                    r: LatticePoint) -> "LatticeTriangle":
        """Build a triangle from vertices in either orientation; the
        first vertex is kept in place, the other two swap if needed."""
        s = twice_signed_area(p, q, r)
        if s == 0:
            raise DegenerateTriangleError(f"collinear vertices {p}, {q}, {r}")
        if s < 0:
            q, r = r, q
            s = -s
        return cls(p, q, r, s)

    @property
    def vertices(self) -> tuple[LatticePoint, LatticePoint, LatticePoint]:
        return (self.v0, self.v1, self.v2)


@dataclass(frozen=True)
class SplitEvent:
    """One refinement step: ``parent`` was replaced by ``children``
    after splitting at ``point`` under ``rule``.

    Children cover the parent exactly (areas add up) and introduce no
    vertex besides the split point.
    """

    parent: LatticeTriangle
    rule: SplitRule
    point: LatticePoint
    children: tuple[LatticeTriangle, ...]

    def __post_init__(self) -> None:
        if sum(ch.twice_area for ch in self.children) != self.parent.twice_area:
            raise InternalInvariantError("split children must cover the parent")
        allowed = set(self.parent.vertices) | {self.point}
        for ch in self.children:
            if not set(ch.vertices) <= allowed:
                raise InternalInvariantError("split child uses a foreign vertex")


@dataclass(frozen=True)
class Triangulation:
    """Finished refinement of ``source``: all triangles have doubled
    area 1 and there are exactly twice_polygon_area(source) of them.
    ``events`` replays the refinement from the initial ear clipping."""

    triangles: tuple[LatticeTriangle, ...]
    events: tuple[SplitEvent, ...]
    source: LatticePolygon

    def __post_init__(self) -> None:
        if any(t.twice_area != 1 for t in self.triangles):
            raise InternalInvariantError("unfinished triangulation")
        if len(self.triangles) != twice_polygon_area(self.source):
            raise InternalInvariantError(
                "triangle count must equal the doubled polygon area")


def _in_closed_triangle(p: LatticePoint, a: LatticePoint, b: LatticePoint,
                        c: LatticePoint) -> bool:
    """Whether p lies in the closed counterclockwise triangle abc."""
    return (twice_signed_area(a, b, p) >= 0
            and twice_signed_area(b, c, p) >= 0
            and twice_signed_area(c, a, p) >= 0)


def initial_triangulation(poly: LatticePolygon) -> list[LatticeTriangle]:
    """Ear-clip ``poly`` into len(poly) - 2 triangles on its own
    vertices.

    An ear is a strictly convex vertex whose closed triangle contains no
    other ring vertex; the first ear in ring order is clipped each pass.
    For a validated simple polygon an ear always exists.
    """
    ring = list(poly.vertices)
    out: list[LatticeTriangle] = []
    while len(ring) > 3:
        n = len(ring)
        for i in range(n):
            prev, cur, nxt = ring[i - 1], ring[i], ring[(i + 1) % n]
            if twice_signed_area(prev, cur, nxt) <= 0:
                continue
            skip = {(i - 1) % n, i, (i + 1) % n}
            if any(j not in skip and _in_closed_triangle(ring[j], prev, cur, nxt)
                   for j in range(n)):
                continue
            out.append(LatticeTriangle.from_points(prev, cur, nxt))
            del ring[i]
            break
        else:
            raise InternalInvariantError("no ear found in a simple polygon")
    out.append(LatticeTriangle.from_points(*ring))
    if sum(t.twice_area for t in out) != twice_polygon_area(poly):
        raise InternalInvariantError("ear clipping lost area")
    return out


def gcd_edge_split(tri: LatticeTriangle) -> SplitEvent | None:
    """Split at a lattice point of the first non-primitive edge, or
    return None if all three edges are primitive.

    Edges are examined in the fixed order v0v1, v1v2, v2v0.  For an edge
    AB whose deltas have gcd k > 1 the split point is
    ((k-1)*A + B) / k, the edge lattice point one step from A; the
    children are (A, C, D) then (B, C, D) with C the opposite vertex.
    """
    corners = tri.vertices
    for i in range(3):
        a = corners[i]
        b = corners[(i + 1) % 3]
        k = edge_gcd(a, b)
        if k == 1:
            continue
        c = corners[(i + 2) % 3]
        d = LatticePoint(a.x + (b.x - a.x) // k, a.y + (b.y - a.y) // k)
        children = (LatticeTriangle.from_points(a, c, d),
                    LatticeTriangle.from_points(b, c, d))
        return SplitEvent(tri, SplitRule.EDGE_GCD, d, children)
    return None


def interior_split(tri: LatticeTriangle) -> SplitEvent:
    """Split a triangle with all-primitive edges and doubled area > 1
    at the lattice point produced by the Bezout construction with v2 as
    the pivot.

    Normally the point is interior and the split is three-way:
    (v0, v1, D), (v0, v2, D), (v1, v2, D).  When the point lands on an
    edge through the pivot, the child that would collapse is dropped and
    the event is tagged degenerate-three-way.
    """
    if tri.twice_area <= 1:
        raise PreconditionError("triangle already has doubled area 1")
    corners = tri.vertices
    for i in range(3):
        if edge_gcd(corners[i], corners[(i + 1) % 3]) != 1:
            raise PreconditionError(
                "interior_split requires all edges primitive; "
                "apply gcd_edge_split first")
    nt = normalize(corners, pivot=2)
    d = nt.transform.to_original(interior_split_point(nt))
    a, b, c = corners
    rule = SplitRule.INTERIOR_POINT
    children = []
    for p, q in ((a, b), (a, c), (b, c)):
        if twice_signed_area(p, q, d) == 0:
            rule = SplitRule.DEGENERATE_THREE_WAY
            continue
        children.append(LatticeTriangle.from_points(p, q, d))
    return SplitEvent(tri, rule, d, tuple(children))


def primitive_triangulation(poly: LatticePolygon) -> Triangulation:
    """Fully refine ``poly`` into triangles of doubled area 1.

    Work proceeds depth-first: the initial ear-clipped triangles are
    processed in order, and each split's children are processed next,
    in construction order.  The result lists triangles in completion
    order together with the full split-event log.
    """
    stack = list(reversed(initial_triangulation(poly)))
    events: list[SplitEvent] = []
    done: list[LatticeTriangle] = []
    while stack:
        tri = stack.pop()
        if tri.twice_area == 1:
            done.append(tri)
            continue
        event = gcd_edge_split(tri) or interior_split(tri)
        events.append(event)
        stack.extend(reversed(event.children))
    return Triangulation(tuple(done), tuple(events), poly)
