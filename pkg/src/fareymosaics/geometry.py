"""Exact rational 2-D geometry: points, half-planes, convex polygons, outlines.

All coordinates are arbitrary-precision rationals (fractions.Fraction) and
every predicate is exact; no floating point enters any geometric decision.
Rationals serialize as "p/q" ("p" when q = 1), points as ["p/q", "r/s"].

All types are immutable values; every operation is pure and safe to call
concurrently.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Sequence, Union

from . import _intgeom
from .errors import GeometryError, OverlapError

# Exact rational scalar used everywhere; stored reduced with denominator >= 1.
Rational = Fraction


def rational_str(x) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(x))


def parse_rational(s: str) -> Fraction:
    """Parse "p/q" or "p" (also accepts decimal strings like "0.25")."""
    return Fraction(s.strip())


class RatPoint(NamedTuple):
    """Exact 2-D point; tuple order gives exact lexicographic comparison."""

    x: Fraction
    y: Fraction

    def to_json(self):
        return [rational_str(self.x), rational_str(self.y)]

    @staticmethod
    def of(x, y) -> "RatPoint":
        return RatPoint(Fraction(x), Fraction(y))


def point_from_json(obj) -> RatPoint:
    return RatPoint(parse_rational(obj[0]), parse_rational(obj[1]))


@dataclass(frozen=True)
class HalfPlane:
    """The set {(x, y) : a*x + b*y <= c}; open (< c) when closed is False.

    Openness is metadata used only by point classification; clipping always
    uses the closure (boundaries have measure zero).
    """

    a: Fraction
    b: Fraction
    c: Fraction
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.a == 0 and self.b == 0:
            raise GeometryError("half-plane normal must be nonzero")

    def complement(self) -> "HalfPlane":
        return HalfPlane(-self.a, -self.b, -self.c, not self.closed)

    def int_coeffs(self):
        """(a, b, c) scaled to integers."""
        m = lcm(self.a.denominator, self.b.denominator, self.c.denominator)
        return (
            self.a.numerator * (m // self.a.denominator),
            self.b.numerator * (m // self.b.denominator),
            self.c.numerator * (m // self.c.denominator),
        )

    def contains(self, p: RatPoint) -> bool:
        v = self.a * p.x + self.b * p.y
        return v <= self.c if self.closed else v < self.c


def _to_h(p: RatPoint):
    w = lcm(p.x.denominator, p.y.denominator)
    return (p.x.numerator * (w // p.x.denominator),
            p.y.numerator * (w // p.y.denominator), w)


def _from_h(v) -> RatPoint:
    x, y, w = v
    return RatPoint(Fraction(x, w), Fraction(y, w))


class ConvexPolygon:
    """Immutable strictly convex polygon with CCW rational vertices.

    The empty polygon (no vertices) is allowed and has area 0.  Vertices are
    stored in a canonical rotation (lexicographically smallest first) so that
    equality and hashing are independent of the rotation handed in.
    """

    __slots__ = ("_verts",)

    def __init__(self, vertices: Iterable = ()):
        pts = [RatPoint(Fraction(x), Fraction(y)) for (x, y) in vertices]
        if not pts:
            self._verts = ()
            return
        if len(pts) < 3:
            raise GeometryError("a nonempty convex polygon needs >= 3 vertices")
        if len(set(pts)) != len(pts):
            raise GeometryError("repeated vertex")
        n = len(pts)
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            turn = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
            if turn < 0:
                raise GeometryError("vertices must be counter-clockwise")
            if turn == 0:
                raise GeometryError("three consecutive collinear vertices")
        k = min(range(n), key=lambda i: pts[i])
        self._verts = tuple(pts[k:] + pts[:k])

    @classmethod
    def _from_canonical(cls, verts: tuple) -> "ConvexPolygon":
        poly = cls.__new__(cls)
        poly._verts = verts
        return poly

    @classmethod
    def from_h(cls, hverts) -> "ConvexPolygon":
        pts = [_from_h(v) for v in hverts]
        if not pts:
            return cls._from_canonical(())
        k = min(range(len(pts)), key=lambda i: pts[i])
        return cls._from_canonical(tuple(pts[k:] + pts[:k]))

    def to_h(self):
        return [_to_h(p) for p in self._verts]

    @property
    def vertices(self) -> tuple:
        return self._verts

    @property
    def is_empty(self) -> bool:
        return not self._verts

    def __len__(self):
        return len(self._verts)

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and self._verts == other._verts

    def __hash__(self):
        return hash(self._verts)

    def __repr__(self):
        if self.is_empty:
            return "ConvexPolygon(empty)"
        inner = ", ".join(f"({rational_str(p.x)},{rational_str(p.y)})"
                          for p in self._verts)
        return f"ConvexPolygon[{inner}]"

    def bbox(self):
        xs = [p.x for p in self._verts]
        ys = [p.y for p in self._verts]
        return min(xs), min(ys), max(xs), max(ys)

    def to_json(self):
        return [p.to_json() for p in self._verts]

    def reflected(self) -> "ConvexPolygon":
        """Image under the diagonal reflection (x, y) -> (y, x)."""
        if self.is_empty:
            return self
        pts = [RatPoint(p.y, p.x) for p in reversed(self._verts)]
        k = min(range(len(pts)), key=lambda i: pts[i])
        return ConvexPolygon._from_canonical(tuple(pts[k:] + pts[:k]))


EMPTY_POLYGON = ConvexPolygon(())


def area(poly: ConvexPolygon) -> Fraction:
    """Exact shoelace area; the empty polygon has area 0."""
    verts = poly.vertices
    if not verts:
        return Fraction(0)
    total = Fraction(0)
    n = len(verts)
    for i in range(n):
        p, q = verts[i], verts[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    if total < 0:
        raise GeometryError("negative area on a CCW polygon")
    return total / 2


def clip(poly: ConvexPolygon, hp: HalfPlane) -> ConvexPolygon:
    """poly intersected with the closure of hp.

    Degenerate results (segments, points) collapse to the empty polygon.
    """
    if poly.is_empty:
        return poly
    a, b, c = hp.int_coeffs()
    return ConvexPolygon.from_h(_intgeom.hclip(poly.to_h(), a, b, c))


def affine_image(poly: ConvexPolygon, P: int, Pp: int) -> ConvexPolygon:
    """Image of poly under (x, y) -> (x, P*y - Pp*x); exact determinant P.

    Requires P >= 1, so orientation is preserved and
    area(image) = P * area(poly) exactly.
    """
    if P < 1:
        raise GeometryError(f"affine_image requires P >= 1, got {P}")
    if poly.is_empty:
        return poly
    pts = tuple(RatPoint(p.x, P * p.y - Pp * p.x) for p in poly.vertices)
    k = min(range(len(pts)), key=lambda i: pts[i])
    return ConvexPolygon._from_canonical(pts[k:] + pts[:k])


class Incidence(enum.Enum):
    INTERIOR = "interior"
    EDGE = "edge"
    VERTEX = "vertex"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Location:
    """Exact point classification; directions only for VERTEX incidences.

    directions holds the two boundary direction vectors leaving the vertex,
    so callers can compute the interior-angle fraction.
    """

    kind: Incidence
    directions: tuple = None


def _vertex_location(verts, i) -> Location:
    n = len(verts)
    p = verts[i]
    nxt = verts[(i + 1) % n]
    prv = verts[i - 1]
    d1 = (nxt.x - p.x, nxt.y - p.y)
    d2 = (prv.x - p.x, prv.y - p.y)
    return Location(Incidence.VERTEX, (d1, d2))


def _locate_convex(poly: ConvexPolygon, p: RatPoint) -> Location:
    verts = poly.vertices
    if not verts:
        return Location(Incidence.OUTSIDE)
    n = len(verts)
    on_edges = []
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        s = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        if s < 0:
            return Location(Incidence.OUTSIDE)
        if s == 0:
            if p == a:
                return _vertex_location(verts, i)
            if p == b:
                return _vertex_location(verts, (i + 1) % n)
            if min(a.x, b.x) <= p.x <= max(a.x, b.x) and \
               min(a.y, b.y) <= p.y <= max(a.y, b.y):
                on_edges.append(i)
    if on_edges:
        return Location(Incidence.EDGE)
    return Location(Incidence.INTERIOR)


def _on_segment(a: RatPoint, b: RatPoint, p: RatPoint) -> bool:
    s = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
    if s != 0:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and \
        min(a.y, b.y) <= p.y <= max(a.y, b.y)


@dataclass(frozen=True)
class Outline:
    """Union boundary: outer loops counter-clockwise, holes clockwise."""

    loops: tuple

    def __post_init__(self):
        object.__setattr__(self, "loops",
                           tuple(tuple(RatPoint(Fraction(x), Fraction(y))
                                       for (x, y) in loop)
                                 for loop in self.loops))

    def outer_loops(self):
        return [lp for lp in self.loops if _loop_area2(lp) > 0]

    def holes(self):
        return [lp for lp in self.loops if _loop_area2(lp) < 0]

    def area(self) -> Fraction:
        return sum((_loop_area2(lp) for lp in self.loops), Fraction(0)) / 2

    def to_json(self):
        return [[p.to_json() for p in loop] for loop in self.loops]


def _loop_area2(loop) -> Fraction:
    total = Fraction(0)
    n = len(loop)
    for i in range(n):
        p, q = loop[i], loop[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total


def _locate_outline(outline: Outline, p: RatPoint) -> Location:
    # Boundary first: vertex beats edge.
    for loop in outline.loops:
        n = len(loop)
        for i in range(n):
            if loop[i] == p:
                nxt = loop[(i + 1) % n]
                prv = loop[i - 1]
                return Location(Incidence.VERTEX,
                    ((nxt.x - p.x, nxt.y - p.y), (prv.x - p.x, prv.y - p.y)))
    for loop in outline.loops:
        n = len(loop)
        for i in range(n):
            if _on_segment(loop[i], loop[(i + 1) % n], p):
                return Location(Incidence.EDGE)
    # Even-odd ray casting (+x direction); exact because p is off-boundary.
    crossings = 0
    for loop in outline.loops:
        n = len(loop)
        for i in range(n):
            a, b = loop[i], loop[(i + 1) % n]
            if (a.y > p.y) == (b.y > p.y):
                continue
            # x coordinate where the edge crosses the horizontal through p
            t = (p.y - a.y) / (b.y - a.y)
            x_cross = a.x + t * (b.x - a.x)
            if x_cross > p.x:
                crossings += 1
    if crossings % 2 == 1:
        return Location(Incidence.INTERIOR)
    return Location(Incidence.OUTSIDE)


def locate(region: Union[ConvexPolygon, Outline], p: RatPoint) -> Location:
    """Exact classification of p against a convex polygon or an outline."""
    p = RatPoint(Fraction(p[0]), Fraction(p[1]))
    if isinstance(region, ConvexPolygon):
        return _locate_convex(region, p)
    return _locate_outline(region, p)


# ---------------------------------------------------------------------------
# Union outlines by exact edge cancellation
# ---------------------------------------------------------------------------


def _check_interior_disjoint(tiles: Sequence[ConvexPolygon]):
    hs = [t.to_h() for t in tiles]
    boxes = [t.bbox() for t in tiles]
    for i in range(len(tiles)):
        x0, y0, x1, y1 = boxes[i]
        for j in range(i + 1, len(tiles)):
            a0, b0, a1, b1 = boxes[j]
            if a0 >= x1 or x0 >= a1 or b0 >= y1 or y0 >= b1:
                continue
            if _intgeom.interiors_intersect(hs[i], hs[j]):
                raise OverlapError(
                    f"tiles {i} and {j} have intersecting interiors")


def _more_ccw(din, u, v) -> bool:
    """True when direction u is a sharper left turn than v, relative to din.

    Turn angles live in (-pi, pi]: straight back beats left turns beats
    straight ahead beats right turns; within one half-plane the direction
    that is counter-clockwise of the other wins.
    """
    def key_class(w):
        cross = din[0] * w[1] - din[1] * w[0]
        dot = din[0] * w[0] + din[1] * w[1]
        if cross == 0:
            return 3 if dot < 0 else 1
        return 2 if cross > 0 else 0

    cu, cv = key_class(u), key_class(v)
    if cu != cv:
        return cu > cv
    return u[0] * v[1] - u[1] * v[0] < 0


def union_outline(tiles: Sequence[ConvexPolygon]) -> Outline:
    """Outline of a union of interior-disjoint convex tiles.

    Every edge is split at every vertex of any other tile lying on it;
    fragments occurring in both directions cancel; survivors are stitched
    into loops and collinear runs are merged.  Raises OverlapError when two
    tiles share interior area.
    """
    tiles = [t for t in tiles if not t.is_empty]
    if not tiles:
        return Outline(())
    _check_interior_disjoint(tiles)

    pool = set()
    for t in tiles:
        pool.update(t.vertices)

    fragments = {}

    def toggle(u, v):
        if fragments.get((v, u), 0) > 0:
            fragments[(v, u)] -= 1
            if fragments[(v, u)] == 0:
                del fragments[(v, u)]
        else:
            fragments[(u, v)] = fragments.get((u, v), 0) + 1

    for t in tiles:
        verts = t.vertices
        n = len(verts)
        for i in range(n):
            u, v = verts[i], verts[(i + 1) % n]
            dx, dy = v.x - u.x, v.y - u.y
            mids = []
            for w in pool:
                if w == u or w == v:
                    continue
                if (w.x - u.x) * dy - (w.y - u.y) * dx != 0:
                    continue
                # parameter along the edge, exact
                t_param = ((w.x - u.x) * dx + (w.y - u.y) * dy) / \
                    (dx * dx + dy * dy)
                if 0 < t_param < 1:
                    mids.append((t_param, w))
            mids.sort()
            chain = [u] + [w for _, w in mids] + [v]
            for a, b in zip(chain, chain[1:]):
                toggle(a, b)

    if any(cnt > 1 for cnt in fragments.values()):
        raise OverlapError("duplicate boundary fragment; tiles overlap")

    out_map = {}
    for (u, v) in fragments:
        out_map.setdefault(u, []).append(v)
    for u in out_map:
        out_map[u].sort()

    loops = []
    unused = set(fragments)
    while unused:
        start = min(unused)
        origin = start[0]
        loop_pts = []
        cur = start
        while True:
            unused.discard(cur)
            u, v = cur
            loop_pts.append(u)
            if v == origin:
                break
            din = (v.x - u.x, v.y - u.y)
            candidates = [w for w in out_map.get(v, ()) if (v, w) in unused]
            if not candidates:
                raise GeometryError("open boundary chain in union outline")
            best = candidates[0]
            for w in candidates[1:]:
                if _more_ccw(din, (w.x - v.x, w.y - v.y),
                             (best.x - v.x, best.y - v.y)):
                    best = w
            cur = (v, best)
        # merge collinear runs
        merged = []
        m = len(loop_pts)
        for i in range(m):
            a = loop_pts[i - 1]
            b = loop_pts[i]
            c = loop_pts[(i + 1) % m]
            if (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x) != 0:
                merged.append(b)
        if len(merged) >= 3:
            k = min(range(len(merged)), key=lambda i: merged[i])
            loops.append(tuple(merged[k:] + merged[:k]))

    loops.sort(key=lambda lp: (-_loop_area2(lp), lp))
    return Outline(tuple(loops))
