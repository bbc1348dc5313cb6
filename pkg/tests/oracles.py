"""Independent brute-force oracles used to derive and verify expected
values.  These deliberately avoid the library's own algorithms: half-plane
intersections are built from pairwise line crossings, continuants from 2x2
matrix products, Farey sequences from sorting, and first-return tuples from
raw next-term chains."""

import math
from fractions import Fraction

from fareymosaics.geometry import ConvexPolygon


def halfplane_intersection(constraints):
    """Vertices of {a*x + b*y <= c for all (a, b, c)} by brute force:
    intersect every line pair, keep feasible points, hull them."""
    pts = set()
    n = len(constraints)
    for i in range(n):
        a1, b1, c1 = (Fraction(v) for v in constraints[i])
        for j in range(i + 1, n):
            a2, b2, c2 = (Fraction(v) for v in constraints[j])
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = (c1 * b2 - c2 * b1) / det
            y = (a1 * c2 - a2 * c1) / det
            if all(Fraction(a) * x + Fraction(b) * y <= Fraction(c)
                   for (a, b, c) in constraints):
                pts.add((x, y))
    return convex_hull(pts)


def convex_hull(points):
    pts = sorted(set(points))
    if len(pts) < 3:
        return list(pts)

    def half(seq):
        hull = []
        for p in seq:
            while len(hull) >= 2:
                (x1, y1), (x2, y2) = hull[-2], hull[-1]
                if (x2 - x1) * (p[1] - y2) - (y2 - y1) * (p[0] - x2) <= 0:
                    hull.pop()
                else:
                    break
            hull.append(p)
        return hull

    lower = half(pts)
    upper = half(list(reversed(pts)))
    return lower[:-1] + upper[:-1]


def continuant_matrix(k, j):
    """p_j via the product of the matrices [[k_i, -1], [1, 0]]."""
    a, b, c, d = 1, 0, 0, 1
    for i in range(j):
        ki = k[i]
        a, b, c, d = a * ki + b, -a, c * ki + d, -c
    return a if j >= 0 else 0


def farey_bruteforce(Q):
    """F^Q by sorting all reduced fractions, endpoints included."""
    fr = {(0, 1), (1, 1)}
    for q in range(1, Q + 1):
        for a in range(1, q):
            if math.gcd(a, q) == 1:
                fr.add((a, q))
    return sorted(fr, key=lambda t: Fraction(t[0], t[1]))


def first_return_tuples(Q, c, d, max_n=40):
    """Realized first-return index tuples from raw Farey chains: for each
    consecutive F^Q pair (q', q'') with q' = c (mod d), walk successors to
    the first value = c (mod d); record (k-tuple -> set of q'' mod d).
    A q'' already in class c realizes the empty tuple."""
    seen = {}
    prev = None
    for a, q in farey_bruteforce(Q):
        if prev is not None and prev % d == c:
            qp, qpp = prev, q
            if qpp % d == c:
                seen.setdefault((), set()).add(qpp % d)
            else:
                u, v = qp, qpp
                ks = []
                for _ in range(max_n):
                    k = (Q + u) // v
                    u, v = v, k * v - u
                    ks.append(k)
                    if v % d == c:
                        seen.setdefault(tuple(ks), set()).add(qpp % d)
                        break
        prev = q
    return seen


def point_in_polygon_float(poly, x, y):
    """Crossing-number test in floating point (points off the boundary)."""
    verts = [(float(p.x), float(p.y)) for p in poly.vertices]
    inside = False
    n = len(verts)
    for i in range(n):
        x1, y1 = verts[i]
        x2, y2 = verts[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xc > x:
                inside = not inside
    return inside


def random_convex_polygon(rng, denom=40, span=4, min_verts=3, nonneg=False):
    """Random strictly convex polygon with small rational coordinates."""
    lo = 0 if nonneg else -span * denom
    while True:
        pts = {(Fraction(rng.randint(lo, span * denom), denom),
                Fraction(rng.randint(lo, span * denom), denom))
               for _ in range(rng.randint(3, 9))}
        hull = convex_hull(pts)
        if len(hull) >= min_verts:
            return ConvexPolygon(hull)


def polygon_diameter_float(poly):
    verts = poly.vertices
    best = 0.0
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            best = max(best, math.hypot(float(verts[i].x - verts[j].x),
                                        float(verts[i].y - verts[j].y)))
    return best


def dist_to_convex(poly, p) -> float:
    """Euclidean distance from a point to a closed convex polygon (0 inside)."""
    from fareymosaics.geometry import Incidence, locate

    if locate(poly, p).kind != Incidence.OUTSIDE:
        return 0.0
    px, py = float(p.x), float(p.y)
    best = float("inf")
    verts = poly.vertices
    n = len(verts)
    for i in range(n):
        ax, ay = float(verts[i].x), float(verts[i].y)
        bx, by = float(verts[(i + 1) % n].x), float(verts[(i + 1) % n].y)
        dx, dy = bx - ax, by - ay
        t = ((px - ax) * dx + (py - ay) * dy) / (dx * dx + dy * dy)
        t = max(0.0, min(1.0, t))
        best = min(best, math.hypot(px - ax - t * dx, py - ay - t * dy))
    return best
