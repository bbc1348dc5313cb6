"""Regions T_k, their tile images, strip polygons, and tile enumeration.

A region is the closure of the set of generator points whose index sequence
starts with k; it is cut from the Farey triangle by two half-planes per
index (the value constraint x_j <= 1, closed, and the pair-sum constraint
x_{j-1} + x_j > 1, open side carried as metadata).  A tile is the image of
a region under the choice map (x, y) -> (x, x_n), whose determinant is the
kernel p_n(k), so area(tile) = kernel * area(region) exactly.

Enumeration walks the refinement tree of regions depth-first with three
prunes: subtrees with no live starting residue, zero-area regions, and
branches whose minimal reachable kernel within the remaining depth exceeds
the requested kernel bound (successive kernels satisfy
p_{j+1} >= p_j - p_{j-1} ... with maximal descent rate p_j per step, the
all-(1,2,2,...) corridor).  Enumeration is always bounded by an explicit
max_order and a node budget; there is no implicit infinite iteration.
DFS subtrees are independent, and results are sorted by k before return.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ._intgeom import hclip
from .continuants import (IndexTuple, continuant, continuant_shifted,
                          validate_index_tuple)
from .errors import BudgetError, DomainError
from .farey import ProgressionClass, TupleType
from .geometry import (ConvexPolygon, HalfPlane, RatPoint, affine_image,
                       area, clip)
from .progression import AdmissibleResidues, admissible_residues

# Closure of the Farey triangle {(x, y) in (0,1]^2 : x + y > 1}.
FAREY_TRIANGLE = ConvexPolygon([(0, 1), (1, 0), (1, 1)])

DEFAULT_BUDGET = 10 ** 6
DEFAULT_KERNEL_CAP = 64


@dataclass(frozen=True)
class Region:
    """Closure of T_k, with the floor constraints that carved it."""

    k: IndexTuple
    poly: ConvexPolygon

    @property
    def order(self) -> int:
        return len(self.k)


@dataclass(frozen=True)
class Tile:
    """Image of a region under the choice map, with its modular data."""

    k: IndexTuple
    pattern: TupleType
    poly: ConvexPolygon
    kernel: int
    residues: AdmissibleResidues
    region_poly: ConvexPolygon

    @property
    def order(self) -> int:
        return len(self.k)

    @property
    def multiplicity(self) -> int:
        return self.residues.multiplicity

    def to_json(self):
        return {
            "k": list(self.k),
            "pattern": list(self.pattern),
            "kernel": self.kernel,
            "residues": self.residues.sorted(),
            "vertices": self.poly.to_json(),
        }


@dataclass(frozen=True)
class StripPolygon:
    """Intersection of the s+1 unit strips anchored at a point."""

    k: IndexTuple
    pattern: TupleType
    anchor: tuple
    poly: ConvexPolygon


def _constraints(k: IndexTuple):
    """The 2n half-planes (value <= 1 closed, pair-sum >= 1 open) for k.

    Linear forms are tracked as integer coefficient pairs (a, b) meaning
    a*x + b*y; the recurrence L_j = k_j * L_{j-1} - L_{j-2} propagates them.
    """
    out = []
    lp = (1, 0)   # x_{-1} = x
    lc = (0, 1)   # x_0 = y
    for kj in k:
        ln = (kj * lc[0] - lp[0], kj * lc[1] - lp[1])
        out.append((HalfPlane(ln[0], ln[1], 1, closed=True), ln))
        s = (ln[0] + lc[0], ln[1] + lc[1])
        out.append((HalfPlane(-s[0], -s[1], -1, closed=False), s))
        lp, lc = lc, ln
    return out


def region(k: IndexTuple) -> Region:
    """Closure of {(x, y) in T : index sequence = k}; empty if infeasible."""
    k = validate_index_tuple(k)
    poly = FAREY_TRIANGLE
    for hp, _ in _constraints(k):
        poly = clip(poly, hp)
        if poly.is_empty:
            break
    return Region(k, poly)


def region_constraints(k: IndexTuple) -> list:
    """The open/closed half-plane metadata that defines region(k)."""
    return [hp for hp, _ in _constraints(validate_index_tuple(k))]


def tile(k: IndexTuple, pattern: TupleType, cls: ProgressionClass) -> Optional[Tile]:
    """Tile for (k, pattern, class); None when the region has zero area or
    no starting residue is admissible.  Materialized for s = 1 only."""
    k = validate_index_tuple(k)
    pattern = tuple(int(v) for v in pattern)
    if len(pattern) != 1:
        raise DomainError("tiles are materialized as polygons for s=1 only")
    if len(k) != sum(pattern) - 1:
        raise DomainError(f"order {len(k)} does not fit pattern {pattern}")
    reg = region(k)
    if reg.poly.is_empty or area(reg.poly) == 0:
        return None
    res = admissible_residues(k, pattern, cls)
    if not res.residues:
        return None
    n = len(k)
    P = continuant(k, n)
    Pp = continuant_shifted(k, 2, n - 1)
    return Tile(k, pattern, affine_image(reg.poly, P, Pp), P, res, reg.poly)


def strip_polygon(k: IndexTuple, pattern: TupleType, anchor) -> StripPolygon:
    """Polygon cut by the s+1 strips |form_i - anchor_i| < 1 (eta = 1),
    unclipped by the triangle; form_0 = x and form_i is the linear form of
    the chain value at position -1 + r_1 + ... + r_i."""
    k = validate_index_tuple(k)
    pattern = tuple(int(v) for v in pattern)
    if not pattern or any(v < 1 for v in pattern):
        raise DomainError(f"pattern entries must be >= 1, got {pattern}")
    if len(k) != sum(pattern) - 1:
        raise DomainError(f"order {len(k)} does not fit pattern {pattern}")
    anchor = tuple(Fraction(v) for v in anchor)
    if len(anchor) != len(pattern) + 1:
        raise DomainError("anchor must have s+1 coordinates")
    forms = [(1, 0)]
    pos = -1
    for ri in pattern:
        pos += ri
        a = -continuant_shifted(k, 2, pos - 1)
        b = continuant(k, pos)
        forms.append((a, b))
    # The first two strips bound a parallelogram; start from it and clip
    # with the remaining strips.
    (a0, b0), (a1, b1) = forms[0], forms[1]
    corners = []
    for s0 in (-1, 1):
        for s1 in (-1, 1):
            # solve a0 x + b0 y = anchor0 + s0, a1 x + b1 y = anchor1 + s1
            det = Fraction(a0 * b1 - a1 * b0)
            c0, c1 = anchor[0] + s0, anchor[1] + s1
            x = (c0 * b1 - c1 * b0) / det
            y = (a0 * c1 - a1 * c0) / det
            corners.append(RatPoint(x, y))
    corners = _hull_of_four(corners)
    poly = ConvexPolygon(corners)
    for (a, b), ci in zip(forms[2:], anchor[2:]):
        poly = clip(poly, HalfPlane(a, b, ci + 1))
        poly = clip(poly, HalfPlane(-a, -b, -(ci - 1)))
        if poly.is_empty:
            break
    return StripPolygon(k, pattern, anchor, poly)


def _hull_of_four(pts):
    """CCW order of the four parallelogram corners around their centroid."""
    import functools

    cx = sum(p.x for p in pts) / 4
    cy = sum(p.y for p in pts) / 4

    def half(p):
        dy = p.y - cy
        return 0 if (dy > 0 or (dy == 0 and p.x - cx > 0)) else 1

    def angle_cmp(p, q):
        hp_, hq_ = half(p), half(q)
        if hp_ != hq_:
            return -1 if hp_ < hq_ else 1
        cross = (p.x - cx) * (q.y - cy) - (p.y - cy) * (q.x - cx)
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(pts, key=functools.cmp_to_key(angle_cmp))


def core_point(k: IndexTuple, pattern: TupleType, target) -> RatPoint:
    """Preimage of the target under the choice map (s = 1): the point
    (t_0, (p_{n-1}(k_2..k_n)*t_0 + t_1) / p_n(k))."""
    k = validate_index_tuple(k)
    pattern = tuple(int(v) for v in pattern)
    if len(pattern) != 1:
        raise DomainError("core points are defined for s=1")
    if len(k) != pattern[0] - 1:
        raise DomainError(f"order {len(k)} does not fit pattern {pattern}")
    t0, t1 = Fraction(target[0]), Fraction(target[1])
    n = len(k)
    p = continuant(k, n)
    pp = continuant_shifted(k, 2, n - 1)
    return RatPoint(t0, (pp * t0 + t1) / p)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

_T_H = [(0, 1, 1), (1, 0, 1), (1, 1, 1)]   # homogeneous Farey triangle


def enumerate_tiles(cls: ProgressionClass, max_order: int,
                    kernel_filter: Optional[int] = None, *,
                    kernel_cap: Optional[int] = None,
                    budget: int = DEFAULT_BUDGET,
                    prune_slack: int = 3) -> list:
    """All admissible tiles of order <= max_order, sorted by k.

    With kernel_filter, only tiles of that kernel are returned; otherwise
    every kernel up to kernel_cap (default 64) is returned.  Either bound
    also drives the branch prune: per order, index entries are unbounded
    near the triangle's cusp corners, so a kernel bound is what makes the
    walk finite.  Raises BudgetError past the node budget.
    """
    if max_order < 0:
        raise DomainError("max_order must be >= 0")
    if kernel_filter is not None and kernel_filter < 1:
        raise DomainError("kernel_filter must be >= 1")
    if kernel_filter is not None:
        k_bound = kernel_filter
    else:
        k_bound = kernel_cap if kernel_cap is not None else DEFAULT_KERNEL_CAP
    c, d = cls.c % cls.d, cls.d
    from math import gcd

    live0 = []
    root_m = []
    for e in range(d):
        if gcd(gcd(c, e), d) != 1:
            continue
        if e == c:
            root_m.append(e)
        else:
            live0.append((e, c, e))

    raw = []   # (k, M, hpoly, L_n) for emitted tiles
    if root_m and (kernel_filter is None or kernel_filter == 1):
        raw.append(((), tuple(root_m), _T_H, (0, 1)))

    nodes = 1
    stack = []
    if live0 and max_order >= 1:
        stack.append(((), _T_H, (1, 0), (0, 1), tuple(live0)))

    while stack:
        k, poly, lp, lc, live = stack.pop()
        n = len(k)
        # feasible next-index range over the region closure: the ratio
        # (1 + x_{n-1}) / x_n is extremal at vertices
        lo = None
        hi = None
        unbounded = False
        for (x, y, w) in poly:
            num = w + lp[0] * x + lp[1] * y
            den = lc[0] * x + lc[1] * y
            if den == 0:
                unbounded = True
                continue
            t = num // den
            lo = t if lo is None else min(lo, t)
            hi = t if hi is None else max(hi, t)
        if lo is None:
            continue
        pn = lc[1]
        pn_1 = lp[1]
        remaining = max_order - n - 1
        cap = (k_bound + pn_1) // pn + remaining + prune_slack
        hi = cap if unbounded else min(hi, cap)
        lo = max(lo, 1)
        for kj in range(lo, hi + 1):
            m_here = []
            live2 = []
            for (e, tp, tc) in live:
                tn = (kj * tc - tp) % d
                if tn == c:
                    m_here.append(e)
                else:
                    live2.append((e, tc, tn))
            descend = bool(live2) and n + 1 < max_order
            if not m_here and not descend:
                continue
            ln = (kj * lc[0] - lp[0], kj * lc[1] - lp[1])
            child = hclip(poly, ln[0], ln[1], 1)
            if len(child) >= 3:
                child = hclip(child, -(ln[0] + lc[0]), -(ln[1] + lc[1]), -1)
            if len(child) < 3:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetError(
                    f"enumeration exceeded {budget} nodes", nodes=nodes)
            kk = k + (kj,)
            if m_here:
                kern = ln[1]
                if kern < 1:
                    raise DomainError(
                        f"nonpositive kernel {kern} on realizable tuple {kk}")
                if (kernel_filter == kern) or \
                        (kernel_filter is None and kern <= k_bound):
                    raw.append((kk, tuple(m_here), child, ln))
            if descend:
                stack.append((kk, child, lc, ln, tuple(live2)))

    raw.sort(key=lambda rec: rec[0])
    out = []
    for k, m, hpoly, ln in raw:
        reg_poly = ConvexPolygon.from_h(hpoly)
        kern = ln[1]
        img = affine_image(reg_poly, kern, -ln[0])
        res = AdmissibleResidues(k, (len(k) + 1,), cls, frozenset(m))
        out.append(Tile(k, (len(k) + 1,), img, kern, res, reg_poly))
    return out
