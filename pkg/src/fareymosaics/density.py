"""Limit density of consecutive-denominator pairs: theory and experiment.

The density layer carried by a tile is prefactor * multiplicity / kernel,
where the prefactor is 2*g / (d*phi(g)) with g = gcd(c, d).  Dividing the
lattice-count main term for one starting residue by the main term of
#F^Q(c,d) forces this constant, and it makes the total theoretical mass
converge to 1; the classical constant 2/phi(d) (which agrees exactly when
d divides c) stays available behind paper_constant=True for comparison.

Theoretical bin masses are integrated by exact polygon clipping, never by
sampling, so comparisons carry no Monte-Carlo noise.  Empirical histograms
are single-pass folds over the Farey stream with O(1) state beyond the grid.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .continuants import index_sequence_real
from .errors import DomainError, OrphanWarning
from .farey import ProgressionClass, TupleType, farey_filtered
from .geometry import HalfPlane, Incidence, RatPoint, area, clip, locate
from .mosaics import assemble_with_orphans
from .progression import admissible_residues, euler_phi
from .tiles import Tile, enumerate_tiles, strip_polygon

DENSITY_KERNEL_CAP = 250


def layer_prefactor(cls: ProgressionClass, paper_constant: bool = False) -> Fraction:
    """2*g/(d*phi(g)) with g = gcd(c, d); or the classical 2/phi(d)."""
    if paper_constant:
        return Fraction(2, euler_phi(cls.d))
    g = math.gcd(cls.c, cls.d)
    return Fraction(2 * g, cls.d * euler_phi(g))


@dataclass(frozen=True)
class DensityQuery:
    point: tuple
    cls: ProgressionClass
    max_order: int

    def __post_init__(self):
        object.__setattr__(self, "point",
                           tuple(Fraction(v) for v in self.point))
        if any(not 0 <= v <= 1 for v in self.point):
            raise DomainError("query point must lie in the unit cube")
        if self.max_order < 0:
            raise DomainError("max_order must be >= 0")


@dataclass(frozen=True)
class DensityLayerWeight:
    """One tile's contribution descriptor: prefactor * multiplicity / kernel."""

    kernel: int
    multiplicity: int
    prefactor: Fraction

    @property
    def contribution(self) -> Fraction:
        return self.prefactor * self.multiplicity / self.kernel


def layer_weight(t: Tile, cls: ProgressionClass,
                 paper_constant: bool = False) -> DensityLayerWeight:
    """The constant density layer a tile lays over its polygon."""
    return DensityLayerWeight(t.kernel, t.multiplicity,
                              layer_prefactor(cls, paper_constant))


class PointClass:
    GENERIC = "generic"
    ON_EDGE = "edge"
    ON_VERTEX = "vertex"
    OUTSIDE = "outside"


_TILE_CACHE = {}


def _tiles_for(cls: ProgressionClass, max_order: int, kernel_cap: int,
               budget: int = 10 ** 7):
    key = (cls.c, cls.d, max_order, kernel_cap)
    if key not in _TILE_CACHE:
        _TILE_CACHE[key] = tuple(enumerate_tiles(
            cls, max_order, kernel_cap=kernel_cap, budget=budget))
    return _TILE_CACHE[key]


def _vertex_angle_fraction(directions) -> float:
    (ax, ay), (bx, by) = directions
    ang = math.atan2(float(by), float(bx)) - math.atan2(float(ay), float(ax))
    ang %= 2.0 * math.pi
    return ang / (2.0 * math.pi)


def g1_eval(query: DensityQuery, *, kernel_cap: int = DENSITY_KERNEL_CAP,
            paper_constant: bool = False, tiles=None):
    """Pair density at a point: sum of prefactor * |M_k| / kernel over the
    enumerated tiles covering it.

    A point on a tile edge takes half that tile's layer; on a tile vertex it
    takes the interior-angle fraction angle/(2*pi).  Returns (value,
    classification); the classification reports the most degenerate
    incidence met (vertex > edge > interior).  Points outside every tile
    give (0.0, outside).  At (1, 1) the partial sums grow without bound in
    max_order.
    """
    if len(query.point) != 2:
        raise DomainError("g1_eval evaluates pair densities (s = 1)")
    if tiles is None:
        tiles = _tiles_for(query.cls, query.max_order, kernel_cap)
    pref = layer_prefactor(query.cls, paper_constant)
    p = RatPoint(query.point[0], query.point[1])
    total = Fraction(0)
    angle_part = 0.0
    seen_vertex = False
    seen_edge = False
    seen_interior = False
    for t in tiles:
        if t.order > query.max_order:
            continue
        x0, y0, x1, y1 = t.poly.bbox()
        if not (x0 <= p.x <= x1 and y0 <= p.y <= y1):
            continue
        loc = locate(t.poly, p)
        w = DensityLayerWeight(t.kernel, t.multiplicity, pref).contribution
        if loc.kind == Incidence.INTERIOR:
            total += w
            seen_interior = True
        elif loc.kind == Incidence.EDGE:
            total += w / 2
            seen_edge = True
        elif loc.kind == Incidence.VERTEX:
            angle_part += float(w) * _vertex_angle_fraction(loc.directions)
            seen_vertex = True
    value = float(total) + angle_part
    if seen_vertex:
        return value, PointClass.ON_VERTEX
    if seen_edge:
        return value, PointClass.ON_EDGE
    if seen_interior:
        return value, PointClass.GENERIC
    return 0.0, PointClass.OUTSIDE


def gs_first_term(query: DensityQuery, r: TupleType, k, *,
                  paper_constant: bool = False) -> float:
    """Leading density term of one (k, r) configuration at the query point:
    prefactor * |M_{k,r}| * area(strip_polygon(k, r, point)) / 4 when the
    core generator lies strictly inside T_k (in the half-open floor sense),
    0 otherwise.  Boundary and vertex corrections are out of scope for
    s >= 2."""
    from .continuants import continuant, continuant_shifted, eval_linear

    r = tuple(int(v) for v in r)
    k = tuple(int(v) for v in k)
    if len(k) != sum(r) - 1:
        raise DomainError(f"order {len(k)} does not fit pattern {r}")
    if len(query.point) != len(r) + 1:
        raise DomainError("query point dimension must be s+1")
    res = admissible_residues(k, r, query.cls)
    if not res.residues:
        return 0.0
    x0 = query.point
    # core: the unique point with x = x0[0] on the first selected strip's
    # center line (chain position r_1 - 1)
    j = r[0] - 1
    pj = continuant(k, j)
    ppj = continuant_shifted(k, 2, j - 1)
    core_x = x0[0]
    core_y = (x0[1] + ppj * core_x) / pj
    # every later strip's center line must pass through the same core,
    # else the query point is off the configuration's surface
    acc = r[0]
    for i in range(1, len(r)):
        acc += r[i]
        if eval_linear(k, acc - 1, core_x, core_y) != x0[i + 1]:
            return 0.0
    # strict membership in the half-open region: the floor recurrence of
    # the core must reproduce k itself
    try:
        kk, _ = index_sequence_real(core_x, core_y, len(k))
    except DomainError:
        return 0.0
    if kk != tuple(k):
        return 0.0
    sp = strip_polygon(k, r, x0)
    pref = layer_prefactor(query.cls, paper_constant)
    return float(pref * res.multiplicity * area(sp.poly) / 4)


@dataclass
class EmpiricalHistogram:
    """B x B grid of scaled consecutive-pair counts over [0, 1]^2."""

    Q: int
    cls: ProgressionClass
    bins: list
    total: int

    @property
    def B(self) -> int:
        return len(self.bins)

    def to_json(self):
        return {"q": self.Q, "c": self.cls.c, "d": self.cls.d,
                "bins": self.bins, "total": self.total}

    @staticmethod
    def from_json(obj) -> "EmpiricalHistogram":
        return EmpiricalHistogram(obj["q"], ProgressionClass(obj["c"], obj["d"]),
                                  obj["bins"], obj["total"])


def empirical_histogram(Q: int, cls: ProgressionClass, B: int) -> EmpiricalHistogram:
    """Bin (q0/Q, q1/Q) for all consecutive pairs of F^Q(c,d)."""
    if Q < cls.d:
        raise DomainError("Q must be >= d")
    if B < 1:
        raise DomainError("B must be >= 1")
    bins = [[0] * B for _ in range(B)]
    total = 0
    prev = None
    for f in farey_filtered(Q, cls):
        if prev is not None:
            i = min(prev * B // Q, B - 1)
            j = min(f.q * B // Q, B - 1)
            bins[i][j] += 1
            total += 1
        prev = f.q
    return EmpiricalHistogram(Q, cls, bins, total)


@dataclass(frozen=True)
class CompareReport:
    l1_interior: float
    max_ratio_deviation: float
    theoretical_mass: float
    full_bins: int
    bins: int

    def to_json(self):
        return {"l1_interior": self.l1_interior,
                "max_ratio_deviation": self.max_ratio_deviation,
                "theoretical_mass": self.theoretical_mass,
                "full_bins": self.full_bins, "bins": self.bins}


def _bin_rect(i, j, B):
    return (Fraction(i, B), Fraction(j, B), Fraction(i + 1, B),
            Fraction(j + 1, B))


def _clip_to_rect(poly, x0, y0, x1, y1):
    out = clip(poly, HalfPlane(1, 0, x1))
    if out.is_empty:
        return out
    out = clip(out, HalfPlane(-1, 0, -x0))
    if out.is_empty:
        return out
    out = clip(out, HalfPlane(0, 1, y1))
    if out.is_empty:
        return out
    return clip(out, HalfPlane(0, -1, -y0))


def compare(hist: EmpiricalHistogram, cls: ProgressionClass, max_order: int,
            *, kernel_cap: int = DENSITY_KERNEL_CAP,
            paper_constant: bool = False, tiles=None) -> CompareReport:
    """Empirical histogram against exactly integrated theoretical masses.

    Theoretical bin masses come from clipping every tile against every bin
    rectangle and weighting by the tile's layer; they are normalized by the
    captured mass.  The L1 distance runs over bins fully inside the support
    (covered completely by at least one mosaic layer), so the reported gap
    reflects truncation and finite-Q effects only.
    """
    if tiles is None:
        tiles = _tiles_for(cls, max_order, kernel_cap)
    B = hist.B
    pref = layer_prefactor(cls, paper_constant)
    theo = [[Fraction(0)] * B for _ in range(B)]
    bin_area = Fraction(1, B * B)

    # group tiles into mosaics per kernel for the support coverage test
    kernels = sorted(set(t.kernel for t in tiles))
    coverage = {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OrphanWarning)
        mosaic_groups = []
        for kern in kernels:
            group = [t for t in tiles if t.kernel == kern]
            ms, orphans = assemble_with_orphans(group, kern)
            mosaic_groups.extend(ms)

    def bins_overlapping(poly):
        x0, y0, x1, y1 = poly.bbox()
        i0 = max(0, int(x0 * B))
        i1 = min(B - 1, int(x1 * B) if x1 * B != int(x1 * B) else int(x1 * B) - 1)
        j0 = max(0, int(y0 * B))
        j1 = min(B - 1, int(y1 * B) if y1 * B != int(y1 * B) else int(y1 * B) - 1)
        return i0, i1, j0, j1

    for t in tiles:
        w = pref * t.multiplicity / t.kernel
        i0, i1, j0, j1 = bins_overlapping(t.poly)
        for i in range(i0, i1 + 1):
            for j in range(j0, j1 + 1):
                x0, y0, x1, y1 = _bin_rect(i, j, B)
                piece = _clip_to_rect(t.poly, x0, y0, x1, y1)
                if not piece.is_empty:
                    theo[i][j] += w * area(piece)

    full = [[False] * B for _ in range(B)]
    for m in mosaic_groups:
        cov = {}
        for t in m.tiles:
            i0, i1, j0, j1 = bins_overlapping(t.poly)
            for i in range(i0, i1 + 1):
                for j in range(j0, j1 + 1):
                    x0, y0, x1, y1 = _bin_rect(i, j, B)
                    piece = _clip_to_rect(t.poly, x0, y0, x1, y1)
                    if not piece.is_empty:
                        cov[(i, j)] = cov.get((i, j), Fraction(0)) + area(piece)
        for (i, j), a in cov.items():
            if a == bin_area:
                full[i][j] = True

    mass = sum(sum(row) for row in theo)
    l1 = 0.0
    max_dev = 0.0
    nfull = 0
    for i in range(B):
        for j in range(B):
            if not full[i][j]:
                continue
            nfull += 1
            emp = hist.bins[i][j] / hist.total
            th = float(theo[i][j] / mass) if mass else 0.0
            l1 += abs(emp - th)
            if th > 0:
                max_dev = max(max_dev, abs(emp / th - 1.0))
    return CompareReport(l1, max_dev, float(mass), nfull, B * B)


def _tile_int_forms(t: Tile):
    """Integer edge forms: (q0, q1) is in the tile at scale Q iff
    a*q0 + b*q1 <= c*Q for every (a, b, c)."""
    verts = t.poly.vertices
    hps = []
    for i in range(len(verts)):
        u, v = verts[i], verts[(i + 1) % len(verts)]
        a = v.y - u.y
        b = u.x - v.x
        cc = a * u.x + b * u.y
        m = math.lcm(a.denominator, b.denominator, cc.denominator)
        hps.append((a.numerator * (m // a.denominator),
                    b.numerator * (m // b.denominator),
                    cc.numerator * (m // cc.denominator)))
    return hps


def support_membership(Q: int, cls: ProgressionClass, max_order: int, *,
                       kernel_cap: int = DENSITY_KERNEL_CAP,
                       tiles=None, support_polygons=None,
                       grid: int = 64) -> list:
    """Scaled consecutive pairs outside the closed support, with their
    (float) distances to the nearest support polygon.

    The default support is the closed union of all enumerated tiles, which
    is exact for classes whose mosaics are finite within max_order.  When a
    mosaic is infinite (so any truncation leaves notches at its accumulation
    corners), pass support_polygons: the known limit outlines (convex
    polygons) to test against instead.
    """
    if support_polygons is not None:
        class _Shim:
            def __init__(self, poly):
                self.poly = poly
        forms = [(_tile_int_forms(_Shim(p)), _Shim(p))
                 for p in support_polygons]
    else:
        if tiles is None:
            tiles = _tiles_for(cls, max_order, kernel_cap)
        forms = [(_tile_int_forms(t), t) for t in
                 sorted(tiles, key=lambda t: -area(t.poly))]
    # grid index over [0,1]^2 so each point probes few tiles
    cells = [[[] for _ in range(grid)] for _ in range(grid)]
    for rec, (hps, t) in enumerate(forms):
        x0, y0, x1, y1 = t.poly.bbox()
        i0 = max(0, min(grid - 1, int(x0 * grid)))
        i1 = max(0, min(grid - 1, int(x1 * grid)))
        j0 = max(0, min(grid - 1, int(y0 * grid)))
        j1 = max(0, min(grid - 1, int(y1 * grid)))
        for i in range(i0, i1 + 1):
            for j in range(j0, j1 + 1):
                cells[i][j].append(rec)
    violations = []
    prev = None
    for f in farey_filtered(Q, cls):
        if prev is not None:
            q0, q1 = prev, f.q
            ci = min(q0 * grid // Q, grid - 1)
            cj = min(q1 * grid // Q, grid - 1)
            inside = False
            for rec in cells[ci][cj]:
                hps = forms[rec][0]
                if all(a * q0 + b * q1 <= c * Q for (a, b, c) in hps):
                    inside = True
                    break
            if not inside:
                violations.append(
                    (q0, q1, _distance_to_tiles(q0, q1, Q, forms)))
        prev = f.q
    return violations


def _distance_to_tiles(q0, q1, Q, forms) -> float:
    px, py = q0 / Q, q1 / Q
    best = float("inf")
    for _hps, t in forms:
        for v in t.poly.vertices:
            dx = px - float(v.x)
            dy = py - float(v.y)
            dd = math.hypot(dx, dy)
            if dd < best:
                best = dd
    return best
