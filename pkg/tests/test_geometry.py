import json
import random
from fractions import Fraction as F

import pytest
from oracles import (halfplane_intersection, point_in_polygon_float,
                     random_convex_polygon)

from fareymosaics.errors import GeometryError, OverlapError
from fareymosaics.geometry import (ConvexPolygon, HalfPlane, Incidence,
                                   RatPoint, affine_image, area, clip,
                                   locate, parse_rational, rational_str,
                                   union_outline)

T = ConvexPolygon([(0, 1), (1, 0), (1, 1)])
UNIT_SQUARE = ConvexPolygon([(0, 0), (1, 0), (1, 1), (0, 1)])


class TestClip:
    def test_half_square(self):
        got = clip(UNIT_SQUARE, HalfPlane(1, 1, 1))
        assert got == ConvexPolygon([(0, 0), (1, 0), (0, 1)])

    def test_identity_case(self):
        assert clip(T, HalfPlane(1, 0, 1)) == T

    def test_farey_triangle_strip(self):
        # T with 2y - x >= 1; oracle: brute-force intersection of the
        # constraint lines, which gives (0,1),(1,1),(1/3,2/3)
        got = clip(T, HalfPlane(1, -2, -1))
        oracle = halfplane_intersection(
            [(0, 1, 1), (1, 0, 1), (-1, -1, -1), (1, -2, -1)])
        assert got == ConvexPolygon(oracle)
        assert got == ConvexPolygon([(0, 1), (F(1, 3), F(2, 3)), (1, 1)])

    def test_empty_result(self):
        assert clip(T, HalfPlane(0, 1, -1)).is_empty

    def test_degenerate_is_empty(self):
        # touching along the corner only: zero area collapses to empty
        got = clip(UNIT_SQUARE, HalfPlane(1, 1, 0))
        assert got.is_empty

    def test_idempotent(self):
        rng = random.Random(7)
        for _ in range(60):
            poly = random_convex_polygon(rng)
            hp = HalfPlane(F(rng.randint(-5, 5)), F(rng.randint(-5, 5)),
                           F(rng.randint(-8, 8))) if rng.random() < 0.9 else \
                HalfPlane(1, 0, 0)
            if hp.a == 0 and hp.b == 0:
                continue
            once = clip(poly, hp)
            assert clip(once, hp) == once

    def test_area_additive_under_complement(self):
        rng = random.Random(11)
        for _ in range(60):
            poly = random_convex_polygon(rng)
            a, b = rng.randint(-4, 4), rng.randint(-4, 4)
            if (a, b) == (0, 0):
                a = 1
            hp = HalfPlane(a, b, rng.randint(-6, 6))
            assert area(clip(poly, hp)) + area(clip(poly, hp.complement())) \
                == area(poly)


class TestArea:
    def test_farey_triangle(self):
        assert area(T) == F(1, 2)

    def test_unit_square(self):
        assert area(UNIT_SQUARE) == 1

    def test_clipped_triangle(self):
        # shoelace by hand: (0,1),(1/3,2/3),(1,1) -> 1/6
        assert area(ConvexPolygon([(0, 1), (F(1, 3), F(2, 3)), (1, 1)])) \
            == F(1, 6)

    def test_empty(self):
        assert area(ConvexPolygon(())) == 0


class TestAffineImage:
    def test_identity(self):
        assert affine_image(T, 1, 0) == T

    def test_choice_map_example(self):
        quad = ConvexPolygon([(F(1, 2), F(1, 2)), (F(3, 5), F(2, 5)),
                              (1, F(1, 2)), (1, F(2, 3))])
        img = affine_image(quad, 3, 1)
        assert img == ConvexPolygon(
            [(F(1, 2), 1), (F(3, 5), F(3, 5)), (1, F(1, 2)), (1, 1)])

    def test_area_scaling_random(self):
        rng = random.Random(3)
        for _ in range(1000):
            poly = random_convex_polygon(rng)
            P = rng.randint(1, 50)
            Pp = rng.randint(-10, 10)
            assert area(affine_image(poly, P, Pp)) == P * area(poly)

    def test_requires_positive_determinant(self):
        with pytest.raises(GeometryError):
            affine_image(T, 0, 1)


class TestPolygonValidation:
    def test_rejects_clockwise(self):
        with pytest.raises(GeometryError):
            ConvexPolygon([(0, 0), (0, 1), (1, 1), (1, 0)])

    def test_rejects_collinear(self):
        with pytest.raises(GeometryError):
            ConvexPolygon([(0, 0), (F(1, 2), 0), (1, 0), (1, 1)])

    def test_rejects_repeats(self):
        with pytest.raises(GeometryError):
            ConvexPolygon([(0, 0), (1, 0), (1, 0), (0, 1)])

    def test_equality_rotation_invariant(self):
        assert ConvexPolygon([(0, 1), (1, 0), (1, 1)]) == \
            ConvexPolygon([(1, 1), (0, 1), (1, 0)])


class TestUnionOutline:
    def test_single_tile(self):
        out = union_outline([T])
        assert len(out.loops) == 1
        assert set(out.loops[0]) == set(T.vertices)

    def test_two_squares_shared_edge(self):
        s2 = ConvexPolygon([(1, 0), (2, 0), (2, 1), (1, 1)])
        out = union_outline([UNIT_SQUARE, s2])
        assert len(out.loops) == 1
        assert set(out.loops[0]) == {RatPoint.of(0, 0), RatPoint.of(2, 0),
                                     RatPoint.of(2, 1), RatPoint.of(0, 1)}
        assert out.area() == 2

    def test_corner_touch_gives_two_loops(self):
        s2 = ConvexPolygon([(1, 1), (2, 1), (2, 2), (1, 2)])
        out = union_outline([UNIT_SQUARE, s2])
        assert len(out.loops) == 2
        assert out.area() == 2

    def test_partition_reproduces_boundary(self):
        # split the unit square into a 3x3 grid of cells
        cells = []
        for i in range(3):
            for j in range(3):
                cells.append(ConvexPolygon([
                    (F(i, 3), F(j, 3)), (F(i + 1, 3), F(j, 3)),
                    (F(i + 1, 3), F(j + 1, 3)), (F(i, 3), F(j + 1, 3))]))
        out = union_outline(cells)
        assert len(out.loops) == 1
        assert set(out.loops[0]) == set(UNIT_SQUARE.vertices)
        assert out.area() == 1

    def test_partition_of_triangle_by_chord(self):
        left = clip(T, HalfPlane(1, 0, F(3, 4)))
        right = clip(T, HalfPlane(-1, 0, -F(3, 4)))
        out = union_outline([left, right])
        assert len(out.loops) == 1
        assert set(out.loops[0]) == set(T.vertices)

    def test_overlap_detected(self):
        shifted = ConvexPolygon([(F(1, 2), 0), (F(3, 2), 0),
                                 (F(3, 2), 1), (F(1, 2), 1)])
        with pytest.raises(OverlapError):
            union_outline([UNIT_SQUARE, shifted])

    def test_hole(self):
        # ring of 8 cells around a missing center -> outer loop plus hole
        cells = []
        for i in range(3):
            for j in range(3):
                if (i, j) == (1, 1):
                    continue
                cells.append(ConvexPolygon([
                    (F(i, 3), F(j, 3)), (F(i + 1, 3), F(j, 3)),
                    (F(i + 1, 3), F(j + 1, 3)), (F(i, 3), F(j + 1, 3))]))
        out = union_outline(cells)
        assert len(out.outer_loops()) == 1
        assert len(out.holes()) == 1
        assert out.area() == F(8, 9)


class TestLocate:
    def test_interior(self):
        assert locate(T, RatPoint.of(F(1, 2), F(3, 4))).kind == \
            Incidence.INTERIOR

    def test_edge(self):
        assert locate(T, RatPoint.of(F(1, 2), F(1, 2))).kind == Incidence.EDGE

    def test_vertex_directions(self):
        loc = locate(T, RatPoint.of(1, 1))
        assert loc.kind == Incidence.VERTEX
        assert set(loc.directions) == {(F(-1), F(0)), (F(0), F(-1))}

    def test_outside(self):
        assert locate(T, RatPoint.of(F(1, 10), F(1, 10))).kind == \
            Incidence.OUTSIDE

    def test_matches_float_raycasting(self):
        rng = random.Random(23)
        polys = [random_convex_polygon(rng) for _ in range(20)]
        checked = 0
        while checked < 10 ** 4:
            poly = polys[checked % len(polys)]
            p = RatPoint(F(rng.randint(-170, 170), 41),
                         F(rng.randint(-170, 170), 41))
            loc = locate(poly, p)
            if loc.kind in (Incidence.EDGE, Incidence.VERTEX):
                continue      # oracle is only reliable away from boundaries
            assert (loc.kind == Incidence.INTERIOR) == \
                point_in_polygon_float(poly, float(p.x), float(p.y))
            checked += 1

    def test_outline_locate(self):
        s2 = ConvexPolygon([(1, 0), (2, 0), (2, 1), (1, 1)])
        out = union_outline([UNIT_SQUARE, s2])
        assert locate(out, RatPoint.of(F(1, 2), F(1, 2))).kind == \
            Incidence.INTERIOR
        assert locate(out, RatPoint.of(1, F(1, 2))).kind == Incidence.INTERIOR
        assert locate(out, RatPoint.of(F(5, 2), F(1, 2))).kind == \
            Incidence.OUTSIDE
        assert locate(out, RatPoint.of(2, F(1, 2))).kind == Incidence.EDGE
        assert locate(out, RatPoint.of(0, 0)).kind == Incidence.VERTEX


class TestSerialization:
    def test_rational_strings(self):
        assert rational_str(F(2, 7)) == "2/7"
        assert rational_str(F(3, 1)) == "3"
        assert parse_rational("2/7") == F(2, 7)
        assert parse_rational("5") == F(5)

    def test_point_and_polygon_json(self):
        p = RatPoint.of(F(1, 3), 1)
        assert p.to_json() == ["1/3", "1"]
        js = json.dumps(T.to_json())
        assert json.loads(js) == [["0", "1"], ["1", "0"], ["1", "1"]]
