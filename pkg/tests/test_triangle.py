from fractions import Fraction

import pytest
from hypothesis import given

from cevian.errors import DegenerateTriangleError
from cevian.exact import GaussianRational as G
from cevian.triangle import (
    CANONICAL,
    SKEW,
    Triangle,
    cevian_feet,
    edge_point,
    pythagorean_unit,
    rotate,
    scale,
    signed_area,
    translate,
)

from conftest import fractions_in_unit, gaussians, rationals, small_rationals, triangles


def collinear(a, b, c):
    return signed_area(a, b, c) == 0


@pytest.mark.parametrize(
    "pts, area",
    [((0, 2, 2j), 2), ((0, 7, 7j), Fraction(49, 2)), ((0, 2j, 2), -2), ((0, 6, 1 + 5j), 15)],
)
def test_signed_area_examples(pts, area):
    assert signed_area(*pts) == area


def test_collinear_triangle_rejected():
    with pytest.raises(DegenerateTriangleError):
        Triangle(0, 1, 2)
    with pytest.raises(ValueError):
        Triangle(1j, 1j, 5)


@given(gaussians, gaussians, gaussians)
def test_signed_area_antisymmetric(a, b, c):
    s = signed_area(a, b, c)
    assert signed_area(b, a, c) == -s
    assert signed_area(a, c, b) == -s
    assert signed_area(c, b, a) == -s
    assert signed_area(b, c, a) == s


def test_edge_point_examples():
    p, q = G(1, 2), G(-3, 5)
    assert edge_point(p, q, 0) == p
    assert edge_point(p, q, 1) == q
    assert edge_point(7j, 7, Fraction(1, 3)) == G(Fraction(7, 3), Fraction(14, 3))


@given(gaussians, gaussians, rationals)
def test_edge_point_reflection(a, b, t):
    assert edge_point(a, b, t) == edge_point(b, a, 1 - t)


def test_cevian_feet_canonical():
    feet = cevian_feet(CANONICAL, Fraction(1, 3))
    assert feet.P == G(Fraction(7, 3), Fraction(14, 3))
    assert feet.Q == G(0, Fraction(7, 3))
    assert feet.R == G(Fraction(14, 3), 0)
    # the R = p + (2/3)(q - p) form
    assert feet.R == edge_point(CANONICAL.p, CANONICAL.q, Fraction(2, 3))


@pytest.mark.parametrize("tri", [CANONICAL, SKEW])
def test_cevian_feet_endpoints(tri):
    f0 = cevian_feet(tri, 0)
    assert (f0.P, f0.Q, f0.R) == (tri.r, tri.p, tri.q)
    f1 = cevian_feet(tri, 1)
    assert (f1.P, f1.Q, f1.R) == (tri.q, tri.r, tri.p)


@given(triangles(), rationals)
def test_feet_lie_on_their_edges(tri, t):
    feet = cevian_feet(tri, t)
    assert collinear(feet.P, tri.r, tri.q)
    assert collinear(feet.Q, tri.p, tri.r)
    assert collinear(feet.R, tri.q, tri.p)


def test_translate_examples():
    moved = translate(CANONICAL, -7)
    assert moved.vertices == (G(-7), G(0), G(-7, 7))
    assert translate(CANONICAL, 0) == CANONICAL


@given(triangles(), gaussians)
def test_translate_preserves_area(tri, w):
    assert translate(tri, w).signed_area() == tri.signed_area()


@pytest.mark.parametrize(
    "s, unit",
    [(0, G(1, 0)), (1, G(0, 1)), (Fraction(1, 2), G(Fraction(3, 5), Fraction(4, 5)))],
)
def test_pythagorean_unit_examples(s, unit):
    assert pythagorean_unit(s) == unit


@given(rationals)
def test_pythagorean_unit_has_unit_norm(s):
    assert pythagorean_unit(s).norm_sq() == 1


def test_rotate_examples():
    assert rotate(CANONICAL, 1) == CANONICAL
    assert rotate(CANONICAL, 1j).vertices == (G(0), G(0, 7), G(-7))
    assert rotate(CANONICAL, G(Fraction(3, 5), Fraction(4, 5))).signed_area() == CANONICAL.signed_area()


def test_rotate_rejects_non_unit():
    with pytest.raises(ValueError):
        rotate(CANONICAL, 2)


@given(triangles(), small_rationals)
def test_rotate_preserves_area(tri, s):
    assert rotate(tri, pythagorean_unit(s)).signed_area() == tri.signed_area()


@given(triangles(), gaussians.filter(bool))
def test_complex_scaling_multiplies_area_by_norm(tri, k):
    assert scale(tri, k).signed_area() == tri.signed_area() * k.norm_sq()


def test_clockwise_triangles_allowed():
    cw = Triangle(0, 7j, 7)
    assert cw.signed_area() == Fraction(-49, 2)
    assert cw.area() == Fraction(49, 2)


@given(triangles(), fractions_in_unit)
def test_centroid_is_average(tri, t):
    assert tri.centroid() * 3 == tri.p + tri.q + tri.r
