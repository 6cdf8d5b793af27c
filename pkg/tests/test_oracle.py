import cmath
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cevian import oracle
from cevian.errors import DegenerateIntersectionError, OracleDomainError
from cevian.oracle import FloatPoint

coords = st.floats(min_value=-1000, max_value=1000, allow_nan=False)
points = st.builds(FloatPoint, coords, coords)


def well_shaped(p, q, r):
    a = abs(oracle.shoelace(p, q, r))
    edges = [(q - p).norm(), (r - q).norm(), (p - r).norm()]
    return max(edges) > 1e-3 and a > 1e-3 * max(edges) ** 2


@pytest.mark.parametrize(
    "tri, theta",
    [((0, 7, 7j), math.pi / 2), ((0, 1, 1 + 1j), math.pi / 4)],
)
def test_angle_examples(tri, theta):
    assert oracle.angle_theta(*tri) == pytest.approx(theta, rel=1e-15)


def test_angle_matches_direct_argument():
    assert oracle.angle_theta(0, 6, 1 + 5j) == pytest.approx(cmath.phase((1 + 5j) / 6), rel=1e-15)


def test_angle_domain_errors():
    with pytest.raises(OracleDomainError):
        oracle.angle_theta(1, 1, 2j)
    with pytest.raises(OracleDomainError):
        oracle.height(1, 1, 2j)


def test_arctan_form_loses_obtuse_quadrant():
    acute = (0, 6, 1 + 5j)
    obtuse = (0, 6, -4 + 1j)
    assert oracle.arctan_form_agrees(*acute)
    assert not oracle.arctan_form_agrees(*obtuse)
    assert oracle.angle_theta(*obtuse) > math.pi / 2
    assert oracle.angle_theta_arctan(*obtuse) < 0


def test_height_examples():
    assert oracle.height(0, 7, 7j).h == pytest.approx(7, rel=1e-15)
    assert oracle.height(0, 2, 1 + 1j).h == pytest.approx(1, rel=1e-15)
    assert oracle.height(0, 7j, 7).h < 0


@given(points, points, points)
def test_height_dual_path(p, q, r):
    assume(well_shaped(p, q, r))
    theta = oracle.angle_theta(p, q, r)
    assume(0 < theta < math.pi)
    hc = oracle.height(p, q, r)
    assert hc.h == pytest.approx(oracle.height_via_sine(p, q, r), rel=1e-12)
    assert abs(hc.h) <= (r - p).norm() * (1 + 1e-15)


@given(points, points, points)
def test_arctan_identity_height_when_acute(p, q, r):
    assume(well_shaped(p, q, r))
    theta = oracle.angle_theta(p, q, r)
    assume(0 < theta < math.pi / 2 - 1e-6)
    assert oracle.height_via_arctan_identity(p, q, r) == pytest.approx(oracle.height(p, q, r).h, rel=1e-12)


@pytest.mark.parametrize(
    "tri, area",
    [((0, 7, 7j), 24.5), ((0, 2, 2j), 2.0), ((0, 6, 1 + 5j), 15.0)],
)
def test_area_base_height_examples(tri, area):
    assert oracle.area_base_height(*tri) == pytest.approx(area, rel=1e-15)


def test_intersect_alpha_and_gamma_systems():
    P, Q, R = oracle.cevian_feet(0, 7, 7j, 1 / 3)
    p, q, r = FloatPoint(0, 0), FloatPoint(7, 0), FloatPoint(0, 7)
    alpha = oracle.intersect_real_2x2(p, P - p, q, Q - q)
    assert alpha.u == pytest.approx(0.428571428571, abs=1e-12)
    gamma = oracle.intersect_real_2x2(p, P - p, r, R - r)
    assert gamma.u == pytest.approx(0.857142857142, abs=1e-12)


def test_intersect_axes():
    u, v, point = oracle.intersect_real_2x2(0, 1, 1j, -1j)
    assert (u, v) == (0, 1)
    assert point == (0, 0)


def test_intersect_near_singular():
    with pytest.raises(DegenerateIntersectionError):
        oracle.intersect_real_2x2(0, 1 + 1j, 1, 1 + 1j + 1e-14)


def test_intersect_threshold_is_scale_relative():
    # tiny but well-conditioned directions still solve
    crossing = oracle.intersect_real_2x2(0, 1e-9, 1e-9j, -1e-9j)
    assert crossing.u == pytest.approx(0, abs=1e-12)


@given(points, points, points, points)
def test_intersect_satisfies_both_lines(a0, d0, a1, d1):
    assume(d0.norm() > 1e-3 and d1.norm() > 1e-3)
    det = d0.x * d1.y - d0.y * d1.x
    assume(abs(det) > 1e-2 * d0.norm() * d1.norm())
    c = oracle.intersect_real_2x2(a0, d0, a1, d1)
    other = a1 + d1.scaled(c.v)
    assert c.point.x == pytest.approx(other.x, abs=1e-9)
    assert c.point.y == pytest.approx(other.y, abs=1e-9)


def test_canonical_placement_examples():
    assert oracle.canonical_placement(0, 7, 7j) == (FloatPoint(0, 0), FloatPoint(7, 0), FloatPoint(0, 7))
    moved = oracle.canonical_placement(3 + 2j, 10 + 2j, 3 + 9j)
    assert moved == (FloatPoint(0, 0), FloatPoint(7, 0), FloatPoint(0, 7))
    tri = (1 + 1j, 4 + 5j, -2 + 3j)
    placed = oracle.canonical_placement(*tri)
    assert oracle.shoelace(*placed) == pytest.approx(oracle.shoelace(*tri), rel=1e-12)
    assert placed[1].x == pytest.approx(5, rel=1e-15)


def test_canonical_placement_rejects_degenerate():
    with pytest.raises(OracleDomainError):
        oracle.canonical_placement(0, 1, 2)


@given(points, points, points)
def test_canonical_placement_preserves_area(p, q, r):
    assume(well_shaped(p, q, r))
    placed = oracle.canonical_placement(p, q, r)
    assert placed[1].y == 0 and placed[1].x > 0
    assert oracle.shoelace(*placed) == pytest.approx(oracle.shoelace(p, q, r), rel=1e-12)
