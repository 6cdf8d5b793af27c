from fractions import Fraction

import pytest
from hypothesis import given, settings

from cevian import oracle
from cevian.exact import GaussianRational as G
from cevian.ratio import (
    RatioRecord,
    area_ratio,
    invariance_check,
    ratio_sweep,
    records_to_csv,
    sweep_grid,
)
from cevian.triangle import CANONICAL, SKEW, Triangle, scale

from conftest import fractions_in_unit, gaussians, small_rationals, triangles

GRID = [Fraction(k, 20) for k in range(21)]


@pytest.mark.parametrize("tri", [CANONICAL, SKEW])
def test_spot_values(tri):
    assert area_ratio(tri, Fraction(1, 3)) == Fraction(1, 7)
    assert area_ratio(tri, Fraction(1, 2)) == 0
    assert area_ratio(tri, 0) == 1


@pytest.mark.parametrize("tri", [CANONICAL, SKEW])
def test_quarter_reproduced_by_float_oracle_then_exact(tri):
    p, q, r = (complex(v) for v in tri.vertices)
    assert oracle.area_ratio(p, q, r, 0.25) == pytest.approx(4 / 13, abs=1e-9)
    assert area_ratio(tri, Fraction(1, 4)) == Fraction(4, 13)


def test_symmetry_spot_check():
    assert area_ratio(CANONICAL, Fraction(1, 4)) == area_ratio(CANONICAL, Fraction(3, 4))


@pytest.mark.parametrize("t", GRID)
def test_symmetry_on_grid(t):
    assert area_ratio(CANONICAL, t) == area_ratio(CANONICAL, 1 - t)


def test_sweep_example():
    records = ratio_sweep(0, Fraction(1, 2), 2)
    assert records == [
        RatioRecord(Fraction(0), Fraction(1)),
        RatioRecord(Fraction(1, 4), Fraction(4, 13)),
        RatioRecord(Fraction(1, 2), Fraction(0)),
    ]


def test_sweep_is_triangle_independent():
    assert ratio_sweep(0, 1, 20) == ratio_sweep(0, 1, 20, reference=SKEW)


def test_sweep_matches_solver_path():
    for rec in ratio_sweep(0, 1, 20):
        assert rec.ratio == area_ratio(SKEW, rec.t)


@pytest.mark.parametrize(
    "args",
    [(Fraction(1, 3), Fraction(1, 3), 4), (1, 0, 4), (0, 1, 0), (0, 1, -2), (0, 1, 1.5)],
)
def test_sweep_rejects_bad_ranges(args):
    with pytest.raises(ValueError):
        ratio_sweep(*args)


def test_grid_is_even_and_inclusive():
    assert sweep_grid(Fraction(1, 5), Fraction(3, 5), 4) == [
        Fraction(1, 5), Fraction(3, 10), Fraction(2, 5), Fraction(1, 2), Fraction(3, 5)
    ]


def test_sweep_sorted_by_t():
    records = ratio_sweep(0, 1, 10)
    assert [r.t for r in records] == sorted(r.t for r in records)


@settings(max_examples=40)
@given(triangles(), fractions_in_unit)
def test_ratio_bounded(tri, t):
    assert 0 <= area_ratio(tri, t) <= 1


@settings(max_examples=40)
@given(triangles(), fractions_in_unit, gaussians.filter(bool))
def test_ratio_invariant_under_complex_scaling(tri, t, k):
    assert area_ratio(scale(tri, k), t) == area_ratio(tri, t)


@settings(max_examples=30)
@given(triangles())
def test_one_seventh_everywhere(tri):
    assert area_ratio(tri, Fraction(1, 3)) == Fraction(1, 7)


def test_csv_format():
    text = records_to_csv(ratio_sweep(0, Fraction(1, 2), 2))
    assert text == "t,ratio\n0,1\n1/4,4/13\n1/2,0\n"
    text = records_to_csv([RatioRecord(Fraction(1, 3), Fraction(1, 7))], decimal=True)
    assert text == "t,ratio,ratio_decimal\n1/3,1/7,0.142857142857\n"


def test_csv_marks_extrapolated_rows():
    text = records_to_csv(ratio_sweep(Fraction(1, 2), Fraction(3, 2), 2))
    lines = text.splitlines()
    assert lines[0] == "t,ratio,extrapolated"
    assert lines[1].endswith(",0") and lines[3].endswith(",1")


def test_invariance_canonical_example():
    report = invariance_check(CANONICAL, Fraction(1, 3), G(5, -2), Fraction(1, 2))
    assert report.passed, report.failures()
    assert report.ratio_before == Fraction(1, 7)
    assert len(report.checks) == 9


def test_invariance_identity_transform():
    report = invariance_check(SKEW, Fraction(2, 5), 0, 0)
    assert report.passed


@settings(max_examples=50)
@given(triangles(), fractions_in_unit, gaussians, small_rationals)
def test_invariance_campaign(tri, t, w, s):
    assert invariance_check(tri, t, w, s).passed


def test_clockwise_triangle_ratio():
    assert area_ratio(Triangle(0, 7j, 7), Fraction(1, 3)) == Fraction(1, 7)
