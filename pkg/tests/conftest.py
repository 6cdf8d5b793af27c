from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cevian.exact import GaussianRational
from cevian.triangle import Triangle, signed_area

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=20)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)


@st.composite
def triangles(draw, coords=rationals):
    pts = [GaussianRational(draw(coords), draw(coords)) for _ in range(3)]
    if pts[0] == pts[1]:
        pts[1] = pts[0] + 1
    if signed_area(*pts) == 0:
        # r - p is a real multiple of q - p; a quarter-turned copy pushes it off the line
        pts[2] = pts[2] + (pts[1] - pts[0]) * GaussianRational(0, 1)
    return Triangle(*pts)


fractions_in_unit = st.fractions(min_value=0, max_value=1, max_denominator=50)


@pytest.fixture
def third():
    return Fraction(1, 3)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if report.when != "call":
                continue
            props = dict(report.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {name}")
