"""Verification suites behind ``cevian verify``.

Each suite yields ``Check`` results rather than raising, so the CLI can
print one PASS/FAIL line per check and choose the exit code.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import oracle, symbolic
from .corpus import DEFAULT_SEED, random_corpus, random_point, random_rational, random_triangle
from .ratio import area_ratio, invariance_check
from .render import render_scene
from .scene import SceneError, SceneSpec, format_scene, parse_scene
from .solver import solve_inner
from .triangle import BUILTINS, CANONICAL

ONE_SEVENTH = Fraction(1, 7)
THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f"  ({self.detail})" if self.detail else "")


def core_suite(count: int = 200, seed: int = DEFAULT_SEED) -> Iterator[Check]:
    corpus = random_corpus(count, seed)
    bad = [tri for tri in corpus if area_ratio(tri, THIRD) != ONE_SEVENTH]
    yield Check(f"one-seventh ratio on {count} random triangles", not bad, f"{len(bad)} failures")

    sol = solve_inner(CANONICAL, THIRD)
    expected = (Fraction(3, 7), Fraction(3, 7), Fraction(6, 7))
    yield Check("solver u = 3/7, 3/7, 6/7 on canonical", sol.u == expected,
                "u=[" + ",".join(map(str, sol.u)) + "]")

    bad_u = [tri for tri in corpus[:50] if solve_inner(tri, THIRD).u != expected]
    yield Check("solver u-values on random triangles", not bad_u, f"{len(bad_u)} failures")


def symbolic_suite() -> Iterator[Check]:
    for finding in symbolic.verify_collinearity(include_control=True).findings:
        label = "" if finding.expect_zero else " is nonzero (control)"
        yield Check(f"symbolic {finding.name}{label}", finding.passed, f"residual {finding.residual}")
    for finding in symbolic.verify_one_seventh().findings:
        yield Check(f"symbolic {finding.name}", finding.passed, f"residual {finding.residual}")


def oracle_suite(count: int = 200, seed: int = DEFAULT_SEED) -> Iterator[Check]:
    corpus = random_corpus(count, seed)
    worst_area = worst_vertex = worst_height = 0.0
    for tri in corpus:
        p, q, r = (complex(v) for v in tri.vertices)
        exact_area = float(tri.signed_area())
        float_area = oracle.area_base_height(p, q, r)
        worst_area = max(worst_area, abs(float_area - exact_area) / abs(exact_area))

        exact_inner = solve_inner(tri, THIRD).vertices
        for crossing, z in zip(oracle.inner_triangle(p, q, r, 1 / 3), exact_inner):
            worst_vertex = max(
                worst_vertex,
                abs(crossing.point.x - float(z.re)),
                abs(crossing.point.y - float(z.im)),
            )

        theta = oracle.angle_theta(p, q, r)
        if 0 < theta < math.pi:
            h1 = oracle.height(p, q, r).h
            h2 = oracle.height_via_sine(p, q, r)
            worst_height = max(worst_height, abs(h1 - h2) / abs(h1))
    yield Check("oracle area vs exact (rel 1e-9)", worst_area <= 1e-9, f"worst {worst_area:.3g}")
    yield Check("oracle inner vertices vs exact (abs 1e-9)", worst_vertex <= 1e-9, f"worst {worst_vertex:.3g}")
    yield Check("oracle dual-path height (rel 1e-12)", worst_height <= 1e-12, f"worst {worst_height:.3g}")

    for name, tri in BUILTINS.items():
        p, q, r = (complex(v) for v in tri.vertices)
        got = oracle.area_ratio(p, q, r, 0.25)
        yield Check(f"oracle ratio at t=1/4 on {name} matches 4/13",
                    abs(got - 4 / 13) <= 1e-9, f"{got!r}")


def invariance_suite(count: int = 50, seed: int = DEFAULT_SEED) -> Iterator[Check]:
    rng = random.Random(seed + 1)
    failures = []
    for _ in range(count):
        tri = random_triangle(rng, 1000)
        report = invariance_check(tri, THIRD, random_point(rng, 1000), random_rational(rng, 50))
        if not report.passed:
            failures.append(report.failures())
    yield Check(f"invariance under translation and rotation ({count} cases)", not failures,
                f"{len(failures)} failures")


def parser_suite(count: int = 100, seed: int = DEFAULT_SEED) -> Iterator[Check]:
    rng = random.Random(seed + 2)
    bad = 0
    for _ in range(count):
        spec = SceneSpec(random_triangle(rng, 1000), random_rational(rng, 1000) % 1)
        if parse_scene(format_scene(spec)) != spec:
            bad += 1
    yield Check(f"scene round-trip ({count} specs)", bad == 0, f"{bad} failures")
    try:
        parse_scene("p=0\nq=1\nr=2\nt=1/3")
        rejected = False
    except SceneError:
        rejected = True
    yield Check("collinear scene rejected", rejected)


def render_suite() -> Iterator[Check]:
    spec = SceneSpec(CANONICAL, THIRD)
    first, second = render_scene(spec), render_scene(spec)
    yield Check("render deterministic", first == second)
    half = render_scene(SceneSpec(CANONICAL, Fraction(1, 2)))
    yield Check("render t=1/2 has no inner polygon", "<polygon" not in half)


SUITES: dict[str, Callable[..., Iterator[Check]]] = {
    "core": core_suite,
    "symbolic": symbolic_suite,
    "oracle": oracle_suite,
    "invariance": invariance_suite,
    "parser": parser_suite,
    "render": render_suite,
}
