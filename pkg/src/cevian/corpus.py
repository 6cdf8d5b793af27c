"""Seeded pseudo-random triangles for the verification suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .exact import GaussianRational
from .triangle import Triangle

DEFAULT_SEED = 20240607


def random_rational(rng: random.Random, bound: int = 1000) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_point(rng: random.Random, bound: int = 1000) -> GaussianRational:
    return GaussianRational(random_rational(rng, bound), random_rational(rng, bound))


def random_triangle(rng: random.Random, bound: int = 1000) -> Triangle:
    """Rejection-sample until the three points are not collinear."""
    while True:
        pts = [random_point(rng, bound) for _ in range(3)]
        try:
            return Triangle(*pts)
        except ValueError:
            continue


def random_corpus(n: int, seed: int = DEFAULT_SEED, bound: int = 1000) -> list[Triangle]:
    rng = random.Random(seed)
    return [random_triangle(rng, bound) for _ in range(n)]
