"""Triangles in the complex plane, signed areas, cevian feet and exact motions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateTriangleError
from .exact import GaussianRational, format_rational

G = GaussianRational


def signed_area(a, b, c) -> Fraction:
    """Half the determinant of the rows ``(x_i, y_i, 1)``.

    Positive for counter-clockwise order, zero exactly when collinear.
    """
    a, b, c = G.coerce(a), G.coerce(b), G.coerce(c)
    det = (
        a.re * (b.im - c.im)
        - a.im * (b.re - c.re)
        + (b.re * c.im - c.re * b.im)
    )
    return det / 2


def edge_point(start, end, t) -> GaussianRational:
    start, end = G.coerce(start), G.coerce(end)
    return start + (end - start) * Fraction(t)


@dataclass(frozen=True)
class Triangle:
    p: GaussianRational
    q: GaussianRational
    r: GaussianRational

    def __post_init__(self):
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, G.coerce(getattr(self, name)))
        if signed_area(self.p, self.q, self.r) == 0:
            raise DegenerateTriangleError(
                f"collinear vertices p={self.p} q={self.q} r={self.r}"
            )

    @classmethod
    def of(cls, p, q, r) -> Triangle:
        return cls(G.coerce(p), G.coerce(q), G.coerce(r))

    @property
    def vertices(self) -> tuple[GaussianRational, GaussianRational, GaussianRational]:
        return (self.p, self.q, self.r)

    def signed_area(self) -> Fraction:
        return signed_area(self.p, self.q, self.r)

    def area(self) -> Fraction:
        return abs(self.signed_area())

    def centroid(self) -> GaussianRational:
        return (self.p + self.q + self.r) / 3


@dataclass(frozen=True)
class CevianFeet:
    P: GaussianRational
    Q: GaussianRational
    R: GaussianRational
    t: Fraction


@dataclass(frozen=True)
class PointTriple:
    """Inner vertices. May be collinear or coincident (e.g. at t = 1/2)."""

    alpha: GaussianRational
    beta: GaussianRational
    gamma: GaussianRational

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))

    def signed_area(self) -> Fraction:
        return signed_area(self.alpha, self.beta, self.gamma)

    def is_coincident(self) -> bool:
        return self.alpha == self.beta == self.gamma

    def __str__(self) -> str:
        return f"alpha={self.alpha} beta={self.beta} gamma={self.gamma}"


def cevian_feet(tri: Triangle, t) -> CevianFeet:
    # P on r->q, Q on p->r, R on q->p: each foot walks the edge in the same
    # rotational sense, so t = 1/3 gives R = p + (2/3)(q - p).
    t = Fraction(t)
    return CevianFeet(
        P=edge_point(tri.r, tri.q, t),
        Q=edge_point(tri.p, tri.r, t),
        R=edge_point(tri.q, tri.p, t),
        t=t,
    )


def translate(tri: Triangle, w) -> Triangle:
    w = G.coerce(w)
    return Triangle(tri.p + w, tri.q + w, tri.r + w)


def pythagorean_unit(s) -> GaussianRational:
    """The unit-modulus rational point ``((1 - s^2) + 2s i) / (1 + s^2)``."""
    s = Fraction(s)
    d = 1 + s * s
    return G((1 - s * s) / d, 2 * s / d)


def rotate(tri: Triangle, unit) -> Triangle:
    unit = G.coerce(unit)
    if unit.norm_sq() != 1:
        raise ValueError(
            f"rotation multiplier {unit} has squared modulus "
            f"{format_rational(unit.norm_sq())}, expected 1"
        )
    return Triangle(tri.p * unit, tri.q * unit, tri.r * unit)


def scale(tri: Triangle, k) -> Triangle:
    """Multiply every vertex by a nonzero complex ``k`` (rotation + dilation)."""
    k = G.coerce(k)
    if not k:
        raise ValueError("scale factor must be nonzero")
    return Triangle(tri.p * k, tri.q * k, tri.r * k)


CANONICAL = Triangle.of(0, 7, G(0, 7))
SKEW = Triangle.of(0, 6, G(1, 5))

BUILTINS = {"canonical": CANONICAL, "skew": SKEW}
