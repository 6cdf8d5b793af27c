"""Independent floating-point path used to cross-check the exact kernel.

It follows the trigonometric route to the area (argument of an edge ratio,
height from the angle, half base times height), solves line crossings as a
real 2x2 system, and places triangles in canonical position approximately.
No exact types are used here apart from accepting them as input.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DegenerateIntersectionError, OracleDomainError


class FloatPoint(NamedTuple):
    x: float
    y: float

    @classmethod
    def of(cls, value) -> FloatPoint:
        if isinstance(value, FloatPoint):
            return value
        if isinstance(value, tuple):
            return cls(float(value[0]), float(value[1]))
        z = complex(value)
        return cls(z.real, z.imag)

    def __sub__(self, other):
        return FloatPoint(self.x - other.x, self.y - other.y)

    def __add__(self, other):
        return FloatPoint(self.x + other.x, self.y + other.y)

    def scaled(self, k: float) -> FloatPoint:
        return FloatPoint(self.x * k, self.y * k)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


class HeightComputation(NamedTuple):
    theta: float
    h: float
    base: float


def _parts(p: FloatPoint, q: FloatPoint, r: FloatPoint) -> tuple[float, float]:
    """Real and imaginary parts of ``(r - p) / (q - p)`` times ``|q - p|^2``."""
    a, b = q.x - p.x, q.y - p.y
    x, y = r.x - p.x, r.y - p.y
    return x * a + b * y, a * y - b * x


def angle_theta(p, q, r) -> float:
    """Arg((r - p) / (q - p)) in (-pi, pi]."""
    p, q, r = FloatPoint.of(p), FloatPoint.of(q), FloatPoint.of(r)
    if q == p or r == p:
        raise OracleDomainError("angle undefined for coincident points")
    re, im = _parts(p, q, r)
    return math.atan2(im, re)


def angle_theta_arctan(p, q, r) -> float:
    """The bare ``arctan(im / re)`` form, which only sees quadrants I and IV.

    Differs from :func:`angle_theta` whenever the angle at ``p`` is obtuse.
    """
    p, q, r = FloatPoint.of(p), FloatPoint.of(q), FloatPoint.of(r)
    re, im = _parts(p, q, r)
    if re == 0:
        return math.copysign(math.pi / 2, im)
    return math.atan(im / re)


def arctan_form_agrees(p, q, r) -> bool:
    return math.isclose(angle_theta(p, q, r), angle_theta_arctan(p, q, r), abs_tol=1e-15)


def height(p, q, r) -> HeightComputation:
    """Signed height of ``r`` over the base ``p -> q``; positive when counter-clockwise."""
    p, q, r = FloatPoint.of(p), FloatPoint.of(q), FloatPoint.of(r)
    base = (q - p).norm()
    if base == 0:
        raise OracleDomainError("zero-length base")
    if r == p:
        return HeightComputation(0.0, 0.0, base)
    _, im = _parts(p, q, r)
    return HeightComputation(angle_theta(p, q, r), im / base, base)


def height_via_sine(p, q, r) -> float:
    """|r - p| * sin(theta); the second route to the same height."""
    p, q, r = FloatPoint.of(p), FloatPoint.of(q), FloatPoint.of(r)
    return (r - p).norm() * math.sin(angle_theta(p, q, r))


def height_via_arctan_identity(p, q, r) -> float:
    """|r - p| * z / sqrt(1 + z^2) with z = tan(theta).

    This is sin(arctan z), valid only while the angle at ``p`` is acute.
    """
    p, q, r = FloatPoint.of(p), FloatPoint.of(q), FloatPoint.of(r)
    re, im = _parts(p, q, r)
    z = im / re
    return (r - p).norm() * z / math.sqrt(1 + z * z)


def area_base_height(p, q, r) -> float:
    hc = height(p, q, r)
    return 0.5 * hc.base * hc.h


def shoelace(p, q, r) -> float:
    p, q, r = FloatPoint.of(p), FloatPoint.of(q), FloatPoint.of(r)
    return 0.5 * ((q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y))


class Crossing(NamedTuple):
    u: float
    v: float
    point: FloatPoint


def intersect_real_2x2(a0, d0, a1, d1) -> Crossing:
    """Solve ``a0 + u*d0 = a1 + v*d1`` by Cramer's rule."""
    a0, d0, a1, d1 = (FloatPoint.of(z) for z in (a0, d0, a1, d1))
    # [d0.x  -d1.x] [u]   [a1.x - a0.x]
    # [d0.y  -d1.y] [v] = [a1.y - a0.y]
    det = -d0.x * d1.y + d1.x * d0.y
    scale = d0.norm() * d1.norm()
    if scale == 0 or abs(det) <= 1e-12 * scale:
        raise DegenerateIntersectionError("near-singular 2x2 system")
    bx, by = a1.x - a0.x, a1.y - a0.y
    u = (-bx * d1.y + d1.x * by) / det
    v = (d0.x * by - d0.y * bx) / det
    return Crossing(u, v, a0 + d0.scaled(u))


def cevian_feet(p, q, r, t: float) -> tuple[FloatPoint, FloatPoint, FloatPoint]:
    p, q, r = FloatPoint.of(p), FloatPoint.of(q), FloatPoint.of(r)
    t = float(t)
    return r + (q - r).scaled(t), p + (r - p).scaled(t), q + (p - q).scaled(t)


def inner_triangle(p, q, r, t: float) -> tuple[Crossing, Crossing, Crossing]:
    p, q, r = FloatPoint.of(p), FloatPoint.of(q), FloatPoint.of(r)
    P, Q, R = cevian_feet(p, q, r, t)
    alpha = intersect_real_2x2(p, P - p, q, Q - q)
    beta = intersect_real_2x2(q, Q - q, r, R - r)
    gamma = intersect_real_2x2(p, P - p, r, R - r)
    return alpha, beta, gamma


def area_ratio(p, q, r, t: float) -> float:
    alpha, beta, gamma = inner_triangle(p, q, r, t)
    return abs(shoelace(alpha.point, beta.point, gamma.point)) / abs(shoelace(p, q, r))


def canonical_placement(p, q, r) -> tuple[FloatPoint, FloatPoint, FloatPoint]:
    """Move ``p`` to the origin and ``q`` onto the positive real axis."""
    p, q, r = FloatPoint.of(p), FloatPoint.of(q), FloatPoint.of(r)
    if shoelace(p, q, r) == 0:
        raise OracleDomainError("degenerate triangle")
    edge = complex(*(q - p))
    unit = edge.conjugate() / abs(edge)

    def place(z: FloatPoint) -> FloatPoint:
        w = complex(*(z - p)) * unit
        return FloatPoint(w.real, w.imag)

    return FloatPoint(0.0, 0.0), FloatPoint(abs(edge), 0.0), place(r)
