"""Exact intersection of cevians by conjugate elimination.

To solve ``a0 + u*d0 = a1 + v*d1`` for real ``u, v`` we multiply both sides by
``conj(d1)``. The ``v`` term becomes ``v*|d1|^2``, which is real, so the
imaginary parts alone give ``u``. Multiplying by ``conj(d0)`` instead gives
``v``. Both are computed and the two parameterisations are checked to land on
the same point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateIntersectionError
from .exact import GaussianRational
from .triangle import PointTriple, Triangle, cevian_feet


@dataclass(frozen=True)
class LineParametric:
    anchor: GaussianRational
    direction: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "anchor", GaussianRational.coerce(self.anchor))
        object.__setattr__(self, "direction", GaussianRational.coerce(self.direction))
        if not self.direction:
            raise ValueError("line direction must be nonzero")

    @classmethod
    def through(cls, start, end) -> LineParametric:
        start = GaussianRational.coerce(start)
        return cls(start, GaussianRational.coerce(end) - start)

    def at(self, s) -> GaussianRational:
        return self.anchor + self.direction * Fraction(s)


@dataclass(frozen=True)
class CevianParams:
    u: Fraction
    v: Fraction
    point: GaussianRational


def conjugate_eliminate(l0: LineParametric, l1: LineParametric) -> CevianParams:
    """Crossing of two lines; ``u`` runs along ``l0`` and ``v`` along ``l1``."""
    denom = (l0.direction * l1.direction.conjugate()).im
    if denom == 0:
        raise DegenerateIntersectionError(
            f"lines through {l0.anchor} and {l1.anchor} are parallel"
        )
    gap = l1.anchor - l0.anchor
    u = (gap * l1.direction.conjugate()).im / denom
    v = ((-gap) * l0.direction.conjugate()).im / (l1.direction * l0.direction.conjugate()).im
    point = l0.at(u)
    # Cheap in exact arithmetic and catches any sign slip in the formulas above.
    if point != l1.at(v):
        raise AssertionError(f"substitution identity failed: {point} != {l1.at(v)}")
    return CevianParams(u, v, point)


@dataclass(frozen=True)
class InnerSolution:
    """Inner vertices plus the parameters of each pairwise solve.

    ``alpha`` solves p->P against q->Q, ``beta`` q->Q against r->R and
    ``gamma`` p->P against r->R; ``u`` is along the first line of each pair.
    """

    vertices: PointTriple
    alpha: CevianParams
    beta: CevianParams
    gamma: CevianParams

    @property
    def u(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha.u, self.beta.u, self.gamma.u)

    @property
    def v(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha.v, self.beta.v, self.gamma.v)


def solve_inner(tri: Triangle, t) -> InnerSolution:
    feet = cevian_feet(tri, t)
    from_p = LineParametric.through(tri.p, feet.P)
    from_q = LineParametric.through(tri.q, feet.Q)
    from_r = LineParametric.through(tri.r, feet.R)
    alpha = conjugate_eliminate(from_p, from_q)
    beta = conjugate_eliminate(from_q, from_r)
    gamma = conjugate_eliminate(from_p, from_r)
    return InnerSolution(PointTriple(alpha.point, beta.point, gamma.point), alpha, beta, gamma)


def inner_triangle(tri: Triangle, t) -> PointTriple:
    return solve_inner(tri, t).vertices
