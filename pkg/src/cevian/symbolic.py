"""Polynomial identities in the canonical-triangle symbols ``b, x, y``.

The canonical triangle is ``p = 0``, ``q = b``, ``r = x + iy``. The inner
vertices at t = 1/3 are taken as the explicit coordinates

    alpha = (3/7) P,   beta = q + (3/7)(Q - q),   gamma = (6/7) P

and the module proves, as exact polynomial identities, that each lies on
both of its cevians and that seven times the inner area equals the outer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import DegreeOverflowError
from .exact import format_rational

VARIABLES = ("b", "x", "y")
MAX_DEGREE = 8

Monomial = tuple[int, int, int]


class Polynomial:
    """Sparse polynomial over the rationals in ``b, x, y``.

    Terms map exponent triples to nonzero Fraction coefficients. Instances
    are immutable; equality is term-wise.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None) -> None:
        clean = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != 3 or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono!r}")
            if sum(mono) > MAX_DEGREE:
                raise DegreeOverflowError(f"degree {sum(mono)} exceeds cap {MAX_DEGREE}")
            coeff = Fraction(coeff)
            if coeff:
                clean[tuple(mono)] = clean.get(tuple(mono), 0) + coeff
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> Polynomial:
        mono = [0, 0, 0]
        mono[VARIABLES.index(name)] = 1
        return cls({tuple(mono): 1})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    @staticmethod
    def _lift(other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, k) -> Polynomial:
        k = Fraction(k)
        return Polynomial({m: c * k for m, c in self._terms.items()})

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def evaluate(self, b=0, x=0, y=0) -> Fraction:
        vals = (Fraction(b), Fraction(x), Fraction(y))
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for v, e in zip(vals, mono):
                term *= v**e
            total += term
        return total

    def ordered_terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Graded lexicographic: higher total degree first, then by b, x, y."""
        return iter(sorted(self._terms.items(), key=lambda mc: (-sum(mc[0]), tuple(-e for e in mc[0]))))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.ordered_terms():
            factors = []
            for name, e in zip(VARIABLES, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(mag)] + factors)
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self})"


B, X, Y = (Polynomial.var(n) for n in VARIABLES)
ZERO = Polynomial()


@dataclass(frozen=True)
class SymbolicPoint:
    re: Polynomial
    im: Polynomial

    def __add__(self, other: SymbolicPoint) -> SymbolicPoint:
        return SymbolicPoint(self.re + other.re, self.im + other.im)

    def __sub__(self, other: SymbolicPoint) -> SymbolicPoint:
        return SymbolicPoint(self.re - other.re, self.im - other.im)

    def scale(self, k) -> SymbolicPoint:
        return SymbolicPoint(self.re.scale(k), self.im.scale(k))

    def evaluate(self, b, x, y) -> tuple[Fraction, Fraction]:
        return (self.re.evaluate(b, x, y), self.im.evaluate(b, x, y))


def det3(a: SymbolicPoint, b: SymbolicPoint, c: SymbolicPoint) -> Polynomial:
    """Determinant of the rows ``(re, im, 1)``; twice the signed area."""
    return a.re * (b.im - c.im) - a.im * (b.re - c.re) + (b.re * c.im - c.re * b.im)


def edge_point(start: SymbolicPoint, end: SymbolicPoint, t) -> SymbolicPoint:
    return start + (end - start).scale(t)


def canonical_vertices() -> dict[str, SymbolicPoint]:
    return {
        "p": SymbolicPoint(ZERO, ZERO),
        "q": SymbolicPoint(B, ZERO),
        "r": SymbolicPoint(X, Y),
    }


def canonical_feet(t=Fraction(1, 3)) -> dict[str, SymbolicPoint]:
    v = canonical_vertices()
    return {
        "P": edge_point(v["r"], v["q"], t),
        "Q": edge_point(v["p"], v["r"], t),
        "R": edge_point(v["q"], v["p"], t),
    }


def symbolic_inner_vertices() -> dict[str, SymbolicPoint]:
    v = canonical_vertices()
    f = canonical_feet()
    return {
        "alpha": edge_point(v["p"], f["P"], Fraction(3, 7)),
        "beta": edge_point(v["q"], f["Q"], Fraction(3, 7)),
        "gamma": edge_point(v["p"], f["P"], Fraction(6, 7)),
    }


@dataclass(frozen=True)
class Finding:
    name: str
    residual: Polynomial
    expect_zero: bool = True

    @property
    def passed(self) -> bool:
        return self.residual.is_zero() == self.expect_zero

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        expect = "" if self.expect_zero else " (expected nonzero)"
        return f"{status}  {self.name}{expect}: residual = {self.residual}"


@dataclass
class ProofReport:
    findings: list[Finding]

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.findings)

    def __getitem__(self, name: str) -> Finding:
        for f in self.findings:
            if f.name == name:
                return f
        raise KeyError(name)

    def render(self) -> str:
        return "\n".join(f.render() for f in self.findings)


# (inner vertex, cevian start, cevian foot); each inner vertex sits on two cevians
INCIDENCES = (
    ("alpha", "p", "P"),
    ("alpha", "q", "Q"),
    ("beta", "q", "Q"),
    ("beta", "r", "R"),
    ("gamma", "p", "P"),
    ("gamma", "r", "R"),
)


def verify_collinearity(include_control: bool = False) -> ProofReport:
    pts = {**canonical_vertices(), **canonical_feet(), **symbolic_inner_vertices()}
    findings = [
        Finding(f"det({a},{b},{c})", det3(pts[a], pts[b], pts[c]))
        for a, b, c in INCIDENCES
    ]
    if include_control:
        findings.append(
            Finding("det(alpha,r,R)", det3(pts["alpha"], pts["r"], pts["R"]), expect_zero=False)
        )
    return ProofReport(findings)


def doubled_inner_area() -> Polynomial:
    inner = symbolic_inner_vertices()
    return det3(inner["alpha"], inner["beta"], inner["gamma"])


def doubled_outer_area() -> Polynomial:
    v = canonical_vertices()
    return det3(v["p"], v["q"], v["r"])


def verify_one_seventh() -> ProofReport:
    outer = doubled_outer_area()
    inner = doubled_inner_area()
    return ProofReport(
        [
            Finding("2*A_outer - b*y", outer - B * Y),
            Finding("7*(2*A_inner) - 2*A_outer", inner.scale(7) - outer),
        ]
    )
