"""Deterministic SVG diagrams of a triangle, its cevians and the inner triangle.

World coordinates are mapped to the screen with one uniform scale and a
flipped y axis. The mapping is done in exact rationals and every number is
printed with six fractional digits (round half even), so identical scenes
give identical bytes on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import GaussianRational, format_rational
from .scene import SceneSpec
from .triangle import CevianFeet, PointTriple

DEFAULT_WIDTH = 800
DEFAULT_HEIGHT = 600
DEFAULT_MARGIN = 40
LABEL_OFFSET = 16

PALETTE = {
    "background": "#ffffff",
    "outer": "#1f3b73",
    "cevian": "#c0392b",
    "inner_fill": "#f5b041",
    "inner_stroke": "#9c640c",
    "label": "#111111",
    "centroid": "#c0392b",
}


def fmt(value: Fraction | int) -> str:
    n = round(Fraction(value) * 1_000_000)
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 1_000_000}.{n % 1_000_000:06d}"


@dataclass(frozen=True)
class RenderPlan:
    width: int
    height: int
    margin: int
    scale: Fraction
    origin_x: Fraction
    origin_y: Fraction
    labels: bool

    @classmethod
    def for_scene(cls, spec: SceneSpec) -> RenderPlan:
        width = spec.option_int("width", DEFAULT_WIDTH)
        height = spec.option_int("height", DEFAULT_HEIGHT)
        margin = spec.option_int("margin", DEFAULT_MARGIN)
        inner_w, inner_h = width - 2 * margin, height - 2 * margin
        if inner_w <= 0 or inner_h <= 0:
            raise ValueError(f"margin {margin} leaves no room in a {width}x{height} viewport")
        verts = spec.triangle.vertices
        xmin, xmax = min(v.re for v in verts), max(v.re for v in verts)
        ymin, ymax = min(v.im for v in verts), max(v.im for v in verts)
        # a non-degenerate triangle always has positive extent in both axes
        scale = min(Fraction(inner_w) / (xmax - xmin), Fraction(inner_h) / (ymax - ymin))
        origin_x = margin + (inner_w - scale * (xmax - xmin)) / 2 - scale * xmin
        origin_y = margin + (inner_h - scale * (ymax - ymin)) / 2 - scale * ymin
        return cls(width, height, margin, scale, origin_x, origin_y, spec.labels)

    def to_screen(self, z: GaussianRational) -> tuple[Fraction, Fraction]:
        return (
            self.origin_x + self.scale * z.re,
            self.height - (self.origin_y + self.scale * z.im),
        )


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _label(plan: RenderPlan, z, center, text: str, size: int) -> str:
    x, y = plan.to_screen(z)
    cx, cy = plan.to_screen(center)
    x += LABEL_OFFSET * _sign(x - cx)
    y += LABEL_OFFSET * _sign(y - cy)
    return (
        f'    <text x="{fmt(x)}" y="{fmt(y)}" font-size="{size}" '
        f'text-anchor="middle" dominant-baseline="middle">{text}</text>'
    )


def _line(plan: RenderPlan, a, b) -> str:
    (x1, y1), (x2, y2) = plan.to_screen(a), plan.to_screen(b)
    return f'    <line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}"/>'


def render_svg(spec: SceneSpec, feet: CevianFeet, inner: PointTriple) -> str:
    plan = RenderPlan.for_scene(spec)
    tri = spec.triangle
    p, q, r = tri.vertices
    centroid = tri.centroid()
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{plan.width}" height="{plan.height}" viewBox="0 0 {plan.width} {plan.height}">',
        f"  <title>Cevians at t={format_rational(spec.t)}</title>",
        f'  <rect x="0" y="0" width="{plan.width}" height="{plan.height}" fill="{PALETTE["background"]}"/>',
    ]

    degenerate = inner.signed_area() == 0
    if not degenerate:
        pts = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in map(plan.to_screen, inner))
        out.append(
            f'  <polygon id="inner" points="{pts}" fill="{PALETTE["inner_fill"]}" '
            f'fill-opacity="0.6" stroke="{PALETTE["inner_stroke"]}" stroke-width="1.5"/>'
        )

    out.append(f'  <g id="outer" stroke="{PALETTE["outer"]}" stroke-width="2.5" stroke-linecap="round">')
    out += [_line(plan, a, b) for a, b in ((p, q), (q, r), (r, p))]
    out.append("  </g>")

    out.append(f'  <g id="cevians" stroke="{PALETTE["cevian"]}" stroke-width="1.5" stroke-dasharray="6 4">')
    out += [_line(plan, a, b) for a, b in ((p, feet.P), (q, feet.Q), (r, feet.R))]
    out.append("  </g>")

    if degenerate and inner.is_coincident():
        cx, cy = plan.to_screen(inner.alpha)
        out.append(f'  <circle id="centroid" cx="{fmt(cx)}" cy="{fmt(cy)}" r="4" fill="{PALETTE["centroid"]}"/>')

    if plan.labels:
        out.append(f'  <g id="labels" font-family="serif" fill="{PALETTE["label"]}">')
        for z, name in ((p, "p"), (q, "q"), (r, "r"), (feet.P, "P"), (feet.Q, "Q"), (feet.R, "R")):
            out.append(_label(plan, z, centroid, name, 18))
        if inner.is_coincident():
            out.append(_label(plan, inner.alpha, centroid + GaussianRational(0, -1), "α=β=γ", 14))
        else:
            inner_center = (inner.alpha + inner.beta + inner.gamma) / 3
            for z, name in zip(inner, ("α", "β", "γ")):
                out.append(_label(plan, z, inner_center, name, 14))
        out.append("  </g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_scene(spec: SceneSpec) -> str:
    from .solver import inner_triangle
    from .triangle import cevian_feet

    return render_svg(spec, cevian_feet(spec.triangle, spec.t), inner_triangle(spec.triangle, spec.t))
