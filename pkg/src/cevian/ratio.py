"""Inner-to-outer area ratios, the general-fraction sweep and invariance checks."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, TextIO

from . import kernel
from .exact import GaussianRational, format_decimal, format_rational
from .solver import inner_triangle
from .triangle import CANONICAL, Triangle, pythagorean_unit, rotate, translate


def area_ratio(tri: Triangle, t) -> Fraction:
    """|area(inner)| / |area(tri)|, via the conjugate-elimination solver."""
    return abs(inner_triangle(tri, t).signed_area()) / tri.area()


def is_extrapolated(t) -> bool:
    return not 0 <= Fraction(t) <= 1


@dataclass(frozen=True, order=True)
class RatioRecord:
    t: Fraction
    ratio: Fraction

    @property
    def extrapolated(self) -> bool:
        return is_extrapolated(self.t)


def sweep_grid(t_min, t_max, steps: int) -> list[Fraction]:
    t_min, t_max = Fraction(t_min), Fraction(t_max)
    if not isinstance(steps, int) or steps < 1:
        raise ValueError(f"steps must be a positive integer, got {steps!r}")
    if not t_min < t_max:
        raise ValueError(
            f"empty range: from {format_rational(t_min)} to {format_rational(t_max)}"
        )
    width = t_max - t_min
    return [t_min + width * k / steps for k in range(steps + 1)]


def ratio_sweep(t_min, t_max, steps: int, reference: Triangle = CANONICAL) -> list[RatioRecord]:
    """Exact ratios on ``steps + 1`` evenly spaced t values, endpoints included.

    Runs on the fast kernel; the result does not depend on ``reference``.
    """
    grid = sweep_grid(t_min, t_max, steps)
    ratios = kernel.sweep(reference, grid)
    return [RatioRecord(t, r) for t, r in zip(grid, ratios)]


def write_csv(records: Sequence[RatioRecord], out: TextIO, decimal: bool = False) -> None:
    """Header ``t,ratio`` (plus ``ratio_decimal``), exact textual rationals.

    An ``extrapolated`` column (0/1) is appended only when some t lies
    outside [0, 1].
    """
    flag = any(rec.extrapolated for rec in records)
    header = ["t", "ratio"]
    if decimal:
        header.append("ratio_decimal")
    if flag:
        header.append("extrapolated")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        row = [format_rational(rec.t), format_rational(rec.ratio)]
        if decimal:
            row.append(format_decimal(rec.ratio, 12))
        if flag:
            row.append("1" if rec.extrapolated else "0")
        writer.writerow(row)


def records_to_csv(records: Sequence[RatioRecord], decimal: bool = False) -> str:
    buf = io.StringIO()
    write_csv(records, buf, decimal=decimal)
    return buf.getvalue()


@dataclass
class InvarianceReport:
    ratio_before: Fraction
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]


def invariance_check(tri: Triangle, t, w, s) -> InvarianceReport:
    """Compare areas, ratios and inner vertices before and after a motion.

    The motions are translation by ``w``, rotation by ``pythagorean_unit(s)``
    and their composition (translate, then rotate about the origin).
    """
    w = GaussianRational.coerce(w)
    unit = pythagorean_unit(s)
    inner = inner_triangle(tri, t)
    ratio = area_ratio(tri, t)
    report = InvarianceReport(ratio_before=ratio)

    motions = {
        "translate": (translate(tri, w), lambda z: z + w),
        "rotate": (rotate(tri, unit), lambda z: z * unit),
        "translate+rotate": (rotate(translate(tri, w), unit), lambda z: (z + w) * unit),
    }
    for name, (moved, point_map) in motions.items():
        report.checks[f"{name}: signed area"] = moved.signed_area() == tri.signed_area()
        report.checks[f"{name}: area ratio"] = area_ratio(moved, t) == ratio
        moved_inner = inner_triangle(moved, t)
        report.checks[f"{name}: inner vertices covariant"] = all(
            a == point_map(b) for a, b in zip(moved_inner, inner)
        )
    return report
