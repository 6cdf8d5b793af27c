"""Fast exact area-ratio kernel.

Uses the compiled ``_kernel`` extension when it was built, otherwise the
pure-Python ``_kernel_py``. ``BACKEND`` names the one in use.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DegenerateIntersectionError, DegenerateTriangleError
from .triangle import Triangle

try:
    from . import _kernel as _impl

    BACKEND = "compiled"
except ImportError:  # extension not built
    from . import _kernel_py as _impl

    BACKEND = "python"


def integer_coords(tri: Triangle) -> tuple[int, ...]:
    """Vertex coordinates multiplied by their common denominator.

    The area ratio is invariant under uniform scaling, so the kernel can
    work on these integers directly.
    """
    coords = [c for v in tri.vertices for c in (v.re, v.im)]
    scale = lcm(*(c.denominator for c in coords))
    return tuple(c.numerator * (scale // c.denominator) for c in coords)


def _call(fn, *args):
    try:
        return fn(*args)
    except ZeroDivisionError as exc:
        if "outer" in str(exc):
            raise DegenerateTriangleError(str(exc)) from None
        raise DegenerateIntersectionError(str(exc)) from None


def area_ratio(tri: Triangle, t, impl=None) -> Fraction:
    impl = impl or _impl
    t = Fraction(t)
    num, den = _call(impl.inner_ratio, *integer_coords(tri), t.numerator, t.denominator)
    return Fraction(num, den)


def ratio_batch(triangles: Iterable[Triangle], t, impl=None) -> list[Fraction]:
    impl = impl or _impl
    t = Fraction(t)
    coords = [integer_coords(tri) for tri in triangles]
    pairs = _call(impl.ratio_batch, coords, t.numerator, t.denominator)
    return [Fraction(n, d) for n, d in pairs]


def sweep(tri: Triangle, ts: Sequence, impl=None) -> list[Fraction]:
    impl = impl or _impl
    fracs = [Fraction(t) for t in ts]
    pairs = _call(impl.sweep, *integer_coords(tri), [(t.numerator, t.denominator) for t in fracs])
    return [Fraction(n, d) for n, d in pairs]
