"""Exact cevian-triangle geometry in the complex plane.

Build the inner triangle cut out by three cevians drawn a fraction ``t``
along each edge, and check that at ``t = 1/3`` its area is exactly one
seventh of the outer triangle.
"""

from .errors import (
    CevianError,
    DegenerateIntersectionError,
    DegenerateTriangleError,
    DegreeOverflowError,
    OracleDomainError,
)
from .exact import GaussianRational, Rational, format_rational, parse_gaussian, parse_rational, rational_make
from .kernel import BACKEND as KERNEL_BACKEND
from .ratio import RatioRecord, area_ratio, invariance_check, ratio_sweep
from .scene import ParseDiagnostic, SceneError, SceneSpec, format_scene, parse_scene
from .solver import CevianParams, LineParametric, conjugate_eliminate, inner_triangle, solve_inner
from .triangle import (
    CANONICAL,
    SKEW,
    CevianFeet,
    PointTriple,
    Triangle,
    cevian_feet,
    edge_point,
    pythagorean_unit,
    rotate,
    scale,
    signed_area,
    translate,
)

__version__ = "0.1.0"
