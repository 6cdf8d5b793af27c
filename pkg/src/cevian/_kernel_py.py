"""Pure-Python ratio kernel; the fallback when the compiled core is missing.

Works on an integer-scaled triangle and ``t = tn/td``. Everything is kept in
homogeneous integer coordinates so no gcd is taken until the caller builds
the final Fraction. Keep this file in lock-step with ``_kernel.pyx``.
"""


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _meet(ax, ay, dx, dy, bx, by, ex, ey):
    # a + u*d = b + v*e  ->  u = cross(b - a, e) / cross(d, e)
    w = _cross(dx, dy, ex, ey)
    if w == 0:
        raise ZeroDivisionError("parallel cevians")
    n = _cross(bx - ax, by - ay, ex, ey)
    return ax * w + n * dx, ay * w + n * dy, w


def inner_points(px, py, qx, qy, rx, ry, tn, td):
    """Homogeneous inner vertices ``(X, Y, W)`` of the triangle scaled by ``td``."""
    sp = td - tn
    # scaled vertices and feet
    Px, Py = sp * rx + tn * qx, sp * ry + tn * qy
    Qx, Qy = sp * px + tn * rx, sp * py + tn * ry
    Rx, Ry = sp * qx + tn * px, sp * qy + tn * py
    px, py, qx, qy, rx, ry = td * px, td * py, td * qx, td * qy, td * rx, td * ry
    alpha = _meet(px, py, Px - px, Py - py, qx, qy, Qx - qx, Qy - qy)
    beta = _meet(qx, qy, Qx - qx, Qy - qy, rx, ry, Rx - rx, Ry - ry)
    gamma = _meet(px, py, Px - px, Py - py, rx, ry, Rx - rx, Ry - ry)
    return alpha, beta, gamma


def inner_ratio(px, py, qx, qy, rx, ry, tn, td):
    """Unreduced ``(num, den)`` of |inner area| / |outer area|."""
    outer = _cross(qx - px, qy - py, rx - px, ry - py)
    if outer == 0:
        raise ZeroDivisionError("degenerate outer triangle")
    (x1, y1, w1), (x2, y2, w2), (x3, y3, w3) = inner_points(
        px, py, qx, qy, rx, ry, tn, td
    )
    det = (
        x1 * (y2 * w3 - y3 * w2)
        - y1 * (x2 * w3 - x3 * w2)
        + w1 * (x2 * y3 - x3 * y2)
    )
    den = w1 * w2 * w3 * outer * td * td
    return abs(det), abs(den)


def ratio_batch(triangles, tn, td):
    return [inner_ratio(*tri, tn, td) for tri in triangles]


def sweep(px, py, qx, qy, rx, ry, ts):
    return [inner_ratio(px, py, qx, qy, rx, ry, tn, td) for tn, td in ts]
