# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled ratio kernel. Same contract as ``_kernel_py``.

Values stay Python ints (exactness needs unbounded precision); the gain is
from dropping interpreter dispatch around the integer operations.
"""


cdef inline object _cross(object ax, object ay, object bx, object by):
    return ax * by - ay * bx


cdef tuple _meet(object ax, object ay, object dx, object dy,
                 object bx, object by, object ex, object ey):
    cdef object w = _cross(dx, dy, ex, ey)
    if w == 0:
        raise ZeroDivisionError("parallel cevians")
    cdef object n = _cross(bx - ax, by - ay, ex, ey)
    return (ax * w + n * dx, ay * w + n * dy, w)


cpdef tuple inner_points(object px, object py, object qx, object qy,
                         object rx, object ry, object tn, object td):
    cdef object sp = td - tn
    cdef object Px = sp * rx + tn * qx
    cdef object Py = sp * ry + tn * qy
    cdef object Qx = sp * px + tn * rx
    cdef object Qy = sp * py + tn * ry
    cdef object Rx = sp * qx + tn * px
    cdef object Ry = sp * qy + tn * py
    px = td * px
    py = td * py
    qx = td * qx
    qy = td * qy
    rx = td * rx
    ry = td * ry
    cdef tuple alpha = _meet(px, py, Px - px, Py - py, qx, qy, Qx - qx, Qy - qy)
    cdef tuple beta = _meet(qx, qy, Qx - qx, Qy - qy, rx, ry, Rx - rx, Ry - ry)
    cdef tuple gamma = _meet(px, py, Px - px, Py - py, rx, ry, Rx - rx, Ry - ry)
    return (alpha, beta, gamma)


cpdef tuple inner_ratio(object px, object py, object qx, object qy,
                        object rx, object ry, object tn, object td):
    cdef object outer = _cross(qx - px, qy - py, rx - px, ry - py)
    if outer == 0:
        raise ZeroDivisionError("degenerate outer triangle")
    cdef tuple pts = inner_points(px, py, qx, qy, rx, ry, tn, td)
    x1, y1, w1 = pts[0]
    x2, y2, w2 = pts[1]
    x3, y3, w3 = pts[2]
    cdef object det = (
        x1 * (y2 * w3 - y3 * w2)
        - y1 * (x2 * w3 - x3 * w2)
        + w1 * (x2 * y3 - x3 * y2)
    )
    cdef object den = w1 * w2 * w3 * outer * td * td
    return (abs(det), abs(den))


def ratio_batch(triangles, tn, td):
    cdef list out = []
    for tri in triangles:
        out.append(inner_ratio(tri[0], tri[1], tri[2], tri[3], tri[4], tri[5], tn, td))
    return out


def sweep(px, py, qx, qy, rx, ry, ts):
    cdef list out = []
    for tn, td in ts:
        out.append(inner_ratio(px, py, qx, qy, rx, ry, tn, td))
    return out
