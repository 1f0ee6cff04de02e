# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernel: boundary product minimization on a circle.

Same contract as kernels._ref.circle_min_product; see that module for the
derivation of the objective and the reason the refinement uses coordinate
differences rather than the expanded sinusoid product.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt, M_PI

cnp.import_array()

cdef double _INV_GOLDEN = (sqrt(5.0) - 1.0) / 2.0

BACKEND = "compiled"


cdef inline double _f(double theta, double ri, double xu, double xv,
                      double yu, double yv) nogil:
    # difference form: cancellation-safe when a point hugs the circle
    cdef double pc = ri * cos(theta)
    cdef double ps = ri * sin(theta)
    cdef double dx = (xu - pc) * (xu - pc) + (xv - ps) * (xv - ps)
    cdef double dy = (yu - pc) * (yu - pc) + (yv - ps) * (yv - ps)
    return dx * dy


def circle_min_product(xu, xv, yu, yv, r, int grid=4096, int refine_iters=72,
                       int chunk=2048):
    """Minimize |x-p||p-y| over the circle of radius r about the origin.

    Returns ``(prod, theta)`` arrays; grid scan plus golden-section
    refinement in the bracketing cells, matching the python fallback.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xu_a = np.atleast_1d(
        np.ascontiguousarray(xu, dtype=np.float64))
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xv_a = np.atleast_1d(
        np.ascontiguousarray(xv, dtype=np.float64))
    cdef cnp.ndarray[cnp.float64_t, ndim=1] yu_a = np.atleast_1d(
        np.ascontiguousarray(yu, dtype=np.float64))
    cdef cnp.ndarray[cnp.float64_t, ndim=1] yv_a = np.atleast_1d(
        np.ascontiguousarray(yv, dtype=np.float64))
    cdef Py_ssize_t n = xu_a.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] r_a = np.ascontiguousarray(
        np.broadcast_to(np.asarray(r, dtype=np.float64), (n,)))

    cdef cnp.ndarray[cnp.float64_t, ndim=1] ct = np.cos(
        np.linspace(0.0, 2.0 * M_PI, grid, endpoint=False))
    cdef cnp.ndarray[cnp.float64_t, ndim=1] st = np.sin(
        np.linspace(0.0, 2.0 * M_PI, grid, endpoint=False))

    cdef cnp.ndarray[cnp.float64_t, ndim=1] prod = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] theta_out = np.empty(n)

    cdef Py_ssize_t i, j, best_j
    cdef double ax, bx, cx, ay, by, cy, ri
    cdef double fv, best_f, cell, lo, hi, c1, c2, f1, f2, theta
    cdef int it

    cell = 2.0 * M_PI / grid
    with nogil:
        for i in range(n):
            ri = r_a[i]
            ax = xu_a[i] * xu_a[i] + xv_a[i] * xv_a[i] + ri * ri
            bx = 2.0 * ri * xu_a[i]
            cx = 2.0 * ri * xv_a[i]
            ay = yu_a[i] * yu_a[i] + yv_a[i] * yv_a[i] + ri * ri
            by = 2.0 * ri * yu_a[i]
            cy = 2.0 * ri * yv_a[i]

            best_j = 0
            best_f = (ax - bx * ct[0] - cx * st[0]) * (ay - by * ct[0] - cy * st[0])
            for j in range(1, grid):
                fv = (ax - bx * ct[j] - cx * st[j]) * (ay - by * ct[j] - cy * st[j])
                if fv < best_f:
                    best_f = fv
                    best_j = j

            lo = best_j * cell - cell
            hi = best_j * cell + cell
            c1 = hi - _INV_GOLDEN * (hi - lo)
            c2 = lo + _INV_GOLDEN * (hi - lo)
            f1 = _f(c1, ri, xu_a[i], xv_a[i], yu_a[i], yv_a[i])
            f2 = _f(c2, ri, xu_a[i], xv_a[i], yu_a[i], yv_a[i])
            for it in range(refine_iters):
                if f1 < f2:
                    hi = c2
                else:
                    lo = c1
                c1 = hi - _INV_GOLDEN * (hi - lo)
                c2 = lo + _INV_GOLDEN * (hi - lo)
                f1 = _f(c1, ri, xu_a[i], xv_a[i], yu_a[i], yv_a[i])
                f2 = _f(c2, ri, xu_a[i], xv_a[i], yu_a[i], yv_a[i])

            theta = 0.5 * (lo + hi)
            fv = _f(theta, ri, xu_a[i], xv_a[i], yu_a[i], yv_a[i])
            if fv < 0.0:
                fv = 0.0
            prod[i] = sqrt(fv)
            theta_out[i] = theta

    return prod, theta_out
