"""Pure-numpy fallback for the hot boundary-search kernel.

The quantity minimized is f(theta) = |x - p(theta)|^2 * |p(theta) - y|^2 with
p(theta) = r*(cos theta, sin theta), for x, y given in 2D coordinates of the
search plane relative to the sphere center.  Expanding the squared distances,

    |x - p|^2 = |x|^2 + r^2 - 2*r*(x_u cos theta + x_v sin theta),

so f is a product of two sinusoids in theta, cheap to evaluate on a grid.
The expanded form cancels badly when a point lies within ~1e-6 of the
circle, so the golden-section refinement re-evaluates f from coordinate
differences instead.
"""

import math

import numpy as np

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

BACKEND = "python"


def circle_min_product(xu, xv, yu, yv, r, grid=4096, refine_iters=72,
                       chunk=2048):
    """Minimize |x-p||p-y| over the circle of radius r about the origin.

    All point inputs are 1D float arrays (one entry per pair); ``r`` is a
    scalar or an array of matching length.  Returns ``(prod, theta)`` where
    ``prod`` is the minimal distance product (not squared) and ``theta`` the
    minimizing angle.  Coarse grid scan first, then a fixed number of
    golden-section steps inside the bracketing pair of cells.
    """
    xu = np.atleast_1d(np.asarray(xu, dtype=float))
    xv = np.atleast_1d(np.asarray(xv, dtype=float))
    yu = np.atleast_1d(np.asarray(yu, dtype=float))
    yv = np.atleast_1d(np.asarray(yv, dtype=float))
    n = xu.shape[0]
    r = np.broadcast_to(np.asarray(r, dtype=float), (n,))

    ax = xu * xu + xv * xv + r * r
    bx = 2.0 * r * xu
    cx = 2.0 * r * xv
    ay = yu * yu + yv * yv + r * r
    by = 2.0 * r * yu
    cy = 2.0 * r * yv

    thetas = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
    ct = np.cos(thetas)
    st = np.sin(thetas)

    best_theta = np.empty(n)
    cell = 2.0 * math.pi / grid
    for lo_i in range(0, n, chunk):
        hi_i = min(lo_i + chunk, n)
        s = slice(lo_i, hi_i)
        fx = ax[s, None] - bx[s, None] * ct - cx[s, None] * st
        fy = ay[s, None] - by[s, None] * ct - cy[s, None] * st
        k = np.argmin(fx * fy, axis=1)
        best_theta[s] = thetas[k]

    lo = best_theta - cell
    hi = best_theta + cell

    def f(theta):
        # difference form: the expanded sinusoid product cancels
        # catastrophically when a point is very close to the circle
        c = r * np.cos(theta)
        sn = r * np.sin(theta)
        dx = (xu - c) ** 2 + (xv - sn) ** 2
        dy = (yu - c) ** 2 + (yv - sn) ** 2
        return dx * dy

    c1 = hi - _INV_GOLDEN * (hi - lo)
    c2 = lo + _INV_GOLDEN * (hi - lo)
    f1 = f(c1)
    f2 = f(c2)
    for _ in range(refine_iters):
        take_left = f1 < f2
        hi = np.where(take_left, c2, hi)
        lo = np.where(take_left, lo, c1)
        c1 = hi - _INV_GOLDEN * (hi - lo)
        c2 = lo + _INV_GOLDEN * (hi - lo)
        f1 = f(c1)
        f2 = f(c2)

    theta = 0.5 * (lo + hi)
    prod = np.sqrt(np.maximum(f(theta), 0.0))
    return prod, theta
