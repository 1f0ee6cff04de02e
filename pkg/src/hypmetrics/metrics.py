"""Hyperbolic-type metric evaluators and Cassinian oval tracing.

Three metrics on a proper subdomain D of R^n:

  * scale-invariant Cassinian:  log(1 + |x-y| / sqrt(inf_p |x-p||p-y|))
  * Gromov-hyperbolizing u:     2 log((|x-y| + max boundary dists) / sqrt(prod))
  * distance ratio:             log(1 + |x-y| / min boundary dist)

with the sup/inf taken over boundary points p.
"""

import math
from dataclasses import dataclass

import numpy as np

from hypmetrics.errors import (
    DegenerateFoci,
    OrderViolation,
    RangeViolation,
)
from hypmetrics.geom import (
    Ball,
    Domain,
    PuncturedSpace,
    SampledDomain,
    as_point,
)


@dataclass(frozen=True)
class EvalResult:
    value: float
    witness: object  # extremal boundary point, or None
    method: str  # closed_form | plane_search | sampled
    err_bound: float

    def to_dict(self):
        return {
            "value": self.value,
            "witness": None if self.witness is None else list(self.witness),
            "method": self.method,
            "err_bound": self.err_bound,
        }


def _product_method(d):
    if isinstance(d, SampledDomain):
        return "sampled"
    if isinstance(d, PuncturedSpace):
        return "closed_form"
    return "plane_search"


def _dist_method(d):
    return "sampled" if isinstance(d, SampledDomain) else "closed_form"


def _product_err_bound(method, dxy, m):
    # roundoff on the optimized product, propagated through log(1 + d/sqrt(m))
    if method == "closed_form":
        return 0.0
    dm = 1e-13 * m
    return dxy * dm / (2.0 * m * (math.sqrt(m) + dxy))


def tau_tilde(d, x, y):
    """Scale-invariant Cassinian metric between two interior points."""
    x = d.check_point(x)
    y = d.check_point(y)
    method = _product_method(d)
    if np.array_equal(x, y):
        return EvalResult(0.0, None, method, 0.0)
    m, witness = d.boundary_product_min_witness(x, y)
    dxy = float(np.linalg.norm(x - y))
    value = math.log1p(dxy / math.sqrt(m))
    return EvalResult(value, witness, method, _product_err_bound(method, dxy, m))


def u_metric(d, x, y):
    """Gromov-hyperbolizing metric between two interior points."""
    x = d.check_point(x)
    y = d.check_point(y)
    method = _dist_method(d)
    if np.array_equal(x, y):
        return EvalResult(0.0, None, method, 0.0)
    dx = float(d.dist_to_boundary_batch(x[None])[0])
    dy = float(d.dist_to_boundary_batch(y[None])[0])
    dxy = float(np.linalg.norm(x - y))
    value = 2.0 * math.log((dxy + max(dx, dy)) / math.sqrt(dx * dy))
    witness = d.nearest_boundary_point(x if dx <= dy else y)
    return EvalResult(value, witness, method, 0.0)


def j_metric(d, x, y):
    """Distance ratio metric between two interior points."""
    x = d.check_point(x)
    y = d.check_point(y)
    method = _dist_method(d)
    if np.array_equal(x, y):
        return EvalResult(0.0, None, method, 0.0)
    dx = float(d.dist_to_boundary_batch(x[None])[0])
    dy = float(d.dist_to_boundary_batch(y[None])[0])
    dxy = float(np.linalg.norm(x - y))
    value = math.log1p(dxy / min(dx, dy))
    witness = d.nearest_boundary_point(x if dx <= dy else y)
    return EvalResult(value, witness, method, 0.0)


# -- batch evaluators (no containment checks; callers sample inside the domain)

def tau_batch(d, X, Y):
    dxy = np.linalg.norm(X - Y, axis=1)
    m = d.boundary_product_min_batch(X, Y)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.log1p(dxy / np.sqrt(m))
    vals[dxy == 0.0] = 0.0
    return vals


def u_batch(d, X, Y):
    dx = d.dist_to_boundary_batch(X)
    dy = d.dist_to_boundary_batch(Y)
    dxy = np.linalg.norm(X - Y, axis=1)
    vals = 2.0 * np.log((dxy + np.maximum(dx, dy)) / np.sqrt(dx * dy))
    vals[dxy == 0.0] = 0.0
    return vals


def j_batch(d, X, Y):
    dx = d.dist_to_boundary_batch(X)
    dy = d.dist_to_boundary_batch(Y)
    dxy = np.linalg.norm(X - Y, axis=1)
    vals = np.log1p(dxy / np.minimum(dx, dy))
    vals[dxy == 0.0] = 0.0
    return vals


METRIC_BATCH = {"tau": tau_batch, "u": u_batch, "j": j_batch}
METRIC_SCALAR = {"tau": tau_tilde, "u": u_metric, "j": j_metric}


# -- closed forms on special configurations in the unit ball

def tau_radial_closed_form(x_norm, y_norm, t_sign):
    """Cassinian metric for x = t*y in the unit ball, |x| <= |y|.

    ``t_sign > 0``: both points on one radial segment; ``t_sign < 0``:
    diametrically opposite sides of the origin.
    """
    x_norm = float(x_norm)
    y_norm = float(y_norm)
    if not (0.0 <= x_norm < 1.0 and 0.0 <= y_norm < 1.0):
        raise RangeViolation("norms must lie in [0, 1)")
    if x_norm > y_norm:
        raise OrderViolation("requires |x| <= |y|")
    if t_sign > 0:
        d = y_norm - x_norm
        denom = math.sqrt((1.0 - x_norm) * (1.0 - y_norm))
    else:
        d = x_norm + y_norm
        denom = math.sqrt((1.0 + x_norm) * (1.0 - y_norm))
    return math.log1p(d / denom)


def tau_modulus_bound(t):
    """Lower bound for the Cassinian metric in the unit ball at separation t.

    Equals the metric between the antipodal pair at distance t.
    """
    t = np.asarray(t, dtype=float)
    if np.any((t < 0.0) | (t >= 2.0)):
        raise RangeViolation("separation must lie in [0, 2)")
    out = np.log1p(2.0 * t / np.sqrt(4.0 - t * t))
    return float(out) if out.ndim == 0 else out


def u_modulus_bound(t):
    """Same antipodal lower bound for the u-metric: 2 log((2+t)/(2-t))."""
    t = np.asarray(t, dtype=float)
    if np.any((t < 0.0) | (t >= 2.0)):
        raise RangeViolation("separation must lie in [0, 2)")
    out = 2.0 * np.log((2.0 + t) / (2.0 - t))
    return float(out) if out.ndim == 0 else out


# -- Cassinian ovals

@dataclass(frozen=True)
class OvalSpec:
    focus1: np.ndarray
    focus2: np.ndarray
    level: float  # the constant k with |p-f1||p-f2| = k^2 on the curve
    resolution: int = 256

    def __post_init__(self):
        f1 = as_point(self.focus1)
        f2 = as_point(self.focus2)
        object.__setattr__(self, "focus1", f1)
        object.__setattr__(self, "focus2", f2)
        if np.linalg.norm(f2[:2] - f1[:2]) < 1e-15:
            raise DegenerateFoci("foci must be distinct")
        if not self.level > 0.0:
            raise ValueError("level must be positive")
        if self.resolution < 8:
            raise ValueError("resolution must be >= 8")


def _oval_newton(rho, cos_t, sin_t, c, target4):
    """Polish radii so the product condition holds to machine precision."""
    for _ in range(3):
        px = rho * cos_t
        py = rho * sin_t
        d1 = (px + c) ** 2 + py ** 2
        d2 = (px - c) ** 2 + py ** 2
        g = d1 * d2 - target4
        # d/drho of |p-f1|^2 |p-f2|^2 in polar form
        dd1 = 2.0 * rho + 2.0 * c * cos_t
        dd2 = 2.0 * rho - 2.0 * c * cos_t
        gp = dd1 * d2 + d1 * dd2
        step = np.where(np.abs(gp) > 1e-14, g / np.where(gp == 0.0, 1.0, gp), 0.0)
        rho = rho - step
    return rho


def cassinian_oval(spec):
    """Trace the locus |p-f1||p-f2| = level^2 in the plane of the foci.

    Returns an (N, 2) array with N >= resolution; two separate loops appear
    when level < |f1-f2|/2.
    """
    f1 = spec.focus1[:2]
    f2 = spec.focus2[:2]
    mid = 0.5 * (f1 + f2)
    axis = f2 - f1
    c = 0.5 * float(np.linalg.norm(axis))
    phi = math.atan2(axis[1], axis[0])
    level = float(spec.level)
    res = int(spec.resolution)
    target4 = level ** 4  # squared target product

    def radii(theta):
        # rho^2 solves s^2 - 2 c^2 cos(2 theta) s + (c^4 - level^4) = 0
        disc = np.maximum(target4 - c ** 4 * np.sin(2.0 * theta) ** 2, 0.0)
        root = np.sqrt(disc)
        base = c * c * np.cos(2.0 * theta)
        return base + root, base - root

    loops = []
    if level >= c:
        theta = np.linspace(0.0, 2.0 * math.pi, res, endpoint=False)
        s_plus, _ = radii(theta)
        rho = np.sqrt(np.maximum(s_plus, 0.0))
        loops.append((rho, theta))
    else:
        half = math.asin(min((level / c) ** 2, 1.0)) / 2.0
        fwd = res // 2
        bwd = res - fwd
        for offset in (0.0, math.pi):
            tf = np.linspace(-half, half, fwd) + offset
            tb = np.linspace(half, -half, bwd) + offset
            s_out, _ = radii(tf)
            _, s_in = radii(tb)
            rho = np.sqrt(np.maximum(np.concatenate([s_out, s_in]), 0.0))
            loops.append((rho, np.concatenate([tf, tb])))

    pts = []
    for rho, theta in loops:
        ct = np.cos(theta)
        st = np.sin(theta)
        rho = _oval_newton(rho, ct, st, c, target4)
        rho = np.maximum(rho, 0.0)
        local = np.stack([rho * ct, rho * st], axis=1)
        rot = np.array([[math.cos(phi), -math.sin(phi)],
                        [math.sin(phi), math.cos(phi)]])
        pts.append(local @ rot.T + mid)
    return np.concatenate(pts, axis=0)
