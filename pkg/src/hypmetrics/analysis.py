"""Constant solving, dilatation and distortion estimation, theorem sweeps.

Every verification check turns an inequality into a margin array (slack with
its tolerance folded in; >= 0 means satisfied) and reports the worst margin
plus a serializable witness.  ``flip=True`` negates the raw margins before
adding tolerances: a harness self-test that must report failure on any
known-true instance.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import erfinv
from scipy.stats import qmc

from hypmetrics import metrics, mobius
from hypmetrics.errors import (
    BilipschitzCheckFailed,
    ClearanceViolation,
    ImageEscape,
    NoConvergence,
)
from hypmetrics.geom import (
    Ball,
    PuncturedSpace,
    PuncturedUnitBall,
    SampledDomain,
    UnitBall,
    as_point,
    jung_radius,
)
from hypmetrics.metrics import (
    METRIC_BATCH,
    j_batch,
    tau_batch,
    tau_modulus_bound,
    tau_radial_closed_form,
    u_batch,
    u_modulus_bound,
)
from hypmetrics.sampling import make_rng, uniform_ball, unit_sphere

TOL_IDENTITY = 1e-12
TOL_INEQUALITY = 1e-9

_RATIO_FLOOR = 1e-9  # pairs with smaller source metric are skipped in ratios


@dataclass(frozen=True)
class ConstantSolveResult:
    c: float
    t_star: float
    residual: float
    iterations: int

    def to_dict(self):
        return {"c": self.c, "t_star": self.t_star,
                "residual": self.residual, "iterations": self.iterations}


@dataclass(frozen=True)
class DistortionParams:
    K: float
    L: float
    n: int
    alpha: float = None

    def __post_init__(self):
        if self.K < 1.0 or self.L < 1.0:
            raise ValueError("K and L must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.alpha is None:
            # the exponent K^(1/(1-n)) is undefined at n = 1; use 1 there
            a = 1.0 if self.n == 1 else self.K ** (1.0 / (1.0 - self.n))
            object.__setattr__(self, "alpha", a)


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    samples: int
    seed: int
    passed: bool
    worst_margin: float
    witness: object  # dict or None

    def to_dict(self):
        return {
            "check": self.check_name,
            "samples": self.samples,
            "seed": self.seed,
            "passed": bool(self.passed),
            "worst_margin": self.worst_margin,
            "witness": self.witness,
        }


def _slack(raw, tol, flip):
    raw = np.asarray(raw, dtype=float)
    if flip:
        raw = -raw
    return raw + tol


def _slack_eq(absdiff, tol, flip):
    # equality assertion |diff| <= tol; flipped it demands |diff| >= tol
    out = tol - np.asarray(absdiff, dtype=float)
    return -out if flip else out


def _pair_witness(domain, X, Y, k):
    return {"x": list(X[k]), "y": list(Y[k]), "domain": repr(domain)}


def _finish(name, samples, seed, margins, witness_fn=None):
    margins = np.concatenate([np.atleast_1d(m) for m in margins])
    k = int(np.argmin(margins))
    worst = float(margins[k])
    witness = witness_fn(k) if witness_fn is not None else None
    return VerificationReport(check_name=name, samples=samples, seed=seed,
                              passed=bool(worst >= 0.0), worst_margin=worst,
                              witness=witness)


# ---------------------------------------------------------------------------
# constant of the uniform-continuity bound

def _ratio_fn(t):
    return math.log1p(2.0 * t / math.sqrt(4.0 - t * t)) / t


def _stationarity(t):
    s = math.sqrt(4.0 - t * t)
    return (4.0 - t * t) * (2.0 * t + s) * math.log1p(2.0 * t / s) - 8.0 * t


_CONSTANT_CACHE = []


def solve_constant_c(max_iterations=500):
    """Minimize log(1 + 2t/sqrt(4-t^2))/t over (0, 2).

    Golden-section localization followed by a root polish of the stationarity
    equation; deterministic and seed independent.
    """
    if _CONSTANT_CACHE:
        return _CONSTANT_CACHE[0]
    inv_golden = (math.sqrt(5.0) - 1.0) / 2.0
    lo, hi = 1e-6, 2.0 - 1e-9
    iterations = 0
    c1 = hi - inv_golden * (hi - lo)
    c2 = lo + inv_golden * (hi - lo)
    f1, f2 = _ratio_fn(c1), _ratio_fn(c2)
    while hi - lo > 1e-8:
        iterations += 1
        if iterations > max_iterations:
            raise NoConvergence("golden-section bracket did not shrink")
        if f1 < f2:
            hi, c2, f2 = c2, c1, f1
            c1 = hi - inv_golden * (hi - lo)
            f1 = _ratio_fn(c1)
        else:
            lo, c1, f1 = c1, c2, f2
            c2 = lo + inv_golden * (hi - lo)
            f2 = _ratio_fn(c2)

    t0 = 0.5 * (lo + hi)
    a, b = max(t0 - 0.05, 1e-6), min(t0 + 0.05, 2.0 - 1e-9)
    if _stationarity(a) * _stationarity(b) > 0:
        a, b = 0.5, 1.9
    t_star, info = brentq(_stationarity, a, b, xtol=1e-15, full_output=True)
    iterations += info.iterations
    residual = abs(_stationarity(t_star))
    if residual > 1e-10 or iterations > max_iterations:
        raise NoConvergence("stationarity residual too large")
    result = ConstantSolveResult(c=_ratio_fn(t_star), t_star=float(t_star),
                                 residual=residual, iterations=iterations)
    _CONSTANT_CACHE.append(result)
    return result


# ---------------------------------------------------------------------------
# dilatation and distortion measurement

@dataclass(frozen=True)
class DilatationEstimate:
    ratio: float  # sup/inf ratio at the smallest sampled radius
    per_radius: tuple  # (radius, ratio) pairs, largest radius first

    def __float__(self):
        return self.ratio


def _as_batch_map(m):
    if isinstance(m, mobius.MobiusMap):
        return lambda X: mobius.apply_batch(m, X)
    if hasattr(m, "apply_batch"):
        return m.apply_batch
    return m


def _direction_set(dim, count):
    if dim == 2:
        ang = np.linspace(0.0, 2.0 * math.pi, count, endpoint=False)
        return np.stack([np.cos(ang), np.sin(ang)], axis=1)
    sob = qmc.Sobol(d=dim, scramble=False).random(count + 1)[1:]
    v = np.sqrt(2.0) * erfinv(np.clip(2.0 * sob - 1.0, -1.0 + 1e-12,
                                      1.0 - 1e-12))
    norms = np.linalg.norm(v, axis=1, keepdims=True)
    return v / np.maximum(norms, 1e-300)


def linear_dilatation(m, x, radii, directions=4096, clearance=None):
    """Directional sup/inf stretch ratio at x for a sequence of radii.

    The limsup is read off as the ratio at the smallest radius; the full
    (radius, ratio) sequence is kept for monotonicity diagnostics.
    """
    x = as_point(x)
    radii = [float(r) for r in radii]
    if not radii or any(r <= 0.0 for r in radii):
        raise ValueError("radii must be positive")
    if any(radii[i] <= radii[i + 1] for i in range(len(radii) - 1)):
        raise ValueError("radii must be strictly decreasing")
    if clearance is not None and clearance <= max(radii):
        raise ClearanceViolation("largest radius exceeds the clearance at x")

    f = _as_batch_map(m)
    dirs = _direction_set(x.shape[0], directions)
    fx = f(x[None])[0]
    seq = []
    for r in radii:
        img = f(x + r * dirs)
        dist = np.linalg.norm(img - fx, axis=1)
        seq.append((r, float(np.max(dist) / np.min(dist))))
    return DilatationEstimate(ratio=seq[-1][1], per_radius=tuple(seq))


@dataclass(frozen=True)
class DistortionResult:
    sup_ratio: float
    inf_ratio: float
    sup_witness: object
    inf_witness: object


def measure_distortion(m, d, d_image, metric, samples=10000, seed=42):
    """Extremal metric ratios image/source over random pairs."""
    rng = make_rng(seed)
    f = _as_batch_map(m)
    X = d.sample(samples, rng)
    Y = d.sample(samples, rng)
    FX = f(X)
    FY = f(Y)
    ok = d_image.contains_batch(FX) & d_image.contains_batch(FY)
    if not np.all(ok):
        k = int(np.argmin(ok))
        raise ImageEscape(f"image point {FX[k].tolist()} left the image domain")
    vals = METRIC_BATCH[metric](d, X, Y)
    vals_im = METRIC_BATCH[metric](d_image, FX, FY)
    keep = vals >= _RATIO_FLOOR
    ratio = vals_im[keep] / vals[keep]
    Xk, Yk = X[keep], Y[keep]
    hi = int(np.argmax(ratio))
    lo = int(np.argmin(ratio))
    return DistortionResult(
        sup_ratio=float(ratio[hi]), inf_ratio=float(ratio[lo]),
        sup_witness=_pair_witness(d, Xk, Yk, hi),
        inf_witness=_pair_witness(d, Xk, Yk, lo))


# ---------------------------------------------------------------------------
# verification sweeps

def verify_mobius_distortion(a, samples=10000, seed=42, orthogonal_twist=False,
                             flip=False):
    """Two-sided distortion bound for the punctured-ball automorphism."""
    a = as_point(a)
    na = float(np.linalg.norm(a))
    src = PuncturedUnitBall(np.zeros(a.shape[0]))
    dst = PuncturedUnitBall(a)
    f = mobius.punctured_ball_map(a)
    if orthogonal_twist:
        rng_q = make_rng(seed, stream=7)
        q, _ = np.linalg.qr(rng_q.standard_normal((a.shape[0], a.shape[0])))
        f = mobius.MobiusMap((mobius.Orthogonal(q),) + f.chain)

    rng = make_rng(seed)
    X = src.sample(samples, rng)
    Y = src.sample(samples, rng)
    FX = mobius.apply_batch(f, X)
    FY = mobius.apply_batch(f, Y)
    t_src = tau_batch(src, X, Y)
    t_dst = tau_batch(dst, FX, FY)
    keep = t_src >= _RATIO_FLOOR
    ratio = t_dst[keep] / t_src[keep]
    lower = (1.0 - na) / (1.0 + na)
    upper = (1.0 + na) / (1.0 - na)
    raw = np.minimum(upper - ratio, ratio - lower)
    Xk, Yk = X[keep], Y[keep]
    return _finish(f"mobius_distortion(|a|={na:g})", samples, seed,
                   [_slack(raw, TOL_INEQUALITY, flip)],
                   lambda k: _pair_witness(src, Xk, Yk, k))


def verify_bernoulli(samples=10000, seed=42, flip=False):
    """log(1 + a x) <= a log(1 + x) for a >= 1, x > 0."""
    rng = make_rng(seed)
    a = 1.0 + 99.0 * rng.random(samples)
    x = 100.0 * rng.random(samples) + 1e-12
    raw = a * np.log1p(x) - np.log1p(a * x)
    return _finish("bernoulli", samples, seed,
                   [_slack(raw, TOL_IDENTITY, flip)],
                   lambda k: {"a": float(a[k]), "x": float(x[k])})


def verify_uniform_continuity(metric="tau", dim=2, samples=10000, seed=42,
                              flip=False):
    """Antipodal lower bound and linear modulus for the unit ball."""
    if metric not in ("tau", "u"):
        raise ValueError("metric must be 'tau' or 'u'")
    d = UnitBall(dim)
    rng = make_rng(seed)
    X = d.sample(samples, rng)
    Y = d.sample(samples, rng)
    t = np.linalg.norm(X - Y, axis=1)
    if metric == "tau":
        vals = tau_batch(d, X, Y)
        bound = tau_modulus_bound(t)
        linear = solve_constant_c().c * t
    else:
        vals = u_batch(d, X, Y)
        bound = u_modulus_bound(t)
        linear = t
    raw_pointwise = vals - bound
    raw_linear = bound - linear

    # equality at antipodal pairs y = -x
    ts = np.linspace(0.05, 1.9, 64)
    W = np.zeros((ts.size, dim))
    W[:, 0] = ts / 2.0
    anti = (tau_batch if metric == "tau" else u_batch)(d, -W, W)
    anti_bound = (tau_modulus_bound if metric == "tau" else u_modulus_bound)(ts)

    margins = [_slack(raw_pointwise, TOL_INEQUALITY, flip),
               _slack(raw_linear, TOL_INEQUALITY, flip),
               _slack_eq(np.abs(anti - anti_bound), TOL_INEQUALITY, flip)]
    n_main = 2 * samples

    def witness(k):
        if k < samples:
            return _pair_witness(d, X, Y, k)
        if k < n_main:
            return {"t": float(t[k - samples]), "domain": repr(d)}
        return {"t": float(ts[k - n_main]), "antipodal": True}

    return _finish(f"uniform_{metric}(dim={dim})", samples, seed, margins,
                   witness)


def verify_general_domain_bound(domain, samples=1000, seed=42, flip=False):
    """Jung-radius lower bound for the Cassinian metric on bounded domains."""
    diam = domain.diameter()
    r = jung_radius(diam, domain.dim)
    rng = make_rng(seed)
    X = domain.sample(samples, rng)
    Y = domain.sample(samples, rng)
    t = np.linalg.norm(X - Y, axis=1)
    vals = tau_batch(domain, X, Y)
    bound = np.log1p(2.0 * t / np.sqrt(np.maximum(4.0 * r * r - t * t, 1e-300)))
    c = solve_constant_c().c
    raw1 = vals - bound
    raw2 = bound - c * t / r

    # tightness on the centered ball of radius r with antipodal pairs
    ball = Ball(np.zeros(domain.dim), r)
    ts = np.linspace(0.1, 1.9, 32) * r
    W = np.zeros((ts.size, domain.dim))
    W[:, 0] = ts / 2.0
    tight = tau_batch(ball, -W, W)
    tight_bound = np.log1p(2.0 * ts / np.sqrt(4.0 * r * r - ts * ts))
    eq_diff = np.abs(tight - tight_bound)

    margins = [_slack(raw1, TOL_INEQUALITY, flip),
               _slack(raw2, TOL_INEQUALITY, flip),
               _slack_eq(eq_diff, TOL_INEQUALITY, flip)]
    return _finish(f"general_domain(dim={domain.dim})", samples, seed, margins,
                   lambda k: _pair_witness(domain, X, Y, k) if k < samples
                   else {"r": r, "domain": repr(domain)})


@dataclass(frozen=True)
class AffineMap:
    matrix: np.ndarray
    offset: np.ndarray

    def __post_init__(self):
        M = np.asarray(self.matrix, dtype=float)
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "offset", as_point(self.offset))

    def apply_batch(self, X):
        return X @ self.matrix.T + self.offset

    def inverse(self):
        Minv = np.linalg.inv(self.matrix)
        return AffineMap(Minv, -Minv @ self.offset)

    def bilipschitz_constant(self):
        s = np.linalg.svd(self.matrix, compute_uv=False)
        return float(max(s[0], 1.0 / s[-1]))


def _affine_image_domain(d, f, boundary_samples=8192):
    """Image of a ball/sampled domain under an affine map."""
    A = f.matrix
    gram = A.T @ A
    lam2 = gram[0, 0]
    if np.max(np.abs(gram - lam2 * np.eye(A.shape[0]))) < 1e-12 * max(lam2, 1.0):
        lam = math.sqrt(lam2)
        if isinstance(d, Ball):
            return Ball(f.apply_batch(d.center[None])[0], lam * d.radius)
    if isinstance(d, Ball):
        dirs = unit_sphere(make_rng(0, stream=11), boundary_samples, d.dim) \
            if d.dim != 2 else _direction_set(2, boundary_samples)
        B = f.apply_batch(d.center + d.radius * dirs)
    elif isinstance(d, SampledDomain):
        B = f.apply_batch(d.boundary)
    else:
        raise ValueError("affine images supported for balls and sampled domains")
    finv = f.inverse()
    return SampledDomain(
        boundary=B,
        contains_fn=lambda p: d.contains(finv.apply_batch(np.asarray(p, float)[None])[0]))


def verify_bilipschitz_tau(L, fmap, domain=None, samples=10000, seed=42,
                           flip=False):
    """L-bilipschitz maps distort the Cassinian metric by at most L^2."""
    if domain is None:
        domain = UnitBall(2)
    if not isinstance(fmap, AffineMap):
        raise ValueError("fmap must be an AffineMap")

    rng = make_rng(seed, stream=3)
    P = rng.standard_normal((1000, domain.dim)) * 5.0
    Q = rng.standard_normal((1000, domain.dim)) * 5.0
    dd = np.linalg.norm(P - Q, axis=1)
    keep = dd > 1e-9
    stretch = np.linalg.norm(fmap.apply_batch(P[keep]) - fmap.apply_batch(Q[keep]),
                             axis=1) / dd[keep]
    if np.any(stretch > L * (1.0 + 1e-9)) or np.any(stretch < (1.0 - 1e-9) / L):
        raise BilipschitzCheckFailed(
            f"empirical stretch {stretch.min():.6g}..{stretch.max():.6g} "
            f"violates L={L}")

    image = _affine_image_domain(domain, fmap)
    rng = make_rng(seed)
    X = domain.sample(samples, rng)
    Y = domain.sample(samples, rng)
    FX = fmap.apply_batch(X)
    FY = fmap.apply_batch(Y)
    t_src = tau_batch(domain, X, Y)
    t_img = tau_batch(image, FX, FY)
    keep = t_src >= _RATIO_FLOOR
    L2 = L * L
    scale = np.maximum(1.0, t_src[keep])
    raw = np.minimum(L2 * t_src[keep] - t_img[keep],
                     t_img[keep] - t_src[keep] / L2) / scale
    Xk, Yk = X[keep], Y[keep]
    return _finish(f"bilipschitz_tau(L={L:g})", samples, seed,
                   [_slack(raw, TOL_INEQUALITY, flip)],
                   lambda k: _pair_witness(domain, Xk, Yk, k))


def verify_sandwich_u_tau(domain, samples=10000, seed=42, flip=False):
    """2 tau <= u <= 4 tau and tau <= j <= 2 tau on random pairs."""
    rng = make_rng(seed)
    X = domain.sample(samples, rng)
    Y = domain.sample(samples, rng)
    tv = tau_batch(domain, X, Y)
    uv = u_batch(domain, X, Y)
    jv = j_batch(domain, X, Y)
    raw = np.minimum.reduce([uv - 2.0 * tv, 4.0 * tv - uv,
                             jv - tv, 2.0 * tv - jv])
    return _finish(f"sandwich({type(domain).__name__})", samples, seed,
                   [_slack(raw, TOL_INEQUALITY, flip)],
                   lambda k: _pair_witness(domain, X, Y, k))


def verify_metric_axioms(domain, metric="tau", samples=10000, seed=42,
                         flip=False):
    """Symmetry (exact) and the triangle inequality (1e-12 slack)."""
    rng = make_rng(seed)
    X = domain.sample(samples, rng)
    Y = domain.sample(samples, rng)
    Z = domain.sample(samples, rng)
    ev = METRIC_BATCH[metric]
    mxy = ev(domain, X, Y)
    myx = ev(domain, Y, X)
    myz = ev(domain, Y, Z)
    mxz = ev(domain, X, Z)
    tri_raw = mxy + myz - mxz
    margins = [_slack_eq(np.abs(mxy - myx), 0.0, flip),  # symmetry: exact
               _slack(tri_raw, TOL_IDENTITY, flip)]
    return _finish(f"metric_axioms({metric},{type(domain).__name__})",
                   samples, seed, margins,
                   lambda k: _pair_witness(domain, X, Y, k % samples))


def verify_monotonicity_tau(samples=10000, seed=42, flip=False):
    """Growing the domain cannot grow the Cassinian metric."""
    inner = UnitBall(2)
    outer = Ball(np.array([0.2, 0.0]), 1.5)  # contains the unit ball
    rng = make_rng(seed)
    X = inner.sample(samples, rng)
    Y = inner.sample(samples, rng)
    raw = tau_batch(inner, X, Y) - tau_batch(outer, X, Y)
    return _finish("monotonicity_tau", samples, seed,
                   [_slack(raw, TOL_INEQUALITY, flip)],
                   lambda k: _pair_witness(inner, X, Y, k))


def verify_u_non_monotonicity(samples=10000, seed=42, flip=False):
    """Counterexample search: u must NOT be domain monotone.

    Passed means a nested-domain violation was found.  The nested pair is the
    unit ball inside a much larger internally tangent ball: the far point's
    boundary distance grows while the tangency keeps the near point's fixed.
    """
    inner = UnitBall(2)
    outer = Ball(np.array([1.0 - 10.0, 0.0]), 10.0)  # tangent at e1
    rng = make_rng(seed)
    X = inner.sample(samples, rng)
    Y = inner.sample(samples, rng)
    gain = u_batch(outer, X, Y) - u_batch(inner, X, Y)
    k = int(np.argmax(gain))
    raw = float(gain[k]) - 1e-6  # demand a clear violation, not roundoff
    margin = -raw if flip else raw
    return VerificationReport(
        check_name="u_non_monotonicity", samples=samples, seed=seed,
        passed=bool(margin >= 0.0), worst_margin=margin,
        witness=_pair_witness(inner, X, Y, k))


def verify_closed_forms(samples=1000, seed=42, flip=False, dims=(2, 3, 4)):
    """Radial/diametral closed forms against the generic plane-search value."""
    rng = make_rng(seed)
    margins = []
    witnesses = []
    for dim in dims:
        d = UnitBall(dim)
        n1 = rng.random(samples) * 0.98
        n2 = n1 + rng.random(samples) * (0.98 - n1)
        sign = np.where(rng.random(samples) < 0.5, 1.0, -1.0)
        dirs = unit_sphere(rng, samples, dim)
        X = (sign * n1)[:, None] * dirs
        Y = n2[:, None] * dirs
        generic = tau_batch(d, X, Y)
        closed = np.array([
            tau_radial_closed_form(n1[i], n2[i], sign[i])
            for i in range(samples)])
        margins.append(_slack_eq(np.abs(generic - closed), TOL_INEQUALITY, flip))
        witnesses.append((d, X, Y))

    def witness(k):
        d, X, Y = witnesses[k // samples]
        return _pair_witness(d, X, Y, k % samples)

    return _finish("closed_forms", samples, seed, margins, witness)


def verify_inversion_identities(samples=10000, seed=42, flip=False, dim=2,
                                tol=1e-10):
    """Involution, isometry composition, distance identity, sphere preservation."""
    rng = make_rng(seed)
    na = 0.1 + 0.8 * rng.random(samples)
    dirs = unit_sphere(rng, samples, dim)
    A = na[:, None] * dirs
    Astar = A / (na ** 2)[:, None]
    R = np.sqrt(1.0 - na ** 2) / na

    X = uniform_ball(rng, samples, dim)
    Y = uniform_ball(rng, samples, dim)

    def invert(P):
        V = P - Astar
        n2 = np.einsum("ij,ij->i", V, V)
        return Astar + (R ** 2 / n2)[:, None] * V

    SX = invert(X)
    SY = invert(Y)
    inv_res = np.linalg.norm(invert(SX) - X, axis=1)

    dist_lhs = np.linalg.norm(SX - SY, axis=1)
    dist_rhs = (R ** 2 * np.linalg.norm(X - Y, axis=1)
                / (np.linalg.norm(X - Astar, axis=1)
                   * np.linalg.norm(Y - Astar, axis=1)))
    dist_res = np.abs(dist_lhs - dist_rhs)

    # with f = sigma itself, sigma o f is the identity isometry
    iso_res = np.abs(np.linalg.norm(invert(SX) - invert(SY), axis=1)
                     - np.linalg.norm(X - Y, axis=1))

    # |f(x)-f(y)| = |f(x)-a*||f(y)-a*| |x-y| / (|a*|^2 - 1)
    prod_rhs = (np.linalg.norm(SX - Astar, axis=1)
                * np.linalg.norm(SY - Astar, axis=1)
                * np.linalg.norm(X - Y, axis=1)
                / (np.einsum("ij,ij->i", Astar, Astar) - 1.0))
    prod_res = np.abs(np.linalg.norm(SX - SY, axis=1) - prod_rhs)

    sphere_pts = unit_sphere(rng, samples, dim)
    sphere_res = np.abs(np.linalg.norm(invert(sphere_pts), axis=1) - 1.0)

    radial = np.linalg.norm(invert(uniform_ball(rng, samples, dim)) - Astar,
                            axis=1)
    nastar = np.linalg.norm(Astar, axis=1)
    band = np.minimum(radial - (nastar - 1.0), (nastar + 1.0) - radial)

    margins = [
        _slack_eq(inv_res, TOL_IDENTITY, flip),
        _slack_eq(dist_res, tol, flip),
        _slack_eq(iso_res, TOL_IDENTITY, flip),
        _slack_eq(prod_res, tol, flip),
        _slack_eq(sphere_res, TOL_IDENTITY, flip),
        _slack(band, TOL_INEQUALITY, flip),
    ]
    return _finish("inversion_identities", samples, seed, margins,
                   lambda k: {"a": list(A[k % samples]), "dim": dim})


# ---------------------------------------------------------------------------
# named check registry for the CLI

def _default_domains(with_sampled=False):
    ds = [UnitBall(2), PuncturedUnitBall(np.array([0.3, 0.0])),
          PuncturedSpace(np.zeros(2)), Ball(np.array([1.0, 1.0]), 2.0)]
    if with_sampled:
        ds.append(SampledDomain.from_polygon(
            [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            samples_per_edge=1024))
    return ds


def run_check(name, samples=10000, seed=42, a=None):
    """Run a named verification check; returns a list of reports."""
    if name == "mobius_distortion":
        a_list = ([as_point(a)] if a is not None else
                  [np.zeros(2), np.array([0.3, 0.0]), np.array([0.5, 0.0]),
                   np.array([0.9, 0.0])])
        return [verify_mobius_distortion(av, samples=samples, seed=seed)
                for av in a_list]
    if name == "bernoulli":
        return [verify_bernoulli(samples=samples, seed=seed)]
    if name == "uniform_tau":
        return [verify_uniform_continuity("tau", dim, samples, seed)
                for dim in (2, 3)]
    if name == "uniform_u":
        return [verify_uniform_continuity("u", dim, samples, seed)
                for dim in (2, 3)]
    if name == "general_domain":
        square = SampledDomain.from_polygon(
            [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            samples_per_edge=1024)
        tri = SampledDomain.from_polygon(
            [(0.0, 0.0), (2.0, 0.3), (0.7, 1.6)], samples_per_edge=1024)
        ball = Ball(np.zeros(2), 2.0)
        n = min(samples, 1000)  # sample-minimum boundaries are O(M) per pair
        return [verify_general_domain_bound(dom, samples=n, seed=seed)
                for dom in (square, tri, ball)]
    if name == "bilipschitz_tau":
        stretch = AffineMap(np.diag([2.0, 1.0]), np.zeros(2))
        shear = AffineMap(np.array([[1.0, 0.5], [0.0, 1.0]]), np.zeros(2))
        sim = AffineMap(3.0 * np.eye(2), np.array([1.0, -2.0]))
        return [
            verify_bilipschitz_tau(3.0, sim, samples=samples, seed=seed),
            verify_bilipschitz_tau(2.0, stretch, samples=samples, seed=seed),
            verify_bilipschitz_tau(shear.bilipschitz_constant(), shear,
                                   samples=samples, seed=seed),
        ]
    if name == "sandwich":
        return [verify_sandwich_u_tau(dom, samples=samples, seed=seed)
                for dom in _default_domains()]
    if name == "metric_axioms":
        return [verify_metric_axioms(dom, metric, samples=samples, seed=seed)
                for dom in _default_domains() for metric in ("tau", "u", "j")]
    if name == "monotonicity_tau":
        return [verify_monotonicity_tau(samples=samples, seed=seed)]
    if name == "u_non_monotonicity":
        return [verify_u_non_monotonicity(samples=samples, seed=seed)]
    if name == "closed_forms":
        return [verify_closed_forms(samples=min(samples, 1000), seed=seed)]
    if name == "inversion_identities":
        return [verify_inversion_identities(samples=samples, seed=seed)]
    raise ValueError(f"unknown check {name!r}")


CHECK_NAMES = ("mobius_distortion", "bernoulli", "uniform_tau", "uniform_u",
               "general_domain", "bilipschitz_tau", "sandwich",
               "metric_axioms", "monotonicity_tau", "u_non_monotonicity",
               "closed_forms", "inversion_identities")
