"""Points, Euclidean domains, boundary queries, and enclosing balls.

Domains are immutable values.  Boundary infima on spheres are computed by
reducing to the 2-plane through the two query points and the sphere center
(the constrained stationarity condition puts the minimizer in that plane),
then running the grid + golden-section kernel.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from hypmetrics import sampling
from hypmetrics.errors import (
    DimensionMismatch,
    EmptyInput,
    NonpositiveDiameter,
    PointOutsideDomain,
    PunctureOutsideBall,
    UnboundedDomain,
)
from hypmetrics.kernels import circle_min_product

# Points closer than this to a boundary are treated as outside: the metrics
# blow up there and log-of-huge values are numerically meaningless.
BOUNDARY_TOL = 1e-12

# Random sampling keeps this much clearance around punctures.
PUNCTURE_CLEARANCE = 1e-6

_TINY = 1e-15


def as_point(coords):
    """Validate and return a finite 1D float array."""
    x = np.asarray(coords, dtype=float)
    if x.ndim != 1 or x.shape[0] < 1:
        raise DimensionMismatch("a point must be a 1D sequence of coordinates")
    if not np.all(np.isfinite(x)):
        raise ValueError("point coordinates must be finite")
    return x


def _plane_coords(center, X, Y):
    """Per-pair orthonormal bases of the planes through center, X[i], Y[i].

    Returns (xu, xv, yu, yv, U1, U2) with plane coordinates of X and Y
    relative to the center.  Collinear/degenerate rows get an arbitrary
    orthonormal completion.
    """
    Xc = X - center
    Yc = Y - center
    nx = np.linalg.norm(Xc, axis=1)
    ny = np.linalg.norm(Yc, axis=1)

    U1 = np.where(nx[:, None] > _TINY, Xc / np.maximum(nx, _TINY)[:, None],
                  np.where(ny[:, None] > _TINY,
                           Yc / np.maximum(ny, _TINY)[:, None], 0.0))
    no_dir = np.linalg.norm(U1, axis=1) < 0.5
    if np.any(no_dir):
        U1 = U1.copy()
        U1[no_dir, 0] = 1.0

    proj = np.einsum("ij,ij->i", Yc, U1)
    V = Yc - proj[:, None] * U1
    nv = np.linalg.norm(V, axis=1)
    degen = nv <= 1e-9 * (1.0 + ny)
    if np.any(degen):
        # pick the coordinate axis least aligned with U1 and orthonormalize
        V = V.copy()
        idx = np.flatnonzero(degen)
        k = np.argmin(np.abs(U1[idx]), axis=1)
        E = np.zeros((idx.size, X.shape[1]))
        E[np.arange(idx.size), k] = 1.0
        dots = np.einsum("ij,ij->i", E, U1[idx])
        V[idx] = E - dots[:, None] * U1[idx]
        nv = np.linalg.norm(V, axis=1)
    U2 = V / np.maximum(nv, _TINY)[:, None]

    xu = np.einsum("ij,ij->i", Xc, U1)
    xv = np.einsum("ij,ij->i", Xc, U2)
    yu = proj
    yv = np.einsum("ij,ij->i", Yc, U2)
    return xu, xv, yu, yv, U1, U2


def _canonical_pairs(X, Y):
    """Order each pair lexicographically so results are exactly symmetric."""
    swap = np.zeros(X.shape[0], dtype=bool)
    decided = np.zeros(X.shape[0], dtype=bool)
    for k in range(X.shape[1]):
        gt = X[:, k] > Y[:, k]
        lt = X[:, k] < Y[:, k]
        swap |= ~decided & gt
        decided |= gt | lt
    if not np.any(swap):
        return X, Y
    s = swap[:, None]
    return np.where(s, Y, X), np.where(s, X, Y)


def _sphere_product_min(center, radius, X, Y, witness=False):
    """Min of |x-p||p-y| over the sphere S(center, radius), per pair."""
    X, Y = _canonical_pairs(X, Y)
    xu, xv, yu, yv, U1, U2 = _plane_coords(center, X, Y)
    prod, theta = circle_min_product(xu, xv, yu, yv, radius)
    if not witness:
        return prod
    P = center + radius * (np.cos(theta)[:, None] * U1
                           + np.sin(theta)[:, None] * U2)
    return prod, P


class Domain:
    """Common checks; concrete variants implement the batch primitives."""

    def check_point(self, x):
        x = as_point(x)
        if x.shape[0] != self.dim:
            raise DimensionMismatch(
                f"point dim {x.shape[0]} != domain dim {self.dim}")
        if not self.contains(x):
            raise PointOutsideDomain(f"{x.tolist()} is not inside {self!r}")
        return x

    def contains(self, x):
        x = np.asarray(x, dtype=float)
        return bool(self.contains_batch(x[None])[0])

    def dist_to_boundary_batch(self, X):
        raise NotImplementedError

    def boundary_product_min_batch(self, X, Y):
        raise NotImplementedError

    def boundary_product_min_witness(self, x, y):
        """Scalar variant returning (value, witness_point)."""
        raise NotImplementedError

    def diameter(self):
        raise UnboundedDomain(f"{self!r} has no finite diameter")

    def sample(self, n, rng):
        raise NotImplementedError


@dataclass(frozen=True)
class Ball(Domain):
    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if not self.radius > 0.0:
            raise ValueError("ball radius must be positive")

    @property
    def dim(self):
        return self.center.shape[0]

    def contains_batch(self, X):
        return np.linalg.norm(X - self.center, axis=1) < self.radius - BOUNDARY_TOL

    def dist_to_boundary_batch(self, X):
        return self.radius - np.linalg.norm(X - self.center, axis=1)

    def boundary_product_min_batch(self, X, Y):
        return _sphere_product_min(self.center, self.radius, X, Y)

    def boundary_product_min_witness(self, x, y):
        prod, P = _sphere_product_min(self.center, self.radius,
                                      x[None], y[None], witness=True)
        return float(prod[0]), P[0]

    def nearest_boundary_point(self, x):
        v = x - self.center
        nv = np.linalg.norm(v)
        if nv < _TINY:
            v = np.zeros(self.dim)
            v[0] = 1.0
            nv = 1.0
        return self.center + self.radius * v / nv

    def diameter(self):
        return 2.0 * self.radius

    def sample(self, n, rng):
        return sampling.uniform_ball(rng, n, self.dim, self.center, self.radius)


@dataclass(frozen=True)
class UnitBall(Ball):
    def __init__(self, dim):
        if int(dim) < 1:
            raise DimensionMismatch("dim must be >= 1")
        super().__init__(np.zeros(int(dim)), 1.0)


def _resample_away_from(rng, n, draw, puncture, clearance):
    """Draw n points, redrawing any that land within clearance of puncture."""
    pts = draw(n)
    for _ in range(64):
        bad = np.linalg.norm(pts - puncture, axis=1) <= clearance
        if not np.any(bad):
            return pts
        pts[bad] = draw(int(bad.sum()))
    return pts


@dataclass(frozen=True)
class PuncturedUnitBall(Domain):
    puncture: np.ndarray

    def __post_init__(self):
        a = as_point(self.puncture)
        if np.linalg.norm(a) >= 1.0:
            raise PunctureOutsideBall("puncture must satisfy |a| < 1")
        object.__setattr__(self, "puncture", a)

    @property
    def dim(self):
        return self.puncture.shape[0]

    def contains_batch(self, X):
        inside = np.linalg.norm(X, axis=1) < 1.0 - BOUNDARY_TOL
        away = np.linalg.norm(X - self.puncture, axis=1) > BOUNDARY_TOL
        return inside & away

    def dist_to_boundary_batch(self, X):
        return np.minimum(1.0 - np.linalg.norm(X, axis=1),
                          np.linalg.norm(X - self.puncture, axis=1))

    def boundary_product_min_batch(self, X, Y):
        sphere = _sphere_product_min(np.zeros(self.dim), 1.0, X, Y)
        punct = (np.linalg.norm(X - self.puncture, axis=1)
                 * np.linalg.norm(Y - self.puncture, axis=1))
        return np.minimum(sphere, punct)

    def boundary_product_min_witness(self, x, y):
        prod, P = _sphere_product_min(np.zeros(self.dim), 1.0,
                                      x[None], y[None], witness=True)
        punct = (np.linalg.norm(x - self.puncture)
                 * np.linalg.norm(y - self.puncture))
        if punct < prod[0]:
            return float(punct), self.puncture.copy()
        return float(prod[0]), P[0]

    def nearest_boundary_point(self, x):
        nx = np.linalg.norm(x)
        to_punct = np.linalg.norm(x - self.puncture)
        if to_punct < 1.0 - nx:
            return self.puncture.copy()
        if nx < _TINY:
            p = np.zeros(self.dim)
            p[0] = 1.0
            return p
        return x / nx

    def diameter(self):
        return 2.0

    def sample(self, n, rng):
        draw = lambda m: sampling.uniform_ball(rng, m, self.dim)
        return _resample_away_from(rng, n, draw, self.puncture,
                                   PUNCTURE_CLEARANCE)


@dataclass(frozen=True)
class PuncturedSpace(Domain):
    puncture: np.ndarray
    # used only when sampling random points in this unbounded domain
    sample_radius: float = 2.0

    def __post_init__(self):
        object.__setattr__(self, "puncture", as_point(self.puncture))

    @property
    def dim(self):
        return self.puncture.shape[0]

    def contains_batch(self, X):
        return np.linalg.norm(X - self.puncture, axis=1) > BOUNDARY_TOL

    def dist_to_boundary_batch(self, X):
        return np.linalg.norm(X - self.puncture, axis=1)

    def boundary_product_min_batch(self, X, Y):
        return (np.linalg.norm(X - self.puncture, axis=1)
                * np.linalg.norm(Y - self.puncture, axis=1))

    def boundary_product_min_witness(self, x, y):
        value = (np.linalg.norm(x - self.puncture)
                 * np.linalg.norm(y - self.puncture))
        return float(value), self.puncture.copy()

    def nearest_boundary_point(self, x):
        return self.puncture.copy()

    def sample(self, n, rng):
        draw = lambda m: sampling.uniform_ball(rng, m, self.dim,
                                               self.puncture,
                                               self.sample_radius)
        return _resample_away_from(rng, n, draw, self.puncture,
                                   PUNCTURE_CLEARANCE)


@dataclass(frozen=True)
class SampledDomain(Domain):
    """Domain known only through boundary samples and a containment predicate.

    The boundary infimum is a plain sample minimum: no interpolation, no
    refinement, and no regularity assumption on the true boundary.
    """

    boundary: np.ndarray
    contains_fn: object = field(compare=False)

    def __post_init__(self):
        B = np.asarray(self.boundary, dtype=float)
        if B.ndim != 2 or B.shape[0] < 1:
            raise EmptyInput("boundary sample list must be nonempty")
        if not np.all(np.isfinite(B)):
            raise ValueError("boundary samples must be finite")
        if np.unique(B, axis=0).shape[0] != B.shape[0]:
            raise ValueError("boundary samples must be distinct")
        object.__setattr__(self, "boundary", B)

    @property
    def dim(self):
        return self.boundary.shape[1]

    def contains_batch(self, X):
        ok = np.array([bool(self.contains_fn(x)) for x in X])
        return ok & (self.dist_to_boundary_batch(X) > BOUNDARY_TOL)

    def dist_to_boundary_batch(self, X):
        out = np.empty(X.shape[0])
        for i, x in enumerate(X):
            out[i] = np.min(np.linalg.norm(self.boundary - x, axis=1))
        return out

    def boundary_product_min_batch(self, X, Y):
        out = np.empty(X.shape[0])
        for i in range(X.shape[0]):
            dx = np.linalg.norm(self.boundary - X[i], axis=1)
            dy = np.linalg.norm(self.boundary - Y[i], axis=1)
            out[i] = np.min(dx * dy)
        return out

    def boundary_product_min_witness(self, x, y):
        dx = np.linalg.norm(self.boundary - x, axis=1)
        dy = np.linalg.norm(self.boundary - y, axis=1)
        k = int(np.argmin(dx * dy))
        return float(dx[k] * dy[k]), self.boundary[k].copy()

    def nearest_boundary_point(self, x):
        k = int(np.argmin(np.linalg.norm(self.boundary - x, axis=1)))
        return self.boundary[k].copy()

    def diameter(self):
        B = self.boundary
        diam = 0.0
        for i in range(B.shape[0]):
            diam = max(diam, float(np.max(np.linalg.norm(B[i + 1:] - B[i],
                                                         axis=1), initial=0.0)))
        return diam

    def sample(self, n, rng):
        lo = self.boundary.min(axis=0)
        hi = self.boundary.max(axis=0)
        pts = []
        for _ in range(2000):
            cand = lo + (hi - lo) * rng.random((max(4 * n, 64), self.dim))
            keep = cand[self.contains_batch(cand)]
            pts.append(keep)
            if sum(p.shape[0] for p in pts) >= n:
                break
        got = np.concatenate(pts, axis=0)
        if got.shape[0] < n:
            raise PointOutsideDomain(
                "rejection sampling failed; containment predicate too tight")
        return got[:n]

    @classmethod
    def from_polygon(cls, vertices, samples_per_edge=1024):
        """2D polygon: evenly sampled edges + even-odd crossing containment."""
        V = np.asarray(vertices, dtype=float)
        if V.ndim != 2 or V.shape[1] != 2 or V.shape[0] < 3:
            raise DimensionMismatch("polygon needs >= 3 vertices in 2D")
        pts = []
        m = V.shape[0]
        for i in range(m):
            a, b = V[i], V[(i + 1) % m]
            t = np.linspace(0.0, 1.0, samples_per_edge, endpoint=False)
            pts.append(a + t[:, None] * (b - a))
        B = np.concatenate(pts, axis=0)

        def inside(p):
            x, y = float(p[0]), float(p[1])
            crossings = False
            for i in range(m):
                (x1, y1), (x2, y2) = V[i], V[(i + 1) % m]
                if (y1 > y) != (y2 > y):
                    t = (y - y1) / (y2 - y1)
                    if x < x1 + t * (x2 - x1):
                        crossings = not crossings
            return crossings

        return cls(boundary=B, contains_fn=inside)


def dist_to_boundary(d, x):
    """Distance from an interior point to the domain boundary."""
    x = d.check_point(x)
    return float(d.dist_to_boundary_batch(x[None])[0])


def boundary_product_inf(d, x, y):
    """Infimum of |x-p||p-y| over the boundary, with a witness point.

    Returns ``(value, witness)``.  For x == y this equals the squared
    boundary distance.
    """
    x = d.check_point(x)
    y = d.check_point(y)
    return d.boundary_product_min_witness(x, y)


@dataclass(frozen=True)
class EnclosingBall:
    center: np.ndarray
    radius: float


def _circumsphere(support):
    """Smallest sphere through all support points (assumed affinely independent)."""
    p0 = support[0]
    if len(support) == 1:
        return p0.copy(), 0.0
    Q = np.asarray(support[1:]) - p0
    A = 2.0 * Q
    b = np.einsum("ij,ij->i", Q, Q)
    sol, *_ = np.linalg.lstsq(A, b, rcond=None)
    center = p0 + sol
    radius = max(float(np.linalg.norm(p - center)) for p in support)
    return center, radius


def _welzl(points, support, dim):
    if not points or len(support) == dim + 1:
        if not support:
            return None
        return _circumsphere(support)
    p = points[0]
    ball = _welzl(points[1:], support, dim)
    if ball is not None:
        center, radius = ball
        if np.linalg.norm(p - center) <= radius * (1.0 + 1e-12) + 1e-14:
            return ball
    return _welzl(points[1:], support + [p], dim)


def min_enclosing_ball(points):
    """Smallest enclosing ball (Welzl recursion, any dimension).

    The reported radius is the max distance from the computed center, so
    containment is certified even when the recursion support was degenerate.
    """
    P = np.asarray(points, dtype=float)
    if P.ndim == 1:
        P = P[None]
    if P.shape[0] < 1:
        raise EmptyInput("need at least one point")
    if P.ndim != 2:
        raise DimensionMismatch("points must share a common dimension")
    if not np.all(np.isfinite(P)):
        raise ValueError("points must be finite")

    rng = np.random.default_rng(0)
    order = rng.permutation(P.shape[0])
    pts = [P[i] for i in order]
    ball = _welzl(pts, [], P.shape[1])
    center, _ = ball
    radius = float(np.max(np.linalg.norm(P - center, axis=1)))
    return EnclosingBall(center=center, radius=radius)


def jung_radius(diameter, n):
    """Radius of a ball guaranteed to contain any set of the given diameter."""
    if not diameter > 0.0:
        raise NonpositiveDiameter("diameter must be positive")
    n = int(n)
    if n < 1:
        raise DimensionMismatch("n must be >= 1")
    return float(diameter) * math.sqrt(n / (2.0 * n + 2.0))
