"""Composable Möbius maps: sphere inversions, orthogonal maps, similarities.

The punctured-ball automorphism is the inversion in the sphere orthogonal to
the unit sphere centered at a* = a/|a|^2 with radius sqrt(|a*|^2 - 1); it is
an involution swapping 0 and a and preserving the unit ball.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from hypmetrics.errors import PoleInput, PunctureOutsideBall
from hypmetrics.geom import as_point

_ORTHO_TOL = 1e-12


def _mgs_orthonormalize(M):
    """Modified Gram-Schmidt on columns."""
    Q = np.array(M, dtype=float)
    n = Q.shape[1]
    for i in range(n):
        for j in range(i):
            Q[:, i] -= (Q[:, i] @ Q[:, j]) * Q[:, j]
        nrm = np.linalg.norm(Q[:, i])
        if nrm < 1e-12:
            raise ValueError("matrix is numerically singular")
        Q[:, i] /= nrm
    return Q


@dataclass(frozen=True)
class SphereInversion:
    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if not self.radius > 0.0:
            raise ValueError("inversion radius must be positive")

    def apply_batch(self, X):
        V = X - self.center
        n2 = np.einsum("ij,ij->i", V, V)
        if np.any(n2 < 1e-300):
            raise PoleInput("point at the inversion center")
        return self.center + (self.radius ** 2 / n2)[:, None] * V


@dataclass(frozen=True)
class Orthogonal:
    matrix: np.ndarray

    def __post_init__(self):
        M = np.asarray(self.matrix, dtype=float)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ValueError("orthogonal atom needs a square matrix")
        drift = np.max(np.abs(M.T @ M - np.eye(M.shape[0])))
        if drift > _ORTHO_TOL:
            M = _mgs_orthonormalize(M)
        object.__setattr__(self, "matrix", M)

    def apply_batch(self, X):
        return X @ self.matrix.T


@dataclass(frozen=True)
class Translation:
    offset: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "offset", as_point(self.offset))

    def apply_batch(self, X):
        return X + self.offset


@dataclass(frozen=True)
class Scaling:
    factor: float

    def __post_init__(self):
        if not self.factor > 0.0:
            raise ValueError("scaling factor must be positive")

    def apply_batch(self, X):
        return self.factor * X


@dataclass(frozen=True)
class MobiusMap:
    chain: tuple

    def __post_init__(self):
        chain = tuple(self.chain)
        if not chain:
            raise ValueError("chain must be nonempty")
        object.__setattr__(self, "chain", chain)

    def __call__(self, x):
        return apply(self, x)


def sphere_inversion_apply(center, radius, x):
    """Image of x under inversion in the sphere S(center, radius)."""
    return SphereInversion(center, radius).apply_batch(as_point(x)[None])[0]


def apply(m, x):
    """Apply the chain left to right to a single point."""
    return apply_batch(m, as_point(x)[None])[0]


def apply_batch(m, X):
    X = np.asarray(X, dtype=float)
    for i, atom in enumerate(m.chain):
        try:
            X = atom.apply_batch(X)
        except PoleInput as exc:
            raise PoleInput(str(exc), atom_index=i) from None
    return X


def punctured_ball_map(a):
    """Möbius self-map of the unit ball swapping 0 and the puncture a.

    For a = 0 the identity is returned; the inversion would degenerate.
    """
    a = as_point(a)
    na = float(np.linalg.norm(a))
    if na >= 1.0:
        raise PunctureOutsideBall("puncture must satisfy |a| < 1")
    if na == 0.0:
        return MobiusMap((Scaling(1.0),))
    a_star = a / na ** 2
    r = math.sqrt(1.0 - na ** 2) / na
    return MobiusMap((SphereInversion(a_star, r),))


def verify_distance_identity(center, radius, x, y):
    """Residual of |s(x)-s(y)| = r^2 |x-y| / (|x-c||y-c|) for the inversion s."""
    x = as_point(x)
    y = as_point(y)
    inv = SphereInversion(center, radius)
    sx, sy = inv.apply_batch(np.stack([x, y]))
    lhs = np.linalg.norm(sx - sy)
    rhs = (radius ** 2 * np.linalg.norm(x - y)
           / (np.linalg.norm(x - inv.center) * np.linalg.norm(y - inv.center)))
    return float(abs(lhs - rhs))


_KINDS = {
    "inversion": lambda d: SphereInversion(np.asarray(d["center"], float),
                                           float(d["radius"])),
    "orthogonal": lambda d: Orthogonal(np.asarray(d["matrix"], float)),
    "translation": lambda d: Translation(np.asarray(d["offset"], float)),
    "scaling": lambda d: Scaling(float(d["factor"])),
}


def map_from_json(spec):
    """Build a MobiusMap from its JSON description (text or parsed dict)."""
    if isinstance(spec, str):
        spec = json.loads(spec)
    atoms = []
    for entry in spec["chain"]:
        kind = entry["kind"]
        if kind not in _KINDS:
            raise ValueError(f"unknown atom kind {kind!r}")
        atoms.append(_KINDS[kind](entry))
    return MobiusMap(tuple(atoms))


def map_to_json(m):
    chain = []
    for atom in m.chain:
        if isinstance(atom, SphereInversion):
            chain.append({"kind": "inversion", "center": list(atom.center),
                          "radius": atom.radius})
        elif isinstance(atom, Orthogonal):
            chain.append({"kind": "orthogonal",
                          "matrix": [list(row) for row in atom.matrix]})
        elif isinstance(atom, Translation):
            chain.append({"kind": "translation", "offset": list(atom.offset)})
        elif isinstance(atom, Scaling):
            chain.append({"kind": "scaling", "factor": atom.factor})
        else:
            raise ValueError(f"unknown atom {atom!r}")
    return {"chain": chain}
