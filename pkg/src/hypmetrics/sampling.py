"""Reproducible random sampling helpers."""

import numpy as np


def make_rng(seed, stream=0):
    """Deterministic generator; ``stream`` gives independent parallel streams."""
    return np.random.default_rng([int(seed), int(stream)])


def uniform_ball(rng, n, dim, center=None, radius=1.0):
    """Uniform points in an open ball: Gaussian direction, radius ~ U^(1/dim)."""
    v = rng.standard_normal((n, dim))
    norms = np.linalg.norm(v, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    u = rng.random((n, 1)) ** (1.0 / dim)
    pts = radius * u * (v / norms)
    if center is not None:
        pts = pts + np.asarray(center, dtype=float)
    return pts


def unit_sphere(rng, n, dim):
    """Uniform directions on the unit sphere."""
    v = rng.standard_normal((n, dim))
    norms = np.linalg.norm(v, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return v / norms
