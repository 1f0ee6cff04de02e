"""Möbius atoms, the punctured-ball automorphism, JSON round-tripping."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypmetrics import mobius
from hypmetrics.errors import PoleInput, PunctureOutsideBall


def test_inversion_is_involution():
    rng = np.random.default_rng(2)
    inv = mobius.SphereInversion(np.array([2.0, 0.5]), 1.3)
    X = rng.standard_normal((200, 2))
    back = inv.apply_batch(inv.apply_batch(X))
    assert np.max(np.linalg.norm(back - X, axis=1)) < 1e-12


def test_inversion_fixes_its_sphere():
    inv = mobius.SphereInversion(np.array([1.0, 1.0]), 2.0)
    ang = np.linspace(0, 2 * math.pi, 64, endpoint=False)
    P = inv.center + inv.radius * np.stack([np.cos(ang), np.sin(ang)], axis=1)
    assert np.max(np.linalg.norm(inv.apply_batch(P) - P, axis=1)) < 1e-12


def test_inversion_pole_raises_with_atom_index():
    m = mobius.MobiusMap((mobius.Translation(np.array([1.0, 0.0])),
                          mobius.SphereInversion(np.array([1.0, 0.0]), 1.0)))
    with pytest.raises(PoleInput) as exc:
        mobius.apply(m, np.array([0.0, 0.0]))
    assert exc.value.atom_index == 1


def test_distance_identity_random():
    rng = np.random.default_rng(9)
    for _ in range(100):
        c = rng.standard_normal(3) * 2.0
        r = 0.5 + rng.random()
        x = c + rng.standard_normal(3)
        y = c + rng.standard_normal(3)
        assert mobius.verify_distance_identity(c, r, x, y) < 1e-10


@given(st.floats(0.05, 0.95), st.floats(0.0, 2 * math.pi))
@settings(max_examples=60, deadline=None)
def test_punctured_ball_map_swaps_and_preserves(na, angle):
    a = na * np.array([math.cos(angle), math.sin(angle)])
    f = mobius.punctured_ball_map(a)
    assert np.linalg.norm(mobius.apply(f, np.zeros(2)) - a) < 1e-12
    assert np.linalg.norm(mobius.apply(f, a)) < 1e-12
    # involution
    x = np.array([0.3, -0.2])
    assert np.linalg.norm(mobius.apply(f, mobius.apply(f, x)) - x) < 1e-12
    # unit sphere preserved
    ang = np.linspace(0, 2 * math.pi, 32, endpoint=False)
    S = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    assert np.max(np.abs(np.linalg.norm(mobius.apply_batch(f, S), axis=1)
                         - 1.0)) < 1e-12


def test_punctured_ball_map_keeps_ball_inside():
    a = np.array([0.6, 0.1, -0.2])
    f = mobius.punctured_ball_map(a)
    rng = np.random.default_rng(4)
    v = rng.standard_normal((500, 3))
    X = v / np.linalg.norm(v, axis=1, keepdims=True) \
        * rng.random((500, 1)) ** (1 / 3) * 0.999
    assert np.all(np.linalg.norm(mobius.apply_batch(f, X), axis=1) < 1.0)


def test_punctured_ball_map_zero_is_identity():
    f = mobius.punctured_ball_map(np.zeros(2))
    x = np.array([0.4, -0.7])
    assert np.array_equal(mobius.apply(f, x), x)


def test_punctured_ball_map_rejects_outside_puncture():
    with pytest.raises(PunctureOutsideBall):
        mobius.punctured_ball_map(np.array([1.0, 0.0]))


def test_orthogonal_reorthonormalizes_drifted_matrix():
    q = np.array([[math.cos(0.3), -math.sin(0.3)],
                  [math.sin(0.3), math.cos(0.3)]])
    drifted = q + 1e-8 * np.ones((2, 2))
    atom = mobius.Orthogonal(drifted)
    assert np.max(np.abs(atom.matrix.T @ atom.matrix - np.eye(2))) < 1e-14
    X = np.random.default_rng(0).standard_normal((50, 2))
    norms = np.linalg.norm(atom.apply_batch(X), axis=1)
    assert np.allclose(norms, np.linalg.norm(X, axis=1), atol=1e-12)


def test_json_round_trip():
    m = mobius.MobiusMap((
        mobius.Translation(np.array([1.0, -2.0])),
        mobius.Scaling(0.5),
        mobius.Orthogonal(np.array([[0.0, -1.0], [1.0, 0.0]])),
        mobius.SphereInversion(np.array([3.0, 0.0]), 1.5),
    ))
    spec = mobius.map_to_json(m)
    m2 = mobius.map_from_json(json.dumps(spec))
    X = np.random.default_rng(1).standard_normal((100, 2))
    assert np.array_equal(mobius.apply_batch(m, X), mobius.apply_batch(m2, X))


def test_json_unknown_kind_rejected():
    with pytest.raises(ValueError):
        mobius.map_from_json({"chain": [{"kind": "shear"}]})


def test_chain_must_be_nonempty():
    with pytest.raises(ValueError):
        mobius.MobiusMap(())
