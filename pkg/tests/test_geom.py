"""Domains, boundary distances, boundary product infima, enclosing balls."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypmetrics import geom
from hypmetrics.errors import (
    DimensionMismatch,
    EmptyInput,
    NonpositiveDiameter,
    PointOutsideDomain,
    PunctureOutsideBall,
)
from oracles import brute_force_enclosing_ball

B2 = geom.UnitBall(2)


def test_ball_boundary_distance():
    d = geom.Ball(np.array([1.0, -2.0]), 3.0)
    assert geom.dist_to_boundary(d, np.array([1.0, -2.0])) == pytest.approx(3.0)
    assert geom.dist_to_boundary(d, np.array([3.0, -2.0])) == pytest.approx(1.0)


def test_ball_rejects_outside_point():
    with pytest.raises(PointOutsideDomain):
        geom.dist_to_boundary(B2, np.array([1.0, 1.0]))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        geom.dist_to_boundary(B2, np.array([0.1, 0.1, 0.1]))


def test_punctured_ball_boundary_distance():
    d = geom.PuncturedUnitBall(np.array([0.5, 0.0]))
    x = np.array([0.4, 0.0])
    # nearer to the puncture than to the sphere
    assert geom.dist_to_boundary(d, x) == pytest.approx(0.1, abs=1e-12)
    y = np.array([-0.8, 0.0])
    assert geom.dist_to_boundary(d, y) == pytest.approx(0.2, abs=1e-12)


def test_punctured_ball_puncture_validation():
    with pytest.raises(PunctureOutsideBall):
        geom.PuncturedUnitBall(np.array([1.0, 0.0]))


def test_punctured_space_boundary_distance():
    d = geom.PuncturedSpace(np.array([1.0, 1.0]))
    assert geom.dist_to_boundary(d, np.array([1.0, 4.0])) == pytest.approx(3.0)


def test_boundary_product_witness_consistency():
    x = np.array([0.3, 0.1])
    y = np.array([-0.2, 0.5])
    val, wit = geom.boundary_product_inf(B2, x, y)
    p = np.asarray(wit)
    assert np.linalg.norm(p) == pytest.approx(1.0, abs=1e-9)
    assert val == pytest.approx(
        np.linalg.norm(x - p) * np.linalg.norm(y - p), rel=1e-12)


def test_boundary_product_coincident_is_squared_distance():
    x = np.array([0.25, -0.4])
    val, _ = geom.boundary_product_inf(B2, x, x.copy())
    dx = geom.dist_to_boundary(B2, x)
    assert val == pytest.approx(dx * dx, rel=1e-9)


@given(st.floats(-0.7, 0.7), st.floats(-0.7, 0.7),
       st.floats(-0.7, 0.7), st.floats(-0.7, 0.7))
@settings(max_examples=40, deadline=None)
def test_boundary_product_below_any_boundary_point(x0, x1, y0, y1):
    x = np.array([x0, x1])
    y = np.array([y0, y1])
    val, _ = geom.boundary_product_inf(B2, x, y)
    ang = np.linspace(0.0, 2.0 * math.pi, 512, endpoint=False)
    P = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    probe = np.min(np.linalg.norm(P - x, axis=1) * np.linalg.norm(P - y, axis=1))
    assert val <= probe + 1e-9


def test_polygon_domain_containment_and_distance():
    sq = geom.SampledDomain.from_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert sq.contains(np.array([0.5, 0.5]))
    assert not sq.contains(np.array([1.5, 0.5]))
    d = geom.dist_to_boundary(sq, np.array([0.5, 0.5]))
    assert d == pytest.approx(0.5, abs=1e-3)  # sampled boundary resolution
    assert sq.diameter() == pytest.approx(math.sqrt(2.0), abs=1e-6)


def test_min_enclosing_ball_right_triangle():
    # circumcenter of a right triangle is the hypotenuse midpoint
    ball = geom.min_enclosing_ball([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])
    assert ball.center == pytest.approx([0.5, 0.5], abs=1e-9)
    assert ball.radius == pytest.approx(math.sqrt(0.5), abs=1e-9)


def test_min_enclosing_ball_interior_points_ignored():
    pts = [(0.0, 0.0), (2.0, 0.0), (1.0, 0.1), (1.0, -0.1), (0.5, 0.0)]
    ball = geom.min_enclosing_ball(pts)
    assert ball.center == pytest.approx([1.0, 0.0], abs=1e-9)
    assert ball.radius == pytest.approx(1.0, abs=1e-9)


def test_min_enclosing_ball_duplicates_and_single_point():
    ball = geom.min_enclosing_ball([(1.0, 2.0)] * 4)
    assert ball.radius == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(EmptyInput):
        geom.min_enclosing_ball(np.empty((0, 2)))


@pytest.mark.parametrize("dim", [2, 3, 4, 5])
def test_min_enclosing_ball_vs_minimax_oracle(dim):
    rng = np.random.default_rng(100 + dim)
    P = rng.standard_normal((40, dim))
    ball = geom.min_enclosing_ball(P)
    # containment is exact by construction
    assert np.all(np.linalg.norm(P - ball.center, axis=1)
                  <= ball.radius * (1.0 + 1e-12))
    _, oracle_radius = brute_force_enclosing_ball(P)
    assert ball.radius <= oracle_radius + 1e-6
    assert ball.radius >= oracle_radius - 1e-6


def test_jung_radius():
    assert geom.jung_radius(1.0, 2) == pytest.approx(math.sqrt(1.0 / 3.0))
    assert geom.jung_radius(2.0, 3) == pytest.approx(2.0 * math.sqrt(3.0 / 8.0))
    with pytest.raises(NonpositiveDiameter):
        geom.jung_radius(0.0, 2)
    with pytest.raises(DimensionMismatch):
        geom.jung_radius(1.0, 0)


def test_jung_ball_contains_point_sets():
    rng = np.random.default_rng(11)
    for _ in range(20):
        P = rng.standard_normal((15, 3))
        dists = np.linalg.norm(P[:, None] - P[None, :], axis=2)
        diam = float(np.max(dists))
        ball = geom.min_enclosing_ball(P)
        assert ball.radius <= geom.jung_radius(diam, 3) + 1e-9


def test_sampling_stays_inside():
    rng = np.random.default_rng(3)
    for d in (B2, geom.Ball(np.array([2.0, 2.0]), 0.5),
              geom.PuncturedUnitBall(np.array([0.3, 0.0])),
              geom.SampledDomain.from_polygon([(0, 0), (1, 0), (0.5, 1.0)])):
        X = d.sample(500, rng)
        assert np.all(d.contains_batch(X))
