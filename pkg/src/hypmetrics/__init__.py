"""Hyperbolic-type metrics on Euclidean domains.

Scale-invariant Cassinian, Gromov-hyperbolizing u, and distance-ratio
metrics, with Möbius-map machinery and numerical verification sweeps for
the inequalities relating them.
"""

from hypmetrics.analysis import (
    ConstantSolveResult,
    DistortionParams,
    VerificationReport,
    linear_dilatation,
    measure_distortion,
    solve_constant_c,
)
from hypmetrics.geom import (
    Ball,
    EnclosingBall,
    PuncturedSpace,
    PuncturedUnitBall,
    SampledDomain,
    UnitBall,
    boundary_product_inf,
    dist_to_boundary,
    jung_radius,
    min_enclosing_ball,
)
from hypmetrics.kernels import BACKEND as KERNEL_BACKEND
from hypmetrics.metrics import (
    EvalResult,
    OvalSpec,
    cassinian_oval,
    j_metric,
    tau_modulus_bound,
    tau_radial_closed_form,
    tau_tilde,
    u_metric,
    u_modulus_bound,
)
from hypmetrics.mobius import (
    MobiusMap,
    Orthogonal,
    Scaling,
    SphereInversion,
    Translation,
    punctured_ball_map,
    sphere_inversion_apply,
)

__version__ = "0.1.0"
