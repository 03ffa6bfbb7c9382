"""Collinear central configurations of the four-body problem."""

from .chart import (
    Boundary,
    OrderingClass,
    ShapeAngles,
    canonical_classes,
    classify_ordering,
    project,
    seed_for_ordering,
    stereographic,
    tangents,
)
from .dynamics import ConicOrbit, ReducedState, homographic_orbit, integrate
from .oracle import LineConfiguration, cross_validate, moulton_direct_solve
from .potential import (
    NEWTON,
    PotentialLaw,
    angular_residuals,
    lambda_multiplier,
    potential_gradient,
    potential_value,
)
from .solver import (
    CollinearConfiguration,
    SolverOptions,
    canonicalize,
    enumerate_all,
    solve_from_seed,
)
from .tetrahedron import (
    MassQuadruple,
    ShapeTetrahedron,
    build_tetrahedron,
    reduced_mass,
    validate_tetrahedron,
)

__version__ = "0.1.0"

__all__ = [
    "Boundary",
    "CollinearConfiguration",
    "ConicOrbit",
    "LineConfiguration",
    "MassQuadruple",
    "NEWTON",
    "OrderingClass",
    "PotentialLaw",
    "ReducedState",
    "ShapeAngles",
    "ShapeTetrahedron",
    "SolverOptions",
    "angular_residuals",
    "build_tetrahedron",
    "canonical_classes",
    "canonicalize",
    "classify_ordering",
    "cross_validate",
    "enumerate_all",
    "homographic_orbit",
    "integrate",
    "lambda_multiplier",
    "moulton_direct_solve",
    "potential_gradient",
    "potential_value",
    "project",
    "reduced_mass",
    "seed_for_ordering",
    "solve_from_seed",
    "stereographic",
    "tangents",
    "validate_tetrahedron",
]
