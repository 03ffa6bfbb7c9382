"""Collinear interaction potential and the central-configuration residuals.

All shape-level quantities fix the overall scale factor R = 1; the
central-configuration conditions do not depend on it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chart import ShapeAngles, project, tangents
from .errors import CollisionSingularityError
from .tetrahedron import MassQuadruple, ShapeTetrahedron

PAIRS = [(i, j) for i in range(4) for j in range(i + 1, 4)]


@dataclass(frozen=True)
class PotentialLaw:
    """Attractive pair potential -m_i m_j / |r_i - r_j|**exponent."""

    exponent: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.exponent) and self.exponent > 0.0):
            raise ValueError(f"exponent must be positive, got {self.exponent}")


NEWTON = PotentialLaw(1.0)


def _check_separations(r: np.ndarray) -> None:
    for i, j in PAIRS:
        if r[i] == r[j]:
            raise CollisionSingularityError(i + 1, j + 1)


def potential_value(masses: MassQuadruple, r: np.ndarray, law: PotentialLaw = NEWTON) -> float:
    """V = -sum_{i<j} m_i m_j / |r_i - r_j|**a (always negative)."""
    r = np.asarray(r, dtype=float)
    _check_separations(r)
    mvec = masses.values
    a = law.exponent
    return -sum(
        mvec[i] * mvec[j] / abs(r[i] - r[j]) ** a for i, j in PAIRS
    )


def potential_gradient(masses: MassQuadruple, r: np.ndarray, law: PotentialLaw = NEWTON) -> np.ndarray:
    """Component-wise dV/dr_i; the components sum to zero."""
    r = np.asarray(r, dtype=float)
    _check_separations(r)
    mvec = masses.values
    a = law.exponent
    g = np.zeros(4)
    for i, j in PAIRS:
        d = r[i] - r[j]
        f = a * mvec[i] * mvec[j] * math.copysign(abs(d) ** -(a + 1.0), d)
        g[i] += f
        g[j] -= f
    return g


def lambda_multiplier(masses: MassQuadruple, r: np.ndarray, law: PotentialLaw = NEWTON) -> float:
    """Multiplier lambda = sum_i r_i dV/dr_i / mu = -a V / mu > 0."""
    r = np.asarray(r, dtype=float)
    g = potential_gradient(masses, r, law)
    return float(np.dot(r, g) / masses.mu)


def angular_residuals(
    T: ShapeTetrahedron,
    masses: MassQuadruple,
    angles: ShapeAngles,
    law: PotentialLaw = NEWTON,
) -> tuple[float, float]:
    """(F_theta, F_phi): projections of the gradient on the chart tangents.

    Both vanish exactly at a central configuration.
    """
    r = project(T, angles)
    g = potential_gradient(masses, r, law)
    s, t = tangents(T, angles)
    return float(np.dot(s, g)), float(np.dot(t, g))


def residual_scale(masses: MassQuadruple) -> float:
    """Natural magnitude of the angular residuals: sum m_i m_j / mu."""
    mvec = masses.values
    return sum(mvec[i] * mvec[j] for i, j in PAIRS) / masses.mu
