"""Rigid orthocentric tetrahedron carrying the four masses.

The four masses sit at the vertices of a tetrahedron whose inertia tensor is
isotropic (E M E^T = mu * I).  All collinear shapes are obtained later by
projecting this rigid body onto a direction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MassDomainError


def reduced_mass(m1: float, m2: float, m3: float, m4: float) -> float:
    """Mass scale mu = cbrt(m1*m2*m3*m4 / (m1+m2+m3+m4))."""
    for k, v in enumerate((m1, m2, m3, m4), start=1):
        if not (math.isfinite(v) and v > 0.0):
            raise MassDomainError(k, v)
    return float(np.cbrt(m1 * m2 * m3 * m4 / (m1 + m2 + m3 + m4)))


@dataclass(frozen=True)
class MassQuadruple:
    """Four positive point masses (G = 1)."""

    m1: float
    m2: float
    m3: float
    m4: float

    def __post_init__(self):
        for k, v in enumerate(self.values, start=1):
            if not (math.isfinite(v) and v > 0.0):
                raise MassDomainError(k, v)

    @property
    def values(self) -> tuple[float, float, float, float]:
        return (self.m1, self.m2, self.m3, self.m4)

    @property
    def m(self) -> float:
        """Total mass."""
        return self.m1 + self.m2 + self.m3 + self.m4

    @property
    def mu(self) -> float:
        """Reduced mass cbrt(m1*m2*m3*m4 / m)."""
        return reduced_mass(*self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    @classmethod
    def from_iterable(cls, masses) -> "MassQuadruple":
        vals = list(masses)
        if len(vals) != 4:
            raise ValueError(f"need exactly four masses, got {len(vals)}")
        return cls(*map(float, vals))


@dataclass(frozen=True)
class ShapeTetrahedron:
    """3x4 vertex matrix E of the mass tetrahedron, columns are vertices."""

    E: np.ndarray
    masses: MassQuadruple

    def __post_init__(self):
        E = np.array(self.E, dtype=float)
        if E.shape != (3, 4):
            raise ValueError(f"E must be 3x4, got {E.shape}")
        object.__setattr__(self, "E", E)
        self.E.setflags(write=False)


def build_tetrahedron(masses: MassQuadruple) -> ShapeTetrahedron:
    """Place the tetrahedron in its reference position.

    Bodies 1 and 2 lie in the a = 0 plane, bodies 3 and 4 in the c = 0
    plane; each pair is joined by a segment parallel to a coordinate axis
    and the mass centroid is at the origin.
    """
    m1, m2, m3, m4 = masses.values
    m = masses.m
    mu = masses.mu
    m12 = m1 + m2
    m34 = m3 + m4
    b_up = math.sqrt(mu * m34 / (m * m12))
    b_dn = math.sqrt(mu * m12 / (m * m34))
    E = np.array(
        [
            [0.0, 0.0, math.sqrt(mu * m4 / (m3 * m34)), -math.sqrt(mu * m3 / (m4 * m34))],
            [b_up, b_up, -b_dn, -b_dn],
            [math.sqrt(mu * m2 / (m1 * m12)), -math.sqrt(mu * m1 / (m2 * m12)), 0.0, 0.0],
        ]
    )
    return ShapeTetrahedron(E=E, masses=masses)


@dataclass(frozen=True)
class TetrahedronReport:
    """Maximal relative deviations of the tetrahedron invariants."""

    centroid: float
    inertia: float
    edges: float
    volume: float
    tolerance: float = 1e-12

    @property
    def deviations(self) -> dict[str, float]:
        return {
            "centroid": self.centroid,
            "inertia": self.inertia,
            "edges": self.edges,
            "volume": self.volume,
        }

    @property
    def passed(self) -> bool:
        return all(d <= self.tolerance for d in self.deviations.values())


def volume(T: ShapeTetrahedron) -> float:
    """Unsigned volume of the tetrahedron."""
    e = T.E
    span = e[:, 1:] - e[:, :1]
    return abs(np.linalg.det(span)) / 6.0


def validate_tetrahedron(T: ShapeTetrahedron, tolerance: float = 1e-12) -> TetrahedronReport:
    """Check centroid, isotropic inertia, edge lengths and unit determinant."""
    E = np.asarray(T.E, dtype=float)
    mvec = T.masses.as_array()
    mu = T.masses.mu

    centroid = np.abs(E @ mvec).max() / (T.masses.m * max(np.abs(E).max(), 1e-300))
    inertia = np.abs(E @ np.diag(mvec) @ E.T - mu * np.eye(3)).max() / mu

    edge_dev = 0.0
    for i in range(4):
        for j in range(i + 1, 4):
            target = mu * (1.0 / mvec[i] + 1.0 / mvec[j])
            got = float(np.sum((E[:, i] - E[:, j]) ** 2))
            edge_dev = max(edge_dev, abs(got - target) / target)

    vol_dev = abs(volume(T) - 1.0 / 6.0) * 6.0
    return TetrahedronReport(
        centroid=float(centroid),
        inertia=float(inertia),
        edges=float(edge_dev),
        volume=float(vol_dev),
        tolerance=tolerance,
    )
