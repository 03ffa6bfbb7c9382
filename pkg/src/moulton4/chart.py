"""Two-angle chart of the collinear shape sphere.

A direction (theta, phi) projects the mass tetrahedron onto a line; the four
projected coordinates r_i define a collinear shape.  Strict orderings of the
r_i tile the sphere in 24 open spherical triangles (12 antipodal classes).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ProjectionInfinityError, SeedSearchError
from .tetrahedron import ShapeTetrahedron

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ShapeAngles:
    """Point on the shape sphere: theta in [0, pi], phi in [0, 2*pi)."""

    theta: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("angles must be finite")
        object.__setattr__(self, "theta", min(max(self.theta, 0.0), math.pi))
        object.__setattr__(self, "phi", self.phi % TWO_PI)

    def antipode(self) -> "ShapeAngles":
        return ShapeAngles(math.pi - self.theta, self.phi + math.pi)


@dataclass(frozen=True)
class OrderingClass:
    """Body indices (1..4) sorted by strictly decreasing r."""

    perm: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.perm) != [1, 2, 3, 4]:
            raise ValueError(f"not a permutation of 1..4: {self.perm}")

    @property
    def reversed(self) -> "OrderingClass":
        return OrderingClass(self.perm[::-1])

    @property
    def canonical(self) -> bool:
        """True when this is the class representative (smaller leading body)."""
        return self.perm[0] < self.perm[-1]

    @property
    def representative(self) -> "OrderingClass":
        return self if self.canonical else self.reversed

    def same_class(self, other: "OrderingClass") -> bool:
        return self.perm == other.perm or self.perm == other.perm[::-1]

    @property
    def label(self) -> str:
        return ">".join(str(k) for k in self.perm)


@dataclass(frozen=True)
class Boundary:
    """Great-circle point where bodies i and j project to the same coordinate."""

    i: int
    j: int


def canonical_classes() -> list[OrderingClass]:
    """The 12 class representatives, in lexicographic order."""
    out = [
        OrderingClass(p)
        for p in itertools.permutations((1, 2, 3, 4))
        if p[0] < p[-1]
    ]
    return sorted(out, key=lambda c: c.perm)


def direction(angles: ShapeAngles) -> np.ndarray:
    th, ph = angles.theta, angles.phi
    return np.array([math.cos(th), math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph)])


def project(T: ShapeTetrahedron, angles: ShapeAngles) -> np.ndarray:
    """Line coordinates r_i of the four bodies for the given direction."""
    return direction(angles) @ T.E


def tangents(T: ShapeTetrahedron, angles: ShapeAngles) -> tuple[np.ndarray, np.ndarray]:
    """Tangent 4-vectors s = dr/dtheta and t with sin(theta)*t = dr/dphi."""
    th, ph = angles.theta, angles.phi
    a, b, c = T.E
    s = -a * math.sin(th) + b * math.cos(th) * math.cos(ph) + c * math.cos(th) * math.sin(ph)
    t = -b * math.sin(ph) + c * math.cos(ph)
    return s, t


def classify_ordering(r: np.ndarray, tol: float) -> OrderingClass | Boundary:
    """Strict decreasing ordering of r, or the colliding pair within tol."""
    r = np.asarray(r, dtype=float)
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(r[i] - r[j]) <= tol:
                return Boundary(i + 1, j + 1)
    order = np.argsort(-r)
    return OrderingClass(tuple(int(k) + 1 for k in order))


def default_boundary_tol(T: ShapeTetrahedron) -> float:
    return 1e-9 * math.sqrt(T.masses.mu)


def min_pair_gap(r: np.ndarray) -> float:
    rs = np.sort(np.asarray(r, dtype=float))
    return float(np.diff(rs).min())


def sample_orderings(T: ShapeTetrahedron, n: int, rng: np.random.Generator):
    """Uniform sphere samples with their projections; vectorized helper.

    Returns (theta, phi, r) with r of shape (n, 4).
    """
    cos_th = rng.uniform(-1.0, 1.0, n)
    theta = np.arccos(cos_th)
    phi = rng.uniform(0.0, TWO_PI, n)
    sin_th = np.sin(theta)
    dirs = np.stack([cos_th, sin_th * np.cos(phi), sin_th * np.sin(phi)], axis=1)
    return theta, phi, dirs @ T.E


def seed_for_ordering(
    T: ShapeTetrahedron,
    target: OrderingClass,
    rng_seed: int,
    budget: int = 100_000,
) -> ShapeAngles:
    """Deterministic interior point of the target ordering region.

    Rejection-samples the sphere and keeps the hit with the largest minimal
    pairwise gap, then sharpens it on a local grid.  The result has
    min |r_i - r_j| > 1e-3 * sqrt(mu).
    """
    rng = np.random.default_rng(rng_seed)
    mu = T.masses.mu
    gap_floor = 1e-3 * math.sqrt(mu)
    want = np.array(target.perm) - 1

    chunk = 4096
    drawn = 0
    best: tuple[float, float, float] | None = None  # (gap, theta, phi)
    while drawn < budget:
        n = min(chunk, budget - drawn)
        drawn += n
        theta, phi, r = sample_orderings(T, n, rng)
        hits = np.all(np.argsort(-r, axis=1) == want, axis=1)
        if not hits.any():
            continue
        r_hit = r[hits]
        gaps = np.diff(np.sort(r_hit, axis=1), axis=1).min(axis=1)
        k = int(np.argmax(gaps))
        cand = (float(gaps[k]), float(theta[hits][k]), float(phi[hits][k]))
        if best is None or cand[0] > best[0]:
            best = cand
        if best[0] > gap_floor:
            break
    if best is None:
        raise SeedSearchError(f"no sample hit region {target.label} in {budget} draws")

    # local grid refinement toward the region interior
    gap, th0, ph0 = best
    span = 0.05
    for _ in range(3):
        ths = np.clip(np.linspace(th0 - span, th0 + span, 7), 1e-6, math.pi - 1e-6)
        phs = np.linspace(ph0 - span, ph0 + span, 7)
        for th in ths:
            for ph in phs:
                r = project(T, ShapeAngles(th, ph))
                if tuple(np.argsort(-r)) != tuple(want):
                    continue
                g = min_pair_gap(r)
                if g > gap:
                    gap, th0, ph0 = g, float(th), float(ph % TWO_PI)
        span /= 3.0
    if gap <= gap_floor:
        raise SeedSearchError(
            f"region {target.label} too thin: best gap {gap:.3e} <= {gap_floor:.3e}"
        )
    return ShapeAngles(th0, ph0)


def stereographic(angles: ShapeAngles) -> tuple[float, float]:
    """Projection from the pole theta = pi onto the equatorial plane."""
    if angles.theta >= math.pi:
        raise ProjectionInfinityError("theta = pi projects to infinity")
    rho = math.tan(angles.theta / 2.0)
    return rho * math.cos(angles.phi), rho * math.sin(angles.phi)
