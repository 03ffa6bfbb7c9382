"""Alternating one-angle solver for the twelve collinear configurations.

Inside a fixed ordering region the restricted potential tends to -infinity at
every boundary, so its unique interior critical point can be bracketed along
any coordinate line.  We alternate bracketed root finds in theta and phi and
finish with a two-dimensional Newton polish.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .chart import (
    Boundary,
    OrderingClass,
    ShapeAngles,
    canonical_classes,
    classify_ordering,
    default_boundary_tol,
    project,
    seed_for_ordering,
)
from .errors import ConvergenceError, EnumerationError, RegionExitError
from .potential import (
    NEWTON,
    PAIRS,
    PotentialLaw,
    angular_residuals,
    lambda_multiplier,
    potential_value,
    residual_scale,
)
from .tetrahedron import MassQuadruple, ShapeTetrahedron, build_tetrahedron

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SolverOptions:
    angle_tol: float = 1e-13
    residual_tol: float = 1e-11
    max_sweeps: int = 200
    newton_polish: bool = True
    rng_seed: int = 20130706

    def __post_init__(self):
        if self.angle_tol <= 0 or self.residual_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be >= 1")


@dataclass(frozen=True)
class CollinearConfiguration:
    """Solved central configuration in one ordering region."""

    angles: ShapeAngles
    r: np.ndarray
    ordering: OrderingClass
    lam: float
    residual: tuple[float, float]
    iterations: int


def _ordering_of(T: ShapeTetrahedron, theta: float, phi: float) -> tuple[int, ...]:
    r = project(T, ShapeAngles(theta, phi))
    return tuple(np.argsort(-r))


def _theta_bounds(T: ShapeTetrahedron, theta0: float, phi: float) -> tuple[float, float]:
    """Region interval along the theta line through (theta0, phi).

    Each pair difference is P*cos(theta) + Q*sin(theta); its zeros are spaced
    pi apart and mark the great-circle crossings.
    """
    a, b, c = T.E
    lo, hi = 0.0, math.pi
    for i, j in PAIRS:
        P = a[i] - a[j]
        Q = (b[i] - b[j]) * math.cos(phi) + (c[i] - c[j]) * math.sin(phi)
        if P == 0.0 and Q == 0.0:
            continue
        z = math.atan2(-P, Q) % math.pi
        for zero in (z - math.pi, z, z + math.pi):
            if zero < theta0:
                lo = max(lo, zero)
            elif zero > theta0:
                hi = min(hi, zero)
    return lo, hi


def _phi_bounds(T: ShapeTetrahedron, theta: float, phi0: float) -> tuple[float, float]:
    """Region interval along the phi circle at fixed theta (phi unwrapped)."""
    a, b, c = T.E
    sin_th, cos_th = math.sin(theta), math.cos(theta)
    lo, hi = phi0 - TWO_PI, phi0 + TWO_PI
    bounded = False
    for i, j in PAIRS:
        C = (a[i] - a[j]) * cos_th
        P = (b[i] - b[j]) * sin_th
        Q = (c[i] - c[j]) * sin_th
        rho = math.hypot(P, Q)
        if rho == 0.0 or abs(C) > rho:
            continue
        alpha = math.atan2(Q, P)
        delta = math.acos(max(-1.0, min(1.0, -C / rho)))
        for base in (alpha - delta, alpha + delta):
            k = math.floor((phi0 - base) / TWO_PI)
            for zero in (base + k * TWO_PI, base + (k + 1) * TWO_PI):
                if zero < phi0:
                    lo = max(lo, zero)
                    bounded = True
                elif zero > phi0:
                    hi = min(hi, zero)
                    bounded = True
    if not bounded:
        return phi0 - math.pi, phi0 + math.pi
    return lo, hi


def _solve_line(f, value_fn, lo: float, hi: float) -> float:
    """Root of f in (lo, hi); falls back to maximizing V if no sign change."""
    width = hi - lo
    if width <= 0.0:
        raise RegionExitError("degenerate region interval")
    delta = 1e-9 * width
    a, b = lo + delta, hi - delta
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb < 0.0:
        return brentq(f, a, b, xtol=1e-15, rtol=8.9e-16, maxiter=200)
    res = minimize_scalar(
        lambda x: -value_fn(x), bounds=(a, b), method="bounded",
        options={"xatol": 1e-14},
    )
    return float(res.x)


def solve_from_seed(
    T: ShapeTetrahedron,
    masses: MassQuadruple,
    seed: ShapeAngles,
    law: PotentialLaw = NEWTON,
    opts: SolverOptions = SolverOptions(),
) -> CollinearConfiguration:
    """Converge to the central configuration of the seed's ordering region."""
    btol = default_boundary_tol(T)
    seed_cls = classify_ordering(project(T, seed), btol)
    if isinstance(seed_cls, Boundary):
        raise RegionExitError(f"seed lies on boundary r{seed_cls.i} = r{seed_cls.j}")
    home = tuple(np.array(seed_cls.perm) - 1)

    scale = residual_scale(masses)

    def F(theta: float, phi: float) -> tuple[float, float]:
        return angular_residuals(T, masses, ShapeAngles(theta, phi), law)

    def V(theta: float, phi: float) -> float:
        return potential_value(masses, project(T, ShapeAngles(theta, phi)), law)

    th, ph = seed.theta, seed.phi
    sweep_tol = max(opts.angle_tol, 1e-9) if opts.newton_polish else opts.angle_tol
    iterations = 0
    for sweep in range(opts.max_sweeps):
        iterations = sweep + 1
        lo, hi = _theta_bounds(T, th, ph)
        th_new = _solve_line(lambda x: F(x, ph)[0], lambda x: V(x, ph), lo, hi)
        lo, hi = _phi_bounds(T, th_new, ph)
        ph_new = _solve_line(lambda x: F(th_new, x)[1], lambda x: V(th_new, x), lo, hi)
        change = max(abs(th_new - th), abs(ph_new - ph))
        th, ph = th_new, ph_new
        if change < sweep_tol:
            if opts.newton_polish:
                break
            f_th, f_ph = F(th, ph)
            if max(abs(f_th), abs(f_ph)) < opts.residual_tol * scale:
                break
    else:
        if not opts.newton_polish:
            raise ConvergenceError(
                f"no convergence after {opts.max_sweeps} sweeps in region {seed_cls.label}"
            )

    if opts.newton_polish:
        th, ph, polish_iters = _newton_polish(T, F, th, ph, home, scale)
        iterations += polish_iters

    angles = ShapeAngles(th, ph)
    r = project(T, angles)
    cls = classify_ordering(r, btol)
    if isinstance(cls, Boundary) or not cls.same_class(seed_cls):
        raise RegionExitError(f"iterate left region {seed_cls.label}")
    f_th, f_ph = F(angles.theta, angles.phi)
    if max(abs(f_th), abs(f_ph)) >= opts.residual_tol * scale:
        raise ConvergenceError(
            f"residual {max(abs(f_th), abs(f_ph)):.3e} above tolerance in {seed_cls.label}"
        )
    return CollinearConfiguration(
        angles=angles,
        r=r,
        ordering=cls,
        lam=lambda_multiplier(masses, r, law),
        residual=(abs(f_th), abs(f_ph)),
        iterations=iterations,
    )


def _newton_polish(T, F, th, ph, home, scale, max_iter: int = 30):
    h = 1e-7
    for it in range(max_iter):
        f0 = np.array(F(th, ph))
        if np.abs(f0).max() < 1e-15 * scale:
            return th, ph, it
        J = np.empty((2, 2))
        J[:, 0] = (np.array(F(th + h, ph)) - np.array(F(th - h, ph))) / (2 * h)
        J[:, 1] = (np.array(F(th, ph + h)) - np.array(F(th, ph - h))) / (2 * h)
        try:
            step = np.linalg.solve(J, -f0)
        except np.linalg.LinAlgError:
            return th, ph, it
        norm = np.abs(step).max()
        if norm > 0.1:
            step *= 0.1 / norm
        lam = 1.0
        for _ in range(25):
            th_n, ph_n = th + lam * step[0], ph + lam * step[1]
            if 0.0 < th_n < math.pi and _ordering_of(T, th_n, ph_n) == home:
                f1 = np.array(F(th_n, ph_n))
                if np.abs(f1).max() < np.abs(f0).max() or lam < 1e-3:
                    break
            lam *= 0.5
        else:
            return th, ph, it
        if max(abs(th_n - th), abs(ph_n - ph)) < 1e-16:
            return th_n, ph_n, it + 1
        th, ph = th_n, ph_n
    return th, ph, max_iter


def canonicalize(
    config: CollinearConfiguration,
    T: ShapeTetrahedron,
    masses: MassQuadruple,
    law: PotentialLaw = NEWTON,
) -> CollinearConfiguration:
    """Map to the antipodal representative with the smaller leading body."""
    if config.ordering.canonical:
        return config
    angles = config.angles.antipode()
    r = project(T, angles)
    return replace(
        config,
        angles=angles,
        r=r,
        ordering=config.ordering.reversed,
        lam=lambda_multiplier(masses, r, law),
    )


def enumerate_all(
    masses: MassQuadruple,
    law: PotentialLaw = NEWTON,
    opts: SolverOptions = SolverOptions(),
) -> list[CollinearConfiguration]:
    """One solved configuration per antipodal ordering class (12 total)."""
    T = build_tetrahedron(masses)
    results: list[CollinearConfiguration] = []
    failures: dict[str, Exception] = {}
    for cls in canonical_classes():
        try:
            seed = seed_for_ordering(T, cls, opts.rng_seed)
            cfg = solve_from_seed(T, masses, seed, law, opts)
            results.append(canonicalize(cfg, T, masses, law))
        except Exception as exc:  # aggregated below with the class named
            failures[cls.label] = exc
    if failures:
        raise EnumerationError(failures)
    seen = {cfg.ordering.perm for cfg in results}
    if len(seen) != 12:
        raise EnumerationError(
            {"duplicates": RuntimeError(f"only {len(seen)} distinct classes")}
        )
    return sorted(results, key=lambda c: c.ordering.perm)
