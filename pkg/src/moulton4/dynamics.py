"""Reduced equations of motion in (R, psi, theta, phi) and homographic orbits.

The scale R and rotation psi carry the orbital motion; theta and phi carry
the shape.  At a central configuration the shape forcing vanishes and the
(R, psi) pair reduces to a two-body conic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chart import ShapeAngles, project
from .potential import NEWTON, PotentialLaw, potential_value
from .solver import CollinearConfiguration
from .tetrahedron import MassQuadruple, ShapeTetrahedron

TWO_PI = 2.0 * math.pi
POLE_MARGIN = 1e-6


@dataclass(frozen=True)
class ReducedState:
    """Scale, rotation and shape angles with their time derivatives."""

    R: float
    psi: float
    theta: float
    phi: float
    Rdot: float
    psidot: float
    thetadot: float
    phidot: float

    def __post_init__(self):
        vals = (self.R, self.psi, self.theta, self.phi,
                self.Rdot, self.psidot, self.thetadot, self.phidot)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("state entries must be finite")
        if self.R <= 0.0:
            raise ValueError(f"R must be positive, got {self.R}")

    def as_array(self) -> np.ndarray:
        return np.array([self.R, self.psi, self.theta, self.phi,
                         self.Rdot, self.psidot, self.thetadot, self.phidot])

    @classmethod
    def from_array(cls, y: np.ndarray) -> "ReducedState":
        return cls(*map(float, y))


@dataclass(frozen=True)
class ConicOrbit:
    """Homographic conic R(psi) attached to a solved configuration."""

    a: float
    epsilon: float
    psi0: float
    config: CollinearConfiguration

    def __post_init__(self):
        if self.a <= 0.0:
            raise ValueError("semi-major axis must be positive")
        if not 0.0 <= self.epsilon < 1.0:
            raise ValueError("eccentricity must lie in [0, 1)")


def conserved_quantities(
    state: ReducedState, masses: MassQuadruple, T: ShapeTetrahedron,
    law: PotentialLaw = NEWTON,
) -> tuple[float, float]:
    """(P_psi, E): angular momentum of the line rotation and total energy."""
    mu = masses.mu
    R = state.R
    W = potential_value(masses, project(T, ShapeAngles(state.theta, state.phi)), law)
    V = W / R ** law.exponent
    ppsi = mu * R * R * state.psidot
    kin = 0.5 * mu * (
        state.Rdot ** 2
        + R * R * (state.psidot ** 2
                   + state.phidot ** 2 * math.sin(state.theta) ** 2
                   + state.thetadot ** 2)
    )
    return ppsi, kin + V


def _make_rhs(masses: MassQuadruple, T: ShapeTetrahedron, law: PotentialLaw):
    """Scalar-arithmetic right-hand side; hot path of the integrator."""
    mu = masses.mu
    a = law.exponent
    mvals = masses.values
    av, bv, cv = (tuple(float(v) for v in row) for row in T.E)
    pairs = [(i, j, mvals[i] * mvals[j]) for i in range(4) for j in range(i + 1, 4)]

    def rhs(y):
        R, _, th, ph = y[0], y[1], y[2], y[3]
        Rdot, psidot, thetadot, phidot = y[4], y[5], y[6], y[7]
        sin_th, cos_th = math.sin(th), math.cos(th)
        if abs(sin_th) < POLE_MARGIN:
            raise ValueError("state too close to the chart pole sin(theta) = 0")
        sin_ph, cos_ph = math.sin(ph), math.cos(ph)

        r = [av[i] * cos_th + bv[i] * sin_th * cos_ph + cv[i] * sin_th * sin_ph
             for i in range(4)]
        s = [-av[i] * sin_th + bv[i] * cos_th * cos_ph + cv[i] * cos_th * sin_ph
             for i in range(4)]
        t = [-bv[i] * sin_ph + cv[i] * cos_ph for i in range(4)]

        W = 0.0
        g = [0.0, 0.0, 0.0, 0.0]
        for i, j, mm in pairs:
            d = r[i] - r[j]
            if d == 0.0:
                raise ValueError(f"bodies {i + 1} and {j + 1} collided")
            W -= mm / abs(d) ** a
            f = a * mm * math.copysign(abs(d) ** -(a + 1.0), d)
            g[i] += f
            g[j] -= f

        Ra = R ** a
        dV_dR = -a * W / (Ra * R)
        dV_dth = sum(s[i] * g[i] for i in range(4)) / Ra
        dV_dph = sin_th * sum(t[i] * g[i] for i in range(4)) / Ra

        omega2 = psidot * psidot + phidot * phidot * sin_th * sin_th + thetadot * thetadot
        Rddot = R * omega2 - dV_dR / mu
        psiddot = -2.0 * Rdot * psidot / R
        thddot = (phidot * phidot * sin_th * cos_th
                  - 2.0 * Rdot * thetadot / R
                  - dV_dth / (mu * R * R))
        phddot = (-dV_dph / (mu * R * R * sin_th * sin_th)
                  - 2.0 * Rdot * phidot / R
                  - 2.0 * thetadot * phidot * cos_th / sin_th)
        return (Rdot, psidot, thetadot, phidot, Rddot, psiddot, thddot, phddot)

    return rhs


def derivatives(
    state: ReducedState, masses: MassQuadruple, T: ShapeTetrahedron,
    law: PotentialLaw = NEWTON,
) -> np.ndarray:
    """Time derivative of the 8-component state vector."""
    return np.array(_make_rhs(masses, T, law)(state.as_array()))


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray  # (n+1, 8) rows of ReducedState components
    ppsi_drift: float
    energy_drift: float
    truncated: bool
    truncated_at: int | None = None


def integrate(
    state0: ReducedState,
    masses: MassQuadruple,
    T: ShapeTetrahedron,
    law: PotentialLaw = NEWTON,
    dt: float = 1e-3,
    steps: int = 1000,
    collision_threshold: float = 1e-8,
    sample_every: int = 1,
) -> Trajectory:
    """Fixed-step classical 4th-order integration with a drift report.

    Stops early (flagged) when the smallest scaled pair separation
    R*|r_i - r_j| falls below collision_threshold or the chart pole is
    approached.
    """
    rhs = _make_rhs(masses, T, law)
    mu = masses.mu
    a = law.exponent

    def conserved(y) -> tuple[float, float]:
        R, th, ph = y[0], y[2], y[3]
        r = project(T, ShapeAngles(th, ph))
        W = potential_value(masses, r, law)
        kin = 0.5 * mu * (y[4] ** 2 + R * R * (
            y[5] ** 2 + y[7] ** 2 * math.sin(th) ** 2 + y[6] ** 2))
        return mu * R * R * y[5], kin + W / R ** a

    y = tuple(state0.as_array())
    ppsi0, e0 = conserved(y)
    ppsi_scale = max(abs(ppsi0), 1e-300)
    e_scale = max(abs(e0), 1e-300)

    times = [0.0]
    samples = [y]
    ppsi_drift = 0.0
    energy_drift = 0.0
    truncated = False
    truncated_at: int | None = None
    idx = range(8)
    half = 0.5 * dt
    sixth = dt / 6.0

    for n in range(1, steps + 1):
        try:
            k1 = rhs(y)
            k2 = rhs([y[i] + half * k1[i] for i in idx])
            k3 = rhs([y[i] + half * k2[i] for i in idx])
            k4 = rhs([y[i] + dt * k3[i] for i in idx])
        except ValueError:
            truncated, truncated_at = True, n - 1
            break
        y = tuple(y[i] + sixth * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]) for i in idx)

        R, th = y[0], y[2]
        if R <= 0.0 or abs(math.sin(th)) < POLE_MARGIN:
            truncated, truncated_at = True, n
            break
        r = project(T, ShapeAngles(th, y[3]))
        gap = R * float(np.diff(np.sort(r)).min())
        if gap < collision_threshold:
            truncated, truncated_at = True, n
            times.append(n * dt)
            samples.append(y)
            break

        ppsi, e = conserved(y)
        ppsi_drift = max(ppsi_drift, abs(ppsi - ppsi0) / ppsi_scale)
        energy_drift = max(energy_drift, abs(e - e0) / e_scale)
        if n % sample_every == 0 or n == steps:
            times.append(n * dt)
            samples.append(y)

    return Trajectory(
        times=np.array(times),
        states=np.array(samples),
        ppsi_drift=ppsi_drift,
        energy_drift=energy_drift,
        truncated=truncated,
        truncated_at=truncated_at,
    )


def circular_state(
    config: CollinearConfiguration, masses: MassQuadruple, R: float = 1.0,
    law: PotentialLaw = NEWTON,
) -> ReducedState:
    """Uniformly rotating state: R stays constant, shape angles frozen."""
    psidot = math.sqrt(config.lam / R ** (law.exponent + 2.0))
    return ReducedState(R=R, psi=0.0, theta=config.angles.theta, phi=config.angles.phi,
                        Rdot=0.0, psidot=psidot, thetadot=0.0, phidot=0.0)


def circular_period(config: CollinearConfiguration, R: float = 1.0,
                    law: PotentialLaw = NEWTON) -> float:
    return TWO_PI / math.sqrt(config.lam / R ** (law.exponent + 2.0))


def conic_state(
    orbit: ConicOrbit, masses: MassQuadruple, psi: float = 0.0,
    law: PotentialLaw = NEWTON,
) -> ReducedState:
    """State on the homographic conic at rotation angle psi (Newtonian only)."""
    if law.exponent != 1.0:
        raise ValueError("conic orbits require the Newtonian exponent a = 1")
    cfg = orbit.config
    p = orbit.a * (1.0 - orbit.epsilon ** 2)
    ppsi = masses.mu * math.sqrt(cfg.lam * p)
    R = conic_radius(orbit, psi)
    psidot = ppsi / (masses.mu * R * R)
    Rdot = -(ppsi / masses.mu) * orbit.epsilon * math.sin(psi - orbit.psi0) / p
    return ReducedState(R=R, psi=psi, theta=cfg.angles.theta, phi=cfg.angles.phi,
                        Rdot=Rdot, psidot=psidot, thetadot=0.0, phidot=0.0)


def conic_period(orbit: ConicOrbit) -> float:
    """Radial period of the elliptic homographic orbit (Newtonian)."""
    return TWO_PI * math.sqrt(orbit.a ** 3 / orbit.config.lam)


def conic_radius(orbit: ConicOrbit, psi: float) -> float:
    """R = a(1 - eps^2) / (1 - eps*cos(psi - psi0))."""
    denom = 1.0 - orbit.epsilon * math.cos(psi - orbit.psi0)
    if denom <= 0.0:
        raise ValueError("conic denominator not positive; eccentricity >= 1 unsupported")
    return orbit.a * (1.0 - orbit.epsilon ** 2) / denom


def homographic_orbit(orbit: ConicOrbit, samples: int) -> np.ndarray:
    """Planar coordinates of the four bodies over one turn of psi.

    Returns an array of shape (samples, 9): psi, then (x_i, y_i) for each
    body.  The four tracks are similar conics sharing a focus at the origin.
    """
    if samples < 2:
        raise ValueError("need at least two samples")
    psis = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    R = orbit.a * (1.0 - orbit.epsilon ** 2) / (
        1.0 - orbit.epsilon * np.cos(psis - orbit.psi0)
    )
    r = orbit.config.r
    out = np.empty((samples, 9))
    out[:, 0] = psis
    for i in range(4):
        out[:, 1 + 2 * i] = R * np.cos(psis) * r[i]
        out[:, 2 + 2 * i] = R * np.sin(psis) * r[i]
    return out
