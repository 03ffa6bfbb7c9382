"""Direct solver in plain line coordinates, independent of the angle chart.

Positions are parameterized by the three positive gaps between consecutive
bodies of the requested ordering; the gaps are solved in log space by a
damped Gauss-Newton iteration.  Nothing here touches the chart or the
alternating solver, so the two routes can cross-check each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ClassMismatchError, ConvergenceError
from .chart import OrderingClass
from .potential import NEWTON, PotentialLaw
from .solver import CollinearConfiguration
from .tetrahedron import MassQuadruple


@dataclass(frozen=True)
class LineConfiguration:
    """Central configuration solved directly on the line."""

    x: np.ndarray
    ordering: OrderingClass
    lam: float
    residual: float
    iterations: int


def _positions_from_gaps(masses: np.ndarray, order: np.ndarray, gaps: np.ndarray, mu: float):
    """Positions for the given descending order, centered and normalized."""
    x = np.zeros(4)
    x[order[1:]] = -np.cumsum(gaps)
    x -= np.dot(masses, x) / masses.sum()
    x *= math.sqrt(mu / np.dot(masses, x * x))
    return x


def _grad(masses: np.ndarray, x: np.ndarray, a: float) -> tuple[np.ndarray, float]:
    """(dV/dx, V) by explicit pair enumeration."""
    g = np.zeros(4)
    V = 0.0
    for i in range(4):
        for j in range(i + 1, 4):
            d = x[i] - x[j]
            V -= masses[i] * masses[j] / abs(d) ** a
            f = a * masses[i] * masses[j] * math.copysign(abs(d) ** -(a + 1.0), d)
            g[i] += f
            g[j] -= f
    return g, V


def moulton_direct_solve(
    masses: MassQuadruple,
    ordering: OrderingClass,
    law: PotentialLaw = NEWTON,
    max_iter: int = 100,
    tol: float = 1e-12,
) -> LineConfiguration:
    """Solve dV/dx_i = lambda m_i x_i for the given strict ordering."""
    mvec = masses.as_array()
    mu = masses.mu
    a = law.exponent
    order = np.array(ordering.perm) - 1

    def residual(u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        # first gap pinned to 1: the normalization removes the overall scale
        gaps = np.concatenate(([1.0], np.exp(u)))
        x = _positions_from_gaps(mvec, order, gaps, mu)
        g, V = _grad(mvec, x, a)
        lam = -a * V / mu
        return g - lam * mvec * x, x

    u = np.zeros(2)  # equal gap ratios
    res, x = residual(u)
    g_scale = np.abs(_grad(mvec, x, a)[0]).max()
    h = 1e-7
    for it in range(1, max_iter + 1):
        if np.abs(res).max() < tol * g_scale:
            g, V = _grad(mvec, x, a)
            return LineConfiguration(
                x=x,
                ordering=ordering,
                lam=-a * V / mu,
                residual=float(np.abs(res).max()),
                iterations=it - 1,
            )
        J = np.empty((4, 2))
        for k in range(2):
            up = u.copy()
            up[k] += h
            um = u.copy()
            um[k] -= h
            J[:, k] = (residual(up)[0] - residual(um)[0]) / (2 * h)
        step, *_ = np.linalg.lstsq(J, -res, rcond=None)
        norm = np.abs(step).max()
        if norm > 2.0:
            step *= 2.0 / norm
        damp = 1.0
        for _ in range(30):
            res_new, x_new = residual(u + damp * step)
            if np.abs(res_new).max() < np.abs(res).max():
                break
            damp *= 0.5
        else:
            raise ConvergenceError(f"oracle stalled in region {ordering.label}")
        u = u + damp * step
        res, x = res_new, x_new
        g_scale = np.abs(_grad(mvec, x, a)[0]).max()
    raise ConvergenceError(
        f"oracle did not converge in {max_iter} iterations for {ordering.label}"
    )


def cross_validate(config: CollinearConfiguration, oracle_cfg: LineConfiguration) -> float:
    """Max-abs position deviation after aligning antipodal signs."""
    if config.ordering.perm == oracle_cfg.ordering.perm:
        x = oracle_cfg.x
    elif config.ordering.perm == oracle_cfg.ordering.perm[::-1]:
        x = -oracle_cfg.x
    else:
        raise ClassMismatchError(
            f"{config.ordering.label} vs {oracle_cfg.ordering.label}"
        )
    return float(np.abs(config.r - x).max())
