"""Command-line interface: solve, enumerate, validate, project, orbit, simulate.

Results are serialized to JSON or CSV with 17 significant digits so that
parsing an emitted file recovers the in-memory doubles exactly.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import dynamics, oracle
from .chart import (
    OrderingClass,
    ShapeAngles,
    classify_ordering,
    default_boundary_tol,
    project,
    seed_for_ordering,
    stereographic,
)
from .potential import PotentialLaw
from .solver import (
    CollinearConfiguration,
    SolverOptions,
    canonicalize,
    enumerate_all,
    solve_from_seed,
)
from .tetrahedron import MassQuadruple, build_tetrahedron, validate_tetrahedron


def fmt(x: float) -> str:
    """17 significant digits; lossless for IEEE doubles."""
    return f"{float(x):.17g}"


def dumps(obj, indent: int = 0) -> str:
    """JSON text with explicit float formatting."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        items = ",\n".join(f'{inner}"{k}": {dumps(v, indent + 1).lstrip()}' for k, v in obj.items())
        return f"{pad}{{\n{items}\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return pad + "[" + ", ".join(_scalar(v) for v in obj) + "]"
        items = ",\n".join(dumps(v, indent + 1) for v in obj)
        return f"{pad}[\n{items}\n{pad}]"
    return pad + _scalar(obj)


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return fmt(v)
    if v is None:
        return "null"
    return '"' + str(v) + '"'


def _parse_masses(text: str) -> MassQuadruple:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"need four comma-separated masses, got {len(parts)}")
    try:
        values = [float(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    for k, v in enumerate(values, start=1):
        if not (math.isfinite(v) and v > 0):
            raise argparse.ArgumentTypeError(f"mass #{k} must be positive, got {v}")
    return MassQuadruple(*values)


def _parse_class(text: str, masses: MassQuadruple) -> OrderingClass:
    """Ordering given either as body indices 1..4 or as the mass values."""
    tokens = text.split(",")
    if len(tokens) != 4:
        raise ValueError("ordering needs four comma-separated entries")
    values = [float(t) for t in tokens]
    if sorted(values) == [1.0, 2.0, 3.0, 4.0]:
        return OrderingClass(tuple(int(v) for v in values))
    mvals = list(masses.values)
    if sorted(values) != sorted(mvals) or len(set(mvals)) != 4:
        raise ValueError(
            f"ordering {text} matches neither body indices 1..4 nor the distinct mass values"
        )
    return OrderingClass(tuple(mvals.index(v) + 1 for v in values))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="moulton4",
        description="Collinear central configurations of the four-body problem.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--masses", type=_parse_masses, required=True,
                        help="four positive masses, comma separated")
        sp.add_argument("--law", type=float, default=1.0,
                        help="power-law exponent of the pair potential (default 1)")
        sp.add_argument("--rng-seed", type=int, default=20130706)
        sp.add_argument("--angle-tol", type=float, default=1e-13)
        sp.add_argument("--residual-tol", type=float, default=1e-11)
        sp.add_argument("--output", "-o", default=None, help="output path (default stdout)")

    sp = sub.add_parser("validate", help="check the mass tetrahedron invariants")
    common(sp)
    sp.add_argument("--format", choices=["json"], default="json")

    sp = sub.add_parser("solve", help="solve one ordering region")
    common(sp)
    sp.add_argument("--class", dest="ordering", required=True,
                    help="ordering by body index or mass value, e.g. 13,7,20,6")
    sp.add_argument("--format", choices=["json"], default="json")

    sp = sub.add_parser("enumerate", help="solve all twelve ordering classes")
    common(sp)
    sp.add_argument("--verify", action="store_true",
                    help="cross-validate against the direct gap solver")
    sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = sub.add_parser("project", help="shape-sphere grid with ordering labels (CSV)")
    common(sp)
    sp.add_argument("--grid", type=int, default=200, help="grid size per angle")
    sp.add_argument("--format", choices=["csv"], default="csv")

    sp = sub.add_parser("orbit", help="sample homographic conic orbits (CSV)")
    common(sp)
    sp.add_argument("--class", dest="ordering", required=True)
    sp.add_argument("--ecc", type=float, default=0.0, help="eccentricity in [0,1)")
    sp.add_argument("--psi0", type=float, default=0.0, help="orbit orientation angle")
    sp.add_argument("--semi-major", type=float, default=1.0)
    sp.add_argument("--samples", type=int, default=360)
    sp.add_argument("--format", choices=["csv"], default="csv")

    sp = sub.add_parser("simulate", help="integrate the reduced equations of motion")
    common(sp)
    sp.add_argument("--class", dest="ordering", required=True)
    sp.add_argument("--ecc", type=float, default=0.0)
    sp.add_argument("--psi0", type=float, default=0.0)
    sp.add_argument("--semi-major", type=float, default=1.0)
    sp.add_argument("--periods", type=float, default=1.0)
    sp.add_argument("--steps-per-period", type=int, default=10_000)
    sp.add_argument("--format", choices=["json", "csv"], default="json")

    return p


def _options(args) -> SolverOptions:
    return SolverOptions(
        angle_tol=args.angle_tol,
        residual_tol=args.residual_tol,
        rng_seed=args.rng_seed,
    )


def _config_dict(cfg: CollinearConfiguration, deviation: float | None = None) -> dict:
    d = {
        "theta": cfg.angles.theta,
        "phi": cfg.angles.phi,
        "r": list(cfg.r),
        "ordering": list(cfg.ordering.perm),
        "lambda": cfg.lam,
        "residual_theta": cfg.residual[0],
        "residual_phi": cfg.residual[1],
    }
    if deviation is not None:
        d["oracle_deviation"] = deviation
    return d


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _csv(rows, header: str) -> str:
    lines = [header]
    for row in rows:
        lines.append(",".join(fmt(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _solve_class(masses, cls, law, opts):
    T = build_tetrahedron(masses)
    seed = seed_for_ordering(T, cls.representative, opts.rng_seed)
    cfg = solve_from_seed(T, masses, seed, law, opts)
    return T, canonicalize(cfg, T, masses, law)


def run(args) -> str:
    masses = args.masses
    law = PotentialLaw(args.law)
    opts = _options(args)

    if args.command == "validate":
        T = build_tetrahedron(masses)
        report = validate_tetrahedron(T)
        return dumps({
            "masses": list(masses.values),
            "m": masses.m,
            "mu": masses.mu,
            "deviations": report.deviations,
            "tolerance": report.tolerance,
            "passed": report.passed,
        })

    if args.command == "solve":
        cls = _parse_class(args.ordering, masses)
        _, cfg = _solve_class(masses, cls, law, opts)
        return dumps({
            "masses": list(masses.values),
            "mu": masses.mu,
            "law_exponent": law.exponent,
            "configuration": _config_dict(cfg),
        })

    if args.command == "enumerate":
        configs = enumerate_all(masses, law, opts)
        deviations = [None] * len(configs)
        if args.verify:
            deviations = [
                oracle.cross_validate(c, oracle.moulton_direct_solve(masses, c.ordering, law))
                for c in configs
            ]
        if args.format == "csv":
            rows = []
            for c, dev in zip(configs, deviations):
                row = [c.angles.theta, c.angles.phi, *map(float, c.r),
                       c.ordering.label, c.lam, c.residual[0], c.residual[1]]
                if args.verify:
                    row.append(dev)
                rows.append(row)
            header = "theta,phi,r1,r2,r3,r4,ordering,lambda,residual_theta,residual_phi"
            if args.verify:
                header += ",oracle_deviation"
            return _csv(rows, header)
        return dumps({
            "masses": list(masses.values),
            "mu": masses.mu,
            "law_exponent": law.exponent,
            "configurations": [
                _config_dict(c, dev) for c, dev in zip(configs, deviations)
            ],
        })

    if args.command == "project":
        T = build_tetrahedron(masses)
        btol = default_boundary_tol(T)
        n = args.grid
        thetas = np.linspace(0.0, math.pi / 2.0, n)
        phis = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
        rows = []
        for th in thetas:
            for ph in phis:
                angles = ShapeAngles(float(th), float(ph))
                X, Y = stereographic(angles)
                cls = classify_ordering(project(T, angles), btol)
                if isinstance(cls, OrderingClass):
                    label, boundary = cls.representative.label, 0
                else:
                    label, boundary = f"r{cls.i}=r{cls.j}", 1
                rows.append([float(th), float(ph), X, Y, label, boundary])
        return _csv(rows, "theta,phi,X,Y,ordering_id,is_boundary")

    if args.command == "orbit":
        cls = _parse_class(args.ordering, masses)
        _, cfg = _solve_class(masses, cls, law, opts)
        orbit = dynamics.ConicOrbit(a=args.semi_major, epsilon=args.ecc,
                                    psi0=args.psi0, config=cfg)
        data = dynamics.homographic_orbit(orbit, args.samples)
        header = "psi," + ",".join(f"x{i},y{i}" for i in range(1, 5))
        return _csv([list(map(float, row)) for row in data], header)

    if args.command == "simulate":
        cls = _parse_class(args.ordering, masses)
        T, cfg = _solve_class(masses, cls, law, opts)
        if args.ecc == 0.0:
            state0 = dynamics.circular_state(cfg, masses, R=args.semi_major, law=law)
            period = dynamics.circular_period(cfg, R=args.semi_major, law=law)
        else:
            orbit = dynamics.ConicOrbit(a=args.semi_major, epsilon=args.ecc,
                                        psi0=args.psi0, config=cfg)
            state0 = dynamics.conic_state(orbit, masses, law=law)
            period = dynamics.conic_period(orbit)
        steps = max(1, round(args.steps_per_period * args.periods))
        dt = args.periods * period / steps
        traj = dynamics.integrate(state0, masses, T, law, dt=dt, steps=steps,
                                  sample_every=max(1, steps // 1000))
        if args.format == "csv":
            header = "t,R,psi,theta,phi,Rdot,psidot,thetadot,phidot"
            rows = [[float(t), *map(float, row)] for t, row in zip(traj.times, traj.states)]
            return _csv(rows, header)
        final = traj.states[-1]
        return dumps({
            "masses": list(masses.values),
            "law_exponent": law.exponent,
            "class": list(cls.representative.perm),
            "period": period,
            "dt": dt,
            "steps": steps,
            "ppsi_drift": traj.ppsi_drift,
            "energy_drift": traj.energy_drift,
            "truncated": traj.truncated,
            "final_state": {
                "R": final[0], "psi": final[1], "theta": final[2], "phi": final[3],
                "Rdot": final[4], "psidot": final[5],
                "thetadot": final[6], "phidot": final[7],
            },
        })

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = run(args)
    except BrokenPipeError:
        return 1
    except Exception as exc:
        print(f"moulton4: error: {exc}", file=sys.stderr)
        return 1
    try:
        _emit(text, args.output)
    except OSError as exc:
        print(f"moulton4: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
