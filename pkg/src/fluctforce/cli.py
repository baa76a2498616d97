"""Command-line runner: scenario configs in, ScalarCurve CSVs out.

Subcommands: friction, eh, ness, propel, torque, relax, sweep.  All inputs
come from the config file and the flags below (environment variables are
never consulted); outputs are deterministic for a fixed seed and any thread
count.  Exit codes: 0 success, 2 config error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .config import ConfigError, ScenarioConfig, parse_config
from .curves import ScalarCurve, TOOL_VERSION
from .dynamics import (TensorPolarizability, _IabInterpolator,
                       _JabInterpolator, chiral_torque, janus_force_closed,
                       nonreciprocal_torque, propulsion_force,
                       small_wrench_torque)
from .friction import (ConvergenceError, Mechanism, NessQuery,
                       SurfaceScenario, einstein_hopf_force, ness_ratio,
                       slowdown_t0, surface_friction)
from .geometry import (DualFlag, DualWrench, JanusBall, TwoPartBody,
                       janus_iab_8pia, wrench_JAB_reduced)
from .kernels import planck_diff
from .materials import Dielectric, DrudeMetal, GyrotropicSphere, MonomialAbsorber, susceptibility_product
from .quadrature import BracketError, QuadratureSpec, ToleranceError, adaptive_gk
from .relaxation import (CoolingModel, RelaxationProblem, cooling_trajectory,
                         moment_of_inertia, terminal_angular_velocity,
                         terminal_velocity)
from .units import UNITS, KB_EV_PER_K, ThermalPair

_SWEEP_KINDS = {
    "velocity": ("velocity", "c"),
    "separation": ("length", "m"),
    "environment": ("temperature", "K"),
    "body": ("temperature", "K"),
    "omega_a": ("float", "1"),
    "u0": ("float", "1"),
}


def _metadata(cfg: ScenarioConfig, q: QuadratureSpec) -> dict:
    md = {
        "created": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "config-hash": cfg.config_hash(),
        "seed": q.rng_seed,
    }
    for i, line in enumerate(cfg.echo_lines()):
        md[f"cfg{i:03d}"] = line
    return md


def _sweep_grid(cfg: ScenarioConfig, default_var: str, lo: float, hi: float,
                count: int = 25, allowed: tuple = ()):
    var = cfg.get("sweep", "variable", default_var)
    if var not in _SWEEP_KINDS:
        raise ConfigError(f"unknown sweep variable {var!r} "
                          f"(known: {', '.join(sorted(_SWEEP_KINDS))})")
    if allowed and var not in allowed:
        raise ConfigError(f"this subcommand sweeps {' or '.join(allowed)}, "
                          f"not {var!r}")
    kind, unit = _SWEEP_KINDS[var]
    start = cfg.sweep_bound("start", kind, lo)
    stop = cfg.sweep_bound("stop", kind, hi)
    n = cfg.get("sweep", "count", count)
    scale = cfg.get("sweep", "scale", "linear")
    if scale == "log":
        if start <= 0:
            raise ConfigError("log sweep needs start > 0")
        values = np.geomspace(start, stop, n)
    elif scale == "linear":
        values = np.linspace(start, stop, n)
    else:
        raise ConfigError(f"unknown sweep scale {scale!r}")
    return var, unit, values


def _pmap(fn, items, threads: int):
    """Order-preserving parallel map; results identical for any thread count."""
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# --------------------------------------------------------------------------
# subcommand runners: each returns the list of files written

def run_friction(cfg, out: Path, threads: int, q: QuadratureSpec):
    mech = Mechanism(cfg.get("scenario", "mechanism", "image_lag"))
    alpha0 = UNITS.volume_to_natural(cfg.require("scenario", "alpha0"))
    sigma = cfg.require("scenario", "sigma_plate")
    sigma_p = cfg.get("scenario", "sigma_particle")
    var, unit, grid = _sweep_grid(cfg, "velocity", 1e-4, 0.05,
                                  allowed=("velocity", "separation"))

    def point(x):
        sep = x if var == "separation" else cfg.require("scenario", "separation")
        vel = x if var == "velocity" else cfg.get("scenario", "velocity", 1e-3)
        sc = SurfaceScenario(alpha0=alpha0, sigma_plate=sigma, separation=sep,
                             velocity=vel, mechanism=mech,
                             sigma_particle=sigma_p)
        return surface_friction(sc)

    forces = _pmap(point, grid, threads)
    curve = ScalarCurve(var, unit, "force", "N", grid, forces,
                        metadata=_metadata(cfg, q))
    path = out / "friction.csv"
    curve.write(path)
    return [path]


def run_eh(cfg, out: Path, threads: int, q: QuadratureSpec):
    alpha0 = UNITS.volume_to_natural(cfg.require("scenario", "alpha0"))
    vel = cfg.get("scenario", "velocity", 1e-3)
    model = MonomialAbsorber(3, alpha0**2 / (6.0 * math.pi))
    var, unit, grid = _sweep_grid(cfg, "environment", 10.0, 1000.0,
                                  allowed=("environment",))

    forces = _pmap(lambda t: einstein_hopf_force(model, t, vel,
                                                 rel_tol=q.rel_tol),
                   grid, threads)
    md = _metadata(cfg, q)
    paths = [out / "eh_force.csv"]
    ScalarCurve(var, unit, "force", "N", grid, forces, metadata=md).write(paths[0])
    mass = cfg.get("scenario", "mass")
    if mass is not None:
        t0s = [slowdown_t0(mass, alpha0, t) for t in grid]
        paths.append(out / "eh_slowdown.csv")
        ScalarCurve(var, unit, "t0", "s", grid, t0s, metadata=md).write(paths[1])
    return paths


def run_ness(cfg, out: Path, threads: int, q: QuadratureSpec):
    exponents = cfg.get("scenario", "exponents", (-6, -3, 3))
    var, unit, grid = _sweep_grid(cfg, "velocity", 0.0, 0.9, count=19,
                                  allowed=("velocity",))
    md = _metadata(cfg, q)
    paths = []
    for n in exponents:
        ratios = _pmap(lambda v, n=n: ness_ratio(NessQuery(n, v)), grid, threads)
        path = out / f"ness_n{n:+d}.csv"
        ScalarCurve(var, unit, "temperature_ratio", "1", grid, ratios,
                    metadata=md).write(path)
        paths.append(path)
    return paths


def _build_body(cfg) -> TwoPartBody:
    return TwoPartBody(cfg.geometry(), cfg.material("A"), cfg.material("B"))


def run_propel(cfg, out: Path, threads: int, q: QuadratureSpec):
    md = _metadata(cfg, q)
    var = cfg.get("sweep", "variable", "body")
    if var == "omega_a":
        _, unit, grid = _sweep_grid(cfg, "omega_a", 1e-3, 100.0,
                                    allowed=("omega_a",))
        vals = _pmap(lambda oa: janus_iab_8pia(oa, q), grid, threads)
        path = out / "janus_iab.csv"
        ScalarCurve("omega_a", "1", "abs_iab_8pia", "1", grid,
                    [abs(v.value) for v in vals],
                    errors=[v.error for v in vals], metadata=md).write(path)
        return [path]

    body = _build_body(cfg)
    if not isinstance(body.geometry, JanusBall):
        raise ConfigError("propel needs a janus geometry")
    if not isinstance(body.material_a, Dielectric) or \
            not isinstance(body.material_b, DrudeMetal):
        raise ConfigError("propel expects dielectric material.A over Drude "
                          "metal material.B")
    t_env = cfg.require("thermal", "environment")
    _, unit, grid = _sweep_grid(cfg, "body", max(1.0, t_env / 2),
                                2 * t_env, allowed=("body",))
    # one geometric cache serves the whole sweep
    omega_max = 60.0 * KB_EV_PER_K * max(grid.max(), t_env)
    iab = _IabInterpolator(body, omega_max, q)

    def force_at(t_body):
        th = ThermalPair(t_env, t_body)
        if th.equilibrium:
            return 0.0

        def integrand(w):
            return susceptibility_product(w, body.material_a, body.material_b) \
                * iab(w) * planck_diff(w, th)

        est = adaptive_gk(integrand, 0.0, omega_max, rel_tol=q.rel_tol,
                          abs_tol=0.0, max_subdivisions=q.max_subdivisions,
                          initial_panels=32)
        return UNITS.force_from_natural(4.0 / math.pi * est.value)

    forces = _pmap(force_at, grid, threads)
    fhats = [janus_force_closed(body.material_a.chi0, body.material_b,
                                body.geometry.radius,
                                ThermalPair(t_env, t)).f_hat for t in grid]
    p1, p2 = out / "janus_force.csv", out / "janus_fhat.csv"
    ScalarCurve("body", unit, "force", "N", grid, forces, metadata=md).write(p1)
    ScalarCurve("body", unit, "f_hat", "1", grid, fhats, metadata=md).write(p2)
    return [p1, p2]


def run_torque(cfg, out: Path, threads: int, q: QuadratureSpec):
    md = _metadata(cfg, q)
    t_env = cfg.require("thermal", "environment")

    if cfg.get("material.particle", "kind") == "gyrotropic" or \
            cfg.get("material.particle", "preset") is not None:
        sphere = cfg.material("particle")
        if not isinstance(sphere, GyrotropicSphere):
            raise ConfigError("nonreciprocal torque needs a gyrotropic "
                              "material.particle")
        alpha = TensorPolarizability.from_gyrotropic(sphere)
        _, unit, grid = _sweep_grid(cfg, "body", max(1.0, t_env / 2),
                                2 * t_env, allowed=("body",))

        def tz(t_body):
            est = nonreciprocal_torque(alpha, ThermalPair(t_env, t_body), q)
            return est.value[2]

        taus = _pmap(tz, grid, threads)
        path = out / "nonreciprocal.csv"
        ScalarCurve("body", unit, "torque_z", "N m", grid, taus,
                    metadata=md).write(path)
        return [path]

    geom = cfg.geometry()
    if not isinstance(geom, DualWrench):
        raise ConfigError("torque needs a wrench geometry (or a gyrotropic "
                          "material.particle)")

    if cfg.get("sweep", "variable") == "omega_a":
        _, unit, grid = _sweep_grid(cfg, "omega_a", 1e-2, 100.0)
        paths = []
        a_nat = UNITS.length_to_natural(geom.half_length)
        for frac in cfg.get("sweep", "b_over_a", (0.5, 1.0, 2.0)):
            def jhat(oa, frac=frac):
                w = oa / a_nat
                return wrench_JAB_reduced(
                    geom.half_length, frac * geom.half_length,
                    geom.cross_section_a, geom.cross_section_b, w, q).jhat

            vals = _pmap(jhat, grid, threads)
            path = out / f"jhat_b{frac:g}.csv"
            ScalarCurve("omega_a", "1", "jhat", "1", grid, vals,
                        metadata=md).write(path)
            paths.append(path)
        return paths

    body = _build_body(cfg)
    if not isinstance(body.material_a, DrudeMetal) or \
            not isinstance(body.material_b, Dielectric):
        raise ConfigError("torque expects Drude metal material.A (wire) and "
                          "dielectric material.B (tags)")
    _, unit, grid = _sweep_grid(cfg, "body", max(1.0, t_env / 2),
                                2 * t_env, allowed=("body",))
    omega_max = 60.0 * KB_EV_PER_K * max(grid.max(), t_env)
    jab = _JabInterpolator(geom, omega_max, q)

    def torque_at(t_body):
        th = ThermalPair(t_env, t_body)
        if th.equilibrium:
            return 0.0

        def integrand(w):
            return susceptibility_product(w, body.material_a, body.material_b) \
                * jab(w) * planck_diff(w, th)

        est = adaptive_gk(integrand, 0.0, omega_max, rel_tol=q.rel_tol,
                          abs_tol=0.0, max_subdivisions=q.max_subdivisions,
                          initial_panels=32)
        return UNITS.torque_from_natural(est.value / (4.0 * math.pi**3))

    taus = _pmap(torque_at, grid, threads)
    tauhats = [small_wrench_torque(
        body.material_b.chi0, body.material_a, geom.half_length,
        geom.tag_length, geom.cross_section_a, geom.cross_section_b,
        ThermalPair(t_env, t)).tau_hat for t in grid]
    p1, p2 = out / "wrench_torque.csv", out / "wrench_tauhat.csv"
    ScalarCurve("body", unit, "torque_z", "N m", grid, taus, metadata=md).write(p1)
    ScalarCurve("body", unit, "tau_hat", "1", grid, tauhats, metadata=md).write(p2)
    return [p1, p2]


def run_relax(cfg, out: Path, threads: int, q: QuadratureSpec):
    md = _metadata(cfg, q)
    body = _build_body(cfg)
    drive = cfg.get("scenario", "drive", "janus_closed")
    u0 = cfg.get("scenario", "u0", 2.0)
    t_env = cfg.require("thermal", "environment")
    force_like = drive in ("janus_closed", "propulsion")
    if force_like:
        mass = cfg.require("scenario", "mass")
        prob = RelaxationProblem(body, u0, t_env, drive, mass=mass)
    else:
        geom = body.geometry
        rho_b = cfg.get("scenario", "tag_mass_density", 2200.0)
        inertia = moment_of_inertia(geom, body.material_a.mass_density, rho_b)
        prob = RelaxationProblem(body, u0, t_env, drive,
                                 moment_of_inertia=inertia)
    cm = CoolingModel(prob.cooling_metal())
    ts, us = cooling_trajectory(u0, t_env, cm)
    p1 = out / "relax_trajectory.csv"
    ScalarCurve("time", "s", "temperature_ratio", "1", ts, us,
                metadata=md).write(p1)
    if force_like:
        res = terminal_velocity(prob, q)
        value, name, unit2 = res.velocity, "terminal_velocity", "m/s"
        extra = {"t_c_seconds": res.t_c, "ratio_integral": res.ratio_integral}
    else:
        res = terminal_angular_velocity(prob, q)
        value, name, unit2 = res.omega, "terminal_angular_velocity", "1/s"
        extra = {"prefactor_per_s": res.prefactor, "omega_hat": res.omega_hat}
    p2 = out / "relax_terminal.csv"
    ScalarCurve("u0", "1", name, unit2, np.array([u0]), np.array([value]),
                metadata={**md, **extra}).write(p2)
    return [p1, p2]


def run_sweep(cfg, out: Path, threads: int, q: QuadratureSpec):
    key = cfg.require("sweep", "key")
    values = cfg.require("sweep", "values")
    target = cfg.require("sweep", "target")
    if target not in _RUNNERS or target == "sweep":
        raise ConfigError(f"bad sweep target {target!r}")
    section, _, field = key.partition(".")
    if section == "material":
        section, _, rest = key.partition(".")
        sub, _, field = rest.partition(".")
        section = f"material.{sub}"
    if not field:
        raise ConfigError("sweep key must look like section.key")

    def run_point(item):
        i, val = item
        sub = ScenarioConfig(entries=dict(cfg.entries))
        sub.entries[(section, field)] = val
        subdir = out / f"point_{i:03d}"
        subdir.mkdir(parents=True, exist_ok=True)
        return _RUNNERS[target](sub, subdir, 1, sub.quadrature())

    written = _pmap(run_point, list(enumerate(values)), threads)
    return [p for paths in written for p in paths]


_RUNNERS = {
    "friction": run_friction,
    "eh": run_eh,
    "ness": run_ness,
    "propel": run_propel,
    "torque": run_torque,
    "relax": run_relax,
    "sweep": run_sweep,
}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fluctforce",
        description="Nonequilibrium fluctuational forces and torques on "
                    "small bodies")
    parser.add_argument("--version", action="version",
                        version=f"fluctforce {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _RUNNERS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="scenario config file")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--seed", type=int, default=None,
                       help="override the RNG seed")
        p.add_argument("--tol", type=float, default=None,
                       help="override the relative tolerance")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        cfg = parse_config(text)
        q = cfg.quadrature()
        if args.seed is not None:
            q = replace(q, rng_seed=args.seed)
            cfg.entries[("quadrature", "rng_seed")] = args.seed
        if args.tol is not None:
            q = replace(q, rel_tol=args.tol)
            cfg.entries[("quadrature", "rel_tol")] = args.tol
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        paths = _RUNNERS[args.command](cfg, out, args.threads, q)
    except (ConfigError, ValueError, TypeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (ToleranceError, BracketError, ConvergenceError,
            ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    for p in paths:
        print(p)
    return 0


if __name__ == "__main__":
    sys.exit(main())
