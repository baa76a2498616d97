"""Radiative heat exchange with the vacuum and its dynamical consequences:
cooling trajectories, and the terminal linear/angular velocities a small body
accumulates while it thermalizes (adiabatic drive, Dulong-Petit heat
capacity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .dynamics import (TensorPolarizability, _IabInterpolator, _JabInterpolator,
                       _max_omega, janus_force_closed, small_wrench_torque)
from .geometry import DualFlag, DualWrench, JanusBall, TwoPartBody
from .kernels import f_hat_diff, f_n, planck_diff
from .materials import Dielectric, DrudeMetal, Material, scalar_chi, susceptibility_product
from .quadrature import Estimate, QuadratureSpec, adaptive_gk, refine_gl
from .units import HBAR_C_EV_M, HBAR_EV_S, KB_EV_PER_K, ThermalPair, UNITS

__all__ = [
    "CoolingModel", "RelaxationProblem", "net_power", "p_of_u",
    "cooling_time", "CoolingTime", "cooling_trajectory", "terminal_velocity",
    "TerminalVelocity", "moment_of_inertia", "terminal_angular_velocity",
    "TerminalAngularVelocity",
]


@dataclass(frozen=True)
class CoolingModel:
    """Dulong-Petit body (C_V = 3 n per volume, valid T >> Debye temperature)
    radiating through a weak-susceptibility Drude model."""

    metal: DrudeMetal
    debye_temperature: float = 170.0  # gold

    def __post_init__(self):
        if self.metal.atom_density <= 0:
            raise ValueError("cooling model needs the metal atom density")

    def valid_at(self, temperature_K: float) -> bool:
        return temperature_K >= self.debye_temperature

    def t_c_seconds(self, temperature_K: float) -> float:
        """Cooling-time scale t_c = 3 pi^2 n T / (nu^3 wp^2), in seconds."""
        n_nat = UNITS.number_density_to_natural(self.metal.atom_density)
        t_ev = KB_EV_PER_K * temperature_K
        t_nat = 3.0 * math.pi**2 * n_nat * t_ev \
            / (self.metal.damping**3 * self.metal.plasma_freq**2)
        return t_nat * HBAR_EV_S


def net_power(alpha_model, th: ThermalPair, q: QuadratureSpec) -> Estimate:
    """Net power [W] absorbed by the body; positive iff T > T_prime.

    P = (1/3 pi^2) int_0^inf dw w^4 Im tr alpha(w) [n(w,T) - n(w,T')].
    ``alpha_model`` is a TensorPolarizability or a (Material, volume_m3)
    tuple treated at first order in the susceptibility.
    """
    if th.equilibrium:
        return Estimate(0.0, 0.0)
    if isinstance(alpha_model, tuple):
        mat, volume_m3 = alpha_model
        v_nat = UNITS.volume_to_natural(volume_m3)

        def im_tr(w):
            return 3.0 * v_nat * np.imag(scalar_chi(mat, w))
    elif isinstance(alpha_model, TensorPolarizability):
        def im_tr(w):
            out = np.empty_like(w)
            for i, wi in enumerate(np.atleast_1d(w)):
                out[i] = np.trace(alpha_model(wi)).imag
            return out
    else:
        raise TypeError("alpha_model must be TensorPolarizability or "
                        "(Material, volume_m3)")
    omega_max = _max_omega(th)

    def integrand(w):
        return w**4 * im_tr(w) * planck_diff(w, th)

    est = adaptive_gk(integrand, 0.0, omega_max, rel_tol=q.rel_tol,
                      abs_tol=0.0, max_subdivisions=q.max_subdivisions,
                      initial_panels=16)
    scale = UNITS.power_from_natural(1.0) / (3.0 * math.pi**2)
    if not math.isfinite(est.value):
        raise ArithmeticError("net power integral is not finite")
    return Estimate(est.value * scale, est.error * scale)


def p_of_u(u, temperature_K: float, metal: DrudeMetal):
    """Dimensionless cooling power p(u, T) = f_3(beta nu) - f_3(beta nu / u)
    for body temperature T' = u T; vanishes only at u = 1."""
    y = metal.damping / (KB_EV_PER_K * temperature_K)
    f3_env = f_n(3, y)
    u_arr = np.atleast_1d(np.asarray(u, dtype=float))
    out = np.empty_like(u_arr)
    for i, ui in enumerate(u_arr):
        out[i] = 0.0 if ui == 1.0 else f3_env - f_n(3, y / ui)
    return out if np.ndim(u) else float(out[0])


class CoolingTime(NamedTuple):
    duration: float  # [s]
    t_c: float       # [s]


def cooling_time(u0: float, u1: float, temperature_K: float,
                 cm: CoolingModel) -> CoolingTime:
    """Time [s] for the body to pass from T'/T = u0 to u1 by radiation alone.

    Requires u0 >= u1 > 1 (cooling) or u0 <= u1 < 1 (heating); the interval
    must not cross u = 1, where the exchange power vanishes.
    """
    if u0 == u1:
        return CoolingTime(0.0, cm.t_c_seconds(temperature_K))
    cooling = u0 > 1.0
    if cooling and not (u0 > u1 > 1.0):
        raise ValueError("cooling requires u0 > u1 > 1")
    if not cooling and not (u0 < u1 < 1.0):
        raise ValueError("heating requires u0 < u1 < 1")
    t_c = cm.t_c_seconds(temperature_K)

    def integrand(u):
        return 1.0 / p_of_u(u, temperature_K, cm.metal)

    est = adaptive_gk(integrand, u0, u1, rel_tol=1e-8, abs_tol=0.0,
                      max_subdivisions=2000, initial_panels=8)
    return CoolingTime(t_c * est.value, t_c)


def cooling_trajectory(u0: float, temperature_K: float, cm: CoolingModel,
                       points: int = 120, approach: float = 1e-3):
    """Temperature-ratio history u(t): arrays (t_seconds, u), from u0 down
    (or up) to 1 + (u0-1)*approach."""
    if u0 == 1.0:
        return np.array([0.0]), np.array([1.0])
    u_end = 1.0 + (u0 - 1.0) * approach
    # geometric approach to u = 1 resolves the late exponential tail
    frac = np.geomspace(1.0, approach, points)
    us = 1.0 + (u0 - 1.0) * frac
    t_c = cm.t_c_seconds(temperature_K)
    ts = np.empty_like(us)
    ts[0] = 0.0
    for i in range(1, points):
        est = adaptive_gk(lambda u: 1.0 / p_of_u(u, temperature_K, cm.metal),
                          us[i - 1], us[i], rel_tol=1e-8, abs_tol=0.0,
                          max_subdivisions=400, initial_panels=2)
        ts[i] = ts[i - 1] + t_c * est.value
    return ts, us


@dataclass(frozen=True)
class RelaxationProblem:
    """A body thermalizing from T' = u0*T with a force or torque drive.

    ``drive`` chooses the law fed into Newton's law: "janus_closed" or
    "propulsion" (force; needs ``mass``), "wrench_closed" or "chiral"
    (torque; needs ``moment_of_inertia``).
    """

    body: TwoPartBody
    u0: float
    temperature_K: float
    drive: str
    mass: float | None = None                # [kg]
    moment_of_inertia: float | None = None   # [kg m^2]

    def __post_init__(self):
        if self.u0 <= 0:
            raise ValueError("u0 must be positive")
        force_like = self.drive in ("janus_closed", "propulsion")
        torque_like = self.drive in ("wrench_closed", "chiral")
        if not (force_like or torque_like):
            raise ValueError(f"unknown drive {self.drive!r}")
        geom = self.body.geometry
        if force_like and not isinstance(geom, JanusBall):
            raise ValueError("force drives apply to the Janus ball")
        if torque_like and not isinstance(geom, (DualWrench, DualFlag)):
            raise ValueError("torque drives apply to wrench/flag bodies")
        if force_like and not self.mass:
            raise ValueError("force drive needs the body mass")
        if torque_like and not self.moment_of_inertia:
            raise ValueError("torque drive needs the moment of inertia")

    def cooling_metal(self) -> DrudeMetal:
        for m in (self.body.material_a, self.body.material_b):
            if isinstance(m, DrudeMetal):
                return m
        raise ValueError("relaxation needs a Drude metal part")


def _u_integral(fn, u0: float, rel_tol: float) -> Estimate:
    """int_{u0}^{1} du fn(u) with the removable 0/0 endpoint at u = 1 left
    open (interior Gauss nodes only)."""
    if u0 == 1.0:
        return Estimate(0.0, 0.0)
    est = refine_gl(fn, u0, 1.0, rel_tol=rel_tol, start_panels=8, order=12)
    return est


class TerminalVelocity(NamedTuple):
    velocity: float   # [m/s], signed (z component)
    t_c: float        # [s]
    ratio_integral: float  # int_{u0}^{1} du F/(F0 p) style dimensionless core


def terminal_velocity(problem: RelaxationProblem, q: QuadratureSpec) -> TerminalVelocity:
    """Terminal speed v_T = (t_c/m) int_{u0}^{1} du F(u,T)/p(u,T) [m/s].

    The integrand is finite at u -> 1 (force and cooling power vanish
    together); with a hot dielectric/metal Janus ball the result points
    toward the metal side.
    """
    metal = problem.cooling_metal()
    cm = CoolingModel(metal)
    t_c = cm.t_c_seconds(problem.temperature_K)
    tt = problem.temperature_K
    if problem.u0 == 1.0:
        return TerminalVelocity(0.0, t_c, 0.0)

    if problem.drive == "janus_closed":
        chi_a, radius = _janus_closed_args(problem.body)
        pref = janus_force_closed(chi_a, metal, radius,
                                  ThermalPair(tt, 2 * tt)).prefactor
        y = metal.damping / (KB_EV_PER_K * tt)

        def ratio(u):
            out = np.empty_like(u)
            for i, ui in enumerate(u):
                out[i] = (f_n(7, y) - f_n(7, y / ui)) / (f_n(3, y) - f_n(3, y / ui))
            return out

        core = _u_integral(ratio, problem.u0, max(q.rel_tol, 1e-8))
        v = t_c * pref * core.value / problem.mass
        return TerminalVelocity(v, t_c, core.value)

    # full spectral drive: F(u) from the propulsion quadrature
    th_hot = ThermalPair(tt, max(problem.u0, 1.0 / problem.u0) * tt)
    omega_max = _max_omega(th_hot)
    iab = _IabInterpolator(problem.body, omega_max, q)
    body = problem.body

    def force_newton(u):
        th = ThermalPair(tt, u * tt)

        def integrand(w):
            return susceptibility_product(w, body.material_a, body.material_b) \
                * iab(w) * planck_diff(w, th)

        est = adaptive_gk(integrand, 0.0, omega_max, rel_tol=q.rel_tol,
                          abs_tol=0.0, max_subdivisions=q.max_subdivisions,
                          initial_panels=16)
        return UNITS.force_from_natural(4.0 / math.pi * est.value)

    def ratio(u):
        out = np.empty_like(u)
        for i, ui in enumerate(u):
            out[i] = force_newton(ui) / p_of_u(ui, tt, metal)
        return out

    core = _u_integral(ratio, problem.u0, max(q.rel_tol, 1e-6))
    v = t_c * core.value / problem.mass
    return TerminalVelocity(v, t_c, core.value)


def _janus_closed_args(body: TwoPartBody):
    geom = body.geometry
    if not isinstance(geom, JanusBall):
        raise ValueError("closed-form force drive needs a Janus ball")
    if isinstance(body.material_a, Dielectric) and \
            isinstance(body.material_b, DrudeMetal):
        return body.material_a.chi0, geom.radius
    raise ValueError("closed form expects dielectric A over Drude metal B")


def moment_of_inertia(geom: DualWrench, rho_a: float, rho_b: float) -> float:
    """Wrench moment of inertia about its center:
    I = rho_A S_A (2/3) a^3 + rho_B S_B 2 b (a^2 + b^2/3)  [kg m^2]."""
    a, b = geom.half_length, geom.tag_length
    return rho_a * geom.cross_section_a * (2.0 / 3.0) * a**3 \
        + rho_b * geom.cross_section_b * 2.0 * b * (a**2 + b**2 / 3.0)


class TerminalAngularVelocity(NamedTuple):
    omega: float       # [1/s], signed
    prefactor: float   # t_c tau0 / I [1/s]
    omega_hat: float   # dimensionless integral of tauhat/p


def terminal_angular_velocity(problem: RelaxationProblem,
                              q: QuadratureSpec) -> TerminalAngularVelocity:
    """Terminal angular velocity omega_T = (t_c tau0/I) omega_hat with
    omega_hat = int_{u0}^{1} du tauhat(u,T)/p(u,T)  [1/s]."""
    metal = problem.cooling_metal()
    cm = CoolingModel(metal)
    tt = problem.temperature_K
    t_c = cm.t_c_seconds(tt)
    geom = problem.body.geometry
    if not isinstance(geom, DualWrench):
        raise ValueError("angular drive needs the dual wrench")
    chi_b = _wrench_tag_chi(problem.body)
    closed = small_wrench_torque(chi_b, metal, geom.half_length,
                                 geom.tag_length, geom.cross_section_a,
                                 geom.cross_section_b, ThermalPair(tt, 2 * tt))
    pref = t_c * closed.tau0 / problem.moment_of_inertia
    if problem.u0 == 1.0:
        return TerminalAngularVelocity(0.0, pref, 0.0)
    y = metal.damping / (KB_EV_PER_K * tt)

    if problem.drive == "wrench_closed":
        def ratio(u):
            out = np.empty_like(u)
            for i, ui in enumerate(u):
                out[i] = (f_n(9, y) - f_n(9, y / ui)) / (f_n(3, y) - f_n(3, y / ui))
            return out
    else:
        th_hot = ThermalPair(tt, max(problem.u0, 1.0 / problem.u0) * tt)
        omega_max = _max_omega(th_hot)
        jab = _JabInterpolator(geom, omega_max, q)
        body = problem.body

        def torque_over_tau0(u):
            th = ThermalPair(tt, u * tt)

            def integrand(w):
                return susceptibility_product(w, body.material_a,
                                              body.material_b) \
                    * jab(w) * planck_diff(w, th)

            est = adaptive_gk(integrand, 0.0, omega_max, rel_tol=q.rel_tol,
                              abs_tol=0.0, max_subdivisions=q.max_subdivisions,
                              initial_panels=16)
            return UNITS.torque_from_natural(est.value / (4.0 * math.pi**3)) \
                / closed.tau0

        def ratio(u):
            out = np.empty_like(u)
            for i, ui in enumerate(u):
                out[i] = torque_over_tau0(ui) / p_of_u(ui, tt, metal)
            return out

    core = _u_integral(ratio, problem.u0, max(q.rel_tol, 1e-6))
    return TerminalAngularVelocity(pref * core.value, pref, core.value)


def _wrench_tag_chi(body: TwoPartBody) -> float:
    if isinstance(body.material_b, Dielectric):
        return body.material_b.chi0
    raise ValueError("wrench tags must be a dispersionless dielectric")
