"""Nonequilibrium vacuum observables: self-propulsive force on a two-part
body, its Janus-ball closed form, the first-order torque on a nonreciprocal
body, and the second-order chiral torque with its small-wrench closed form.

Every operation vanishes at thermal equilibrium; the two-material ones also
vanish for a homogeneous body (X_AB = 0), and the first-order torque vanishes
for reciprocal (symmetric) susceptibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy.interpolate import PchipInterpolator

from .geometry import (DualWrench, GenericPair, DualFlag, JanusBall,
                       TwoPartBody, VectorEstimate, mc_pair_oracle,
                       pair_integral_IAB, wrench_JAB_reduced)
from .kernels import f_hat_diff, planck_diff
from .materials import (Dielectric, DrudeMetal, GyrotropicSphere, Material,
                        susceptibility_product)
from .quadrature import Estimate, QuadratureSpec, adaptive_gk
from .units import HBAR_C_EV_M, KB_EV_PER_K, ThermalPair, UNITS

__all__ = [
    "TensorPolarizability", "DimensionlessDrive", "propulsion_force",
    "JanusClosed", "janus_force_closed", "antihermitian_part",
    "nonreciprocal_torque", "chiral_torque", "WrenchClosed",
    "small_wrench_torque",
]


@dataclass(frozen=True)
class TensorPolarizability:
    """Body polarizability alpha_jk(omega): the volume integral of the
    susceptibility tensor, as a callable omega -> 3x3 complex matrix in
    natural units (eV^-3).

    Satisfies alpha(-omega) = conj(alpha(omega)); for reciprocal media the
    matrix is symmetric and the first-order torque vanishes.
    """

    fn: Callable[[float], np.ndarray]

    def __call__(self, omega: float) -> np.ndarray:
        return np.asarray(self.fn(omega), dtype=complex)

    @classmethod
    def from_material_volume(cls, mat: Material, volume_m3: float):
        v_nat = UNITS.volume_to_natural(volume_m3)
        from .materials import scalar_chi

        def fn(omega):
            return v_nat * scalar_chi(mat, omega) * np.eye(3)

        return cls(fn)

    @classmethod
    def from_gyrotropic(cls, sphere: GyrotropicSphere):
        return cls(sphere.polarizability)

    @classmethod
    def from_grid(cls, omegas, tensors):
        """Interpolate a sampled alpha_jk; componentwise linear in omega."""
        om = np.asarray(omegas, dtype=float)
        tt = np.asarray(tensors, dtype=complex)
        if om.ndim != 1 or tt.shape != (om.size, 3, 3):
            raise ValueError("need omegas (n,) and tensors (n, 3, 3)")

        def fn(omega):
            out = np.empty((3, 3), dtype=complex)
            for j in range(3):
                for k in range(3):
                    out[j, k] = np.interp(omega, om, tt[:, j, k].real) \
                        + 1j * np.interp(omega, om, tt[:, j, k].imag)
            return out

        return cls(fn)


@dataclass(frozen=True)
class DimensionlessDrive:
    """Temperature drive f_k(beta nu) - f_k(beta' nu) shared by the reduced
    observables: kind "force" uses f_7, "torque" f_9, "power" f_3."""

    kind: str
    value: float

    _ORDERS = {"force": 7, "torque": 9, "power": 3}

    @classmethod
    def evaluate(cls, kind: str, th: ThermalPair, damping: float):
        try:
            n = cls._ORDERS[kind]
        except KeyError:
            raise ValueError(f"kind must be one of {sorted(cls._ORDERS)}")
        return cls(kind, f_hat_diff(n, th, damping))


def _max_omega(th: ThermalPair) -> float:
    t_hot = max(th.T, th.T_prime)
    if t_hot <= 0:
        raise ValueError("at least one temperature must be positive")
    return 60.0 * KB_EV_PER_K * t_hot


def _spectral_grid(omega_max: float, points: int = 160):
    return np.geomspace(omega_max * 1e-5, omega_max, points)


class _IabInterpolator:
    """I_AB(omega) sampled on a log grid and monotone-cubic interpolated.

    Each exact evaluation is reduced but not free, while the outer spectral
    integral probes thousands of frequencies, so the spectral routine works
    from this cache.  Below the grid the exact w^8 leading behavior is used.
    """

    def __init__(self, body: TwoPartBody, omega_max: float, q: QuadratureSpec,
                 method: str = "auto", points: int = 160):
        grid = _spectral_grid(omega_max, points)
        vals = np.empty_like(grid)
        errs = np.empty_like(grid)
        for i, w in enumerate(grid):
            est = pair_integral_IAB(body, w, q, method=method)
            vals[i] = est.value
            errs[i] = est.error
        self.omega_lo = grid[0]
        self.lead = vals[0] / grid[0] ** 8
        # interpolate I/omega^4: bounded at both ends, no sign assumptions
        self._pch = PchipInterpolator(np.log(grid), vals / grid**4)
        self.rel_error = float(np.max(np.abs(errs) / np.maximum(np.max(np.abs(vals)) * 1e-12, np.abs(vals))))

    def __call__(self, omega):
        w = np.asarray(omega, dtype=float)
        out = np.empty_like(w)
        low = w < self.omega_lo
        out[low] = self.lead * w[low] ** 8
        out[~low] = self._pch(np.log(w[~low])) * w[~low] ** 4
        return out


def _homogeneous(body: TwoPartBody) -> bool:
    return body.material_a == body.material_b


def propulsion_force(body: TwoPartBody, th: ThermalPair, q: QuadratureSpec,
                     method: str = "auto") -> Estimate:
    """Self-propulsive force [N] along z on an inhomogeneous two-part body:

    F_z = 8 int dw/2pi X_AB(w) I_AB(w) [n(w,T) - n(w,T')].

    Zero at equilibrium and for a homogeneous body.  ``method`` is passed to
    the geometric integral ("mc" for geometries without a deterministic
    reduction).
    """
    if th.equilibrium or _homogeneous(body):
        return Estimate(0.0, 0.0)
    omega_max = _max_omega(th)
    iab = _IabInterpolator(body, omega_max, q, method=method)

    def integrand(w):
        return susceptibility_product(w, body.material_a, body.material_b) \
            * iab(w) * planck_diff(w, th)

    est = adaptive_gk(integrand, 0.0, omega_max, rel_tol=q.rel_tol,
                      abs_tol=0.0, max_subdivisions=q.max_subdivisions,
                      initial_panels=32)
    f_nat = (4.0 / math.pi) * est.value
    err_nat = (4.0 / math.pi) * (est.error + abs(est.value) * iab.rel_error)
    return Estimate(UNITS.force_from_natural(f_nat),
                    UNITS.force_from_natural(err_nat))


class JanusClosed(NamedTuple):
    """Closed-form Janus-ball force with its dimensionless pieces."""

    force: float        # [N]
    f_hat: float        # f_7(beta nu) - f_7(beta' nu)
    prefactor: float    # [N], force = prefactor * f_hat


def janus_force_closed(chi_a: float, metal: DrudeMetal, radius_m: float,
                       th: ThermalPair) -> JanusClosed:
    """Small-ball closed form F = (1/27 pi) chi_A wp^2 (nu a)^7 Fhat [N].

    Valid for nu*a << 1 (dielectric cap A, Drude metal cap B); Fhat < 0 and
    the force points toward the metal side when the ball is hotter than the
    environment.
    """
    a_nat = radius_m / HBAR_C_EV_M
    pref_nat = chi_a * metal.plasma_freq**2 * (metal.damping * a_nat) ** 7 \
        / (27.0 * math.pi)
    drive = DimensionlessDrive.evaluate("force", th, metal.damping)
    pref_n = UNITS.force_from_natural(pref_nat)
    return JanusClosed(pref_n * drive.value, drive.value, pref_n)


def antihermitian_part(chi: np.ndarray) -> np.ndarray:
    """chi^A = (chi - chi^dagger) / 2i; zero for Hermitian input."""
    chi = np.asarray(chi, dtype=complex)
    return (chi - chi.conj().T) / 2j


def nonreciprocal_torque(alpha: TensorPolarizability, th: ThermalPair,
                         q: QuadratureSpec) -> VectorEstimate:
    """First-order vacuum torque [N m] on a stationary nonreciprocal body.

    tau_i = (1/3 pi^2) int_0^inf dw w^3 [n(w,T) - n(w,T')] eps_ijk Re alpha_jk;
    only the antisymmetric part of Re alpha contributes, so the torque
    vanishes identically for a reciprocal (symmetric) polarizability.
    """
    if th.equilibrium:
        return VectorEstimate(np.zeros(3), np.zeros(3))
    omega_max = _max_omega(th)
    probes = _spectral_grid(omega_max, 24)

    def axial(w_arr, i):
        j, k = ((1, 2), (2, 0), (0, 1))[i]
        out = np.empty_like(w_arr)
        for idx, w in enumerate(w_arr):
            m = alpha(w)
            out[idx] = m[j, k].real - m[k, j].real
        return out

    value = np.zeros(3)
    error = np.zeros(3)
    for i in range(3):
        if np.max(np.abs(axial(probes, i))) == 0.0:
            continue

        def integrand(w, i=i):
            return w**3 * planck_diff(w, th) * axial(w, i)

        est = adaptive_gk(integrand, 0.0, omega_max, rel_tol=q.rel_tol,
                          abs_tol=0.0, max_subdivisions=q.max_subdivisions,
                          initial_panels=16)
        value[i] = est.value / (3.0 * math.pi**2)
        error[i] = est.error / (3.0 * math.pi**2)
    return VectorEstimate(UNITS.torque_from_natural(1.0) * value,
                          UNITS.torque_from_natural(1.0) * error)


class _JabInterpolator:
    """Out-of-plane wrench factor J_AB(omega) on a log grid (reduced route),
    interpolated as log Jhat vs log omega."""

    def __init__(self, geom: DualWrench, omega_max: float, q: QuadratureSpec,
                 points: int = 96):
        grid = _spectral_grid(omega_max, points)
        jhat = np.empty_like(grid)
        rel = 0.0
        for i, w in enumerate(grid):
            fac = wrench_JAB_reduced(geom.half_length, geom.tag_length,
                                     geom.cross_section_a, geom.cross_section_b,
                                     w, q, orientation=1.0)
            jhat[i] = fac.jhat
            if fac.jhat != 0.0:
                rel = max(rel, abs(fac.jhat_error / fac.jhat))
        if np.any(jhat <= 0.0):
            raise RuntimeError("wrench factor lost positivity on the grid")
        self._pch = PchipInterpolator(np.log(grid), np.log(jhat))
        self.omega_lo = grid[0]
        self.lead = jhat[0] / grid[0] ** 6
        self.rel_error = rel
        sa = geom.cross_section_a / HBAR_C_EV_M**2
        sb = geom.cross_section_b / HBAR_C_EV_M**2
        self.pref = 2.0 * sa * sb * geom.orientation

    def __call__(self, omega):
        w = np.asarray(omega, dtype=float)
        jh = np.empty_like(w)
        low = w < self.omega_lo
        jh[low] = self.lead * w[low] ** 6
        jh[~low] = np.exp(self._pch(np.log(w[~low])))
        return self.pref * w**4 * jh


def chiral_torque(body: TwoPartBody, th: ThermalPair, q: QuadratureSpec,
                  method: str = "auto") -> VectorEstimate:
    """Second-order vacuum torque [N m] on an inhomogeneous chiral body:

    tau = (1/2 pi^2) int dw/2pi X_AB(w) [n(w,T) - n(w,T')] J_AB(w).

    For the dual wrench only the out-of-plane component survives; flag and
    generic bodies go through the MC geometric factor (method="mc").
    """
    if th.equilibrium or _homogeneous(body):
        return VectorEstimate(np.zeros(3), np.zeros(3))
    geom = body.geometry
    omega_max = _max_omega(th)
    if isinstance(geom, DualWrench):
        jab = _JabInterpolator(geom, omega_max, q)

        def integrand(w):
            return susceptibility_product(w, body.material_a, body.material_b) \
                * jab(w) * planck_diff(w, th)

        est = adaptive_gk(integrand, 0.0, omega_max, rel_tol=q.rel_tol,
                          abs_tol=0.0, max_subdivisions=q.max_subdivisions,
                          initial_panels=32)
        tz = est.value / (4.0 * math.pi**3)
        te = (est.error + abs(est.value) * jab.rel_error) / (4.0 * math.pi**3)
        scale = UNITS.torque_from_natural(1.0)
        return VectorEstimate(np.array([0.0, 0.0, tz * scale]),
                              np.array([0.0, 0.0, te * scale]))
    if isinstance(geom, (DualFlag, GenericPair)):
        if method != "mc":
            raise ValueError("flag/generic torque needs method='mc'")
        return _chiral_torque_mc(body, th, q, omega_max)
    raise ValueError(f"{type(geom).__name__} does not support a chiral torque")


def _chiral_torque_mc(body: TwoPartBody, th: ThermalPair, q: QuadratureSpec,
                      omega_max: float, points: int = 24) -> VectorEstimate:
    grid = _spectral_grid(omega_max, points)
    jv = np.empty((points, 3))
    je = np.empty((points, 3))
    for i, w in enumerate(grid):
        est = mc_pair_oracle(body, w, "jab", q)
        jv[i] = est.value
        je[i] = est.error
    comps = [PchipInterpolator(np.log(grid), jv[:, i] / grid**4) for i in range(3)]

    value = np.zeros(3)
    error = np.zeros(3)
    for i in range(3):
        def integrand(w, i=i):
            x = susceptibility_product(w, body.material_a, body.material_b)
            return x * comps[i](np.log(np.maximum(w, grid[0]))) * w**4 \
                * planck_diff(w, th)

        est = adaptive_gk(integrand, grid[0], omega_max, rel_tol=1e-4,
                          abs_tol=0.0, max_subdivisions=q.max_subdivisions,
                          initial_panels=16)
        value[i] = est.value / (4.0 * math.pi**3)
        error[i] = (est.error + np.max(je[:, i]) * abs(est.value)
                    / max(np.max(np.abs(jv[:, i])), 1e-300)) / (4.0 * math.pi**3)
    scale = UNITS.torque_from_natural(1.0)
    return VectorEstimate(value * scale, error * scale)


class WrenchClosed(NamedTuple):
    """Closed-form small-wrench torque with its dimensionless pieces."""

    torque: float       # [N m]
    tau_hat: float      # f_9(beta nu) - f_9(beta' nu)
    tau0: float         # [N m], torque = tau0 * tau_hat


def small_wrench_torque(chi_b: float, metal: DrudeMetal, half_length_m: float,
                        tag_length_m: float, cross_section_a_m2: float,
                        cross_section_b_m2: float, th: ThermalPair) -> WrenchClosed:
    """Small-wrench closed form
    tau = (28/675 pi^3) chi_B nu^9 wp^2 S_A S_B a^4 b^2 tauhat [N m],
    valid for nu*a, nu*b << 1 (metal wire A, dielectric tags B)."""
    a = half_length_m / HBAR_C_EV_M
    b = tag_length_m / HBAR_C_EV_M
    sa = cross_section_a_m2 / HBAR_C_EV_M**2
    sb = cross_section_b_m2 / HBAR_C_EV_M**2
    tau0_nat = 28.0 / (675.0 * math.pi**3) * chi_b * metal.damping**9 \
        * metal.plasma_freq**2 * sa * sb * a**4 * b**2
    drive = DimensionlessDrive.evaluate("torque", th, metal.damping)
    tau0 = UNITS.torque_from_natural(tau0_nat)
    return WrenchClosed(tau0 * drive.value, drive.value, tau0)
