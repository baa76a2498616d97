"""Surface and vacuum friction: closed-form retarding forces, the
Einstein-Hopf spectral integral, slow-down times, and the steady-state
temperature-ratio solver for a particle moving through blackbody radiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Union

import numpy as np

from .kernels import planck_occupation
from .materials import MonomialAbsorber
from .quadrature import BracketError, adaptive_gk, bisect_then_secant
from .units import KB_EV_PER_K, UNITS

__all__ = [
    "Mechanism", "SurfaceScenario", "surface_friction", "ConvergenceError",
    "einstein_hopf_force", "einstein_hopf_closed_form", "slowdown_time",
    "slowdown_t0", "NessQuery", "ness_ratio", "ness_ratio_closed_form",
    "GOLD_ATOM_MASS_KG", "GOLD_ATOM_ALPHA0_M3",
]

# Slow-down scale convention: a single gold atom with polarizability volume
# 5.3 A^3 (Gaussian convention).  These two numbers set the absolute scale of
# the slow-down time; the physics only fixes the product m/alpha0^2.
GOLD_ATOM_MASS_KG = 196.966570 * 1.66053906892e-27
GOLD_ATOM_ALPHA0_M3 = 5.3e-30


class ConvergenceError(RuntimeError):
    """The requested spectral model makes the integral divergent."""


class Mechanism(Enum):
    IMAGE_LAG = "image_lag"
    RADIATION_REACTION = "radiation_reaction"
    INTRINSIC_DISSIPATION = "intrinsic_dissipation"


@dataclass(frozen=True)
class SurfaceScenario:
    """Particle at height ``separation`` [m] above a plate of conductivity
    ``sigma_plate`` [eV], moving parallel to it with velocity [c].

    ``alpha0`` is the static polarizability in natural units (eV^-3);
    ``sigma_particle`` is needed only for the intrinsic-dissipation
    mechanism.  Zero-temperature formulas throughout.
    """

    alpha0: float
    sigma_plate: float
    separation: float
    velocity: float
    mechanism: Mechanism
    sigma_particle: float | None = None

    def __post_init__(self):
        if self.separation <= 0:
            raise ValueError("separation must be positive")
        if not (0.0 <= self.velocity < 1.0):
            raise ValueError("velocity must be in [0, 1) (units of c)")
        if self.sigma_plate <= 0:
            raise ValueError("plate conductivity must be positive")
        if self.mechanism is Mechanism.INTRINSIC_DISSIPATION \
                and self.sigma_particle is None:
            raise ValueError("intrinsic dissipation needs sigma_particle")


def surface_friction(s: SurfaceScenario) -> float:
    """Retarding force [N] on the particle; strictly negative for v > 0.

    Mechanism selects among the three zero-temperature closed forms:
    image-lag (plate resistance), radiation reaction, and first-order
    intrinsic dissipation of a metallic nanoparticle.
    """
    a = UNITS.length_to_natural(s.separation)
    v = s.velocity
    if s.mechanism is Mechanism.IMAGE_LAG:
        f_nat = -135.0 * s.alpha0**2 * v**3 \
            / (2.0 * math.pi**3 * s.sigma_plate**2 * (2.0 * a) ** 10)
    elif s.mechanism is Mechanism.RADIATION_REACTION:
        f_nat = -(105.0 / (128.0 * math.pi**3)) * s.alpha0**2 * v**5 \
            / (s.sigma_plate * a**9)
    else:
        f_nat = -(135.0 / (64.0 * math.pi**2)) \
            * s.alpha0 / (s.sigma_plate * s.sigma_particle) * v**3 / a**7
    return UNITS.force_from_natural(f_nat)


# --------------------------------------------------------------------------
# Einstein-Hopf vacuum friction

ImAlphaModel = Union[MonomialAbsorber, Callable[[np.ndarray], np.ndarray]]


def einstein_hopf_force(model: ImAlphaModel, temperature_K: float,
                        velocity: float, rel_tol: float = 1e-9) -> float:
    """Vacuum frictional force [N], linear in velocity (nonrelativistic).

    F = -(v beta / 12 pi^2) int_0^inf dw w^5 Im alpha(w) / sinh^2(beta w/2)
    with ``model`` either a :class:`MonomialAbsorber` or a callable
    Im alpha(omega) in natural units.  Returns exactly 0 at T = 0.
    """
    if not (0.0 <= velocity < 1.0):
        raise ValueError("velocity must be in [0, 1) (units of c)")
    if temperature_K == 0.0:
        return 0.0
    if isinstance(model, MonomialAbsorber):
        if model.exponent <= -4:
            raise ConvergenceError(
                "Im alpha ~ w^n with n <= -4 makes the friction integral "
                "diverge at low frequency")
        im_alpha = model.im_alpha
    else:
        im_alpha = model
    beta = 1.0 / (KB_EV_PER_K * temperature_K)

    def integrand(x):
        # x = beta*omega; 1/sinh^2(x/2) = 4 n(x) (n(x) + 1)
        n = planck_occupation(x)
        return x**5 * im_alpha(x / beta) * 4.0 * n * (n + 1.0)

    est = adaptive_gk(integrand, 0.0, 80.0, rel_tol=rel_tol, abs_tol=0.0,
                      max_subdivisions=2000, initial_panels=8)
    if not math.isfinite(est.value):
        raise ConvergenceError("Einstein-Hopf integral is not finite")
    f_nat = -velocity / (12.0 * math.pi**2 * beta**5) * est.value
    return UNITS.force_from_natural(f_nat)


def einstein_hopf_closed_form(alpha0: float, temperature_K: float,
                              velocity: float) -> float:
    """Dispersionless radiation-reaction limit F = -(32 pi^5 a0^2/135 b^8) v,
    in newtons.  Independent oracle for the quadrature route."""
    if temperature_K == 0.0:
        return 0.0
    beta = 1.0 / (KB_EV_PER_K * temperature_K)
    f_nat = -32.0 * math.pi**5 * alpha0**2 / (135.0 * beta**8) * velocity
    return UNITS.force_from_natural(f_nat)


def slowdown_t0(mass_kg: float, alpha0_nat: float, temperature_K: float) -> float:
    """Exponential slow-down time scale t0 = 135 m beta^8/(32 pi^5 alpha0^2),
    in seconds."""
    if temperature_K <= 0:
        raise ValueError("slow-down time needs T > 0")
    beta = 1.0 / (KB_EV_PER_K * temperature_K)
    m_nat = UNITS.mass_to_natural(mass_kg)
    t0_nat = 135.0 * m_nat * beta**8 / (32.0 * math.pi**5 * alpha0_nat**2)
    return UNITS.time_from_natural(t0_nat)


def slowdown_time(mass_kg: float, alpha0_nat: float, temperature_K: float,
                  v_initial: float, v_final: float) -> float:
    """Time [s] to decelerate from v_initial to v_final under vacuum friction:
    dt = t0 ln(v_i/v_f)."""
    if not (0.0 < v_final <= v_initial < 1.0):
        raise ValueError("require 0 < v_final <= v_initial < 1")
    return slowdown_t0(mass_kg, alpha0_nat, temperature_K) \
        * math.log(v_initial / v_final)


# --------------------------------------------------------------------------
# NESS temperature ratio
#
# For a particle with Im alpha ~ w^n moving with velocity v through
# blackbody radiation at T, the rest-frame spectrum is the Doppler-shifted
# Planck law with direction-dependent temperature T/(gamma (1 + v mu)).
# Energy conservation per mode then balances the frequency moments of the
# aberration-averaged absorption against the emission at the body
# temperature.  Every moment is a Gamma*zeta integral, so with s = n + 5 the
# net power is proportional to
#
#     gamma^-s <(1 + v mu)^-s>_mu  -  rtilde^s ,
#
# analytically continued in s (the positive spectral normalization
# Gamma(s) zeta(s) cancels in the root).  This reproduces the two exact
# anchors rtilde(n=-3) = 1 and rtilde(n=-6) = 1/gamma.

@dataclass(frozen=True)
class NessQuery:
    """Monomial dissipation exponent and lab-frame velocity."""

    exponent: int
    velocity: float

    def __post_init__(self):
        if not (0.0 <= self.velocity < 1.0):
            raise ValueError("velocity must be in [0, 1)")
        if not (-12 <= self.exponent <= 12):
            raise ValueError("supported exponent range is [-12, 12]")


def doppler_moment(velocity: float, s: float) -> float:
    """<(1 + v mu)^-s> averaged uniformly over the rest-frame sphere."""
    v = velocity
    if v == 0.0:
        return 1.0
    if s == 1.0:
        return math.atanh(v) / v
    return ((1.0 + v) ** (1.0 - s) - (1.0 - v) ** (1.0 - s)) / (2.0 * v * (1.0 - s))


def _log_doppler_average(v: float) -> float:
    """<ln(1 + v mu)> over the sphere (s -> 0 limit of the moment)."""
    if v == 0.0:
        return 0.0
    return ((1.0 + v) * math.log1p(v) - (1.0 - v) * math.log1p(-v)) / (2.0 * v) - 1.0


def ness_ratio(q: NessQuery, tol: float = 1e-12) -> float:
    """Steady-state temperature ratio rtilde = Tbody/T at which the moving
    particle neither gains nor loses energy in its rest frame.

    The balance is solved by bracketing in [1e-3, 1e3] plus bisection and a
    secant polish; monotonicity of the net power in the body temperature is
    asserted on a grid first.
    """
    s = q.exponent + 5.0
    gamma = 1.0 / math.sqrt(1.0 - q.velocity**2)
    if s == 0.0:
        # degenerate moment: the balance root is the s -> 0 limit
        return math.exp(-_log_doppler_average(q.velocity)) / gamma

    absorbed = gamma ** (-s) * doppler_moment(q.velocity, s)
    sign = 1.0 if s > 0 else -1.0

    def balance(r: float) -> float:
        # net power up to a positive spectral normalization, decreasing in r
        return sign * (absorbed - r**s)

    grid = np.geomspace(1e-3, 1e3, 25)
    vals = np.array([balance(r) for r in grid])
    if np.any(np.diff(vals) > 0):
        raise RuntimeError("net power is not monotone in body temperature")
    try:
        return bisect_then_secant(balance, 1e-3, 1e3, rel_tol=tol)
    except BracketError as exc:
        raise BracketError(
            f"NESS balance has no root in [1e-3, 1e3] for n={q.exponent}, "
            f"v={q.velocity}") from exc


def ness_ratio_closed_form(q: NessQuery) -> float:
    """rtilde = gamma^-1 <(1+v mu)^-s>^(1/s); oracle for the solver."""
    s = q.exponent + 5.0
    gamma = 1.0 / math.sqrt(1.0 - q.velocity**2)
    if s == 0.0:
        return math.exp(-_log_doppler_average(q.velocity)) / gamma
    return doppler_moment(q.velocity, s) ** (1.0 / s) / gamma
