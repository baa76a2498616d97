"""Spectral material models and their derived quantities.

Frequencies are energies in eV throughout.  Every dissipative model satisfies
passivity (Im chi > 0 for omega > 0) and the reality condition
chi(-omega) = conj(chi(omega)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .units import HBAR_C_EV_NM, UNITS


@dataclass(frozen=True)
class DrudeMetal:
    """Drude metal: chi(omega) = -wp^2 / (omega (omega + i nu)).

    plasma_freq and damping in eV; atom_density [m^-3] and mass_density
    [kg/m^3] are only needed for heat-capacity and inertia bookkeeping.
    """

    plasma_freq: float
    damping: float
    atom_density: float = 0.0
    mass_density: float = 0.0

    def __post_init__(self):
        if self.plasma_freq <= 0 or self.damping <= 0:
            raise ValueError("plasma_freq and damping must be positive")

    def chi(self, omega):
        return drude_chi(omega, self)

    @property
    def dc_conductivity(self) -> float:
        """sigma(0) = wp^2/nu in eV."""
        return self.plasma_freq**2 / self.damping


@dataclass(frozen=True)
class Dielectric:
    """Dispersionless dielectric with real, frequency-independent chi0."""

    chi0: float

    def chi(self, omega):
        return np.broadcast_to(complex(self.chi0, 0.0), np.shape(omega)).copy() \
            if np.ndim(omega) else complex(self.chi0, 0.0)


@dataclass(frozen=True)
class MonomialAbsorber:
    """Model dissipation law Im alpha(omega) = amplitude * omega**exponent.

    Defined only over the integration band in use; no Kramers-Kronig
    completion is attempted.
    """

    exponent: int
    amplitude: float = 1.0

    def im_alpha(self, omega):
        return self.amplitude * np.asarray(omega, dtype=float) ** self.exponent


@dataclass(frozen=True)
class GyrotropicSphere:
    """Magnetized Drude sphere: nonreciprocal susceptibility tensor, B along z.

    cyclotron_freq = e B / m_e in eV; radius in meters.  The body
    polarizability is the volume integral of the susceptibility tensor
    (first order in chi), alpha_jk = V chi_jk.
    """

    plasma_freq: float
    damping: float
    cyclotron_freq: float
    radius: float

    def chi_tensor(self, omega: float) -> np.ndarray:
        w, nu, wc = omega, self.damping, self.cyclotron_freq
        wp2 = self.plasma_freq**2
        if w == 0:
            raise ZeroDivisionError("susceptibility pole at omega = 0")
        d = (w + 1j * nu) ** 2 - wc**2
        chi_perp = -wp2 * (w + 1j * nu) / (w * d)
        chi_xy = 1j * wp2 * wc / (w * d)
        chi_zz = -wp2 / (w * (w + 1j * nu))
        out = np.zeros((3, 3), dtype=complex)
        out[0, 0] = out[1, 1] = chi_perp
        out[0, 1] = chi_xy
        out[1, 0] = -chi_xy
        out[2, 2] = chi_zz
        return out

    @property
    def volume_natural(self) -> float:
        return 4.0 / 3.0 * math.pi * UNITS.length_to_natural(self.radius) ** 3

    def polarizability(self, omega: float) -> np.ndarray:
        """alpha_jk(omega) = V chi_jk(omega) in natural units (eV^-3)."""
        return self.volume_natural * self.chi_tensor(omega)


Material = Union[DrudeMetal, Dielectric, MonomialAbsorber, GyrotropicSphere]

# Standard gold parameters; these reproduce the ~50 nm thermal skin depth and
# the ~1e-4 s radiative cooling-time scale of a small gold body.
GOLD = DrudeMetal(plasma_freq=9.0, damping=0.035,
                  atom_density=5.90e28, mass_density=19300.0)


def drude_chi(omega, m: DrudeMetal):
    """Drude susceptibility -wp^2/(omega (omega + i nu)); pole at omega = 0."""
    w = np.asarray(omega, dtype=float)
    if np.any(w == 0.0):
        raise ZeroDivisionError("Drude susceptibility has a pole at omega = 0")
    out = -m.plasma_freq**2 / (w * (w + 1j * m.damping))
    return out if np.ndim(omega) else complex(out)


def skin_depth(omega: float, m: DrudeMetal) -> float:
    """Field penetration depth sqrt(2 (w^2+nu^2) / (w wp^2 nu)), in nm.

    Bodies thinner than this are transparent enough for the
    weak-susceptibility treatment of the metal to apply.
    """
    if omega <= 0:
        raise ValueError("skin depth requires omega > 0")
    nat = math.sqrt(2.0 * (omega**2 + m.damping**2)
                    / (omega * m.plasma_freq**2 * m.damping))
    return nat * HBAR_C_EV_NM


def scalar_chi(m: Material, omega):
    """Scalar susceptibility of a homogeneous region (Drude or dielectric)."""
    if isinstance(m, DrudeMetal):
        return drude_chi(omega, m)
    if isinstance(m, Dielectric):
        return m.chi(omega)
    raise TypeError(f"{type(m).__name__} has no scalar susceptibility")


def susceptibility_product(omega, a: Material, b: Material):
    """X_AB = Im chi_A Re chi_B - Re chi_A Im chi_B.

    Antisymmetric under A <-> B; gates every two-material nonequilibrium
    force and torque (identically zero for a homogeneous body).
    """
    ca = scalar_chi(a, omega)
    cb = scalar_chi(b, omega)
    return np.imag(ca) * np.real(cb) - np.real(ca) * np.imag(cb)


def material_from_preset(text: str) -> Material:
    """Named presets: "gold" or "dielectric:<chi0>"."""
    s = text.strip().lower()
    if s == "gold":
        return GOLD
    if s.startswith("dielectric:"):
        try:
            return Dielectric(chi0=float(s.split(":", 1)[1]))
        except ValueError as exc:
            raise ValueError(f"bad dielectric preset {text!r}") from exc
    raise ValueError(f"unknown material preset {text!r}")
