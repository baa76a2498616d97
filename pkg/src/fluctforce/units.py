"""Unit system: natural units (hbar = c = eps0 = mu0 = kB = 1) with energies in eV.

All physics routines work in natural units internally; SI values appear only
at module boundaries through :class:`UnitContext`.  In natural units every
quantity is a power of energy: lengths and times are eV^-1, temperatures,
frequencies and torques are eV, forces and powers are eV^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# CODATA 2018 exact/recommended values
HBAR_EV_S = 6.582119569e-16        # hbar [eV s]
HBAR_C_EV_NM = 197.3269804         # hbar*c [eV nm]
KB_EV_PER_K = 8.617333262e-5       # Boltzmann constant [eV/K]
EV_JOULE = 1.602176634e-19         # 1 eV in J (exact)
C_M_PER_S = 299792458.0            # speed of light [m/s] (exact)

HBAR_C_EV_M = HBAR_C_EV_NM * 1e-9  # hbar*c [eV m]

# amount of eV of rest energy per kg: c^2/e
_EV_PER_KG = C_M_PER_S**2 / EV_JOULE


@dataclass(frozen=True)
class UnitContext:
    """Conversions between SI and natural units.

    ``*_to_natural`` maps SI to natural units, ``*_from_natural`` maps back.
    Round trips are identity to better than 12 significant digits.
    """

    hbar: float = HBAR_EV_S
    hbar_c: float = HBAR_C_EV_NM
    kB: float = KB_EV_PER_K

    # --- the five boundary quantity kinds ---

    def length_to_natural(self, meters: float) -> float:
        """m -> eV^-1."""
        return meters / HBAR_C_EV_M

    def length_from_natural(self, nat: float) -> float:
        return nat * HBAR_C_EV_M

    def time_to_natural(self, seconds: float) -> float:
        """s -> eV^-1."""
        return seconds / HBAR_EV_S

    def time_from_natural(self, nat: float) -> float:
        return nat * HBAR_EV_S

    def temperature_to_natural(self, kelvin: float) -> float:
        """K -> eV."""
        return kelvin * KB_EV_PER_K

    def temperature_from_natural(self, nat: float) -> float:
        return nat / KB_EV_PER_K

    def force_to_natural(self, newtons: float) -> float:
        """N -> eV^2."""
        return newtons * HBAR_C_EV_M / EV_JOULE

    def force_from_natural(self, nat: float) -> float:
        return nat * EV_JOULE / HBAR_C_EV_M

    def torque_to_natural(self, newton_meters: float) -> float:
        """N m -> eV (torque is an energy in natural units)."""
        return newton_meters / EV_JOULE

    def torque_from_natural(self, nat: float) -> float:
        return nat * EV_JOULE

    # --- extras used internally ---

    def mass_to_natural(self, kg: float) -> float:
        """kg -> eV of rest energy."""
        return kg * _EV_PER_KG

    def mass_from_natural(self, nat: float) -> float:
        return nat / _EV_PER_KG

    def power_to_natural(self, watts: float) -> float:
        """W -> eV^2."""
        return watts * HBAR_EV_S / EV_JOULE

    def power_from_natural(self, nat: float) -> float:
        return nat * EV_JOULE / HBAR_EV_S

    def volume_to_natural(self, m3: float) -> float:
        """m^3 -> eV^-3 (also used for polarizability volumes)."""
        return m3 / HBAR_C_EV_M**3

    def volume_from_natural(self, nat: float) -> float:
        return nat * HBAR_C_EV_M**3

    def number_density_to_natural(self, per_m3: float) -> float:
        """m^-3 -> eV^3."""
        return per_m3 * HBAR_C_EV_M**3

    def number_density_from_natural(self, nat: float) -> float:
        return nat / HBAR_C_EV_M**3

    def velocity_to_natural(self, m_per_s: float) -> float:
        """m/s -> fraction of c."""
        return m_per_s / C_M_PER_S

    def velocity_from_natural(self, frac_c: float) -> float:
        return frac_c * C_M_PER_S


UNITS = UnitContext()


@dataclass(frozen=True)
class ThermalPair:
    """Environment temperature T and body temperature T_prime, both in kelvin.

    This pair drives every nonequilibrium force and torque; zero temperature
    means the corresponding occupation term vanishes.
    """

    T: float
    T_prime: float

    def __post_init__(self):
        if self.T < 0 or self.T_prime < 0:
            raise ValueError("temperatures must be non-negative")

    @property
    def beta(self) -> float:
        """1/T in eV^-1 (inf at T = 0)."""
        return math.inf if self.T == 0 else 1.0 / (KB_EV_PER_K * self.T)

    @property
    def beta_prime(self) -> float:
        return math.inf if self.T_prime == 0 else 1.0 / (KB_EV_PER_K * self.T_prime)

    @property
    def equilibrium(self) -> bool:
        return self.T == self.T_prime

    @property
    def u(self) -> float:
        """Temperature ratio T_prime/T."""
        if self.T == 0:
            raise ZeroDivisionError("temperature ratio undefined at T = 0")
        return self.T_prime / self.T
