"""Scalar kernels shared by all force/torque integrals.

Planck occupation differences, the f_n spectral integrals, the oscillatory
pair kernel phi with cancellation-safe evaluation, and the coincident-limit
vacuum Green's dyadic factor.

The array-heavy kernels live in a numba backend with a pure-numpy fallback;
set ``FLUCTFORCE_BACKEND=numpy`` to force the fallback (default is numba when
importable).  Results agree between backends to floating-point roundoff.
"""

from __future__ import annotations

import math
import os
from typing import Callable

import numpy as np
from scipy.special import gamma as _gamma
from scipy.special import zeta as _zeta

from . import _impl_numpy
from .quadrature import Estimate, PhiEvalPolicy, adaptive_gk

__all__ = [
    "BACKEND", "PhiEvalPolicy", "VacuumGreensCoincident", "phi",
    "phi_over_r8", "psi0", "planck_occupation", "planck_diff", "coth_diff",
    "f_n", "f_n_asymptotic", "bose_moment", "im_gamma_coincident",
    "radiation_reaction_imalpha",
]


def _select_backend():
    choice = os.environ.get("FLUCTFORCE_BACKEND", "numba").lower()
    if choice not in ("numba", "numpy"):
        raise ValueError(f"FLUCTFORCE_BACKEND must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numba":
        try:
            from . import _impl_numba
            return "numba", _impl_numba
        except ImportError:
            return "numpy", _impl_numpy
    return "numpy", _impl_numpy


BACKEND, _impl = _select_backend()

PHI_SERIES_COEFFS = tuple(float(c) for c in _impl_numpy.PHI_COEFFS)


class VacuumGreensCoincident:
    """Coincident-limit vacuum retarded Green's dyadic (rotationally averaged).

    The imaginary part is omega^3/(6 pi) per Cartesian component; the real
    part diverges as omega^2/(6 pi R) as the points merge and is discarded
    (it renormalizes the particle's static response, not the dissipation).
    The imaginary part is odd under omega -> -omega, which makes the torque
    integrand even.
    """

    @staticmethod
    def im(omega):
        return im_gamma_coincident(omega)


def _as_policy(policy: PhiEvalPolicy | None) -> PhiEvalPolicy:
    return policy if policy is not None else PhiEvalPolicy()


def phi(r, policy: PhiEvalPolicy | None = None):
    """Oscillatory pair kernel phi(r), r = omega |x - x'| dimensionless.

    phi(r) = -9 - 2 r^2 - r^4 + (9 - 16 r^2 + 3 r^4) cos 2r
             + r (18 - 8 r^2 + r^4) sin 2r
    with phi ~ -(4/9) r^8 + (28/225) r^10 for small r.  The closed form
    cancels catastrophically below r ~ 0.5, so the policy switches to the
    stored power series there.
    """
    p = _as_policy(policy)
    arr = np.atleast_1d(np.asarray(r, dtype=float))
    out = _impl.phi_arr(arr.ravel(), p.switch_threshold, p.series_terms)
    out = out.reshape(arr.shape)
    return out if np.ndim(r) else float(out[0])


def phi_over_r8(r, policy: PhiEvalPolicy | None = None):
    """phi(r)/r^8; finite at r = 0 with limit -4/9."""
    p = _as_policy(policy)
    arr = np.atleast_1d(np.asarray(r, dtype=float))
    out = _impl.phi_over_r8_arr(arr.ravel(), p.switch_threshold, p.series_terms)
    out = out.reshape(arr.shape)
    return out if np.ndim(r) else float(out[0])


def psi0(r, policy: PhiEvalPolicy | None = None):
    """Antiderivative psi0(r) = int_0^r phi(t)/t^7 dt (psi0(inf) = -2/3)."""
    p = _as_policy(policy)
    arr = np.atleast_1d(np.asarray(r, dtype=float))
    out = _impl.psi0_arr(arr.ravel(), p.switch_threshold, p.series_terms)
    out = out.reshape(arr.shape)
    return out if np.ndim(r) else float(out[0])


def phi_closed_reference(r, digits: int = 50):
    """Closed form of phi in ``digits``-digit arithmetic (validation only)."""
    import mpmath as mp
    with mp.workdps(digits):
        rm = mp.mpf(repr(float(r)))
        val = (-9 - 2 * rm**2 - rm**4
               + (9 - 16 * rm**2 + 3 * rm**4) * mp.cos(2 * rm)
               + rm * (18 - 8 * rm**2 + rm**4) * mp.sin(2 * rm))
        return float(val)


# --- Bose-Einstein occupation kernels ---

_EXP_CUT = 700.0  # exp overflow guard; occupation underflows to exactly 0


def planck_occupation(x):
    """n(x) = 1/(e^x - 1) for x = beta*omega > 0; exact 0 for huge x, 0 at
    infinite beta (zero temperature)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    ok = (x < _EXP_CUT) & np.isfinite(x)
    out[ok] = 1.0 / np.expm1(x[ok])
    return out


def planck_diff(omega, th):
    """Occupation difference n(omega, T) - n(omega, T_prime); positive iff
    T > T_prime.  omega in eV, strictly positive."""
    w = np.asarray(omega, dtype=float)
    if np.any(w <= 0):
        raise ValueError("planck_diff requires omega > 0")
    out = planck_occupation(th.beta * w) - planck_occupation(th.beta_prime * w)
    return out if np.ndim(omega) else float(out)


def coth_diff(omega, th):
    """coth(beta' omega/2) - coth(beta omega/2) = -2 * planck_diff."""
    return -2.0 * planck_diff(omega, th)


# --- f_n spectral integrals ---

def bose_moment(s: float, y: float) -> float:
    """int_0^inf x^(s-1)/(e^(yx)-1) dx = Gamma(s) zeta(s) / y^s (s > 1)."""
    return float(_gamma(s)) * float(_zeta(s, 1)) / y**s


def f_n(n: int, y: float, rel_tol: float = 1e-10) -> float:
    """f_n(y) = int_0^inf x^n/(x^2+1) / (e^(yx) - 1) dx.

    Supported for integer n in [2, 12] and y > 0; monotone decreasing in y.
    Quadrature runs on [0, X] with X set by an explicit exponential tail
    bound; the dropped tail is below 1e-3 * rel_tol of the result.
    """
    if not (2 <= n <= 12):
        raise ValueError("f_n supports n in [2, 12]")
    if y <= 0:
        raise ValueError("f_n diverges for y <= 0")

    # tail cut: integrand < x^(n-2) e^(-yx) for x >= 1, so the tail beyond X
    # is < X^(n-2) e^(-yX) (1 + ...) / y; pick X so that is negligible.
    x_cut = (60.0 + 8.0 * n) / y
    while x_cut**(n - 2) * math.exp(-y * x_cut) / y > 1e-280:
        x_cut *= 1.5

    def integrand(x):
        out = np.zeros_like(x)
        pos = x > 0
        xp = x[pos]
        out[pos] = xp**n / (xp * xp + 1.0) * planck_occupation(y * xp)
        return out

    est = adaptive_gk(integrand, 0.0, x_cut, rel_tol=rel_tol, abs_tol=0.0,
                      max_subdivisions=4000)
    return est.value


def f_n_asymptotic(n: int, y: float, terms: int = 6) -> float:
    """Large-y expansion of f_n from 1/(x^2+1) = sum (-1)^k x^(2k):

    f_n(y) ~ sum_k (-1)^k Gamma(n+2k+1) zeta(n+2k+1) / y^(n+2k+1).
    """
    total = 0.0
    for k in range(terms):
        total += (-1.0) ** k * bose_moment(n + 2 * k + 1, y)
    return total


def f_hat_diff(n: int, th, nu: float, rel_tol: float = 1e-10) -> float:
    """f_n(beta nu) - f_n(beta' nu); zero at equilibrium, sign of (T - T')."""
    if th.equilibrium:
        return 0.0
    lo = f_n(n, th.beta * nu, rel_tol) if th.T > 0 else 0.0
    hi = f_n(n, th.beta_prime * nu, rel_tol) if th.T_prime > 0 else 0.0
    return lo - hi


# --- coincident Green's dyadic / radiation reaction ---

def im_gamma_coincident(omega):
    """Imaginary part of the coincident vacuum Green's dyadic: omega^3/(6 pi).

    Odd in omega; the divergent real part is discarded.
    """
    w = np.asarray(omega, dtype=float)
    out = w**3 / (6.0 * np.pi)
    return out if np.ndim(omega) else float(out)


def radiation_reaction_imalpha(omega, alpha0):
    """Radiation-reaction dissipation Im alpha = (omega^3/6 pi) alpha0^2 for a
    particle whose intrinsic polarizability alpha0 is real."""
    w = np.asarray(omega, dtype=float)
    out = w**3 / (6.0 * np.pi) * alpha0**2
    return out if np.ndim(omega) else float(out)
