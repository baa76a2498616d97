"""Pure-numpy implementations of the hot numeric kernels.

Mirrors the signatures of ``_impl_numba``; selected with
``FLUCTFORCE_BACKEND=numpy``.  Loops are replaced by array operations, so the
two backends may differ in the last floating-point bits but agree to far
better than any quadrature tolerance.
"""

from __future__ import annotations

import numpy as np

# Taylor coefficients of the pair kernel phi(r) = sum_k PHI_COEFFS[k] r^(8+2k),
# generated once from the closed form as exact rationals.
PHI_COEFFS = np.array([
    -4.0 / 9.0,
    28.0 / 225.0,
    -22.0 / 1575.0,
    256.0 / 297675.0,
    -2.0 / 59535.0,
    116.0 / 127702575.0,
    -74.0 / 4104725625.0,
    1472.0 / 5373085843125.0,
    -16.0 / 4861363381875.0,
    536.0 / 16722117760973625.0,
    -316.0 / 1223754981598524375.0,
    128.0 / 73159265204259609375.0,
    -106.0 / 10484285467348896328125.0,
    4.0 / 79331505974308236796875.0,
    -274.0 / 1249804411420446824145328125.0,
    128.0 / 152654681680640290663465078125.0,
])
# psi0(r) = int_0^r phi(t)/t^7 dt  =  sum_k PHI_COEFFS[k]/(2k+2) r^(2k+2)
PSI_COEFFS = PHI_COEFFS / (2.0 + 2.0 * np.arange(PHI_COEFFS.size))
# closed-form antiderivative of phi/r^7 tends to 2/3 at r -> 0
PSI_CLOSED_OFFSET = 2.0 / 3.0


def _phi_closed(r):
    r2 = r * r
    r4 = r2 * r2
    return (-9.0 - 2.0 * r2 - r4
            + (9.0 - 16.0 * r2 + 3.0 * r4) * np.cos(2.0 * r)
            + r * (18.0 - 8.0 * r2 + r4) * np.sin(2.0 * r))


def _series_horner(r2, coeffs, nterms):
    acc = np.zeros_like(r2)
    for k in range(nterms - 1, -1, -1):
        acc = acc * r2 + coeffs[k]
    return acc


def phi_over_r8_arr(r, switch, nterms):
    """phi(r)/r^8, finite (-4/9) at r = 0; series below ``switch``."""
    r = np.asarray(r, dtype=float)
    out = np.empty_like(r)
    small = r < switch
    rs = r[small]
    out[small] = _series_horner(rs * rs, PHI_COEFFS, nterms)
    rl = r[~small]
    out[~small] = _phi_closed(rl) / rl**8
    return out


def phi_arr(r, switch, nterms):
    """The pair kernel phi itself (cancellation-safe at small r)."""
    r = np.asarray(r, dtype=float)
    out = np.empty_like(r)
    small = r < switch
    rs = r[small]
    out[small] = _series_horner(rs * rs, PHI_COEFFS, nterms) * rs**8
    out[~small] = _phi_closed(r[~small])
    return out


def psi0_arr(r, switch, nterms):
    """psi0(r) = int_0^r phi(t) t^-7 dt.

    The closed form shares the integration constant of the series branch
    (psi0(0) = 0, psi0(inf) = -2/3).
    """
    r = np.asarray(r, dtype=float)
    out = np.empty_like(r)
    small = r < switch
    rs = r[small]
    out[small] = _series_horner(rs * rs, PSI_COEFFS, nterms) * rs * rs
    rl = r[~small]
    r2 = rl * rl
    s = np.sin(rl)
    s2 = np.sin(2.0 * rl)
    c2 = np.cos(2.0 * rl)
    num = (2.0 * r2 * r2 * s * s + 2.0 * rl * r2 * s2
           + r2 * (5.0 * c2 + 1.0) - 6.0 * rl * s2 - 3.0 * c2 + 3.0)
    out[~small] = num / (2.0 * r2 * r2 * r2) - PSI_CLOSED_OFFSET
    return out


def lens_area_arr(r1, r2, d):
    """Intersection area of two coplanar disks with center distance d."""
    r1, r2, d = np.broadcast_arrays(r1, r2, d)
    out = np.zeros(r1.shape, dtype=float)
    full = d <= np.abs(r1 - r2)
    rmin = np.minimum(r1, r2)
    out[full] = np.pi * rmin[full] ** 2
    part = (~full) & (d < r1 + r2)
    a, b, dd = r1[part], r2[part], d[part]
    c1 = np.clip((dd * dd + a * a - b * b) / (2.0 * dd * a), -1.0, 1.0)
    c2 = np.clip((dd * dd + b * b - a * a) / (2.0 * dd * b), -1.0, 1.0)
    t = np.maximum(0.0, (-dd + a + b) * (dd + a - b) * (dd - a + b) * (dd + a + b))
    out[part] = a * a * np.arccos(c1) + b * b * np.arccos(c2) - 0.5 * np.sqrt(t)
    return out


def w_profile_arr(s, psi_panels, z_panels, glx, glw):
    """Hemisphere-pair overlap profile w(s) of the unit Janus ball.

    w(s) = int_0^{pi/2} sin(psi) cos(psi) C(s sin psi, s cos psi) dpsi where
    C(rho, zeta) is the overlap volume of the upper unit hemisphere with the
    lower one displaced by (rho, zeta); purely geometric, frequency-free.
    """
    s = np.asarray(s, dtype=float)
    m = glx.size
    # psi nodes, composite GL
    pedge = np.linspace(0.0, np.pi / 2.0, psi_panels + 1)
    pmid = 0.5 * (pedge[1:] + pedge[:-1])[:, None]
    phal = 0.5 * (pedge[1:] - pedge[:-1])[:, None]
    psi = (pmid + phal * glx[None, :]).ravel()
    wpsi = (phal * glw[None, :]).ravel()
    sinp, cosp = np.sin(psi), np.cos(psi)

    # z-panel template in [0, 1]
    frac = ((np.arange(z_panels)[:, None] + 0.5 * (glx[None, :] + 1.0))
            / z_panels).ravel()
    wfrac = np.tile(glw / (2.0 * z_panels), z_panels)

    out = np.zeros_like(s)
    for i, sv in enumerate(s):
        if sv <= 0.0 or sv >= 2.0:
            continue
        rho = sv * sinp
        zeta = sv * cosp
        z0 = np.maximum(0.0, zeta - 1.0)
        zlen = np.minimum(1.0, zeta) - z0
        ok = zlen > 0.0
        z = z0[ok, None] + zlen[ok, None] * frac[None, :]
        zz = z - zeta[ok, None]
        a1 = np.sqrt(np.maximum(0.0, 1.0 - z * z))
        a2 = np.sqrt(np.maximum(0.0, 1.0 - zz * zz))
        c = np.sum(lens_area_arr(a1, a2, np.broadcast_to(rho[ok, None], z.shape))
                   * wfrac[None, :], axis=1) * zlen[ok]
        out[i] = np.sum(wpsi[ok] * sinp[ok] * cosp[ok] * c)
    return out


def jhat_2d(ux, uw, xx, xw, atil, switch, nterms):
    """Direct 2-D quadrature of the wrench geometric factor.

    Jhat = int du int dx  x (u - atil) phi(R)/R^8,  R = sqrt(x^2 + u^2),
    over the supplied tensor nodes (u along the wire shifted by atil, x along
    the tag).
    """
    acc = 0.0
    for j in range(xx.size):
        r = np.sqrt(xx[j] * xx[j] + ux * ux)
        acc += xw[j] * xx[j] * np.sum(uw * (ux - atil) * phi_over_r8_arr(r, switch, nterms))
    return acc


def pair_sums_iab(ra, rb, omega, switch, nterms):
    """Per-pair sums for the propulsion geometric integrand.

    f = R_z phi(omega R)/R^8 over sample pairs; returns (sum f, sum f^2).
    """
    d = ra - rb
    rr = np.sqrt(np.sum(d * d, axis=1))
    f = d[:, 2] * omega**8 * phi_over_r8_arr(omega * rr, switch, nterms)
    return float(np.sum(f)), float(np.sum(f * f))


def pair_sums_jab(ra, rb, omega, switch, nterms):
    """Per-pair sums for the torque geometric integrand.

    f_i = -(r x r')_i phi(omega R)/R^8; returns (sum vec, sum vec^2).
    """
    d = ra - rb
    rr = np.sqrt(np.sum(d * d, axis=1))
    w = omega**8 * phi_over_r8_arr(omega * rr, switch, nterms)
    cross = np.cross(ra, rb)
    f = -cross * w[:, None]
    return np.sum(f, axis=0), np.sum(f * f, axis=0)


def wire_sums_jab(xs, ys, a, omega, switch, nterms):
    """Thin-wire torque integrand sums: f = x y phi(omega R)/R^8 with
    R = sqrt(x^2 + (a + y)^2)."""
    rr = np.sqrt(xs * xs + (a + ys) ** 2)
    f = xs * ys * omega**8 * phi_over_r8_arr(omega * rr, switch, nterms)
    return float(np.sum(f)), float(np.sum(f * f))
