"""Numba implementations of the hot numeric kernels (default backend).

Same signatures as ``_impl_numpy``; explicit loops compiled with ``@njit``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ._impl_numpy import PHI_COEFFS, PSI_COEFFS, PSI_CLOSED_OFFSET

_PHI_C = PHI_COEFFS.copy()
_PSI_C = PSI_COEFFS.copy()
_OFFSET = PSI_CLOSED_OFFSET


@njit(cache=True, inline="always")
def _phi_over_r8_scalar(r, switch, nterms):
    if r < switch:
        r2 = r * r
        acc = 0.0
        for k in range(nterms - 1, -1, -1):
            acc = acc * r2 + _PHI_C[k]
        return acc
    r2 = r * r
    r4 = r2 * r2
    val = (-9.0 - 2.0 * r2 - r4
           + (9.0 - 16.0 * r2 + 3.0 * r4) * np.cos(2.0 * r)
           + r * (18.0 - 8.0 * r2 + r4) * np.sin(2.0 * r))
    return val / (r4 * r4)


@njit(cache=True, inline="always")
def _psi0_scalar(r, switch, nterms):
    r2 = r * r
    if r < switch:
        acc = 0.0
        for k in range(nterms - 1, -1, -1):
            acc = acc * r2 + _PSI_C[k]
        return acc * r2
    s = np.sin(r)
    s2 = np.sin(2.0 * r)
    c2 = np.cos(2.0 * r)
    num = (2.0 * r2 * r2 * s * s + 2.0 * r * r2 * s2
           + r2 * (5.0 * c2 + 1.0) - 6.0 * r * s2 - 3.0 * c2 + 3.0)
    return num / (2.0 * r2 * r2 * r2) - _OFFSET


@njit(cache=True)
def phi_over_r8_arr(r, switch, nterms):
    out = np.empty_like(r)
    for i in range(r.size):
        out[i] = _phi_over_r8_scalar(r[i], switch, nterms)
    return out


@njit(cache=True)
def phi_arr(r, switch, nterms):
    out = np.empty_like(r)
    for i in range(r.size):
        ri = r[i]
        if ri < switch:
            out[i] = _phi_over_r8_scalar(ri, switch, nterms) * ri**8
        else:
            r2 = ri * ri
            r4 = r2 * r2
            out[i] = (-9.0 - 2.0 * r2 - r4
                      + (9.0 - 16.0 * r2 + 3.0 * r4) * np.cos(2.0 * ri)
                      + ri * (18.0 - 8.0 * r2 + r4) * np.sin(2.0 * ri))
    return out


@njit(cache=True)
def psi0_arr(r, switch, nterms):
    out = np.empty_like(r)
    for i in range(r.size):
        out[i] = _psi0_scalar(r[i], switch, nterms)
    return out


@njit(cache=True, inline="always")
def _lens_area(r1, r2, d):
    if d >= r1 + r2:
        return 0.0
    rmin = r1 if r1 < r2 else r2
    if d <= abs(r1 - r2):
        return np.pi * rmin * rmin
    c1 = (d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1)
    c2 = (d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2)
    if c1 > 1.0:
        c1 = 1.0
    elif c1 < -1.0:
        c1 = -1.0
    if c2 > 1.0:
        c2 = 1.0
    elif c2 < -1.0:
        c2 = -1.0
    t = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2)
    if t < 0.0:
        t = 0.0
    return r1 * r1 * np.arccos(c1) + r2 * r2 * np.arccos(c2) - 0.5 * np.sqrt(t)


@njit(cache=True)
def w_profile_arr(s, psi_panels, z_panels, glx, glw):
    m = glx.size
    out = np.zeros_like(s)
    dpsi = (np.pi / 2.0) / psi_panels
    for i in range(s.size):
        sv = s[i]
        if sv <= 0.0 or sv >= 2.0:
            continue
        acc = 0.0
        for p in range(psi_panels):
            pmid = (p + 0.5) * dpsi
            phal = 0.5 * dpsi
            for q in range(m):
                psi = pmid + phal * glx[q]
                sinp = np.sin(psi)
                cosp = np.cos(psi)
                rho = sv * sinp
                zeta = sv * cosp
                z0 = zeta - 1.0
                if z0 < 0.0:
                    z0 = 0.0
                z1 = zeta if zeta < 1.0 else 1.0
                zlen = z1 - z0
                if zlen <= 0.0:
                    continue
                dz = zlen / z_panels
                c = 0.0
                for zp in range(z_panels):
                    zmid = z0 + (zp + 0.5) * dz
                    zhal = 0.5 * dz
                    for zq in range(m):
                        z = zmid + zhal * glx[zq]
                        t1 = 1.0 - z * z
                        t2 = 1.0 - (z - zeta) * (z - zeta)
                        a1 = np.sqrt(t1) if t1 > 0.0 else 0.0
                        a2 = np.sqrt(t2) if t2 > 0.0 else 0.0
                        c += zhal * glw[zq] * _lens_area(a1, a2, rho)
                acc += phal * glw[q] * sinp * cosp * c
        out[i] = acc
    return out


@njit(cache=True)
def jhat_2d(ux, uw, xx, xw, atil, switch, nterms):
    acc = 0.0
    for j in range(xx.size):
        x = xx[j]
        inner = 0.0
        for i in range(ux.size):
            u = ux[i]
            r = np.sqrt(x * x + u * u)
            inner += uw[i] * (u - atil) * _phi_over_r8_scalar(r, switch, nterms)
        acc += xw[j] * x * inner
    return acc


@njit(cache=True)
def pair_sums_iab(ra, rb, omega, switch, nterms):
    s1 = 0.0
    s2 = 0.0
    w8 = omega**8
    for i in range(ra.shape[0]):
        dx = ra[i, 0] - rb[i, 0]
        dy = ra[i, 1] - rb[i, 1]
        dz = ra[i, 2] - rb[i, 2]
        rr = np.sqrt(dx * dx + dy * dy + dz * dz)
        f = dz * w8 * _phi_over_r8_scalar(omega * rr, switch, nterms)
        s1 += f
        s2 += f * f
    return s1, s2


@njit(cache=True)
def pair_sums_jab(ra, rb, omega, switch, nterms):
    s1 = np.zeros(3)
    s2 = np.zeros(3)
    w8 = omega**8
    for i in range(ra.shape[0]):
        dx = ra[i, 0] - rb[i, 0]
        dy = ra[i, 1] - rb[i, 1]
        dz = ra[i, 2] - rb[i, 2]
        rr = np.sqrt(dx * dx + dy * dy + dz * dz)
        w = w8 * _phi_over_r8_scalar(omega * rr, switch, nterms)
        cx = ra[i, 1] * rb[i, 2] - ra[i, 2] * rb[i, 1]
        cy = ra[i, 2] * rb[i, 0] - ra[i, 0] * rb[i, 2]
        cz = ra[i, 0] * rb[i, 1] - ra[i, 1] * rb[i, 0]
        fx = -cx * w
        fy = -cy * w
        fz = -cz * w
        s1[0] += fx
        s1[1] += fy
        s1[2] += fz
        s2[0] += fx * fx
        s2[1] += fy * fy
        s2[2] += fz * fz
    return s1, s2


@njit(cache=True)
def wire_sums_jab(xs, ys, a, omega, switch, nterms):
    s1 = 0.0
    s2 = 0.0
    w8 = omega**8
    for i in range(xs.size):
        rr = np.sqrt(xs[i] * xs[i] + (a + ys[i]) ** 2)
        f = xs[i] * ys[i] * w8 * _phi_over_r8_scalar(omega * rr, switch, nterms)
        s1 += f
        s2 += f * f
    return s1, s2
