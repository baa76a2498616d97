"""Two-part body geometries and their pair integrals.

The self-propulsion force needs the geometric integral

    I_AB(w) = int_A int_B (4 pi)^-2 R_z / R^8 phi(w R),   R = r - r',

and the self-torque needs

    J_AB(w) = -int_A int_B (r x r') / R^8 phi(w R).

Both are evaluated by deterministic reductions where the geometry allows it
(Janus ball, dual Allen wrench) and by a stratified Monte Carlo oracle in
general.  All returned values are in natural units (I_AB in eV, J_AB
dimensionless); geometry fields are SI meters.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, replace
from typing import NamedTuple, Union

import numpy as np

from . import kernels
from .kernels import _impl
from .materials import DrudeMetal, Material, skin_depth
from .quadrature import (Estimate, QuadratureSpec, ToleranceError, adaptive_gk,
                         gl_nodes)
from .units import HBAR_C_EV_M, KB_EV_PER_K

__all__ = [
    "Ball", "Box", "Cylinder", "Segment", "JanusBall", "DualWrench",
    "DualFlag", "GenericPair", "BodyGeometry", "TwoPartBody", "WrenchFactor",
    "VectorEstimate", "pair_integral_IAB", "pair_integral_JAB",
    "wrench_JAB_reduced", "mc_pair_oracle", "janus_iab_8pia",
    "geometry_from_preset",
]


# --------------------------------------------------------------------------
# primitives for GenericPair regions (SI meters)

@dataclass(frozen=True)
class Ball:
    center: tuple
    radius: float

    def volume(self):
        return 4.0 / 3.0 * math.pi * self.radius**3

    def bounds(self):
        c, r = np.asarray(self.center), self.radius
        return c - r, c + r

    def sample(self, rng, n):
        d = rng.normal(size=(n, 3))
        d /= np.linalg.norm(d, axis=1)[:, None]
        r = self.radius * rng.random(n) ** (1.0 / 3.0)
        return np.asarray(self.center) + d * r[:, None]

    def reflected(self):
        cx, cy, cz = self.center
        return Ball((-cx, cy, cz), self.radius)


@dataclass(frozen=True)
class Box:
    lo: tuple
    hi: tuple

    def volume(self):
        lo, hi = np.asarray(self.lo), np.asarray(self.hi)
        return float(np.prod(hi - lo))

    def bounds(self):
        return np.asarray(self.lo, dtype=float), np.asarray(self.hi, dtype=float)

    def sample(self, rng, n):
        lo, hi = np.asarray(self.lo), np.asarray(self.hi)
        return lo + (hi - lo) * rng.random((n, 3))

    def reflected(self):
        lo, hi = self.lo, self.hi
        return Box((-hi[0], lo[1], lo[2]), (-lo[0], hi[1], hi[2]))


_AXES = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class Cylinder:
    center: tuple
    axis: str
    radius: float
    half_length: float

    def volume(self):
        return math.pi * self.radius**2 * 2.0 * self.half_length

    def bounds(self):
        c = np.asarray(self.center, dtype=float)
        ext = np.full(3, self.radius)
        ext[_AXES[self.axis]] = self.half_length
        return c - ext, c + ext

    def sample(self, rng, n):
        k = _AXES[self.axis]
        pts = np.empty((n, 3))
        r = self.radius * np.sqrt(rng.random(n))
        th = 2.0 * math.pi * rng.random(n)
        trans = [i for i in range(3) if i != k]
        pts[:, trans[0]] = r * np.cos(th)
        pts[:, trans[1]] = r * np.sin(th)
        pts[:, k] = self.half_length * (2.0 * rng.random(n) - 1.0)
        return np.asarray(self.center) + pts

    def reflected(self):
        cx, cy, cz = self.center
        return Cylinder((-cx, cy, cz), self.axis, self.radius, self.half_length)


@dataclass(frozen=True)
class Segment:
    """Thin-wire idealization: samples lie on a line, the cross section
    enters only as a multiplicative measure."""

    center: tuple
    axis: str
    half_length: float
    cross_section: float

    def volume(self):
        return self.cross_section * 2.0 * self.half_length

    def bounds(self):
        c = np.asarray(self.center, dtype=float)
        ext = np.zeros(3)
        ext[_AXES[self.axis]] = self.half_length
        return c - ext, c + ext

    def sample(self, rng, n):
        k = _AXES[self.axis]
        pts = np.tile(np.asarray(self.center, dtype=float), (n, 1))
        pts[:, k] += self.half_length * (2.0 * rng.random(n) - 1.0)
        return pts

    def reflected(self):
        cx, cy, cz = self.center
        return Segment((-cx, cy, cz), self.axis, self.half_length,
                       self.cross_section)


Primitive = Union[Ball, Box, Cylinder, Segment]


# --------------------------------------------------------------------------
# geometry variants

@dataclass(frozen=True)
class JanusBall:
    """Sphere of radius ``radius`` [m] split at z = 0; region A is the upper
    hemisphere unless ``flip_regions``."""

    radius: float
    flip_regions: bool = False

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")

    def swapped(self):
        return replace(self, flip_regions=not self.flip_regions)


@dataclass(frozen=True)
class DualWrench:
    """Planar chiral wire body: central wire of half-length ``half_length``
    along y (region A), tags of length ``tag_length`` along -x at +y end and
    +x at -y end (region B, canonical handedness).

    Thin-wire idealization: cross sections enter only multiplicatively.
    Invariant under r -> -r, so it feels no net force, only a torque out of
    the plane.
    """

    half_length: float
    tag_length: float
    cross_section_a: float
    cross_section_b: float
    mirrored: bool = False
    flip_regions: bool = False

    def __post_init__(self):
        if min(self.half_length, self.tag_length) <= 0:
            raise ValueError("wrench lengths must be positive")
        if min(self.cross_section_a, self.cross_section_b) <= 0:
            raise ValueError("cross sections must be positive")

    def swapped(self):
        return replace(self, flip_regions=not self.flip_regions)

    def mirror(self):
        return replace(self, mirrored=not self.mirrored)

    @property
    def orientation(self) -> float:
        return (-1.0 if self.mirrored else 1.0) * (-1.0 if self.flip_regions else 1.0)


@dataclass(frozen=True)
class DualFlag:
    """Central metal wire with rectangular dielectric flags attached
    antisymmetrically at the ends (same handedness as the wrench)."""

    half_length: float
    flag_width: float
    flag_height: float
    thickness: float

    def __post_init__(self):
        if min(self.half_length, self.flag_width, self.flag_height,
               self.thickness) <= 0:
            raise ValueError("flag dimensions must be positive")

    def to_generic_pair(self) -> "GenericPair":
        a, w, h, t = (self.half_length, self.flag_width, self.flag_height,
                      self.thickness)
        wire = Box((-t / 2, -a, -t / 2), (t / 2, a, t / 2))
        flag_top = Box((-w, a, -h / 2), (0.0, a + t, h / 2))
        flag_bot = Box((0.0, -a - t, -h / 2), (w, -a, h / 2))
        return GenericPair((wire,), (flag_top, flag_bot))


@dataclass(frozen=True)
class GenericPair:
    """Two disjoint unions of axis-aligned primitives, MC evaluation only."""

    region_a: tuple
    region_b: tuple

    def __post_init__(self):
        for pa in self.region_a:
            for pb in self.region_b:
                lo1, hi1 = pa.bounds()
                lo2, hi2 = pb.bounds()
                if np.all(np.minimum(hi1, hi2) - np.maximum(lo1, lo2) > 0):
                    raise ValueError("regions A and B must be disjoint")
        if not (self.volume_a() > 0 and self.volume_b() > 0):
            raise ValueError("regions must have positive measure")

    def volume_a(self):
        return sum(p.volume() for p in self.region_a)

    def volume_b(self):
        return sum(p.volume() for p in self.region_b)

    def swapped(self):
        return GenericPair(self.region_b, self.region_a)

    def mirror(self):
        return GenericPair(tuple(p.reflected() for p in self.region_a),
                           tuple(p.reflected() for p in self.region_b))

    def sample_region(self, which: str, rng, n: int):
        prims = self.region_a if which == "a" else self.region_b
        vols = np.array([p.volume() for p in prims])
        counts = rng.multinomial(n, vols / vols.sum())
        parts = [p.sample(rng, int(c)) for p, c in zip(prims, counts) if c]
        return np.concatenate(parts, axis=0)


BodyGeometry = Union[JanusBall, DualWrench, DualFlag, GenericPair]


@dataclass(frozen=True)
class TwoPartBody:
    """Two homogeneous regions in the center-of-mass frame.

    The material inhomogeneity (material_a != material_b) is what makes the
    nonequilibrium force and torque nonzero.
    """

    geometry: BodyGeometry
    material_a: Material
    material_b: Material

    def thin_metal_report(self, temperature_K: float) -> dict:
        """Check every metal dimension against the skin depth at the thermal
        spectral peak.  A violation is reported, never fatal."""
        omega_peak = 2.821 * KB_EV_PER_K * max(temperature_K, 1.0)
        report = {}
        for side, mat in (("a", self.material_a), ("b", self.material_b)):
            if not isinstance(mat, DrudeMetal):
                continue
            dim_m = _metal_dimension(self.geometry, side)
            delta_nm = skin_depth(omega_peak, mat)
            report[side] = {
                "dimension_nm": dim_m * 1e9,
                "skin_depth_nm": delta_nm,
                "within_skin_depth": dim_m * 1e9 <= delta_nm,
            }
        return report


def _metal_dimension(geom: BodyGeometry, side: str) -> float:
    if isinstance(geom, JanusBall):
        return geom.radius
    if isinstance(geom, DualWrench):
        s = geom.cross_section_a if side == "a" else geom.cross_section_b
        return 2.0 * math.sqrt(s / math.pi)
    if isinstance(geom, DualFlag):
        return geom.thickness
    lo, hi = np.inf, 0.0
    prims = geom.region_a if side == "a" else geom.region_b
    for p in prims:
        b0, b1 = p.bounds()
        lo = min(lo, float(np.min(b1 - b0)))
    return lo


# --------------------------------------------------------------------------
# Janus ball: hemisphere-overlap reduction
#
# With C(R) the overlap volume of region A with region B shifted by R, the
# 6-D pair integral collapses (by azimuthal symmetry) to
#   I_AB * 8 pi a = (wa)^8 int_0^2 ds s^3 [phi/r^8](wa s) w(s),
# where w(s) is a frequency-independent profile of the unit ball.  The
# profile is computed once per resolution tier and shared globally.

_GLX12, _GLW12 = np.polynomial.legendre.leggauss(12)
_PROFILE_CACHE: dict = {}
_PROFILE_LOCK = threading.Lock()
_PSI_PANELS = 16
_Z_PANELS = 8
_MAX_TIER = 1 << 14


def _janus_tier(oa: float) -> int:
    need = max(64, int(math.ceil(6.0 * oa)))
    return 1 << (need - 1).bit_length()


def _janus_profile(panels: int):
    key = (panels, _PSI_PANELS, _Z_PANELS)
    prof = _PROFILE_CACHE.get(key)
    if prof is not None:
        return prof
    nodes, weights = gl_nodes(0.0, 2.0, panels, order=12)
    wvals = _impl.w_profile_arr(nodes, _PSI_PANELS, _Z_PANELS, _GLX12, _GLW12)
    with _PROFILE_LOCK:
        prof = _PROFILE_CACHE.setdefault(key, (nodes, weights, wvals))
    return prof


def _janus_8pia_on(profile, oa: float, pol) -> float:
    nodes, weights, wvals = profile
    f = _impl.phi_over_r8_arr(oa * nodes, pol.switch_threshold, pol.series_terms)
    return oa**8 * float(np.sum(weights * nodes**3 * f * wvals))


def janus_iab_8pia(oa: float, q: QuadratureSpec) -> Estimate:
    """Dimensionless Janus geometric integral I_AB * 8 pi a at oa = omega*a.

    Scales as -(8 pi/108)(wa)^8 for wa << 1 and as (wa)^4 for wa >> 1.
    """
    if oa == 0.0:
        return Estimate(0.0, 0.0)
    pol = q.phi_policy
    tier = _janus_tier(oa)
    while True:
        hi = _janus_8pia_on(_janus_profile(tier), oa, pol)
        lo = _janus_8pia_on(_janus_profile(tier // 2), oa, pol)
        err = abs(hi - lo)
        if err <= max(q.abs_tol, q.rel_tol * abs(hi)) or err <= 1e-11 * abs(hi):
            return Estimate(hi, err)
        if tier >= _MAX_TIER:
            raise ToleranceError("Janus profile refinement exhausted",
                                 Estimate(hi, err))
        tier *= 2


def _janus_iab(geom: JanusBall, omega: float, q: QuadratureSpec) -> Estimate:
    a_nat = geom.radius / HBAR_C_EV_M
    sign = -1.0 if geom.flip_regions else 1.0
    dimless = janus_iab_8pia(omega * a_nat, q)
    scale = sign / (8.0 * math.pi * a_nat)
    return Estimate(dimless.value * scale, dimless.error * abs(scale))


# --------------------------------------------------------------------------
# dual Allen wrench
#
# Reduced route: with psi0' = phi/r^7, the tag integral is exact and
#   Jhat(at, bt) = int_0^{2 at} du (u - at) [psi0(sqrt(u^2+bt^2)) - psi0(u)],
# so J_AB = 2 w^4 S_A S_B Jhat.  Saturates at Jhat -> (11 pi/30) at for
# at >> 1 and Jhat -> (56/675) at^4 bt^2 for at, bt << 1.

def _wrench_jhat_reduced(atil: float, btil: float, q: QuadratureSpec) -> Estimate:
    pol = q.phi_policy

    def integrand(u):
        upper = _impl.psi0_arr(np.hypot(u, btil), pol.switch_threshold,
                               pol.series_terms)
        lower = _impl.psi0_arr(u, pol.switch_threshold, pol.series_terms)
        return (u - atil) * (upper - lower)

    initial = max(8, min(int(2 * atil), q.max_subdivisions // 2))
    return adaptive_gk(integrand, 0.0, 2.0 * atil, rel_tol=q.rel_tol,
                       abs_tol=q.abs_tol, max_subdivisions=q.max_subdivisions,
                       initial_panels=initial)


class WrenchFactor(NamedTuple):
    """Wrench torque geometric factor J_AB = 2 w^4 S_A S_B Jhat."""

    j_ab: float
    j_ab_error: float
    jhat: float
    jhat_error: float


def wrench_JAB_reduced(half_length_m: float, tag_length_m: float,
                       cross_section_a_m2: float, cross_section_b_m2: float,
                       omega: float, q: QuadratureSpec,
                       orientation: float = 1.0) -> WrenchFactor:
    """Out-of-plane wrench torque factor via the reduced 1-D quadrature."""
    a_nat = half_length_m / HBAR_C_EV_M
    b_nat = tag_length_m / HBAR_C_EV_M
    sa = cross_section_a_m2 / HBAR_C_EV_M**2
    sb = cross_section_b_m2 / HBAR_C_EV_M**2
    jh = _wrench_jhat_reduced(omega * a_nat, omega * b_nat, q)
    pref = 2.0 * omega**4 * sa * sb * orientation
    return WrenchFactor(pref * jh.value, abs(pref) * jh.error,
                        orientation * jh.value, jh.error)


def _wrench_jhat_2d(atil: float, btil: float, q: QuadratureSpec) -> Estimate:
    """Independent direct 2-D panel quadrature of the wrench factor."""
    pol = q.phi_policy

    def run(scale):
        pu = int(math.ceil(max(12.0, 1.5 * atil) * scale))
        px = int(math.ceil(max(12.0, 1.0 * btil) * scale))
        ux, uw = gl_nodes(0.0, 2.0 * atil, pu, order=12)
        xx, xw = gl_nodes(0.0, btil, px, order=12)
        return _impl.jhat_2d(ux, uw, xx, xw, atil,
                             pol.switch_threshold, pol.series_terms)

    coarse = run(1.0)
    fine = run(2.0)
    return Estimate(fine, abs(fine - coarse))


class VectorEstimate(NamedTuple):
    value: np.ndarray
    error: np.ndarray


# --------------------------------------------------------------------------
# public pair integrals

def pair_integral_IAB(body: TwoPartBody, omega: float, q: QuadratureSpec,
                      method: str = "auto") -> Estimate:
    """Geometric force integral I_AB(omega), natural units (eV).

    JanusBall uses the deterministic hemisphere-overlap reduction; the
    planar wrench has I_AB = 0 exactly; other geometries need the Monte
    Carlo path, which must be requested explicitly (method="mc").
    """
    geom = body.geometry
    if method == "mc":
        return mc_pair_oracle(body, omega, "iab", q)
    if isinstance(geom, JanusBall):
        return _janus_iab(geom, omega, q)
    if isinstance(geom, DualWrench):
        # planar body: R_z = 0 pointwise
        return Estimate(0.0, 0.0)
    if method == "auto":
        raise ValueError(
            f"{type(geom).__name__} has no deterministic I_AB reduction; "
            "pass method='mc' to sample it")
    raise ValueError(f"unknown method {method!r}")


def pair_integral_JAB(body: TwoPartBody, omega: float, q: QuadratureSpec,
                      method: str = "auto") -> VectorEstimate:
    """Geometric torque integral J_AB(omega) as a 3-vector, dimensionless.

    For the dual wrench only the out-of-plane component is nonzero; it is
    evaluated by direct 2-D quadrature, independent of the reduced route in
    :func:`wrench_JAB_reduced`.
    """
    geom = body.geometry
    if method == "mc":
        return mc_pair_oracle(body, omega, "jab", q)
    if isinstance(geom, DualWrench):
        a_nat = geom.half_length / HBAR_C_EV_M
        b_nat = geom.tag_length / HBAR_C_EV_M
        sa = geom.cross_section_a / HBAR_C_EV_M**2
        sb = geom.cross_section_b / HBAR_C_EV_M**2
        jh = _wrench_jhat_2d(omega * a_nat, omega * b_nat, q)
        pref = 2.0 * omega**4 * sa * sb * geom.orientation
        return VectorEstimate(np.array([0.0, 0.0, pref * jh.value]),
                              np.array([0.0, 0.0, abs(pref) * jh.error]))
    if isinstance(geom, JanusBall):
        # azimuthal symmetry: r x r' averages to zero
        return VectorEstimate(np.zeros(3), np.zeros(3))
    if method == "auto":
        raise ValueError(
            f"{type(geom).__name__} has no deterministic J_AB reduction; "
            "pass method='mc' to sample it")
    raise ValueError(f"unknown method {method!r}")


# --------------------------------------------------------------------------
# Monte Carlo oracle

_N_STRATA = 64


def _stratum_rng(seed: int, stratum: int):
    # counter-based streams: one Philox key per stratum, so the estimate is
    # bit-identical for any execution order or thread count
    key = np.array([np.uint64(seed & 0xFFFFFFFFFFFFFFFF), np.uint64(stratum)],
                   dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _sample_hemisphere(rng, n: int, radius_nat: float, upper: bool):
    d = rng.normal(size=(n, 3))
    d /= np.linalg.norm(d, axis=1)[:, None]
    r = radius_nat * rng.random(n) ** (1.0 / 3.0)
    pts = d * r[:, None]
    pts[:, 2] = np.abs(pts[:, 2]) if upper else -np.abs(pts[:, 2])
    return pts


def mc_pair_oracle(body: TwoPartBody, omega: float, kind: str,
                   q: QuadratureSpec):
    """Stratified Monte Carlo estimate of I_AB ("iab") or J_AB ("jab").

    Uniform sampling per region with known volumes; one counter-based RNG
    stream per stratum, combined in stratum order, so the result is
    deterministic for a fixed seed regardless of thread count.  Always
    returns an estimate with its standard error.
    """
    if kind not in ("iab", "jab"):
        raise ValueError("kind must be 'iab' or 'jab'")
    geom = body.geometry
    pol = q.phi_policy
    n_per = max(1, int(math.ceil(q.mc_samples / _N_STRATA)))

    if isinstance(geom, DualWrench):
        if kind == "jab":
            return _mc_wrench_jab(geom, omega, q, n_per)
        # planar thin-wire body: R_z = 0 for every sample pair
        return Estimate(0.0, 0.0)

    if isinstance(geom, JanusBall):
        a_nat = geom.radius / HBAR_C_EV_M
        vol = 2.0 * math.pi / 3.0 * a_nat**3
        upper_is_a = not geom.flip_regions

        def draw(rng):
            ra = _sample_hemisphere(rng, n_per, a_nat, upper=upper_is_a)
            rb = _sample_hemisphere(rng, n_per, a_nat, upper=not upper_is_a)
            return ra, rb

        vols = (vol, vol)
    else:
        pair = geom.to_generic_pair() if isinstance(geom, DualFlag) else geom
        if not isinstance(pair, GenericPair):
            raise ValueError(f"no MC sampler for {type(geom).__name__}")
        scale = 1.0 / HBAR_C_EV_M

        def draw(rng, pair=pair, scale=scale):
            ra = pair.sample_region("a", rng, n_per) * scale
            rb = pair.sample_region("b", rng, n_per) * scale
            return ra, rb

        vols = (pair.volume_a() / HBAR_C_EV_M**3,
                pair.volume_b() / HBAR_C_EV_M**3)

    means = []
    for k in range(_N_STRATA):
        rng = _stratum_rng(q.rng_seed, k)
        ra, rb = draw(rng)
        if kind == "iab":
            s1, _ = _impl.pair_sums_iab(ra, rb, omega, pol.switch_threshold,
                                        pol.series_terms)
            means.append(s1 / n_per)
        else:
            s1, _ = _impl.pair_sums_jab(ra, rb, omega, pol.switch_threshold,
                                        pol.series_terms)
            means.append(np.asarray(s1) / n_per)
    means = np.asarray(means)
    norm = vols[0] * vols[1] / (16.0 * math.pi**2) if kind == "iab" \
        else vols[0] * vols[1]
    mean = means.mean(axis=0) * norm
    stderr = means.std(axis=0, ddof=1) / math.sqrt(_N_STRATA) * abs(norm)
    if kind == "iab":
        return Estimate(float(mean), float(stderr))
    return VectorEstimate(np.atleast_1d(mean), np.atleast_1d(stderr))


def _mc_wrench_jab(geom: DualWrench, omega: float, q: QuadratureSpec,
                   n_per: int) -> VectorEstimate:
    """Thin-wire MC over the reduced 2-D wrench domain (x along tag, y along
    wire); third independent route next to the 1-D and 2-D quadratures."""
    pol = q.phi_policy
    a_nat = geom.half_length / HBAR_C_EV_M
    b_nat = geom.tag_length / HBAR_C_EV_M
    sa = geom.cross_section_a / HBAR_C_EV_M**2
    sb = geom.cross_section_b / HBAR_C_EV_M**2
    means = []
    for k in range(_N_STRATA):
        rng = _stratum_rng(q.rng_seed, k)
        xs = b_nat * rng.random(n_per)
        ys = a_nat * (2.0 * rng.random(n_per) - 1.0)
        s1, _ = _impl.wire_sums_jab(xs, ys, a_nat, omega,
                                    pol.switch_threshold, pol.series_terms)
        means.append(s1 / n_per)
    means = np.asarray(means)
    area = 2.0 * a_nat * b_nat
    pref = 2.0 * sa * sb * area * geom.orientation
    jz = means.mean() * pref
    err = means.std(ddof=1) / math.sqrt(_N_STRATA) * abs(pref)
    return VectorEstimate(np.array([0.0, 0.0, jz]), np.array([0.0, 0.0, err]))


# --------------------------------------------------------------------------
# presets

def _parse_length(tok: str) -> float:
    tok = tok.strip().lower()
    for suffix, mult in (("nm", 1e-9), ("um", 1e-6), ("mm", 1e-3), ("m", 1.0)):
        if tok.endswith(suffix):
            return float(tok[: -len(suffix)]) * mult
    raise ValueError(f"length needs a unit suffix (nm/um/mm/m): {tok!r}")


def geometry_from_preset(text: str) -> BodyGeometry:
    """Named presets: "janus:<a>", "wrench:<a>,<b>,<r_cross>",
    "flags:<a>,<w>,<h>,<t>" with unit-suffixed lengths."""
    s = text.strip().lower()
    name, _, rest = s.partition(":")
    parts = [p for p in rest.split(",") if p]
    if name == "janus" and len(parts) == 1:
        return JanusBall(radius=_parse_length(parts[0]))
    if name == "wrench" and len(parts) == 3:
        a, b, rc = (_parse_length(p) for p in parts)
        s_cross = math.pi * rc**2
        return DualWrench(half_length=a, tag_length=b,
                          cross_section_a=s_cross, cross_section_b=s_cross)
    if name == "flags" and len(parts) == 4:
        a, w, h, t = (_parse_length(p) for p in parts)
        return DualFlag(half_length=a, flag_width=w, flag_height=h, thickness=t)
    raise ValueError(f"unknown geometry preset {text!r}")
