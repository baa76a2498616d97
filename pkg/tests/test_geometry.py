"""Pair-integral geometry: Janus reduction, wrench routes, MC oracle."""

import math

import numpy as np
import pytest

from fluctforce.geometry import (Ball, Box, DualFlag, DualWrench, GenericPair,
                                 JanusBall, Segment, TwoPartBody,
                                 _janus_profile, geometry_from_preset,
                                 janus_iab_8pia, mc_pair_oracle,
                                 pair_integral_IAB, pair_integral_JAB,
                                 wrench_JAB_reduced)
from fluctforce.materials import GOLD, Dielectric
from fluctforce.quadrature import QuadratureSpec
from fluctforce.units import HBAR_C_EV_M

A_M = 100e-9
A_NAT = A_M / HBAR_C_EV_M
S_CROSS = math.pi * (50e-9) ** 2


def _janus_body(flip=False):
    geom = JanusBall(A_M)
    if flip:
        geom = geom.swapped()
    return TwoPartBody(geom, Dielectric(1.0), GOLD)


def _wrench_body(a=1e-6, b=1e-6, **kw):
    return TwoPartBody(DualWrench(a, b, S_CROSS, S_CROSS, **kw),
                       GOLD, Dielectric(1.0))


class TestJanusProfile:
    def test_moment_is_pi_over_six(self):
        # int_0^2 s^3 w(s) ds = pi/6 follows from the hemisphere first
        # moments (pi a^4/4 each) and volumes (2 pi a^3/3)
        nodes, weights, wvals = _janus_profile(128)
        mom = float(np.sum(weights * nodes**3 * wvals))
        assert mom == pytest.approx(math.pi / 6.0, rel=1e-7)

    def test_profile_positive_inside(self):
        nodes, _, wvals = _janus_profile(64)
        inside = (nodes > 1e-3) & (nodes < 1.999)
        assert np.all(wvals[inside] > 0)


class TestJanusIab:
    def test_small_oa_limit(self, quad):
        # |I_AB| -> w^8 a^7/108 from phi ~ -(4/9) r^8 and the hemisphere
        # moment integrals
        omega = 1e-2 / A_NAT
        est = pair_integral_IAB(_janus_body(), omega, quad)
        want = -(omega**8) * A_NAT**7 / 108.0
        assert est.value == pytest.approx(want, rel=1e-2)

    def test_region_swap_flips_sign(self, quad):
        omega = 0.5 / A_NAT
        plain = pair_integral_IAB(_janus_body(), omega, quad)
        swapped = pair_integral_IAB(_janus_body(flip=True), omega, quad)
        assert swapped.value == pytest.approx(-plain.value, rel=1e-10)

    @pytest.mark.parametrize("oa", [0.5, 1.0, 2.0])
    def test_mc_agrees_with_deterministic(self, oa, quad):
        omega = oa / A_NAT
        det = pair_integral_IAB(_janus_body(), omega, quad)
        mc = mc_pair_oracle(_janus_body(), omega, "iab", quad)
        assert abs(det.value - mc.value) < 3.0 * math.hypot(mc.error, det.error)

    def test_mc_swap_flips_sign_genuinely(self, quad_fast):
        omega = 1.0 / A_NAT
        plus = mc_pair_oracle(_janus_body(), omega, "iab", quad_fast)
        minus = mc_pair_oracle(_janus_body(flip=True), omega, "iab", quad_fast)
        assert abs(plus.value + minus.value) < 3.0 * math.hypot(plus.error,
                                                                minus.error)

    def test_jab_vanishes_by_symmetry(self, quad):
        est = pair_integral_JAB(_janus_body(), 1.0 / A_NAT, quad)
        assert np.all(est.value == 0.0)

    def test_contact_region_is_finite(self, quad):
        # touching hemispheres: phi ~ r^8 neutralizes the R^-8 kernel
        from fluctforce.kernels import phi_over_r8
        assert phi_over_r8(0.0) == pytest.approx(-4.0 / 9.0)
        est = pair_integral_IAB(_janus_body(), 20.0 / A_NAT, quad)
        assert math.isfinite(est.value)

    def test_generic_geometry_requires_explicit_mc(self, quad):
        pair = GenericPair((Ball((0, 0, 300e-9), 50e-9),),
                           (Ball((0, 0, -300e-9), 50e-9),))
        body = TwoPartBody(pair, Dielectric(1.0), GOLD)
        with pytest.raises(ValueError, match="method='mc'"):
            pair_integral_IAB(body, 1.0, quad)
        est = pair_integral_IAB(body, 1.0, quad, method="mc")
        assert math.isfinite(est.value) and est.error > 0


class TestWrench:
    def test_small_asymptote(self, quad):
        a_nat = 1e-6 / HBAR_C_EV_M
        omega = 1e-2 / a_nat
        fac = wrench_JAB_reduced(1e-6, 1e-6, S_CROSS, S_CROSS, omega, quad)
        want = 56.0 / 675.0 * 1e-2**4 * 1e-2**2
        assert fac.jhat == pytest.approx(want, rel=1e-2)

    def test_large_asymptote(self, quad):
        a_nat = 1e-6 / HBAR_C_EV_M
        omega = 1e3 / a_nat
        fac = wrench_JAB_reduced(1e-6, 1e-6, S_CROSS, S_CROSS, omega, quad)
        assert fac.jhat == pytest.approx(11.0 * math.pi / 30.0 * 1e3, rel=2e-2)

    def test_direct_2d_matches_reduced(self, quad):
        a_nat = 1e-6 / HBAR_C_EV_M
        for oa in (0.3, 2.0, 8.0):
            omega = oa / a_nat
            red = wrench_JAB_reduced(1e-6, 1e-6, S_CROSS, S_CROSS, omega, quad)
            two = pair_integral_JAB(_wrench_body(), omega, quad)
            tol = 3.0 * (red.j_ab_error + two.error[2]) + 1e-8 * abs(red.j_ab)
            assert abs(two.value[2] - red.j_ab) <= tol

    def test_mc_matches_reduced(self, quad):
        a_nat = 1e-6 / HBAR_C_EV_M
        omega = 2.0 / a_nat
        red = wrench_JAB_reduced(1e-6, 1e-6, S_CROSS, S_CROSS, omega, quad)
        mc = mc_pair_oracle(_wrench_body(), omega, "jab", quad)
        assert abs(mc.value[2] - red.j_ab) < 3.0 * mc.error[2]

    def test_mirror_negates(self, quad):
        a_nat = 1e-6 / HBAR_C_EV_M
        omega = 2.0 / a_nat
        plain = pair_integral_JAB(_wrench_body(), omega, quad)
        mirrored = pair_integral_JAB(_wrench_body(mirrored=True), omega, quad)
        assert mirrored.value[2] == pytest.approx(-plain.value[2], rel=1e-12)

    def test_region_swap_negates(self, quad):
        a_nat = 1e-6 / HBAR_C_EV_M
        omega = 2.0 / a_nat
        geom = DualWrench(1e-6, 1e-6, S_CROSS, S_CROSS)
        plain = pair_integral_JAB(TwoPartBody(geom, GOLD, Dielectric(1.0)),
                                  omega, quad)
        swapped = pair_integral_JAB(
            TwoPartBody(geom.swapped(), Dielectric(1.0), GOLD), omega, quad)
        assert swapped.value[2] == pytest.approx(-plain.value[2], rel=1e-12)

    def test_planar_body_feels_no_force(self, quad):
        est = pair_integral_IAB(_wrench_body(), 1.0, quad)
        assert est.value == 0.0
        mc = mc_pair_oracle(_wrench_body(), 1.0, "iab", quad)
        assert mc.value == 0.0

    def test_saturation_ordering(self, quad):
        # at fixed wire length the torque factor grows with tag length and
        # saturates: b = a/2, a, 2a from bottom to top
        a_nat = 1e-6 / HBAR_C_EV_M
        omega = 30.0 / a_nat
        vals = [wrench_JAB_reduced(1e-6, f * 1e-6, S_CROSS, S_CROSS, omega,
                                   quad).jhat for f in (0.5, 1.0, 2.0)]
        assert vals[0] < vals[1] < vals[2]


class TestMcOracle:
    def test_fixed_seed_reproducible(self, quad_fast):
        r1 = mc_pair_oracle(_janus_body(), 1.0 / A_NAT, "iab", quad_fast)
        r2 = mc_pair_oracle(_janus_body(), 1.0 / A_NAT, "iab", quad_fast)
        assert r1.value == r2.value and r1.error == r2.error

    def test_thread_count_invariance(self, quad_fast):
        # strata are independent counter-based streams combined in index
        # order, so a thread pool cannot change the result
        from concurrent.futures import ThreadPoolExecutor
        omega = 1.0 / A_NAT

        def run(_):
            return mc_pair_oracle(_janus_body(), omega, "iab", quad_fast)

        serial = run(0)
        for workers in (4, 8):
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(run, range(workers)))
            assert all(r.value == serial.value for r in results)

    def test_error_scaling_with_samples(self):
        # doubling the budget shrinks sigma by ~1/sqrt(2) on average
        omega = 1.0 / A_NAT
        lo = QuadratureSpec(mc_samples=20_000)
        ratios = []
        for seed in range(20):
            q1 = QuadratureSpec(mc_samples=20_000, rng_seed=seed)
            q2 = QuadratureSpec(mc_samples=40_000, rng_seed=seed)
            e1 = mc_pair_oracle(_janus_body(), omega, "iab", q1).error
            e2 = mc_pair_oracle(_janus_body(), omega, "iab", q2).error
            ratios.append(e2 / e1)
        mean_ratio = float(np.mean(ratios))
        assert 0.8 / math.sqrt(2) < mean_ratio < 1.2 / math.sqrt(2)

    def test_collinear_regions_give_zero_torque(self, quad_fast):
        # both regions on the y axis: r x r' = 0 for every sample pair
        pair = GenericPair(
            (Segment((0, 0, 0), "y", 1e-6, S_CROSS),),
            (Segment((0, 3e-6, 0), "y", 0.5e-6, S_CROSS),))
        body = TwoPartBody(pair, GOLD, Dielectric(1.0))
        est = mc_pair_oracle(body, 1.0, "jab", quad_fast)
        assert np.all(est.value == 0.0)

    def test_generic_mirror_negates(self, quad_fast):
        flag = DualFlag(1e-6, 0.5e-6, 1e-6, 0.1e-6)
        pair = flag.to_generic_pair()
        body = TwoPartBody(pair, GOLD, Dielectric(1.0))
        mbody = TwoPartBody(pair.mirror(), GOLD, Dielectric(1.0))
        omega = 1.0 / (1e-6 / HBAR_C_EV_M)
        a = mc_pair_oracle(body, omega, "jab", quad_fast)
        b = mc_pair_oracle(mbody, omega, "jab", quad_fast)
        assert abs(a.value[2] + b.value[2]) < 3 * math.hypot(a.error[2],
                                                             b.error[2])
        assert abs(a.value[2]) > 3 * a.error[2]  # signal, not noise


class TestFlagEnhancement:
    def test_flags_beat_matching_tags_by_about_ten(self, quad):
        # unfurling the tags into flags of height ~10x the wire thickness
        # raises the torque factor by an order of magnitude
        t = 100e-9
        flag = DualFlag(half_length=1e-6, flag_width=0.5e-6,
                        flag_height=1e-6, thickness=t)
        body = TwoPartBody(flag, GOLD, Dielectric(1.0))
        omega = 0.5 / (1e-6 / HBAR_C_EV_M)
        jf = mc_pair_oracle(body, omega, "jab", quad)
        jw = wrench_JAB_reduced(1e-6, 0.5e-6, t * t, t * t, omega,
                                QuadratureSpec())
        ratio = jf.value[2] / jw.j_ab
        assert 2.0 < ratio < 50.0


class TestGeometryValidation:
    def test_presets(self):
        g = geometry_from_preset("janus:100nm")
        assert isinstance(g, JanusBall) and g.radius == pytest.approx(1e-7)
        w = geometry_from_preset("wrench:1um,2um,50nm")
        assert w.tag_length == pytest.approx(2e-6)
        assert w.cross_section_a == pytest.approx(math.pi * (50e-9) ** 2)
        f = geometry_from_preset("flags:1um,500nm,1um,100nm")
        assert isinstance(f, DualFlag)
        with pytest.raises(ValueError):
            geometry_from_preset("janus:100")  # unit required
        with pytest.raises(ValueError):
            geometry_from_preset("torus:1um")

    def test_overlapping_regions_rejected(self):
        with pytest.raises(ValueError, match="disjoint"):
            GenericPair((Box((0, 0, 0), (1, 1, 1)),),
                        (Box((0.5, 0.5, 0.5), (2, 2, 2)),))

    def test_flag_regions_are_disjoint(self):
        DualFlag(1e-6, 0.5e-6, 1e-6, 0.1e-6).to_generic_pair()

    def test_thin_metal_report(self):
        body = _janus_body()
        rep = body.thin_metal_report(300.0)
        assert "b" in rep and rep["b"]["within_skin_depth"] in (True, False)
        assert rep["b"]["dimension_nm"] == pytest.approx(100.0)
