"""Radiative cooling, trajectories, and terminal velocities."""

import math

import numpy as np
import pytest

from fluctforce.dynamics import TensorPolarizability
from fluctforce.geometry import DualWrench, JanusBall, TwoPartBody
from fluctforce.kernels import f_n
from fluctforce.materials import GOLD, Dielectric, DrudeMetal
from fluctforce.relaxation import (CoolingModel, RelaxationProblem,
                                   cooling_time, cooling_trajectory,
                                   moment_of_inertia, net_power, p_of_u,
                                   terminal_angular_velocity,
                                   terminal_velocity)
from fluctforce.units import HBAR_C_EV_M, KB_EV_PER_K, UNITS, ThermalPair

S_CROSS = math.pi * (50e-9) ** 2
TH = ThermalPair(300.0, 600.0)
RHO_TAG = 2200.0   # silica-like dielectric tags
V_BALL = 4.0 / 3.0 * math.pi * (100e-9) ** 3


def _janus_problem(u0=2.0):
    body = TwoPartBody(JanusBall(100e-9), Dielectric(1.0), GOLD)
    mass = 0.5 * V_BALL * (19300.0 + RHO_TAG)
    return RelaxationProblem(body, u0, 300.0, "janus_closed", mass=mass)


def _wrench_problem(u0=2.0, drive="wrench_closed", a=1e-6, b=1e-6):
    geom = DualWrench(a, b, S_CROSS, S_CROSS)
    body = TwoPartBody(geom, GOLD, Dielectric(1.0))
    inertia = moment_of_inertia(geom, 19300.0, RHO_TAG)
    return RelaxationProblem(body, u0, 300.0, drive,
                             moment_of_inertia=inertia)


class TestNetPower:
    def test_equilibrium_zero(self, quad):
        assert net_power((GOLD, V_BALL), ThermalPair(300, 300), quad).value == 0.0

    def test_sign(self, quad):
        hot_env = net_power((GOLD, V_BALL), ThermalPair(600, 300), quad)
        assert hot_env.value > 0
        cold_env = net_power((GOLD, V_BALL), ThermalPair(300, 600), quad)
        assert cold_env.value < 0

    def test_swap_antisymmetry(self, quad):
        p1 = net_power((GOLD, V_BALL), ThermalPair(300, 600), quad)
        p2 = net_power((GOLD, V_BALL), ThermalPair(600, 300), quad)
        assert p1.value == pytest.approx(-p2.value, rel=1e-8)

    def test_drude_reduces_to_f3_form(self, quad):
        # substituting the Drude Im chi and changing variables gives
        # P = (V wp^2 nu^3/pi^2) [f_3(beta nu) - f_3(beta' nu)], exactly
        quad_v = net_power((GOLD, V_BALL), TH, quad)
        y = GOLD.damping / (KB_EV_PER_K * 300.0)
        v_nat = UNITS.volume_to_natural(V_BALL)
        closed_nat = v_nat * GOLD.plasma_freq**2 * GOLD.damping**3 \
            / math.pi**2 * (f_n(3, y) - f_n(3, y / 2.0))
        assert quad_v.value == pytest.approx(
            UNITS.power_from_natural(closed_nat), rel=1e-6)

    def test_tensor_model_route(self, quad):
        alpha = TensorPolarizability.from_material_volume(GOLD, V_BALL)
        a = net_power(alpha, TH, quad)
        b = net_power((GOLD, V_BALL), TH, quad)
        assert a.value == pytest.approx(b.value, rel=1e-6)


class TestCooling:
    def test_tc_scale(self):
        t_c = CoolingModel(GOLD).t_c_seconds(300.0)
        assert 5e-5 < t_c < 2e-4  # ~1e-4 s

    def test_zero_interval(self):
        ct = cooling_time(2.0, 2.0, 300.0, CoolingModel(GOLD))
        assert ct.duration == 0.0 and ct.t_c > 0

    def test_monotone_in_interval(self):
        cm = CoolingModel(GOLD)
        t1 = cooling_time(2.0, 1.5, 300.0, cm).duration
        t2 = cooling_time(2.0, 1.2, 300.0, cm).duration
        t3 = cooling_time(2.5, 1.2, 300.0, cm).duration
        assert 0 < t1 < t2 < t3

    def test_heating_side(self):
        ct = cooling_time(0.5, 0.9, 300.0, CoolingModel(GOLD))
        assert ct.duration > 0

    def test_crossing_unity_rejected(self):
        cm = CoolingModel(GOLD)
        with pytest.raises(ValueError):
            cooling_time(2.0, 0.5, 300.0, cm)
        with pytest.raises(ValueError):
            cooling_time(0.5, 2.0, 300.0, cm)

    def test_needs_atom_density(self):
        bare = DrudeMetal(9.0, 0.035)
        with pytest.raises(ValueError):
            CoolingModel(bare)

    def test_validity_flag(self):
        cm = CoolingModel(GOLD)
        assert cm.valid_at(300.0) and not cm.valid_at(100.0)

    def test_trajectory_monotone(self):
        ts, us = cooling_trajectory(2.0, 300.0, CoolingModel(GOLD), points=50)
        assert np.all(np.diff(ts) > 0)
        assert np.all(np.diff(us) < 0)
        assert us[0] == 2.0 and us[-1] == pytest.approx(1.0, abs=2e-3)

    def test_p_of_u(self):
        assert p_of_u(1.0, 300.0, GOLD) == 0.0
        assert p_of_u(2.0, 300.0, GOLD) < 0 < p_of_u(0.5, 300.0, GOLD)


class TestTerminalVelocity:
    def test_scale_tenth_of_nm_per_s(self, quad):
        # 100 nm gold/dielectric Janus ball starting twice as hot
        tv = terminal_velocity(_janus_problem(), quad)
        assert 0.1e-9 / 3 < abs(tv.velocity) < 0.1e-9 * 3
        # hotter body drifts toward the metal cap (negative z)
        assert tv.velocity < 0

    def test_equilibrium_start_is_zero(self, quad):
        assert terminal_velocity(_janus_problem(u0=1.0), quad).velocity == 0.0

    def test_integrand_finite_at_unity(self):
        # F/p -> f7'(y)/f3'(y) as u -> 1 (both vanish linearly); series
        # oracle from one-sided differences
        y = GOLD.damping / (KB_EV_PER_K * 300.0)
        eps = 1e-6
        ratio_near = (f_n(7, y) - f_n(7, y / (1 + eps))) \
            / (f_n(3, y) - f_n(3, y / (1 + eps)))
        h = 1e-5 * y
        want = (f_n(7, y + h) - f_n(7, y - h)) / (f_n(3, y + h) - f_n(3, y - h))
        assert ratio_near == pytest.approx(want, rel=1e-3)

    def test_full_drive_matches_closed_small_ball(self, quad):
        a_m = 1e-2 / GOLD.damping * HBAR_C_EV_M
        body = TwoPartBody(JanusBall(a_m), Dielectric(1.0), GOLD)
        mass = 1e-18
        closed = terminal_velocity(
            RelaxationProblem(body, 2.0, 300.0, "janus_closed", mass=mass), quad)
        full = terminal_velocity(
            RelaxationProblem(body, 2.0, 300.0, "propulsion", mass=mass), quad)
        assert full.velocity == pytest.approx(closed.velocity, rel=0.05)

    def test_heating_reverses_sign(self, quad):
        cold = terminal_velocity(_janus_problem(u0=0.5), quad)
        hot = terminal_velocity(_janus_problem(u0=2.0), quad)
        assert cold.velocity * hot.velocity < 0


class TestMomentOfInertia:
    def test_formula_arithmetic(self):
        geom = DualWrench(1e-6, 1e-6, S_CROSS, S_CROSS)
        want = 19300.0 * S_CROSS * (2 / 3) * 1e-18 \
            + RHO_TAG * S_CROSS * 2e-6 * (1e-12 + 1e-12 / 3)
        assert moment_of_inertia(geom, 19300.0, RHO_TAG) == \
            pytest.approx(want, rel=1e-12)

    def test_tagless_limit(self):
        geom = DualWrench(1e-6, 1e-12, S_CROSS, S_CROSS)
        got = moment_of_inertia(geom, 19300.0, RHO_TAG)
        assert got == pytest.approx(19300.0 * S_CROSS * (2 / 3) * 1e-18,
                                    rel=1e-5)

    def test_tag_density_scaling(self):
        geom = DualWrench(1e-6, 1e-6, S_CROSS, S_CROSS)
        i1 = moment_of_inertia(geom, 19300.0, 1000.0)
        i2 = moment_of_inertia(geom, 19300.0, 2000.0)
        tag_term = i2 - i1
        assert i2 == pytest.approx(i1 + tag_term)
        assert tag_term == pytest.approx(
            1000.0 * S_CROSS * 2e-6 * (1e-12 + 1e-12 / 3), rel=1e-12)


class TestTerminalAngular:
    def test_micron_wrench_scales(self, quad):
        # a = b = 1 um, 50 nm cross-section radius, gold wire, light tags
        tav = terminal_angular_velocity(_wrench_problem(), quad)
        assert 2e-7 / 3 < tav.prefactor < 2e-7 * 3
        assert 1e4 < abs(tav.omega_hat) < 4e4
        assert 4e-3 / 3 < abs(tav.omega) < 4e-3 * 3

    def test_equilibrium_start_is_zero(self, quad):
        tav = terminal_angular_velocity(_wrench_problem(u0=1.0), quad)
        assert tav.omega == 0.0

    def test_closed_vs_full_spectral(self, quad):
        a_m = 1e-2 / GOLD.damping * HBAR_C_EV_M
        closed = terminal_angular_velocity(
            _wrench_problem(drive="wrench_closed", a=a_m, b=a_m), quad)
        full = terminal_angular_velocity(
            _wrench_problem(drive="chiral", a=a_m, b=a_m), quad)
        assert full.omega_hat == pytest.approx(closed.omega_hat, rel=0.05)


class TestProblemValidation:
    def test_drive_geometry_consistency(self):
        body = TwoPartBody(JanusBall(1e-7), Dielectric(1.0), GOLD)
        with pytest.raises(ValueError):
            RelaxationProblem(body, 2.0, 300.0, "wrench_closed",
                              moment_of_inertia=1e-28)
        with pytest.raises(ValueError):
            RelaxationProblem(body, 2.0, 300.0, "janus_closed")  # no mass
        with pytest.raises(ValueError):
            RelaxationProblem(body, -1.0, 300.0, "janus_closed", mass=1e-18)
