"""Unit round-trips and the spectral material models."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fluctforce.materials import (GOLD, Dielectric, DrudeMetal,
                                  GyrotropicSphere, MonomialAbsorber,
                                  drude_chi, material_from_preset, skin_depth,
                                  susceptibility_product)
from fluctforce.units import KB_EV_PER_K, UNITS, ThermalPair

_ROUND_TRIPS = [
    ("length", UNITS.length_to_natural, UNITS.length_from_natural),
    ("time", UNITS.time_to_natural, UNITS.time_from_natural),
    ("temperature", UNITS.temperature_to_natural, UNITS.temperature_from_natural),
    ("force", UNITS.force_to_natural, UNITS.force_from_natural),
    ("torque", UNITS.torque_to_natural, UNITS.torque_from_natural),
]


@pytest.mark.parametrize("name,fwd,back", _ROUND_TRIPS,
                         ids=[r[0] for r in _ROUND_TRIPS])
@given(x=st.floats(min_value=1e-30, max_value=1e30))
@settings(max_examples=50, deadline=None)
def test_round_trip_identity_to_12_digits(name, fwd, back, x):
    assert back(fwd(x)) == pytest.approx(x, rel=1e-12)


def test_thermal_pair_beta():
    th = ThermalPair(300.0, 600.0)
    assert th.beta == pytest.approx(1.0 / (KB_EV_PER_K * 300.0))
    assert th.u == pytest.approx(2.0)
    assert ThermalPair(0.0, 300.0).beta == math.inf
    with pytest.raises(ValueError):
        ThermalPair(-1.0, 300.0)


def test_drude_chi_frozen_value():
    # independent evaluation in exact rational arithmetic:
    # Re = -wp^2/(w^2+nu^2), Im = wp^2 nu / (w (w^2+nu^2))
    w, nu, wp2 = Fraction(1, 10), Fraction(7, 200), Fraction(81)
    denom = w * w + nu * nu
    re = -wp2 / denom
    im = wp2 * nu / (w * denom)
    got = drude_chi(0.1, GOLD)
    assert got.real == pytest.approx(float(re), rel=1e-14)
    assert got.imag == pytest.approx(float(im), rel=1e-14)


def test_drude_high_frequency_transparency():
    assert abs(drude_chi(1e6, GOLD)) < 1e-10


def test_drude_pole_at_zero():
    with pytest.raises(ZeroDivisionError):
        drude_chi(0.0, GOLD)


def test_passivity_and_reality_on_log_grid():
    omegas = np.geomspace(1e-3, 10.0, 120)
    chi = drude_chi(omegas, GOLD)
    assert np.all(chi.imag > 0)
    assert np.allclose(drude_chi(-omegas, GOLD), np.conj(chi), rtol=1e-14)
    # gyrotropic diagonal is passive too
    sph = GyrotropicSphere(9.0, 0.035, 1.2e-4, 100e-9)
    for w in (1e-3, 0.05, 1.0):
        t = sph.chi_tensor(w)
        assert t[0, 0].imag > 0 and t[2, 2].imag > 0
        tm = sph.chi_tensor(-w)
        assert np.allclose(tm, np.conj(t), rtol=1e-13)


def test_dielectric_has_no_dissipation():
    d = Dielectric(2.0)
    assert d.chi(0.3).imag == 0.0
    assert d.chi(0.3).real == 2.0


def test_skin_depth_gold_thermal_is_about_50nm():
    omega = 2.821 * KB_EV_PER_K * 300.0  # thermal spectral peak
    delta = skin_depth(omega, GOLD)
    assert 25.0 < delta < 100.0


def test_skin_depth_scaling_and_special_point():
    m = GOLD
    m4 = DrudeMetal(2 * m.plasma_freq, m.damping)
    w = 0.07
    assert skin_depth(w, m4) == pytest.approx(skin_depth(w, m) / 2.0, rel=1e-12)
    # at omega = nu the closed form collapses to 2/wp
    got = skin_depth(m.damping, m)
    assert got == pytest.approx(2.0 / m.plasma_freq * 197.3269804, rel=1e-12)
    with pytest.raises(ValueError):
        skin_depth(0.0, m)


def test_susceptibility_product_antisymmetry():
    a, b = GOLD, Dielectric(1.5)
    assert susceptibility_product(0.2, a, a) == 0.0
    for w in (1e-3, 0.1, 2.0):
        assert susceptibility_product(w, a, b) == \
            pytest.approx(-susceptibility_product(w, b, a), rel=1e-15)


@given(w=st.floats(min_value=1e-3, max_value=10.0),
       chi0=st.floats(min_value=0.1, max_value=10.0))
@settings(max_examples=50, deadline=None)
def test_susceptibility_product_dielectric_drude_sign(w, chi0):
    # X_AB = -chi_A Im chi_B < 0 when A is a lossless dielectric, B Drude
    x = susceptibility_product(w, Dielectric(chi0), GOLD)
    assert x == pytest.approx(-chi0 * drude_chi(w, GOLD).imag, rel=1e-13)
    assert x < 0


def test_monomial_absorber():
    m = MonomialAbsorber(exponent=3, amplitude=2.0)
    assert m.im_alpha(2.0) == pytest.approx(16.0)


def test_material_presets():
    assert material_from_preset("gold") == GOLD
    assert material_from_preset("dielectric:2.5") == Dielectric(2.5)
    with pytest.raises(ValueError):
        material_from_preset("unobtainium")
