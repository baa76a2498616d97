"""Spectral kernels: pair kernel phi, occupation differences, f_n integrals."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import gamma, zeta

from fluctforce.kernels import (coth_diff, f_n, f_n_asymptotic,
                                im_gamma_coincident, phi, phi_closed_reference,
                                phi_over_r8, planck_diff, planck_occupation,
                                psi0, radiation_reaction_imalpha,
                                VacuumGreensCoincident)
from fluctforce.quadrature import PhiEvalPolicy
from fluctforce.units import ThermalPair


def _phi_naive(r):
    """Closed form in plain double precision, no cancellation control."""
    return (-9 - 2 * r**2 - r**4 + (9 - 16 * r**2 + 3 * r**4) * np.cos(2 * r)
            + r * (18 - 8 * r**2 + r**4) * np.sin(2 * r))


class TestPhi:
    def test_zero(self):
        assert phi(0.0) == 0.0

    def test_leading_coefficient(self):
        # phi ~ -(4/9) r^8 + (28/225) r^10
        r = 1e-2
        assert phi(r) / r**8 == pytest.approx(-4.0 / 9.0, rel=1e-3)
        assert phi_over_r8(0.0) == pytest.approx(-4.0 / 9.0, rel=1e-15)

    def test_series_matches_extended_precision(self):
        for r in np.linspace(0.01, 0.49, 25):
            ref = phi_closed_reference(r, digits=50)
            assert phi(float(r)) == pytest.approx(ref, rel=1e-10)

    def test_branch_agreement_across_switch(self):
        pol = PhiEvalPolicy()
        eps = 1e-6
        lo = phi(pol.switch_threshold - eps)
        hi = phi(pol.switch_threshold + eps)
        ref_lo = phi_closed_reference(pol.switch_threshold - eps)
        ref_hi = phi_closed_reference(pol.switch_threshold + eps)
        assert lo == pytest.approx(ref_lo, rel=1e-10)
        assert hi == pytest.approx(ref_hi, rel=1e-10)

    def test_naive_closed_form_loses_ten_digits(self):
        # at r = 1e-2 the closed form cancels ~O(1) terms down to ~4e-17,
        # so bare double precision has no correct digits left
        r = 1e-2
        ref = phi_closed_reference(r, digits=60)
        naive_rel = abs(_phi_naive(r) / ref - 1.0)
        assert naive_rel > 1e-6          # lost >= 10 of 16 digits
        assert abs(phi(r) / ref - 1.0) < 1e-10  # policy path restores them

    def test_array_shape(self):
        r = np.array([[0.1, 0.6], [1.0, 3.0]])
        assert phi(r).shape == (2, 2)


class TestPsi0:
    def test_matches_quadrature_of_phi(self):
        from scipy.integrate import quad
        for r in (0.3, 0.7, 2.0, 6.0):
            want, _ = quad(lambda t: phi(t) / t**7, 1e-12, r, limit=300)
            assert psi0(r) == pytest.approx(want, rel=1e-8)

    def test_continuity_at_switch(self):
        eps = 1e-9
        assert psi0(0.5 - eps) == pytest.approx(psi0(0.5 + eps), rel=1e-7)

    def test_limit_at_infinity(self):
        # psi0(inf) = -2/3; the tail oscillation decays as 1/r^2
        assert psi0(3000.0) == pytest.approx(-2.0 / 3.0, abs=1e-5)


class TestOccupation:
    def test_equilibrium_zero(self):
        th = ThermalPair(400.0, 400.0)
        assert planck_diff(0.1, th) == 0.0
        assert coth_diff(0.1, th) == 0.0

    def test_sign(self):
        th = ThermalPair(600.0, 300.0)
        assert planck_diff(0.05, th) > 0

    def test_overflow_safe(self):
        th = ThermalPair(1.0, 0.0)
        val = planck_diff(100.0, th)  # beta*omega ~ 1.2e6
        assert val == 0.0 and not math.isnan(val)

    def test_laurent_small_argument(self):
        # n(x) = 1/x - 1/2 + x/12 - x^3/720 + ...
        x = 1e-6
        want = 1.0 / x - 0.5 + x / 12.0
        assert planck_occupation(np.array([x]))[0] == pytest.approx(want, rel=1e-12)

    @given(w=st.floats(min_value=1e-4, max_value=5.0),
           t1=st.floats(min_value=1.0, max_value=5000.0),
           t2=st.floats(min_value=1.0, max_value=5000.0))
    @settings(max_examples=60, deadline=None)
    def test_coth_identity(self, w, t1, t2):
        th = ThermalPair(t1, t2)
        assert coth_diff(w, th) == pytest.approx(-2.0 * planck_diff(w, th),
                                                 rel=1e-14, abs=1e-300)


def _f3_trapezoid_oracle(y):
    """Brute-force trapezoid scan with one Richardson extrapolation step."""
    def scan(h):
        x = np.arange(h, 60.0 / y, h)
        f = x**3 / (x**2 + 1.0) / np.expm1(y * x)
        return h * (f.sum() - 0.5 * f[-1])

    c, f = scan(2e-4), scan(1e-4)
    return f + (f - c) / 3.0


class TestFn:
    def test_f3_against_trapezoid_oracle(self):
        assert f_n(3, 1.0) == pytest.approx(_f3_trapezoid_oracle(1.0), rel=1e-6)

    @pytest.mark.parametrize("n", range(2, 10))
    @pytest.mark.parametrize("y", [0.1, 1.0, 10.0])
    def test_recurrence(self, n, y):
        # f_{n+2} + f_n = Gamma(n+1) zeta(n+1) / y^(n+1)
        lhs = f_n(n + 2, y) + f_n(n, y)
        rhs = gamma(n + 1) * zeta(n + 1, 1) / y ** (n + 1)
        assert lhs == pytest.approx(rhs, rel=1e-8)

    def test_large_y_asymptote(self):
        for n in range(2, 13):
            assert f_n(n, 50.0) == pytest.approx(f_n_asymptotic(n, 50.0),
                                                 rel=1e-3)

    def test_monotone_in_y(self, rng):
        for _ in range(10):
            y1, y2 = sorted(rng.uniform(0.05, 20.0, size=2))
            if y1 == y2:
                continue
            n = int(rng.integers(2, 13))
            assert f_n(n, y1) > f_n(n, y2)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            f_n(3, 0.0)
        with pytest.raises(ValueError):
            f_n(1, 1.0)


class TestGreensFactor:
    def test_values(self):
        assert im_gamma_coincident(0.0) == 0.0
        assert im_gamma_coincident(1.0) == pytest.approx(1.0 / (6 * math.pi))
        assert im_gamma_coincident(-2.0) == -im_gamma_coincident(2.0)
        assert VacuumGreensCoincident.im(1.0) == im_gamma_coincident(1.0)

    def test_radiation_reaction(self):
        assert radiation_reaction_imalpha(0.5, 0.0) == 0.0
        assert radiation_reaction_imalpha(0.5, 2.0) == \
            pytest.approx(4.0 * radiation_reaction_imalpha(0.5, 1.0))
        assert radiation_reaction_imalpha(0.5, 3.0) == \
            pytest.approx(im_gamma_coincident(0.5) * 9.0)


def test_backends_agree():
    from fluctforce import _impl_numpy
    from fluctforce.kernels import _impl
    r = np.geomspace(1e-3, 50.0, 300)
    for fn in ("phi_over_r8_arr", "psi0_arr", "phi_arr"):
        a = getattr(_impl, fn)(r, 0.5, 12)
        b = getattr(_impl_numpy, fn)(r, 0.5, 12)
        assert np.allclose(a, b, rtol=1e-13, atol=1e-300)
