import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sfirate import rate
from sfirate.errors import DomainError, InternalInvariantError
from sfirate.oracle import saddle_residual
from sfirate.rate import (
    DriftMomentum,
    alpha_beta,
    f_general,
    f_literal,
    log_rate,
    phase_rate,
    transition_point,
)
from sfirate.units import LaserField, Target


def f_mpmath(gamma, k_par, k_perp, ip, dps=50):
    """The printed closed form, term by term, in high precision."""
    with mp.workdps(dps):
        g, kp, kt, ip = (mp.mpf(float(v)) for v in (gamma, k_par, k_perp, ip))
        k2 = kp**2 + kt**2
        base = k2 / (2 * ip) + 1 / g**2 + 1
        cross = (2 / g) * kp / mp.sqrt(2 * ip)
        a = g / 2 * (mp.sqrt(base + cross) + mp.sqrt(base - cross))
        b = g / 2 * (mp.sqrt(base + cross) - mp.sqrt(base - cross))
        f = (1 + 1 / (2 * g**2) + k2 / (2 * ip)) * mp.acosh(a) - mp.sqrt(a**2 - 1) * (
            b / g * mp.sqrt(2 / ip) * kp + a * (1 - 2 * b**2) / (2 * g**2)
        )
        return float(f)


gammas = st.floats(min_value=1e-2, max_value=1e2)
ips = st.floats(min_value=0.1, max_value=2.0)
scaled_k = st.floats(min_value=-3.0, max_value=3.0)


@pytest.mark.parametrize("gamma", [0.01, 0.4357, 1.0, 3.376, 50.0])
def test_alpha_beta_at_zero_momentum(gamma):
    ab = alpha_beta(gamma, 0.0, 0.0, 0.5)
    assert ab.alpha == pytest.approx(math.sqrt(1 + gamma**2), rel=1e-14)
    assert ab.beta == 0.0


def test_alpha_beta_parity():
    a = alpha_beta(0.7, 0.4, 0.3, 0.5)
    b = alpha_beta(0.7, -0.4, 0.3, 0.5)
    assert a.alpha == b.alpha
    assert a.beta == -b.beta


def test_alpha_beta_high_energy_regime():
    gamma, ip = 0.1, 0.5
    up = ip / (2 * gamma**2)
    k_par = 2 * math.sqrt(4 * up)
    ab = alpha_beta(gamma, k_par, 0.0, ip)
    assert ab.alpha == pytest.approx(math.sqrt(k_par**2 / (4 * up)), abs=5e-3)
    assert ab.beta == pytest.approx(1.0, abs=2e-3)
    # exact values from the (r1 +/- r2)/2 form in high precision
    with mp.workdps(40):
        x, y = mp.mpf(2), mp.mpf("0.1")
        r1, r2 = mp.sqrt((x + 1) ** 2 + y**2), mp.sqrt((x - 1) ** 2 + y**2)
        assert ab.alpha == pytest.approx(float((r1 + r2) / 2), rel=1e-14)
        assert ab.beta == pytest.approx(float((r1 - r2) / 2), rel=1e-14)


@settings(max_examples=300)
@given(gammas, scaled_k, st.floats(0.0, 3.0), ips)
def test_alpha_beta_identities(gamma, sk_par, sk_perp, ip):
    kappa = math.sqrt(2 * ip)
    k_par, k_perp = sk_par * kappa, sk_perp * kappa
    ab = alpha_beta(gamma, k_par, k_perp, ip)
    x = gamma * k_par / kappa
    y = gamma * math.sqrt(1 + k_perp**2 / (2 * ip))
    # beta may underflow for subnormal-scale momenta
    assert ab.alpha * ab.beta == pytest.approx(x, rel=1e-10, abs=1e-200)
    assert ab.alpha**2 + ab.beta**2 == pytest.approx(1 + x**2 + y**2, rel=1e-10)
    assert ab.alpha > 1
    assert abs(ab.beta) <= 1


def test_alpha_clamp():
    assert rate._clamp_alpha(np.array(1 - 1e-13)) == 1.0
    with pytest.raises(InternalInvariantError):
        rate._clamp_alpha(np.array(1 - 1e-6))


@pytest.mark.parametrize("bad", [0.0, -1.0, math.nan])
def test_rejects_bad_gamma(bad):
    with pytest.raises(DomainError):
        f_general(bad, 0.0, 0.0, 0.5)
    with pytest.raises(DomainError):
        alpha_beta(0.5, 0.0, 0.0, bad)


def test_f_keldysh_points():
    # high-precision evaluation of the zero-momentum closed form
    assert f_general(3.376, 0, 0, 0.5) == pytest.approx(1.4943276634268176, rel=1e-13)
    assert f_general(3.376, 0, 0, 0.5) == pytest.approx(1.494, abs=5e-4)
    assert f_general(0.4357, 0, 0, 0.5) == pytest.approx(0.28526229311190629, rel=1e-13)


@pytest.mark.parametrize("gamma", [1e-3, 1e-4])
def test_f_small_gamma_static_limit(gamma):
    # f = 2 gamma / 3 (1 - gamma^2 / 10 + ...)
    assert f_general(gamma, 0, 0, 0.5) == pytest.approx(2 * gamma / 3, rel=gamma**2 / 5)


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=-2.0, max_value=2.0), scaled_k, st.floats(0.0, 3.0), ips)
def test_f_matches_high_precision_closed_form(log_gamma, sk_par, sk_perp, ip):
    gamma = 10.0**log_gamma
    kappa = math.sqrt(2 * ip)
    k_par, k_perp = sk_par * kappa, sk_perp * kappa
    assert f_general(gamma, k_par, k_perp, ip) == pytest.approx(
        f_mpmath(gamma, k_par, k_perp, ip), rel=1e-12
    )


@settings(max_examples=200)
@given(st.floats(0.2, 5.0), scaled_k, st.floats(0.0, 3.0), ips)
def test_f_literal_and_stable_forms_agree(gamma, sk_par, sk_perp, ip):
    kappa = math.sqrt(2 * ip)
    a = f_general(gamma, sk_par * kappa, sk_perp * kappa, ip)
    b = f_literal(gamma, sk_par * kappa, sk_perp * kappa, ip)
    assert a == pytest.approx(b, rel=1e-10)


@settings(max_examples=200)
@given(gammas, scaled_k, st.floats(0.0, 3.0), ips)
def test_f_parity_and_sign(gamma, sk_par, sk_perp, ip):
    kappa = math.sqrt(2 * ip)
    k_par, k_perp = sk_par * kappa, sk_perp * kappa
    f = f_general(gamma, k_par, k_perp, ip)
    assert f >= 0
    assert f_general(gamma, -k_par, k_perp, ip) == f
    assert f_general(gamma, k_par, -k_perp, ip) == f


@pytest.mark.parametrize("gamma", [0.05, 0.4357, 1.0, 3.376, 20.0])
def test_f_monotone_along_axes(gamma):
    k = np.linspace(0.0, 3.0, 100)
    assert np.all(np.diff(f_general(gamma, k, 0.0, 0.5)) > 0)
    assert np.all(np.diff(f_general(gamma, 0.0, k, 0.5)) > 0)


def test_f_broadcasts():
    k = np.linspace(-1, 1, 7)
    out = f_general(0.8, k[:, None], k[None, :], 0.5)
    assert out.shape == (7, 7)
    assert out[3, 3] == f_general(0.8, 0.0, 0.0, 0.5)


def test_log_rate_values(hydrogen, field_mp, field_tun):
    assert log_rate(field_mp, hydrogen) == pytest.approx(-26.2, abs=0.05)
    # 2 ip / omega * f(0.43558) = 17.56 * 0.28519
    assert log_rate(field_tun, hydrogen) == pytest.approx(-5.007, abs=5e-3)
    assert log_rate(field_tun, hydrogen, 0.3, 0.1) == log_rate(field_tun, hydrogen, -0.3, 0.1)
    assert log_rate(field_tun, hydrogen, DriftMomentum(0.3, -0.1)) == log_rate(field_tun, hydrogen, 0.3, 0.1)


def test_evaluate_record(hydrogen, field_tun):
    ev = rate.evaluate(field_tun, hydrogen, 0.2, 0.1)
    assert ev.log_rate == pytest.approx(-(2 * 0.5 / field_tun.omega) * ev.f, rel=1e-15)
    assert ev.alpha > 1


@pytest.mark.parametrize("gamma", [0.1, 1.0, 5.0])
def test_transition_point_zero_momentum(gamma):
    tp = transition_point(gamma, 0.0, 0.0, 0.5)
    assert tp.re_phase == 0.0
    assert tp.im_phase == pytest.approx(math.asinh(gamma), rel=1e-14)


def test_transition_point_complex_arcsin():
    tp = transition_point(1.0, 1.0, 0.0, 0.5)
    ref = cmath.asin(1 + 1j)
    assert tp.re_phase == pytest.approx(0.6662, abs=5e-5)
    assert tp.im_phase == pytest.approx(1.0613, abs=5e-5)
    assert tp.re_phase == pytest.approx(ref.real, rel=1e-13)
    assert tp.im_phase == pytest.approx(ref.imag, rel=1e-13)


@settings(max_examples=300)
@given(st.floats(0.05, 10.0), scaled_k, st.floats(0.0, 3.0), ips)
def test_transition_point_solves_gap_equation(gamma, sk_par, sk_perp, ip):
    kappa = math.sqrt(2 * ip)
    omega = 0.057
    field = LaserField(omega, omega * kappa / gamma)
    k = DriftMomentum(sk_par * kappa, sk_perp * kappa)
    tp = transition_point(gamma, k.k_par, k.k_perp, ip)
    assert tp.im_phase > 0
    assert -math.pi / 2 <= tp.re_phase <= math.pi / 2
    assert saddle_residual(field, Target(ip), k, tp) < 1e-10


def test_phase_rate_basics(hydrogen, field_mp, field_tun):
    assert phase_rate(field_mp, hydrogen, 0.0, 0.0, 0.0) == log_rate(field_mp, hydrogen)
    for phi in (0.3, 1.2, -2.0):
        assert phase_rate(field_tun, hydrogen, 0.4, 0.0, phi) == pytest.approx(
            phase_rate(field_tun, hydrogen, -0.4, 0.0, -phi), abs=1e-12
        )


@pytest.mark.parametrize("intensity", [1e13, 6e14])
def test_phase_rate_peaks_at_zero_phase(hydrogen, intensity):
    field = LaserField.from_lab(800.0, intensity)
    phi = np.linspace(-math.pi, math.pi, 2001)
    values = phase_rate(field, hydrogen, 0.0, 0.0, phi)
    # phi and pi - phi tie; check both candidates reach the global maximum
    top = phi[values >= values.max() - 1e-12]
    assert np.min(np.abs(top)) <= phi[1] - phi[0]
    assert phase_rate(field, hydrogen, 0.0, 0.0, 0.0) >= values.max()
