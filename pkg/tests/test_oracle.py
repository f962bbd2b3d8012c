import math

import numpy as np
import pytest

from sfirate import oracle
from sfirate.errors import OracleError, ResolutionError
from sfirate.oracle import (
    action_numeric,
    energy_gap,
    find_transition_point_numeric,
    random_suite,
    run_suite,
    saddle_residual,
)
from sfirate.rate import DriftMomentum, TransitionPoint, f_general, transition_point
from sfirate.units import LaserField, Target

OMEGA = 0.057


def field_for(gamma, ip=0.5):
    return LaserField(OMEGA, OMEGA * math.sqrt(2 * ip) / gamma)


def exponent(gamma, k, ip=0.5):
    return (2 * ip / OMEGA) * f_general(gamma, k.k_par, k.k_perp, ip)


@pytest.mark.parametrize("gamma", [0.2, 1.0, 4.0])
def test_numeric_root_at_zero_momentum(gamma):
    tp = find_transition_point_numeric(field_for(gamma), Target(0.5), DriftMomentum())
    assert tp.re_phase == pytest.approx(0.0, abs=1e-12)
    assert tp.im_phase == pytest.approx(math.asinh(gamma), rel=1e-12)


@pytest.mark.parametrize("k", [DriftMomentum(0.8, 0.3), DriftMomentum(-1.7, 2.0), DriftMomentum(2.5, 0.0)])
def test_numeric_root_matches_analytic(k):
    gamma = 0.9
    field = field_for(gamma)
    num = find_transition_point_numeric(field, Target(0.5), k)
    ana = transition_point(gamma, k.k_par, k.k_perp, 0.5)
    assert num.re_phase == pytest.approx(ana.re_phase, abs=1e-10)
    assert num.im_phase == pytest.approx(ana.im_phase, abs=1e-10)
    assert saddle_residual(field, Target(0.5), k, num) < 1e-12


def test_roots_are_periodic_and_mirrored():
    field, target, k = field_for(1.3), Target(0.5), DriftMomentum(0.6, 0.2)
    theta = transition_point(1.3, 0.6, 0.2, 0.5).phase
    for cand in (theta + 2 * math.pi, math.pi - theta.conjugate()):
        gap = energy_gap(field, target, k, cand / OMEGA)
        assert abs(gap) < 1e-12


def test_newton_failure_raises():
    field, target, k = field_for(1.0), Target(0.5), DriftMomentum(0.3, 0.1)
    with pytest.raises(OracleError):
        oracle._newton_phase(field, target, k, 0.1 + 1j, maxiter=1)


@pytest.mark.parametrize("gamma, k", [(0.3, DriftMomentum(0.5, 0.5)), (2.0, DriftMomentum(-2.0, 1.0))])
def test_action_matches_closed_form(gamma, k):
    field = field_for(gamma)
    tp = find_transition_point_numeric(field, Target(0.5), k)
    action = action_numeric(field, Target(0.5), k, tp)
    assert 2 * action.im_s == pytest.approx(exponent(gamma, k), rel=1e-12)


def test_im_action_independent_of_real_start():
    gamma, k = 0.8, DriftMomentum(0.7, 0.4)
    field = field_for(gamma)
    tp = find_transition_point_numeric(field, Target(0.5), k)
    t_re = tp.time(OMEGA).real
    base = action_numeric(field, Target(0.5), k, tp).im_s
    for shift in (-3.0, 5.0):
        moved = action_numeric(field, Target(0.5), k, tp, t1=t_re + shift, n_nodes=96)
        assert moved.im_s == pytest.approx(base, rel=1e-9)


def test_static_limit_small_gamma():
    # gamma -> 0: 2 Im S -> 2 (2 ip)^{3/2} / (3 F)
    gamma = 0.02
    field = field_for(gamma)
    tp = find_transition_point_numeric(field, Target(0.5), DriftMomentum())
    action = action_numeric(field, Target(0.5), DriftMomentum(), tp)
    assert 2 * action.im_s == pytest.approx(2 / (3 * field.f0), rel=gamma**2)


def test_residual_grows_linearly_off_the_root():
    field, target, k = field_for(1.1), Target(0.5), DriftMomentum(0.4, 0.9)
    tp = transition_point(1.1, 0.4, 0.9, 0.5)
    r1 = saddle_residual(field, target, k, TransitionPoint(tp.re_phase + 1e-6, tp.im_phase))
    r2 = saddle_residual(field, target, k, TransitionPoint(tp.re_phase + 2e-6, tp.im_phase))
    assert r2 / r1 == pytest.approx(2.0, rel=1e-3)


def test_quadrature_convergence_and_resolution_error():
    gamma, k = 0.25, DriftMomentum(2.5, 2.5)
    field = field_for(gamma)
    tp = find_transition_point_numeric(field, Target(0.5), k)
    # a contour spanning many periods needs many nodes
    t1 = tp.time(OMEGA).real - 6 * 2 * math.pi / OMEGA

    def err(n):
        s = action_numeric(field, Target(0.5), k, tp, t1=t1, n_nodes=n, check=False)
        return abs(2 * s.im_s - exponent(gamma, k))

    assert err(64) < err(32) * 1e-3
    with pytest.raises(ResolutionError):
        action_numeric(field, Target(0.5), k, tp, t1=t1, n_nodes=20)


def test_random_suite_is_reproducible():
    a, b = random_suite(20), random_suite(20)
    assert a == b
    assert random_suite(20, seed=1) != a
    assert all(0.2 <= p.gamma <= 5.0 and p.k_perp >= 0 for p in a)
    assert all(abs(p.k_par) <= 3.0 for p in a)


def test_small_suite_passes():
    res = run_suite(random_suite(25, seed=7))
    assert res.max_rel_dev < 1e-9
    assert np.all(res.analytic_residual < 1e-10)
    assert np.all(res.numeric_residual < 1e-12)
    assert np.all(res.t0_dev < 1e-9)
    assert res.median_rel_dev <= res.max_rel_dev
