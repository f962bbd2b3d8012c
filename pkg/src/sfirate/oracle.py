"""Numerical cross-check of the analytic exponent.

The transition point is found by Newton iteration on the energy-gap
equation, and the action is integrated by Gauss-Legendre quadrature along
a straight segment from a real start time to the transition point. Nothing
here uses the closed-form ``alpha``/``beta`` expressions except to seed the
root search, so ``2 Im S`` is an independent estimate of
``(2 ip / omega) f``.

The integrand is entire in ``t``, so any contour from the real axis gives
the same ``S``; ``Im S`` does not depend on the real start time because the
integrand is real on the real axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import rate
from .errors import OracleError, ResolutionError
from .rate import DriftMomentum, TransitionPoint
from .units import HYDROGEN_IP_AU, LaserField, Target, omega_from_wavelength

__all__ = [
    "ComplexAction",
    "SuiteResult",
    "energy_gap",
    "saddle_residual",
    "find_transition_point_numeric",
    "action_numeric",
    "random_suite",
    "run_suite",
    "SUITE_SEED",
]

NEWTON_TOL = 1e-12
NEWTON_MAXITER = 100
SEED_OFFSET = 0.05 + 0.05j
DEFAULT_NODES = 64
RESOLUTION_RTOL = 1e-9
SUITE_SEED = 20080715
SUITE_SIZE = 200


@dataclass(frozen=True)
class ComplexAction:
    re_s: float
    im_s: float
    t0: TransitionPoint
    t1: float
    n_steps: int


def energy_gap(field: LaserField, target: Target, k: DriftMomentum, t):
    """``E_f(t) - E_i(t) = (k_par + A(t))^2 / 2 + k_perp^2 / 2 + ip`` at complex ``t``."""
    a = field.vector_potential(t)
    return 0.5 * (k.k_par + a) ** 2 + 0.5 * k.k_perp**2 + target.ip


def saddle_residual(field: LaserField, target: Target, k: DriftMomentum, t: TransitionPoint) -> float:
    """Magnitude of the energy gap at the transition point ``t``."""
    return float(np.abs(energy_gap(field, target, k, t.time(field.omega))))


def _newton_phase(field, target, k, theta, tol=NEWTON_TOL, maxiter=NEWTON_MAXITER):
    """Newton iteration in the phase variable ``theta = omega t``."""
    amp = field.quiver_momentum
    c = 0.5 * k.k_perp**2 + target.ip
    with np.errstate(all="ignore"):
        root = _newton_loop(amp, c, k.k_par, complex(theta), tol, maxiter)
    if root is None:
        raise OracleError(f"Newton failed to converge from seed after {maxiter} iterations")
    return root


def _newton_loop(amp, c, k_par, theta, tol, maxiter):
    for _ in range(maxiter):
        d = k_par - amp * np.sin(theta)
        g = 0.5 * d * d + c
        if abs(g) < tol:
            return theta
        dg = -d * amp * np.cos(theta)
        if dg == 0:
            return None
        theta = theta - g / dg
        if not np.isfinite(theta):
            return None
    d = k_par - amp * np.sin(theta)
    return theta if abs(0.5 * d * d + c) < tol else None


def _canonical_re(re):
    # fold into [-pi/2, 3pi/2), one period containing both roots
    return (re + 0.5 * math.pi) % (2.0 * math.pi) - 0.5 * math.pi


def find_transition_point_numeric(
    field: LaserField,
    target: Target,
    k: DriftMomentum,
    n_seeds: int = 9,
) -> TransitionPoint:
    """Transition point by Newton iteration, chosen nearest the real axis.

    The primary seed is the analytic phase shifted by ``0.05 + 0.05i``; a
    sweep of seeds over ``Re(theta) in [-pi/2, pi/2]`` collects other roots.
    Among upper-half-plane roots the one with the smallest imaginary part
    wins. Ties (the mirror root at ``pi - Re``, same ``Im S``) are broken in
    favor of ``Re`` in ``[-pi/2, pi/2]``.
    """
    gamma = field.gamma(target.ip)
    analytic = rate.transition_point(gamma, k.k_par, k.k_perp, target.ip).phase
    roots = [_newton_phase(field, target, k, complex(analytic) + SEED_OFFSET)]
    for re in np.linspace(-0.5 * math.pi, 0.5 * math.pi, n_seeds):
        try:
            roots.append(_newton_phase(field, target, k, complex(re, analytic.imag)))
        except OracleError:
            continue
    upper = [complex(_canonical_re(r.real), r.imag) for r in roots if r.imag > 0]
    if not upper:
        raise OracleError("no transition point found in the upper half-plane")
    im_min = min(r.imag for r in upper)
    nearest = [r for r in upper if r.imag <= im_min * (1.0 + 1e-9)]
    principal = [r for r in nearest if -0.5 * math.pi <= r.real <= 0.5 * math.pi]
    best = (principal or nearest)[0]
    return TransitionPoint(best.real, best.imag)


def _gauss_legendre_segment(func, a, b, n):
    x, w = np.polynomial.legendre.leggauss(n)
    half = 0.5 * (b - a)
    t = a + half * (x + 1.0)
    return half * np.sum(w * func(t))


def action_numeric(
    field: LaserField,
    target: Target,
    k: DriftMomentum,
    t0: TransitionPoint,
    t1: float | None = None,
    n_nodes: int = DEFAULT_NODES,
    check: bool = True,
) -> ComplexAction:
    """Action integral from real time ``t1`` to the transition time.

    ``t1`` defaults to ``Re(t0)``, giving a vertical contour. With ``check``
    the result is compared with a ``2 * n_nodes`` evaluation and a
    :class:`ResolutionError` raised if they differ by more than 1e-9 relative.
    """
    t_end = complex(t0.time(field.omega))
    if t1 is None:
        t1 = t_end.real
    t1 = float(t1)

    def integrand(t):
        return energy_gap(field, target, k, t)

    s = _gauss_legendre_segment(integrand, t1, t_end, n_nodes)
    if check:
        s_fine = _gauss_legendre_segment(integrand, t1, t_end, 2 * n_nodes)
        if abs(s - s_fine) > RESOLUTION_RTOL * abs(s_fine):
            raise ResolutionError(
                f"quadrature {n_nodes} vs {2 * n_nodes} nodes differ by {abs(s - s_fine):.3e}"
            )
    return ComplexAction(float(s.real), float(s.imag), t0, t1, n_nodes)


@dataclass(frozen=True)
class SuitePoint:
    gamma: float
    ip: float
    omega: float
    k_par: float
    k_perp: float

    @property
    def field(self) -> LaserField:
        return LaserField(self.omega, self.omega * math.sqrt(2.0 * self.ip) / self.gamma)

    @property
    def target(self) -> Target:
        return Target(self.ip)

    @property
    def momentum(self) -> DriftMomentum:
        return DriftMomentum(self.k_par, self.k_perp)


def random_suite(
    n: int = SUITE_SIZE,
    seed: int = SUITE_SEED,
    omega: float | None = None,
    ip: float = HYDROGEN_IP_AU,
) -> list[SuitePoint]:
    """Reproducible random points, ``gamma`` in [0.2, 5] and ``|k_par|, k_perp`` in [0, 3 sqrt(2 ip)].

    The frequency defaults to 800 nm; ``gamma`` is varied through the field.
    """
    if omega is None:
        omega = omega_from_wavelength(800.0)
    rng = np.random.default_rng(seed)
    kappa = math.sqrt(2.0 * ip)
    gam = rng.uniform(0.2, 5.0, n)
    kpar = rng.uniform(-3.0, 3.0, n) * kappa
    kperp = rng.uniform(0.0, 3.0, n) * kappa
    return [SuitePoint(float(g), ip, omega, float(a), float(b)) for g, a, b in zip(gam, kpar, kperp)]


@dataclass
class SuiteResult:
    rel_dev: np.ndarray
    analytic_residual: np.ndarray
    numeric_residual: np.ndarray
    t0_dev: np.ndarray
    points: list = dc_field(repr=False, default_factory=list)

    @property
    def max_rel_dev(self) -> float:
        return float(np.max(self.rel_dev))

    @property
    def median_rel_dev(self) -> float:
        return float(np.median(self.rel_dev))


def run_suite(points=None) -> SuiteResult:
    """Evaluate the oracle on every point and collect the deviations."""
    if points is None:
        points = random_suite()
    rel, res_a, res_n, dt0 = [], [], [], []
    for p in points:
        field, target, k = p.field, p.target, p.momentum
        analytic = rate.transition_point(p.gamma, k.k_par, k.k_perp, p.ip)
        numeric = find_transition_point_numeric(field, target, k)
        action = action_numeric(field, target, k, numeric)
        exponent = (2.0 * p.ip / p.omega) * rate.f_general(p.gamma, k.k_par, k.k_perp, p.ip)
        rel.append(abs(2.0 * action.im_s - exponent) / exponent)
        res_a.append(saddle_residual(field, target, k, analytic))
        res_n.append(saddle_residual(field, target, k, numeric))
        t_num, t_ana = numeric.time(p.omega), analytic.time(p.omega)
        dt0.append(max(abs(t_num.real - t_ana.real), abs(t_num.imag - t_ana.imag)))
    return SuiteResult(np.array(rel), np.array(res_a), np.array(res_n), np.array(dt0), list(points))
