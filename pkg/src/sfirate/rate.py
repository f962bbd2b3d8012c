"""Instantaneous ionization rate with full momentum and phase dependence.

The rate is known to exponential accuracy only,

    Gamma(gamma, k_par, k_perp) ~ exp[-(2 ip / omega) * f(gamma, k_par, k_perp)],

so everything here works with the exponent (``log_rate``) and never with
Gamma itself, which underflows quickly at large momenta.

With ``x = gamma k_par / sqrt(2 ip)`` and
``y = gamma sqrt(1 + k_perp**2 / (2 ip))`` the complex transition phase is
``omega t0 = arcsin(x + i y)``, whose real and imaginary parts are
``arcsin(beta)`` and ``arccosh(alpha)`` with

    alpha, beta = (sqrt((x + 1)**2 + y**2) +/- sqrt((x - 1)**2 + y**2)) / 2.

Numerics
--------
Evaluated as printed, ``f`` is a difference of terms of size ``1/gamma**2``
whose result is of size ``gamma``, which loses about ``-4 log10(gamma)``
digits in the tunneling regime. :func:`f_general` instead uses the
equivalent form

    4 gamma**2 f = (1 - beta**2) h(2a) + beta**2 q(2a),   a = arccosh(alpha),
    h(u) = u cosh u - sinh u,
    q(u) = u cosh u - 3 sinh u + 2u,

in which both terms are non-negative and ``h``, ``q`` are summed from their
Taylor series for small ``u``. ``alpha - 1`` and ``1 - beta**2`` are formed
without cancellation, following Hull, Fairgrieve & Tang (ACM TOMS 23, 1997).
The printed form is kept as :func:`f_literal` for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InternalInvariantError
from .units import LaserField, Target

__all__ = [
    "DriftMomentum",
    "AlphaBeta",
    "RateEval",
    "TransitionPoint",
    "alpha_beta",
    "f_general",
    "f_literal",
    "log_rate",
    "evaluate",
    "transition_point",
    "phase_rate",
]

ALPHA_CLAMP_TOL = 1e-12
_SERIES_CUTOVER = 2.0
_N_SERIES = 20

# h(u) = sum_{n>=1} 2n u^(2n+1) / (2n+1)!,  q(u) = sum_{n>=2} (2n-2) u^(2n+1) / (2n+1)!
_H_COEF = np.array([2 * n / math.factorial(2 * n + 1) for n in range(1, _N_SERIES + 1)])
_Q_COEF = np.array([(2 * n - 2) / math.factorial(2 * n + 1) for n in range(1, _N_SERIES + 1)])


@dataclass(frozen=True)
class DriftMomentum:
    """Canonical (detector) momentum split along and across the polarization.

    ``k_perp`` is a magnitude; negative input is folded to its absolute value
    since the rate is cylindrically symmetric about the polarization axis.
    """

    k_par: float = 0.0
    k_perp: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "k_perp", abs(self.k_perp))

    @property
    def k2(self) -> float:
        return self.k_par**2 + self.k_perp**2


@dataclass(frozen=True)
class AlphaBeta:
    alpha: np.ndarray | float
    beta: np.ndarray | float


@dataclass(frozen=True)
class RateEval:
    gamma: float
    alpha: np.ndarray | float
    beta: np.ndarray | float
    f: np.ndarray | float
    log_rate: np.ndarray | float


@dataclass(frozen=True)
class TransitionPoint:
    """Complex transition phase ``omega * t0`` split into real and imaginary parts."""

    re_phase: np.ndarray | float
    im_phase: np.ndarray | float

    @property
    def phase(self):
        return self.re_phase + 1j * self.im_phase

    def time(self, omega: float):
        """Complex transition time ``t0`` in atomic units."""
        return self.phase / omega


def _unpack(k_par, k_perp):
    if isinstance(k_par, DriftMomentum):
        return k_par.k_par, k_par.k_perp
    return k_par, k_perp


def _scalar_or_array(a):
    a = np.asarray(a)
    return a[()] if a.ndim == 0 else a


def _reduced_coordinates(gamma, k_par, k_perp, ip):
    gamma, k_par, k_perp, ip = (np.asarray(v, dtype=float) for v in (gamma, k_par, k_perp, ip))
    if np.any(~(gamma > 0)) or np.any(~np.isfinite(gamma)):
        raise DomainError("gamma must be positive and finite")
    if np.any(~(ip > 0)) or np.any(~np.isfinite(ip)):
        raise DomainError("ip must be positive and finite")
    if not (np.all(np.isfinite(k_par)) and np.all(np.isfinite(k_perp))):
        raise DomainError("momenta must be finite")
    k_perp = np.abs(k_perp)
    kappa = np.sqrt(2.0 * ip)
    x = gamma * k_par / kappa
    y = gamma * np.sqrt(1.0 + (k_perp / kappa) ** 2)
    return gamma, k_par, k_perp, ip, x, y


def _hypot_pair(x, y):
    return np.hypot(x + 1.0, y), np.hypot(x - 1.0, y)


def _clamp_alpha(alpha):
    if np.any(alpha < 1.0 - ALPHA_CLAMP_TOL):
        raise InternalInvariantError(f"alpha < 1 beyond rounding: min {np.min(alpha)!r}")
    return np.maximum(alpha, 1.0)


def alpha_beta(gamma, k_par, k_perp, ip) -> AlphaBeta:
    """The pair ``(alpha, beta)`` parametrizing the transition point.

    Computed from the momentum-space expression and checked against the
    ``(r1 +/- r2) / 2`` form of the complex arcsine decomposition.
    """
    k_par, k_perp = _unpack(k_par, k_perp)
    gamma, k_par, k_perp, ip, x, y = _reduced_coordinates(gamma, k_par, k_perp, ip)
    k2_scaled = (k_par**2 + k_perp**2) / (2.0 * ip)
    cross = (2.0 / gamma) * k_par / np.sqrt(2.0 * ip)
    base = k2_scaled + 1.0 / gamma**2 + 1.0
    plus = np.sqrt(base + cross)
    minus = np.sqrt(base - cross)
    alpha = 0.5 * gamma * (plus + minus)
    beta = 0.5 * gamma * (plus - minus)

    r1, r2 = _hypot_pair(x, y)
    assert np.allclose(alpha, 0.5 * (r1 + r2), rtol=1e-12, atol=0.0)
    assert np.all(np.abs(beta - 0.5 * (r1 - r2)) <= 1e-12 * np.maximum(alpha, 1.0))

    alpha = _clamp_alpha(alpha)
    # alpha * beta = x; the difference form above cancels for small x
    beta = np.clip(x / alpha, -1.0, 1.0)
    return AlphaBeta(_scalar_or_array(alpha), _scalar_or_array(beta))


def _stable_parts(x, y):
    """Return alpha, beta, arccosh(alpha), 1 - beta**2 without cancellation."""
    ax = np.abs(x)
    r1, r2 = _hypot_pair(ax, y)
    alpha = 0.5 * (r1 + r2)
    beta = np.clip(x / alpha, -1.0, 1.0)
    y2 = y * y
    with np.errstate(divide="ignore", invalid="ignore"):
        am1 = np.where(
            ax < 1.0,
            0.5 * (y2 / (r1 + ax + 1.0) + y2 / (r2 + 1.0 - ax)),
            0.5 * (y2 / (r1 + ax + 1.0) + r2 + (ax - 1.0)),
        )
    sinh2 = am1 * (alpha + 1.0)  # alpha**2 - 1
    acosh_alpha = np.log1p(am1 + np.sqrt(sinh2))
    one_minus_beta2 = y2 / sinh2
    return alpha, beta, acosh_alpha, one_minus_beta2


def _horner_odd(coef, u):
    u2 = u * u
    acc = np.zeros_like(u)
    for c in coef[::-1]:
        acc = acc * u2 + c
    return acc * u * u2


def _h_q(u):
    """``h(u) = u cosh u - sinh u`` and ``q(u) = u cosh u - 3 sinh u + 2u``."""
    u = np.asarray(u, dtype=float)
    small = u <= _SERIES_CUTOVER
    us = np.where(small, u, 0.0)
    ul = np.where(small, 0.0, u)
    ch, sh = np.cosh(ul), np.sinh(ul)
    h = np.where(small, _horner_odd(_H_COEF, us), ul * ch - sh)
    q = np.where(small, _horner_odd(_Q_COEF, us), ul * ch - 3.0 * sh + 2.0 * ul)
    return h, q


def f_general(gamma, k_par, k_perp, ip):
    """Dimensionless exponent ``f(gamma, k_par, k_perp)``.

    Parameters
    ----------
    gamma
        Keldysh parameter, > 0.
    k_par, k_perp
        Canonical momentum along and across the polarization (a.u.).
        ``k_perp`` may be signed; only its magnitude matters.
    ip
        Ionization potential (a.u.).

    Returns
    -------
    float or ndarray
        ``f >= 0``, even in ``k_par`` and ``k_perp``. Arrays broadcast.
    """
    k_par, k_perp = _unpack(k_par, k_perp)
    gamma, k_par, k_perp, ip, x, y = _reduced_coordinates(gamma, k_par, k_perp, ip)
    _, beta, a, one_minus_beta2 = _stable_parts(x, y)
    h, q = _h_q(2.0 * a)
    f = (one_minus_beta2 * h + beta * beta * q) / (4.0 * gamma * gamma)
    return _scalar_or_array(f)


def f_literal(gamma, k_par, k_perp, ip):
    """``f`` evaluated term by term exactly as the closed form is printed.

    Loses precision for small ``gamma``; use :func:`f_general` for work.
    """
    k_par, k_perp = _unpack(k_par, k_perp)
    gamma, k_par, k_perp, ip, _, _ = _reduced_coordinates(gamma, k_par, k_perp, ip)
    ab = alpha_beta(gamma, k_par, k_perp, ip)
    alpha, beta = np.asarray(ab.alpha), np.asarray(ab.beta)
    k2 = k_par**2 + k_perp**2
    f = (1.0 + 1.0 / (2.0 * gamma**2) + k2 / (2.0 * ip)) * np.arccosh(alpha) - np.sqrt(
        alpha**2 - 1.0
    ) * (
        (beta / gamma) * np.sqrt(2.0 / ip) * k_par
        + alpha * (1.0 - 2.0 * beta**2) / (2.0 * gamma**2)
    )
    return _scalar_or_array(f)


def log_rate(field: LaserField, target: Target, k_par=0.0, k_perp=0.0):
    """Natural log of the rate up to an additive constant, ``-(2 ip / omega) f``."""
    k_par, k_perp = _unpack(k_par, k_perp)
    gamma = field.gamma(target.ip)
    return -(2.0 * target.ip / field.omega) * f_general(gamma, k_par, k_perp, target.ip)


def evaluate(field: LaserField, target: Target, k_par=0.0, k_perp=0.0) -> RateEval:
    k_par, k_perp = _unpack(k_par, k_perp)
    gamma = field.gamma(target.ip)
    ab = alpha_beta(gamma, k_par, k_perp, target.ip)
    f = f_general(gamma, k_par, k_perp, target.ip)
    return RateEval(
        gamma=gamma,
        alpha=ab.alpha,
        beta=ab.beta,
        f=f,
        log_rate=-(2.0 * target.ip / field.omega) * f,
    )


def transition_point(gamma, k_par, k_perp, ip) -> TransitionPoint:
    """Principal transition phase: upper half-plane, nearest the real axis.

    Uses the ``K = 0`` branch, ``Re = arcsin(beta)`` in ``[-pi/2, pi/2]`` and
    ``Im = arccosh(alpha) > 0``. The mirror root at ``pi - arcsin(beta)`` has
    the same imaginary part and the same ``Im S``.
    """
    k_par, k_perp = _unpack(k_par, k_perp)
    _, _, _, _, x, y = _reduced_coordinates(gamma, k_par, k_perp, ip)
    _, beta, a, _ = _stable_parts(x, y)
    re = np.arcsin(np.clip(beta, -1.0, 1.0))
    return TransitionPoint(_scalar_or_array(re), _scalar_or_array(a))


def phase_rate(field: LaserField, target: Target, k_par=0.0, k_perp=0.0, phi=0.0):
    """Log-rate at laser phase ``phi = omega t`` for final momentum ``k``.

    Substitutes ``k_par -> k_par - A(t) = k_par + (f0 / omega) sin(phi)``.
    """
    k_par, k_perp = _unpack(k_par, k_perp)
    shifted = np.asarray(k_par) + field.quiver_momentum * np.sin(np.asarray(phi, dtype=float))
    return log_rate(field, target, _scalar_or_array(shifted), k_perp)
