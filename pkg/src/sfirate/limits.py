"""Special-case and asymptotic forms of the rate exponent.

Each approximate formula is returned as a log-rate (or, for the two
dimensionless ones, as ``f``) so it can be compared with the general result
on the exponent, where prefactors do not enter. :func:`compare_limit` does
that comparison and flags whether the point lies inside the regime where
the approximation is supposed to hold. Those regime thresholds are judgment
calls and live in :class:`RegimeConfig`.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import rate
from .errors import DomainError, LimitUndefinedError, RegimeWarning
from .units import LaserField, Target

__all__ = [
    "LIMIT_NAMES",
    "RegimeConfig",
    "DEFAULT_REGIME",
    "LimitReport",
    "keldysh_limit",
    "keldysh_log_rate",
    "corkum_tunnel_log_rate",
    "delone_perp_log_rate",
    "ivanov_perp_small_log_rate",
    "ivanov_transverse_width",
    "krainov_high_energy_log_rate",
    "krainov_asymptotic_log_rate",
    "perp_asymptotic_log_rate",
    "ppt_expansion_f",
    "ppt_log_rate",
    "compare_limit",
]

LIMIT_NAMES = (
    "keldysh",
    "corkum",
    "delone",
    "ivanov",
    "krainov_high_energy",
    "krainov_asymptotic",
    "perp_asymptotic",
    "ppt",
)

_REL_FLOOR = 1e-300


@dataclass(frozen=True)
class RegimeConfig:
    """Numeric stand-ins for the "much less / much greater" conditions."""

    tunneling_gamma_max: float = 0.3
    ppt_k2_over_2ip_max: float = 0.05
    ivanov_k2_over_2ip_max: float = 0.05
    asymptotic_energy_min_up: float = 10.0
    krainov_gap_gamma_factor: float = 5.0


DEFAULT_REGIME = RegimeConfig()


@dataclass(frozen=True)
class LimitReport:
    limit_name: str
    general_log_rate: float
    limit_log_rate: float
    abs_diff: float
    rel_diff: float
    in_validity_regime: bool


def keldysh_limit(gamma):
    """``f(gamma, 0, 0) = (1 + 1/(2 gamma^2)) arcsinh(gamma) - sqrt(1 + gamma^2)/(2 gamma)``.

    Summed as ``h(2 arcsinh gamma) / (4 gamma^2)`` so small ``gamma`` keeps
    full precision (the two printed terms nearly cancel there).
    """
    gamma = np.asarray(gamma, dtype=float)
    if np.any(~(gamma > 0)):
        raise DomainError("gamma must be positive")
    h, _ = rate._h_q(2.0 * np.arcsinh(gamma))
    return rate._scalar_or_array(h / (4.0 * gamma * gamma))


def keldysh_log_rate(field: LaserField, target: Target):
    return -(2.0 * target.ip / field.omega) * keldysh_limit(field.gamma(target.ip))


def corkum_tunnel_log_rate(field: LaserField, target: Target, k_par):
    """Zero-momentum rate times the Gaussian ``exp(-k_par^2 gamma^3 / (3 omega))``."""
    gamma = field.gamma(target.ip)
    k_par = np.asarray(k_par, dtype=float)
    return keldysh_log_rate(field, target) - k_par**2 * gamma**3 / (3.0 * field.omega)


def delone_perp_log_rate(field: LaserField, target: Target, k_perp):
    """Static-field transverse exponent ``-2 (k_perp^2 + 2 ip)^{3/2} / (3 f0)``."""
    k_perp = np.asarray(k_perp, dtype=float)
    return -2.0 * (k_perp**2 + 2.0 * target.ip) ** 1.5 / (3.0 * field.f0)


def ivanov_perp_small_log_rate(field: LaserField, target: Target, k_perp):
    k_perp = np.asarray(k_perp, dtype=float)
    return keldysh_log_rate(field, target) - target.kappa * k_perp**2 / field.f0


def ivanov_transverse_width(field: LaserField, target: Target) -> float:
    """RMS width ``sqrt(f0 / (2 sqrt(2 ip)))`` of the transverse Gaussian.

    The 1/e half-width of ``Gamma / Gamma_0`` is ``sqrt(2)`` times this.
    """
    return math.sqrt(field.f0 / (2.0 * target.kappa))


def _krainov_ratio(field, k_par):
    return np.asarray(k_par, dtype=float) ** 2 / (4.0 * field.up)


def krainov_high_energy_log_rate(
    field: LaserField,
    target: Target,
    k_par,
    regime: RegimeConfig = DEFAULT_REGIME,
):
    """Above-cutoff form for ``k_par^2 / 2 > 2 U_p`` in the tunneling regime.

    Raises :class:`DomainError` below the cutoff, where ``arccosh`` is
    undefined; warns with :class:`RegimeWarning` when the point is defined
    but not well above the cutoff.
    """
    r = _krainov_ratio(field, k_par)
    if np.any(r < 1.0 - 1e-12):
        raise DomainError("k_par**2 < 4 U_p: below the classical cutoff")
    r = np.maximum(r, 1.0)
    root = np.sqrt(r)
    if not np.all(_krainov_in_regime(field, target, root, regime)):
        warnings.warn("krainov_high_energy evaluated outside its regime", RegimeWarning, stacklevel=2)
    bracket = (2.0 * r + 1.0) * np.arccosh(root) - 3.0 * np.sqrt(r * (r - 1.0))
    return rate._scalar_or_array(-(2.0 * field.up / field.omega) * bracket)


def _krainov_in_regime(field, target, root, regime):
    gamma = field.gamma(target.ip)
    return (
        (root > 1.0)
        & (root - 1.0 >= regime.krainov_gap_gamma_factor * gamma)
        & (gamma <= regime.tunneling_gamma_max)
    )


def _asymptotic_log_rate(field, k, constant):
    k = np.asarray(k, dtype=float)
    if np.any(k == 0):
        raise DomainError("asymptotic form needs nonzero momentum")
    k2 = k * k
    return (k2 / (2.0 * field.omega)) * (
        np.log(field.f0**2 / (4.0 * field.omega**2 * k2)) + constant
    )


def krainov_asymptotic_log_rate(field: LaserField, k_par):
    """``(k^2 / 2 omega) [ln(f0^2 / (4 omega^2 k^2)) + 3]``, for ``k_par^2/2 >> 2 U_p``."""
    return _asymptotic_log_rate(field, k_par, 3.0)


def perp_asymptotic_log_rate(field: LaserField, k_perp):
    """Transverse counterpart of :func:`krainov_asymptotic_log_rate`; constant 1."""
    return _asymptotic_log_rate(field, k_perp, 1.0)


def ppt_expansion_f(gamma, k_par, k_perp, ip):
    """Quadratic expansion of ``f`` for ``ip >> k^2 / 2``."""
    gamma = np.asarray(gamma, dtype=float)
    k_par = np.asarray(k_par, dtype=float)
    k_perp = np.asarray(k_perp, dtype=float)
    s_par = k_par**2 / (2.0 * ip)
    s = s_par + k_perp**2 / (2.0 * ip)
    return rate._scalar_or_array(
        keldysh_limit(gamma)
        + s * np.arcsinh(gamma)
        - gamma / np.sqrt(1.0 + gamma**2) * s_par
    )


def ppt_log_rate(field: LaserField, target: Target, k_par, k_perp):
    gamma = field.gamma(target.ip)
    return -(2.0 * target.ip / field.omega) * ppt_expansion_f(gamma, k_par, k_perp, target.ip)


def _require_zero(name, value, limit_name):
    if value != 0.0:
        raise LimitUndefinedError(f"{limit_name} is defined only for {name} = 0")


def compare_limit(
    limit_name: str,
    field: LaserField,
    target: Target,
    k: rate.DriftMomentum = rate.DriftMomentum(),
    regime: RegimeConfig = DEFAULT_REGIME,
) -> LimitReport:
    """Compare one approximate log-rate with the general one at momentum ``k``.

    Being outside the validity regime is only flagged. A limit that cannot
    be evaluated at ``k`` at all raises :class:`LimitUndefinedError`.
    """
    if limit_name not in LIMIT_NAMES:
        raise KeyError(f"unknown limit {limit_name!r}; choose from {LIMIT_NAMES}")
    k_par, k_perp = float(k.k_par), float(k.k_perp)
    gamma = field.gamma(target.ip)
    up = field.up
    tunneling = gamma <= regime.tunneling_gamma_max

    if limit_name == "keldysh":
        _require_zero("k", k.k2, limit_name)
        approx = keldysh_log_rate(field, target)
        in_regime = True
    elif limit_name == "corkum":
        _require_zero("k_perp", k_perp, limit_name)
        approx = corkum_tunnel_log_rate(field, target, k_par)
        in_regime = tunneling
    elif limit_name == "delone":
        _require_zero("k_par", k_par, limit_name)
        approx = delone_perp_log_rate(field, target, k_perp)
        in_regime = tunneling
    elif limit_name == "ivanov":
        _require_zero("k_par", k_par, limit_name)
        approx = ivanov_perp_small_log_rate(field, target, k_perp)
        in_regime = tunneling and k_perp**2 / (2.0 * target.ip) <= regime.ivanov_k2_over_2ip_max
    elif limit_name == "krainov_high_energy":
        _require_zero("k_perp", k_perp, limit_name)
        if k_par**2 < 4.0 * up * (1.0 - 1e-12):
            raise LimitUndefinedError("krainov_high_energy needs k_par**2 >= 4 U_p")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RegimeWarning)
            approx = krainov_high_energy_log_rate(field, target, k_par, regime)
        root = math.sqrt(max(k_par**2 / (4.0 * up), 1.0))
        in_regime = bool(_krainov_in_regime(field, target, root, regime))
    elif limit_name == "krainov_asymptotic":
        _require_zero("k_perp", k_perp, limit_name)
        if k_par == 0.0:
            raise LimitUndefinedError("krainov_asymptotic needs k_par != 0")
        approx = krainov_asymptotic_log_rate(field, k_par)
        in_regime = k_par**2 / 2.0 >= regime.asymptotic_energy_min_up * up
    elif limit_name == "perp_asymptotic":
        _require_zero("k_par", k_par, limit_name)
        if k_perp == 0.0:
            raise LimitUndefinedError("perp_asymptotic needs k_perp != 0")
        approx = perp_asymptotic_log_rate(field, k_perp)
        in_regime = k_perp**2 / 2.0 >= regime.asymptotic_energy_min_up * up
    else:  # ppt
        approx = ppt_log_rate(field, target, k_par, k_perp)
        in_regime = k.k2 / (2.0 * target.ip) <= regime.ppt_k2_over_2ip_max

    general = float(rate.log_rate(field, target, k_par, k_perp))
    approx = float(approx)
    abs_diff = abs(general - approx)
    return LimitReport(
        limit_name=limit_name,
        general_log_rate=general,
        limit_log_rate=approx,
        abs_diff=abs_diff,
        rel_diff=abs_diff / max(abs(general), _REL_FLOOR),
        in_validity_regime=bool(in_regime),
    )
