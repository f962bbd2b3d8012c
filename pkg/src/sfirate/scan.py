"""Momentum spectra, phase scans and parallel-momentum cuts.

All values are natural-log rates (or log ratios). Grids are evaluated in
one vectorized call and stored with ``numpy`` index order ``ij`` so the
flattened table is row-major in the first axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import rate
from .errors import SpecError
from .units import LaserField, Target

__all__ = [
    "GridSpec",
    "PhaseScanSpec",
    "ScanResult",
    "CutoffResult",
    "spectrum_grid",
    "phase_scan",
    "peak_phase",
    "parallel_cut_normalized",
    "find_cutoff",
    "contour_half_widths",
    "CUTOFF_GAMMA_MAX",
]

CUTOFF_GAMMA_MAX = 1.0


def _axis(lo, hi, n):
    """``linspace`` that is exactly mirror-symmetric when ``lo == -hi`` and ``n`` is odd."""
    if lo == -hi and n % 2 == 1:
        half = np.linspace(0.0, hi, n // 2 + 1)
        return np.concatenate([-half[:0:-1], half])
    return np.linspace(lo, hi, n)


@dataclass(frozen=True)
class GridSpec:
    k_par_min: float
    k_par_max: float
    k_perp_min: float
    k_perp_max: float
    n_par: int
    n_perp: int
    normalize: bool = True

    def __post_init__(self):
        if not (self.k_par_max > self.k_par_min and self.k_perp_max > self.k_perp_min):
            raise SpecError("grid bounds must satisfy max > min")
        if self.n_par < 2 or self.n_perp < 2:
            raise SpecError("grid needs at least 2 points per axis")
        if self.k_perp_min < 0:
            raise SpecError("k_perp is a magnitude; k_perp_min must be >= 0")

    @classmethod
    def default(cls, target: Target, normalize: bool = True) -> GridSpec:
        """``k_par`` in +/-1.5 sqrt(2 ip), ``k_perp`` in [0, 1.5 sqrt(2 ip)], 201 x 101."""
        kmax = 1.5 * target.kappa
        return cls(-kmax, kmax, 0.0, kmax, 201, 101, normalize)

    def k_par_axis(self):
        return _axis(self.k_par_min, self.k_par_max, self.n_par)

    def k_perp_axis(self):
        return np.linspace(self.k_perp_min, self.k_perp_max, self.n_perp)


@dataclass(frozen=True)
class PhaseScanSpec:
    phi_min: float = -math.pi
    phi_max: float = math.pi
    n_phi: int = 361
    k_values: tuple = (0.0,)

    def __post_init__(self):
        if not self.phi_max > self.phi_min:
            raise SpecError("phi_max must exceed phi_min")
        if self.n_phi < 2:
            raise SpecError("phase scan needs at least 2 points")
        if len(self.k_values) < 1:
            raise SpecError("phase scan needs at least one k value")

    def phi_axis(self):
        return _axis(self.phi_min, self.phi_max, self.n_phi)


@dataclass
class ScanResult:
    """Log-rate values on a tensor grid plus provenance metadata.

    ``values`` has one axis per entry of ``axes`` (in order). ``extra``
    holds derived columns of the same shape.
    """

    kind: str
    axes: dict
    values: np.ndarray
    value_name: str
    metadata: dict
    extra: dict = dc_field(default_factory=dict)

    @property
    def columns(self) -> list[str]:
        return list(self.axes) + list(self.extra) + [self.value_name]

    def table(self) -> np.ndarray:
        """Long-format 2-D array, one row per grid point, first axis slowest."""
        mesh = np.meshgrid(*self.axes.values(), indexing="ij")
        cols = [m.ravel() for m in mesh]
        cols += [np.asarray(v).ravel() for v in self.extra.values()]
        cols.append(np.asarray(self.values).ravel())
        return np.column_stack(cols)


def _field_metadata(field: LaserField, target: Target) -> dict:
    return {
        "omega": field.omega,
        "f0": field.f0,
        "gamma": field.gamma(target.ip),
        "up": field.up,
        "ip": target.ip,
    }


def spectrum_grid(field: LaserField, target: Target, spec: GridSpec) -> ScanResult:
    """Log-rate on the ``(k_par, k_perp)`` grid of ``spec``."""
    kpar = spec.k_par_axis()
    kperp = spec.k_perp_axis()
    kp, kt = np.meshgrid(kpar, kperp, indexing="ij")
    values = rate.log_rate(field, target, kp, kt)
    meta = _field_metadata(field, target)
    if spec.normalize:
        ref = float(np.max(values))
        values = values - ref
        meta["normalization"] = ref
    else:
        meta["normalization"] = 0.0
    return ScanResult("spectrum", {"k_par": kpar, "k_perp": kperp}, values, "log_rate", meta)


def phase_scan(field: LaserField, target: Target, spec: PhaseScanSpec, k_perp: float = 0.0) -> ScanResult:
    """Log-rate versus laser phase, one row per drift momentum in ``spec.k_values``."""
    ks = np.asarray(spec.k_values, dtype=float)
    phis = spec.phi_axis()
    kk, pp = np.meshgrid(ks, phis, indexing="ij")
    shifted = kk + field.quiver_momentum * np.sin(pp)
    values = rate.log_rate(field, target, shifted, k_perp)
    meta = _field_metadata(field, target)
    meta["k_perp"] = float(k_perp)
    return ScanResult(
        "phase_scan", {"k": ks, "phi": phis}, values, "log_rate", meta, {"k_par_eff": shifted}
    )


def peak_phase(result: ScanResult, row: int = 0, atol: float = 1e-12) -> float:
    """Phase of the maximum in one phase-scan row.

    The rate depends on phi only through sin(phi), so phi and pi - phi tie
    exactly; ties are resolved toward the smallest |phi|.
    """
    if result.kind != "phase_scan":
        raise ValueError(f"expected a phase_scan result, got {result.kind!r}")
    phis = result.axes["phi"]
    values = np.asarray(result.values)[row]
    top = np.flatnonzero(values >= values.max() - atol)
    return float(phis[top[np.argmin(np.abs(phis[top]))]])


def parallel_cut_normalized(field: LaserField, target: Target, k_par_values) -> ScanResult:
    """``log[Gamma(k_par, 0) / Gamma(0, 0)]`` along the polarization axis."""
    k = np.asarray(k_par_values, dtype=float)
    ref = float(rate.log_rate(field, target, 0.0, 0.0))
    values = rate.log_rate(field, target, k, 0.0) - ref
    energy = 0.5 * k * k
    meta = _field_metadata(field, target)
    meta["normalization"] = ref
    return ScanResult(
        "parallel_cut",
        {"k_par": k},
        np.asarray(values),
        "log_ratio",
        meta,
        {"kinetic_energy": energy, "energy_over_up": energy / field.up},
    )


@dataclass(frozen=True)
class CutoffResult:
    energy: float
    up: float
    gamma: float
    in_regime: bool
    ambiguous: bool
    at_boundary: bool
    energies: np.ndarray = dc_field(repr=False)
    second_derivative: np.ndarray = dc_field(repr=False)

    @property
    def ratio(self) -> float:
        """Detected cutoff energy in units of ``U_p``."""
        return self.energy / self.up


def _second_derivative(x, y):
    """Three-point second derivative on a non-uniform grid, interior points only."""
    h = np.diff(x)
    dy = np.diff(y) / h
    return 2.0 * (dy[1:] - dy[:-1]) / (h[1:] + h[:-1])


def find_cutoff(
    field: LaserField,
    target: Target,
    n_energy: int = 400,
    e_min_up: float = 0.1,
    e_max_up: float = 10.0,
) -> CutoffResult:
    """Knee of the normalized parallel spectrum versus kinetic energy.

    The knee is where ``d^2/dE^2 log[Gamma(k_par, 0) / Gamma(0, 0)]``, with
    ``E = k_par^2 / 2`` on a log-spaced grid, is largest in magnitude.
    ``ambiguous`` is set if another local extremum comes within 1% of it;
    ``in_regime`` is false for ``gamma > 1``.
    """
    if n_energy < 5 or not e_max_up > e_min_up > 0:
        raise SpecError("cutoff grid needs n_energy >= 5 and 0 < e_min_up < e_max_up")
    up = field.up
    energies = np.geomspace(e_min_up * up, e_max_up * up, n_energy)
    cut = parallel_cut_normalized(field, target, np.sqrt(2.0 * energies))
    d2 = _second_derivative(energies, cut.values)
    inner = energies[1:-1]
    mag = np.abs(d2)
    i = int(np.argmax(mag))

    interior = (mag[1:-1] >= mag[:-2]) & (mag[1:-1] >= mag[2:])
    peaks = np.flatnonzero(interior) + 1
    rivals = [j for j in peaks if abs(j - i) > 1 and mag[j] >= 0.99 * mag[i]]

    gamma = field.gamma(target.ip)
    return CutoffResult(
        energy=float(inner[i]),
        up=up,
        gamma=gamma,
        in_regime=gamma <= CUTOFF_GAMMA_MAX,
        ambiguous=bool(rivals),
        at_boundary=i in (0, len(d2) - 1),
        energies=inner,
        second_derivative=d2,
    )


def _crossing(axis, values, level):
    """First position along ``axis`` (from index 0) where ``values`` drops below ``level``."""
    below = np.flatnonzero(values < level)
    if below.size == 0:
        return math.nan
    j = below[0]
    if j == 0:
        return float(axis[0])
    x0, x1, v0, v1 = axis[j - 1], axis[j], values[j - 1], values[j]
    return float(x0 + (level - v0) * (x1 - x0) / (v1 - v0))


def contour_half_widths(result: ScanResult, level: float = -1.0):
    """Half-widths of the ``level`` contour along ``k_par`` and ``k_perp``.

    Expects a normalized spectrum whose peak lies on ``k_perp = 0``.
    Returns ``nan`` for an axis on which the contour leaves the grid.
    """
    kpar = result.axes["k_par"]
    kperp = result.axes["k_perp"]
    values = np.asarray(result.values)
    i0, j0 = np.unravel_index(np.argmax(values), values.shape)
    row = values[:, j0]
    right = _crossing(kpar[i0:], row[i0:], level)
    left = _crossing(-kpar[i0::-1], row[i0::-1], level)
    par = 0.5 * ((right - kpar[i0]) + (left + kpar[i0]))
    perp = _crossing(kperp[j0:], values[i0, j0:], level) - kperp[j0]
    return par, perp
