"""Atomic-unit conversions and the laser/target parameter types.

All physics in this package is done in atomic units (hbar = m_e = |e| = 1).
Laboratory quantities (wavelength in nm, intensity in W/cm^2, energies in
eV) are converted here and nowhere else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Conversion constants. One table, nothing hidden elsewhere.
SPEED_OF_LIGHT_AU = 137.035999
BOHR_RADIUS_NM = 0.052917721
INTENSITY_AU_W_CM2 = 3.50944506e16
HARTREE_EV = 27.211386

HYDROGEN_IP_AU = 0.5

__all__ = [
    "SPEED_OF_LIGHT_AU",
    "BOHR_RADIUS_NM",
    "INTENSITY_AU_W_CM2",
    "HARTREE_EV",
    "HYDROGEN_IP_AU",
    "LabLaser",
    "LaserField",
    "Target",
    "omega_from_wavelength",
    "field_from_intensity",
    "keldysh_parameter",
    "ponderomotive_energy",
    "ev_to_au",
    "au_to_ev",
]


def _require_positive(name, value):
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")
    return value


def omega_from_wavelength(wavelength_nm: float) -> float:
    """Angular frequency in atomic units for a vacuum wavelength in nm.

    >>> round(omega_from_wavelength(800.0), 5)
    0.05695
    """
    wavelength_nm = _require_positive("wavelength_nm", wavelength_nm)
    wavelength_au = wavelength_nm / BOHR_RADIUS_NM
    return 2.0 * math.pi * SPEED_OF_LIGHT_AU / wavelength_au


def field_from_intensity(intensity_w_cm2: float) -> float:
    """Peak field strength in atomic units for a cycle-averaged intensity."""
    intensity_w_cm2 = _require_positive("intensity_w_cm2", intensity_w_cm2)
    return math.sqrt(intensity_w_cm2 / INTENSITY_AU_W_CM2)


def keldysh_parameter(omega: float, f0: float, ip: float) -> float:
    """Keldysh parameter ``omega * sqrt(2 ip) / f0``."""
    omega = _require_positive("omega", omega)
    f0 = _require_positive("f0", f0)
    ip = _require_positive("ip", ip)
    return omega * math.sqrt(2.0 * ip) / f0


def ponderomotive_energy(omega: float, f0: float) -> float:
    """Ponderomotive potential ``(f0 / (2 omega))**2``."""
    omega = _require_positive("omega", omega)
    f0 = _require_positive("f0", f0)
    return (f0 / (2.0 * omega)) ** 2


def ev_to_au(energy_ev: float) -> float:
    return float(energy_ev) / HARTREE_EV


def au_to_ev(energy_au: float) -> float:
    return float(energy_au) * HARTREE_EV


@dataclass(frozen=True)
class LabLaser:
    """Laser parameters as quoted in the laboratory."""

    wavelength_nm: float
    intensity_w_cm2: float

    def __post_init__(self):
        _require_positive("wavelength_nm", self.wavelength_nm)
        _require_positive("intensity_w_cm2", self.intensity_w_cm2)

    def to_field(self) -> LaserField:
        return LaserField(
            omega=omega_from_wavelength(self.wavelength_nm),
            f0=field_from_intensity(self.intensity_w_cm2),
        )


@dataclass(frozen=True)
class LaserField:
    """A linearly polarized monochromatic field, in atomic units.

    The vector potential is ``A(t) = -(f0 / omega) * sin(omega * t)``.
    """

    omega: float
    f0: float

    def __post_init__(self):
        _require_positive("omega", self.omega)
        _require_positive("f0", self.f0)

    @classmethod
    def from_lab(cls, wavelength_nm: float, intensity_w_cm2: float) -> LaserField:
        return LabLaser(wavelength_nm, intensity_w_cm2).to_field()

    @property
    def up(self) -> float:
        return ponderomotive_energy(self.omega, self.f0)

    @property
    def quiver_momentum(self) -> float:
        """Amplitude ``f0 / omega`` of the vector potential."""
        return self.f0 / self.omega

    def gamma(self, ip: float) -> float:
        return keldysh_parameter(self.omega, self.f0, ip)

    def vector_potential(self, t):
        """``A(t)``; accepts real or complex times, scalar or array."""
        return -(self.f0 / self.omega) * np.sin(self.omega * np.asarray(t))


@dataclass(frozen=True)
class Target:
    """Single active electron bound with ionization potential ``ip`` (a.u.)."""

    ip: float

    def __post_init__(self):
        _require_positive("ip", self.ip)

    @classmethod
    def hydrogen(cls) -> Target:
        return cls(HYDROGEN_IP_AU)

    @classmethod
    def from_ev(cls, ip_ev: float) -> Target:
        return cls(ev_to_au(ip_ev))

    @property
    def kappa(self) -> float:
        """Characteristic bound-state momentum ``sqrt(2 ip)``."""
        return math.sqrt(2.0 * self.ip)
