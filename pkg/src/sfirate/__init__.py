"""Strong-field ionization rate exponent with full momentum and phase dependence.

Submodules
----------
units
    Atomic-unit conversions, :class:`LaserField`, :class:`Target`.
rate
    ``alpha``/``beta``, the exponent ``f``, log-rates, transition points.
limits
    Keldysh, tunneling, high-energy and PPT-type approximations.
oracle
    Numerical transition points and action integrals for cross-checks.
scan
    Momentum spectra, phase scans, parallel cuts and cutoff detection.
io, cli
    CSV/JSON output and the ``sfirate`` command.
"""

__version__ = "0.1.0"

from .errors import (
    DomainError,
    InternalInvariantError,
    LimitUndefinedError,
    OracleError,
    RegimeWarning,
    ResolutionError,
    SpecError,
)
from .units import LabLaser, LaserField, Target
from .rate import (
    DriftMomentum,
    alpha_beta,
    evaluate,
    f_general,
    log_rate,
    phase_rate,
    transition_point,
)
from .limits import compare_limit, keldysh_limit
from .scan import GridSpec, PhaseScanSpec, find_cutoff, parallel_cut_normalized, phase_scan, spectrum_grid
