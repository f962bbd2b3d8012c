"""Exception and warning types raised by :mod:`sfirate`."""


class DomainError(ValueError):
    """An input lies outside the physical domain of a function."""


class InternalInvariantError(ArithmeticError):
    """A quantity that is guaranteed by construction came out wrong."""


class OracleError(RuntimeError):
    """The numerical transition-point search failed to converge."""


class ResolutionError(RuntimeError):
    """Quadrature results at two resolutions disagree beyond tolerance."""


class SpecError(ValueError):
    """A scan specification is degenerate."""


class LimitUndefinedError(ValueError):
    """An approximate formula is structurally undefined at the given momentum."""


class RegimeWarning(UserWarning):
    """An approximate formula is evaluated outside its validity regime."""
