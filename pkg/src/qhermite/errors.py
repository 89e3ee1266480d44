"""Exception hierarchy shared by all qhermite modules."""


class QHermiteError(Exception):
    """Base class for all library errors."""


class DomainError(QHermiteError):
    """Argument outside the mathematical domain of an operation."""


class ConvergenceError(QHermiteError):
    """A truncated series, product, or lattice sum failed to converge
    within the allotted number of terms."""


class UnsupportedFamily(QHermiteError):
    """The requested polynomial family does not support this operation."""


class DimensionError(QHermiteError):
    """Truncated-operator dimension too small or inconsistent."""


class PoleError(QHermiteError):
    """A denominator Pochhammer factor vanished before series termination."""


class QuadratureError(QHermiteError):
    """Quadrature or lattice summation failed to reach its accuracy target."""


class InsufficientData(QHermiteError):
    """Not enough samples supplied for a diagnostic estimate."""
