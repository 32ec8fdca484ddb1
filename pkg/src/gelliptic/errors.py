"""Exception hierarchy shared by every module.

Domain problems (bad parameters, poles, points outside a range) derive from
:class:`DomainError` and therefore from :class:`ValueError`; numerical
failures (series or solver not converging) derive from :class:`NoConvergence`
and therefore from :class:`ArithmeticError`.
"""


class GEllipticError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GEllipticError, ValueError):
    """Arguments outside the domain of the requested function."""


class PoleError(DomainError):
    """Argument at (or within tolerance of) a pole of the gamma family."""


class DivergesAtOne(DomainError):
    """Hypergeometric series evaluated at x = 1 with c <= a + b."""


class InfinityAtOne(DomainError):
    """A generalized elliptic integral of the first kind evaluated at r = 1."""


class OutOfRange(DomainError):
    """Target value outside the range of a monotone function."""


class PreconditionError(DomainError):
    """Parameter triple violates the hypotheses of a checked property."""


class AngleConstraintError(DomainError):
    """Quadrilateral whose angles admit no valid normal form."""


class PhaseMismatch(DomainError):
    """arg(A - 1) disagrees with the phase of the mapping constant."""


class BranchError(DomainError):
    """Integration path leaves the closed upper half-plane."""


class OutsideImage(DomainError):
    """Point outside the image quadrilateral of the Schwarz-Christoffel map."""


class LengthError(DomainError):
    """Coefficient sequence too short for the requested index."""


class NoConvergence(GEllipticError, ArithmeticError):
    """Iteration or series did not converge within its cap."""


class QuadratureFailure(NoConvergence):
    """Adaptive quadrature did not reach the requested accuracy."""
