"""Exception hierarchy shared by every module in the package.

All errors derive from YoungBoundsError so callers can catch the package's
failures in one clause; the concrete classes mark which contract was broken.
"""


class YoungBoundsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(YoungBoundsError):
    """An input lies outside a formula's mathematical domain.

    Raised for t <= 0, weights outside [0, 1], deformation parameters
    outside their admissible interval, 1 + r*x < 0, and malformed or
    non-finite matrix data.
    """


class RegionError(YoungBoundsError):
    """A point or window falls outside a bound's validity region."""


class UnknownBoundError(YoungBoundsError):
    """No catalog entry with the requested identifier."""


class UnknownDiffError(YoungBoundsError):
    """No difference function with the requested identifier."""


class WitnessNotFoundError(YoungBoundsError):
    """The sign-change scan exhausted refinement without finding both signs.

    Not a proof of ordering, only the absence of floating-point evidence at
    the requested threshold and depth.
    """


class NotPositiveDefiniteError(YoungBoundsError):
    """A matrix required to be positive definite is not."""


class DimensionMismatchError(YoungBoundsError):
    """Two matrices (or a matrix and its header) disagree on dimension."""


class SandwichViolationError(YoungBoundsError):
    """Spectral sandwich constants are inconsistent or not satisfied."""
