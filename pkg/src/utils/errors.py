"""
Exception hierarchy for sl12_chains.

Every error raised on purpose by the library derives from ``Sl12Error``, which
itself is a ``ValueError``: bad input to an exact computation is a value problem.
Verification failures are never raised; they are returned as report cases.
"""


class Sl12Error(ValueError):
    """Base class for all domain errors."""


class NotDivisible(Sl12Error):
    """Exact Laurent-polynomial division left a remainder."""


class ZeroToNegativePower(Sl12Error):
    """A variable with a negative exponent was specialized to zero."""


class InhomogeneousOperand(Sl12Error):
    """A graded operator has entries outside its declared degree."""


class SiteOutOfRange(Sl12Error):
    """A two-site operator was placed outside the chain."""


class DimensionMismatch(Sl12Error):
    """Matrix dimensions are incompatible for the requested operation."""


class NonSquare(DimensionMismatch):
    """A square matrix was required."""


class BadPrime(Sl12Error):
    """A denominator or pivot vanished modulo the chosen prime."""


class NonIntegerCartan(Sl12Error):
    """Cartan eigenvalues are not integers."""


class UnsupportedL(Sl12Error):
    """The requested chain length has no closed form."""


class BadIndex(Sl12Error):
    """A Casimir index lies outside its admissible range."""


class IndexSumMismatch(Sl12Error):
    """Quadratic Casimir relation requested with p1 + p2 != p3 + p4."""


class ChainTooLong(Sl12Error):
    """Spectral comparison requested beyond the supported chain length."""


class DegeneratePoint(Sl12Error):
    """A random specialization hit a non-generic parameter value."""
