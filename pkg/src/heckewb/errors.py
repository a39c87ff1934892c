"""Exception types shared across the package.

Every mathematically meaningful failure raises a subclass of HeckeError so
callers (and the CLI exit-code contract) can distinguish "the math said no"
from ordinary usage mistakes.
"""

__all__ = [
    "HeckeError",
    "UnsupportedDatumError",
    "DatumMismatchError",
    "NonDominantError",
    "LatticeClassError",
    "InexactDivisionError",
    "OddExponentError",
    "NotBiInvariantError",
    "ConventionViolationError",
    "CutoffExceededError",
    "CentralityError",
    "GrammarError",
    "CacheWarning",
]


class HeckeError(Exception):
    """Base class for mathematical errors raised by this package."""


class UnsupportedDatumError(HeckeError, ValueError):
    """Requested root datum label is not in the supported list."""


class DatumMismatchError(HeckeError, ValueError):
    """Operands were built over different root data."""


class NonDominantError(HeckeError, ValueError):
    """A coweight argument was required to be dominant and is not."""


class LatticeClassError(HeckeError, ValueError):
    """Coweights lie in different classes of the cocharacter lattice
    modulo the coroot lattice."""


class InexactDivisionError(HeckeError, ArithmeticError):
    """Division of integer Laurent polynomials left a remainder.

    This is a meaningful signal, not a numerical annoyance: it flags a
    normalization-convention violation. The offending remainder is kept
    on the exception.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class OddExponentError(HeckeError, ValueError):
    """A value expected to live in Z[q^{±1}] had an odd v-exponent
    (a half-twist leak)."""


class NotBiInvariantError(HeckeError, ValueError):
    """An averaged element is not constant on some double coset, so it
    has no expansion in the spherical basis. Expected for non-central
    input; not a bug."""


class ConventionViolationError(HeckeError, RuntimeError):
    """An internal normalization invariant failed (non-monomial Satake
    diagonal, inexact Poincare division, broken KL invariant)."""


class CutoffExceededError(HeckeError, ValueError):
    """A computation would need elements beyond the configured length
    cutoff."""


class CentralityError(HeckeError, RuntimeError):
    """Internal-consistency failure: an element constructed to be central
    is not. Should never fire; firing indicates an implementation bug."""


class GrammarError(HeckeError, ValueError):
    """Text input did not match the element grammar (a usage error)."""


class CacheWarning(UserWarning):
    """Non-fatal cache problem (unwritable directory, version mismatch,
    corrupted file). The cache is ignored, never trusted."""
