"""Exception types shared across the package.

Every contract violation gets its own class so callers can map failures
to exit codes or retry policies without string matching.
"""


class LogClassError(Exception):
    """Base class for all package errors."""


# --- l-adic kernel ---------------------------------------------------------

class ZeroInput(LogClassError):
    """Logarithm of zero requested."""


class PrecisionExhausted(LogClassError):
    """A valuation could not be separated from infinity at maximal precision."""


class NotASquare(LogClassError):
    """Square root requested for a quadratic non-residue."""


class EvenValuationViolation(LogClassError):
    """Square-root input divisible by the prime; factor out even powers first."""


class DivisibleByEll(LogClassError):
    """Teichmueller lift requested for an input divisible by the prime."""


# --- characters ------------------------------------------------------------

class ConjNotInvolution(LogClassError):
    """Complex-conjugation element does not square to the identity."""


class NotASubgroup(LogClassError):
    """Element set is not a subgroup of the ambient group."""


# --- abelian fields --------------------------------------------------------

class NotASubfield(LogClassError):
    """Claimed subfield relation fails on character groups."""


class StabilizationFailure(LogClassError):
    """Tower-level quantities did not stabilize below the level cap."""


class ShapeViolation(LogClassError):
    """Extension pair is not a direct composite of a prime-to-ell field and an ell-extension."""


# --- quadratic engine ------------------------------------------------------

class NotFundamental(LogClassError):
    """Discriminant is not a fundamental negative discriminant."""


class EllEqualsTwo(LogClassError):
    """The prime ell must be odd."""


class SearchExhausted(LogClassError):
    """Norm-equation search exceeded its bound; indicates an upstream bug."""


# --- reports ---------------------------------------------------------------

class NegativeResult(LogClassError):
    """Valuation arithmetic produced a negative order; inputs are inconsistent."""


class NotApplicable(LogClassError):
    """Criterion undefined for this character (real, or not below the ell-induced character)."""


class CriterionNotSatisfied(LogClassError):
    """Tower predictions require the minimality criterion to hold."""


# --- transition calculator -------------------------------------------------

class MissingBaseInvariant(LogClassError):
    """A base lambda invariant is needed but was neither computed nor supplied."""


class InternalInconsistency(LogClassError):
    """Two provably equivalent computations disagreed; this is a bug."""
