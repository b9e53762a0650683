"""Exception hierarchy for the link-invariant calculator.

Every error raised on purpose by the library derives from LinkInvError, so
callers (CLI, service) can distinguish bad input from genuine bugs.
"""

from __future__ import annotations


class LinkInvError(Exception):
    """Base class for all library errors."""


# ---------------------------------------------------------------------------
# parsing / validation of polynomials


class ParseError(LinkInvError):
    """The polynomial text does not match the grammar."""


class CoefficientNotOneError(ParseError):
    """A numeric coefficient appeared; only coefficient-1 monomials are allowed."""


class NotSquareError(LinkInvError):
    """The number of monomials differs from the number of variables."""


class ZeroDeterminantError(LinkInvError):
    """The exponent matrix is singular."""


class ExponentBoundError(LinkInvError):
    """An exponent exceeds the supported bound."""


class NotAtomicSumError(LinkInvError):
    """No variable/monomial permutation splits the polynomial into
    Fermat, chain and cycle blocks."""


class CycleParityViolationError(NotAtomicSumError):
    """Even-length cycle whose alternating exponents are all 1; such a cycle
    never defines an isolated singularity and is excluded from the atomic types."""


# ---------------------------------------------------------------------------
# weight systems


class NonPositiveWeightError(LinkInvError):
    """The exact solve produced a non-positive weight."""


class NonPrimitiveError(LinkInvError):
    """Weights and degree share a common factor."""


class NonCoprimeError(LinkInvError):
    """The two degree factors m2, m3 share a common factor."""


# ---------------------------------------------------------------------------
# divisor calculus


class NonIntegralDivisorError(LinkInvError):
    """A fully multiplied Alexander divisor came out with a fractional
    coefficient; the input weights are not those of a weighted-homogeneous
    polynomial."""


class NonIntegralEvaluationError(LinkInvError):
    """A closed-form evaluation (value at 1 or -1, Milnor number) is not an
    integer."""


class WeightExceedsDegreeError(LinkInvError):
    """Some weight is >= the degree, so the Milnor product is degenerate."""


class DegreeCapError(LinkInvError):
    """The expansion oracle was asked for a polynomial above its degree cap."""


class NonIntegralCError(LinkInvError):
    """An inductive c-quotient in the torsion algorithm is not an integer."""


# ---------------------------------------------------------------------------
# structured families


class PatternMismatchError(LinkInvError):
    """Input does not have the expected structured shape (chain-chain base,
    m2/m3 weight pattern, ...)."""


class HypothesisViolationError(LinkInvError):
    """Family parameters violate a documented hypothesis (coprimality,
    parity, rational-homology-sphere base, ...)."""


class ClosedFormMismatchError(LinkInvError):
    """A closed-form prediction disagrees with the generic computation."""


class DivisibilityFailureError(LinkInvError):
    """A required divisibility (pure-power exponent, half degree) fails."""


class ParameterViolationError(LinkInvError):
    """Family parameters fail their validation (range, parity, coprimality)."""


class NotApplicableError(LinkInvError):
    """A criterion was requested on input outside its domain of validity."""
