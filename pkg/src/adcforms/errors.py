"""Exception types shared across the package.

All library errors derive from AdcError so callers (notably the CLI) can
distinguish domain errors from programming mistakes.
"""


class AdcError(Exception):
    """Base class for all errors raised by this package."""


# -- rings ------------------------------------------------------------------

class ZeroValuation(AdcError):
    """Valuation requested for the zero element."""


class NotPrime(AdcError):
    """The given element is not prime / irreducible in the active ring."""


class ZeroInput(AdcError):
    """An operation that requires a nonzero element received zero."""


# -- forms ------------------------------------------------------------------

class DimensionMismatch(AdcError):
    """Vector length does not match the form's number of variables."""


class Degenerate(AdcError):
    """The form's Gram matrix is singular."""


class WrongRing(AdcError):
    """Operation is only defined over a different coefficient ring."""


class NonConstantCoefficients(AdcError):
    """Operation requires a form with constant (degree-0) coefficients."""


# -- euclid -----------------------------------------------------------------

class NotImplementedFamily(AdcError):
    """The form belongs to no implemented Euclidean family."""


class StepFailed(AdcError):
    """A Euclidean step postcondition failed; should be unreachable."""


class NonPositiveCoefficient(AdcError):
    """Diagonal coefficients must be positive for this operation."""


class NotPositiveDefinite(AdcError):
    """Operation requires a positive definite form."""


class BoundTooSmall(AdcError):
    """A search bound below the minimum allowed value was supplied."""


class NotSplitForm(AdcError):
    """Input is not a hyperbolic-split form of the expected shape."""


class AnisotropicPartViolation(AdcError):
    """The declared anisotropic tail took a value of non-negative valuation
    on a non-integral vector, so it was not actually anisotropic locally."""


# -- descent ----------------------------------------------------------------

class BadStep(AdcError):
    """Descent step precondition 0 < |q(z)| < 1 was violated."""


class NotEuclideanFamily(AdcError):
    """Descent was asked to run on a form outside the step-capable families."""


class InvalidWitness(AdcError):
    """Witness identity q(x') = t^2 d does not hold."""


class NotDecidable(AdcError):
    """Exact representation decisions are only available for definite forms."""


# -- localglobal ------------------------------------------------------------

class WrongDimension(AdcError):
    """Form dimension outside the operation's allowed range."""


class ZeroTarget(AdcError):
    """Local representability of 0 is not handled."""


class DyadicPlace(AdcError):
    """The nondyadic criterion was invoked at p = 2."""


class SearchExhausted(AdcError):
    """A witness search ran out of budget before finding anything."""


# -- cli / plumbing ---------------------------------------------------------

class UnknownFixture(AdcError):
    """Requested fixture name is not in the registry."""


class EnumerationBudgetExceeded(AdcError):
    """Candidate enumeration exceeded ADCFORMS_MAX_ENUM."""
