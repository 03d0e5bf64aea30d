"""Exception hierarchy shared by all modules.

DomainError covers every failure caused by invalid mathematical input; the
CLI and service map it to exit code 1 / HTTP 400. Anything else escaping the
library is a bug.
"""


class DomainError(Exception):
    """Base class for all input-domain failures."""


class CompositeModulus(DomainError):
    """Field modulus is not prime (or out of the supported range)."""


class ModulusMismatch(DomainError):
    """Operands live over different prime fields."""


class ZeroInverse(DomainError):
    """Attempt to invert or divide by zero in a field."""


class EvenModulus(DomainError):
    """Legendre symbol requested for p = 2."""


class LengthMismatch(DomainError):
    """Vectors of different lengths where equal lengths are required."""


class NotSystematic(DomainError):
    """Matrix is not of the form [I | A]."""


class FractionalExponent(DomainError):
    """Eta quotient whose leading power of q is not an integer."""


class UnsupportedWeight(DomainError):
    """Eisenstein series weight outside {4, 6}."""


class TruncationTooSmall(DomainError):
    """Requested series coefficient lies beyond the truncation order."""


class NonUnitLeadingCoefficient(DomainError):
    """Series inversion needs a leading coefficient of +1 or -1 over Z."""


class SingularReduction(DomainError):
    """Curve model is singular over the requested prime field."""


class PointNotOnCurve(DomainError):
    """Group-law operand does not satisfy the curve equation."""


class NoModelForLevel(DomainError):
    """No catalog model for the requested level."""


class BadReduction(DomainError):
    """Prime divides the level or the model discriminant."""


class HasseViolation(DomainError):
    """Frobenius trace outside the interval [-2*sqrt(p), 2*sqrt(p)]."""


class InfinityEvaluation(DomainError):
    """Function evaluation requested at the point at infinity."""


class DenominatorVanishes(DomainError):
    """Projective ratio evaluated where its denominator is zero."""


class ZeroTriple(DomainError):
    """(0, 0, 0) is not a projective point."""


class DuplicatePoint(DomainError):
    """Evaluation points must be pairwise distinct."""


class SupportCollision(DomainError):
    """Evaluation point lies in the support of the code divisor."""


class TooLarge(DomainError):
    """Enumeration would exceed the configured word budget."""


class NonIntegralResult(DomainError):
    """A transform that must produce integers did not."""


class NonIntegralGenus(DomainError):
    """Genus formula produced a non-integer (implementation fault)."""


class NotASquare(DomainError):
    """Field size q is not a perfect square."""


class PreconditionFailed(DomainError):
    """Operation-specific precondition not met."""
