"""Exception types raised across the package."""


class ShodgeError(Exception):
    """Base class for domain errors (mapped to CLI exit code 2)."""


class NonDivisibleOrder(ShodgeError):
    pass


class DimensionMismatch(ShodgeError):
    pass


class InvalidProfile(ShodgeError):
    pass


class TooLarge(ShodgeError):
    pass


class NotPrime(ShodgeError):
    pass


class NotCoprime(ShodgeError):
    pass


class ZeroDiscriminant(ShodgeError):
    pass


class WeightEqualsOrder(ShodgeError):
    pass


class IntegerWeight(ShodgeError):
    pass


class BranchAmbiguity(ShodgeError):
    pass


class BranchCut(ShodgeError):
    pass


class NonNormalizable(ShodgeError):
    pass


class PoleOfGamma(ShodgeError):
    pass


class DependentRows(ShodgeError):
    pass


class NoApplicableRelation(ShodgeError):
    """Rewriting got stuck; ``partial`` holds the expression reached so far."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NotFound(ShodgeError):
    """No integer relation detected at the given precision and height.

    This is evidence only, never a proof of transcendence.
    """
