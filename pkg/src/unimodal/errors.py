"""Exception types raised across the package."""


class UnimodalError(ValueError):
    """Base class for input and precondition errors."""


class NonMonotoneBreakpoints(UnimodalError):
    pass


class NegativeValue(UnimodalError):
    pass


class SupportViolation(UnimodalError):
    pass


class OutOfDomain(UnimodalError):
    pass


class EmptyInterval(UnimodalError):
    pass


class NonpositiveExponent(UnimodalError):
    pass


class UnsupportedExponent(UnimodalError):
    pass


class NotASweepOutput(UnimodalError):
    pass


class HasZeros(UnimodalError):
    pass


class GraphMismatch(UnimodalError):
    pass


class NoPath(UnimodalError):
    pass


class NotATree(UnimodalError):
    pass


class TooLarge(UnimodalError):
    pass


class NonplanarFaceValues(UnimodalError):
    pass


class BadTiling(UnimodalError):
    pass


class RefinementMismatch(UnimodalError):
    pass


class OutOfSupport(UnimodalError):
    pass


class LengthMismatch(UnimodalError):
    pass


class NotSorted(UnimodalError):
    pass


class PreconditionViolated(UnimodalError):
    pass


class UnknownDataset(UnimodalError):
    pass


class UndecidedComparison(ArithmeticError):
    """Interval refinement hit the precision cap without deciding a sign."""
