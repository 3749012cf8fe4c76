"""Exception types raised across the package."""


class RotheError(Exception):
    """Base class for every error raised by this package."""


class InvalidPermutation(RotheError, ValueError):
    pass


class DuplicateValue(InvalidPermutation):
    pass


class SquareNotInDiagram(RotheError, KeyError):
    pass


class NotThreeTwoOneAvoiding(RotheError, ValueError):
    pass


class NotApplicable(RotheError, ValueError):
    pass


class ContextMismatch(RotheError, ValueError):
    """Two polynomials from different rings were combined."""


class NonExactDivision(RotheError, ArithmeticError):
    """A divided difference left a remainder; this is always an internal bug."""


class ZeroPolynomial(RotheError, ValueError):
    pass


class EmptySequence(RotheError, ValueError):
    pass


class No1432Occurrence(RotheError, ValueError):
    pass


class GroundSetTooLarge(RotheError):
    def __init__(self, size: int, limit: int):
        super().__init__(f"ground set has {size} elements, limit is {limit}")
        self.size = size
        self.limit = limit


class MethodNotApplicable(RotheError, ValueError):
    pass
