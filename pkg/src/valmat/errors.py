"""Exception types shared across the package."""


class ValmatError(Exception):
    """Base class for every error raised by valmat."""


class FormatError(ValmatError, ValueError):
    """Malformed input file or value token."""


class FiniteMinusInfinity(ValmatError, ArithmeticError):
    """A finite value minus infinity has no meaning in the extended group."""


class EmptyList(ValmatError, ValueError):
    pass


class NotValidTSequence(ValmatError, ValueError):
    """The successive differences of a t-sequence are not a valid length list."""


class InvalidTSequence(NotValidTSequence):
    pass


class SizeBound(ValmatError, ValueError):
    pass


class NotAMatroid(ValmatError, ValueError):
    pass


class NotSpannable(ValmatError, ValueError):
    pass


class BadCoordinates(ValmatError, ValueError):
    pass


class ConditionFailed(ValmatError, ValueError):
    """A polyhedron fails one of the edge-direction recovery conditions."""

    def __init__(self, condition, detail=""):
        self.condition = condition
        self.detail = detail
        super().__init__(f"condition ({condition}) failed: {detail}")


class IncompatibleLocals(ValmatError, ValueError):
    pass


class DimensionBound(ValmatError, ValueError):
    pass


class RankMismatch(ValmatError, ValueError):
    pass


class RankBounds(ValmatError, ValueError):
    pass


class AllInfinite(ValmatError, ValueError):
    pass


class BadProfile(ValmatError, ValueError):
    pass


class NotInClass(ValmatError, ValueError):
    pass


class NotNormalized(ValmatError, ValueError):
    pass


class NotPluecker(ValmatError, ValueError):
    pass


class BadParams(ValmatError, ValueError):
    pass


class InvalidIndex(ValmatError, ValueError):
    pass


class NotComparable(ValmatError, ValueError):
    pass


class Infeasible(ValmatError, ValueError):
    pass


class Unbounded(ValmatError, ValueError):
    pass
