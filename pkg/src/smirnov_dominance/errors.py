"""Exception hierarchy shared by all modules."""


class SmirnovError(Exception):
    """Base class for every error raised by this package."""


class InvalidTuple(SmirnovError, ValueError):
    pass


class DimensionMismatch(SmirnovError, ValueError):
    pass


class CrossSampleTie(SmirnovError, ValueError):
    """A value occurs in both samples, so the merged order is undefined."""


class RangeError(SmirnovError, ValueError):
    pass


class NegativeArgument(SmirnovError, ValueError):
    pass


class NotAttainable(SmirnovError, ValueError):
    """The line nx - my = r has no lattice point inside the rectangle."""


class CellMismatch(SmirnovError, ValueError):
    pass


class RowCollision(SmirnovError, ValueError):
    pass


class BudgetExceeded(SmirnovError, RuntimeError):
    pass


class SampleParseError(SmirnovError, ValueError):
    pass
