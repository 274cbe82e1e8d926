"""Exception hierarchy shared by every module of the package."""


class QuandleRingError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 2


class MalformedTableError(QuandleRingError, ValueError):
    """A Cayley table is not square or has an entry outside ``[0, n)``."""


class EmptyStructureError(QuandleRingError, ValueError):
    pass


class SizeError(QuandleRingError, ValueError):
    pass


class InvalidAutomorphismError(QuandleRingError, ValueError):
    pass


class InvalidHomomorphismError(QuandleRingError, ValueError):
    pass


class SubquandleError(QuandleRingError, ValueError):
    """An index set that was required to be closed under the operation is not."""


class RingMismatchError(QuandleRingError, TypeError):
    """Operands live over different coefficient rings or different racks."""


class NonUnitError(QuandleRingError, ArithmeticError):
    pass


class UnboundSymbolError(QuandleRingError, KeyError):
    pass


class DimensionMismatchError(QuandleRingError, ValueError):
    pass


class ContainmentError(QuandleRingError, ValueError):
    """``quotient_shape`` was asked for a pair of lattices that are not nested."""


class UncertifiedIdealError(QuandleRingError, ValueError):
    """An ideal was used where two-sided closure must already be verified."""


class HypothesisError(QuandleRingError):
    """A mathematical precondition of a structural check is not met."""

    exit_code = 1


class ResourceLimitError(QuandleRingError):
    """A configured enumeration or closure cap was exceeded."""

    exit_code = 3
