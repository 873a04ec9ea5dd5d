"""Exception hierarchy shared by all hopfcycl modules."""


class HopfCyclError(Exception):
    """Base class for all library errors."""


class RingMismatch(HopfCyclError):
    """Operands live in different coefficient rings."""


class NotAUnit(HopfCyclError):
    """Inversion was requested for a non-invertible element."""


class UnsupportedRing(HopfCyclError):
    """The operation is not defined over the given coefficient ring."""


class NotAField(UnsupportedRing):
    """A field was required (rank / kernel computations)."""


class RingWithoutRationals(UnsupportedRing):
    """The operation needs the rationals inside the coefficient ring."""


class NotAComplex(HopfCyclError):
    """Consecutive boundary maps do not compose to zero."""


class IndexOutOfRange(HopfCyclError):
    """Simplicial operator index outside the allowed range."""


class PreconditionFailed(HopfCyclError):
    """A documented operation precondition does not hold."""


class InvalidCharacter(HopfCyclError):
    """Character data does not define an algebra map with the required values."""


class MissingRootOfUnity(HopfCyclError):
    """The coefficient ring has no primitive root of unity of the needed order."""


class NegativePartialSum(HopfCyclError):
    """Alternating-sum bookkeeping for the graded SBI splitting went negative."""


class ParseError(HopfCyclError):
    """Malformed ring / group / quiver specification string."""


class ResourceCap(HopfCyclError):
    """A carrier dimension exceeds the configured resource limit."""


class UnsupportedCombination(HopfCyclError):
    """The requested combination of ring / engine / algebra is not available."""
