"""Exception types shared across the package."""


class PosetForgeError(Exception):
    """Base class for every error raised by this package."""


class DuplicateLabel(PosetForgeError):
    """Two elements were given the same label."""


class UnknownLabel(PosetForgeError):
    """A label does not name any element of the poset at hand."""


class CycleDetected(PosetForgeError):
    """The supplied relation is not antisymmetric, so it is not an order."""


class SizeLimitExceeded(PosetForgeError):
    """An enumeration or search grew past its configured cap."""


class NotALattice(PosetForgeError):
    """An operation that needs meets and joins was given a non-lattice."""


class BadParameters(PosetForgeError):
    """Arguments are outside the domain of the requested construction."""


class NotAnIdeal(PosetForgeError):
    """The given member set is not downward closed."""


class NotAnAntichain(PosetForgeError):
    """The given member set contains a comparable pair."""


class SizeMismatch(PosetForgeError):
    """Two antichains that must share a cardinality do not."""


class UnknownCheck(PosetForgeError):
    """No verification check is registered under the requested id."""
