"""Exception hierarchy shared by every latsort module."""


class LatticeError(Exception):
    """Base class for all latsort errors."""


class DomainError(LatticeError, ValueError):
    """A value does not belong to the lattice it is used with."""


class LatticeOverflowError(LatticeError, OverflowError):
    """A lattice operation left the fixed-width payload range."""


class EmptySequenceError(LatticeError, ValueError):
    """An operation that needs at least one element got none."""


class CapExceededError(LatticeError):
    """Subset enumeration was asked for more indices than the cap allows."""


class NotDistributiveError(LatticeError):
    """The distributive fast path was requested on a lattice not declared distributive."""


class NotTotalOrderError(LatticeError):
    """A comparison sort was requested on a lattice that is not a chain."""


class AxiomError(LatticeError):
    """An operation table violates a lattice law."""


class LatticeParseError(LatticeError, ValueError):
    """Text could not be parsed as a lattice spec, element, or table file."""
