"""Exception hierarchy shared by the library and the CLI."""


class OrbitLatticeError(ValueError):
    """Base class for every error a caller can provoke with bad input."""


class DomainError(OrbitLatticeError):
    """Parameters outside the domain of an operation, e.g. 2k > n."""


class TableauValidationError(OrbitLatticeError):
    """A filling that is not a standard tableau. The message names the first broken rule."""


class NotASigmaImageError(OrbitLatticeError):
    """An involution that is not sigma_T for any two-column tableau T."""


class SizeMismatchError(OrbitLatticeError):
    """Two operands of different ambient size n."""


class CapExceededError(OrbitLatticeError):
    """An exhaustive run was asked for above the configured n cap."""


class ParseError(OrbitLatticeError):
    """Malformed text encoding of a tableau, involution, permutation or matrix."""


class ConsistencyError(RuntimeError):
    """Two independent computations disagree. Never expected to fire."""
