"""Exception types raised across the package."""


class TruncationError(ValueError):
    """The truncated Fock basis is too small for the requested state or operation."""


class DegenerateStateError(ValueError):
    """The requested state does not exist (vanishing normalization)."""


class SingletError(DegenerateStateError):
    """The intertwiner annihilates the state (the SUSY ground singlet)."""


class UndefinedFanoError(ValueError):
    """Fano factor requested where the mean photon number vanishes."""
