"""Shared exception types."""


class LieError(ValueError):
    """Base for engine errors."""


class TripleNotFoundError(LieError):
    """No nilpotent completion exists for a proposed defining vector."""


class PeelInconsistencyError(LieError):
    """A weight multiset cannot be written as a sum of the expected irreducibles."""


class IdentifyError(LieError):
    """A subalgebra is not reductive in the expected position."""


class EngineConsistencyError(RuntimeError):
    """Two independent routes inside the engine disagree; never silently patched."""
