"""Exception types shared across the planning pipeline."""


class ScoppError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(ScoppError, ValueError):
    """An argument violates an operation's precondition."""


class OutOfRangeError(ScoppError, ValueError):
    """A coordinate falls outside the local projection's validity window."""


class EmptyGridError(ScoppError):
    """Discretization produced no usable cells (area smaller than one cell)."""


class InconsistentStateError(ScoppError):
    """Pipeline artifacts disagree (e.g. labels missing for grid points)."""


class EmptyCandidateError(ScoppError):
    """A nearest-neighbor query had every candidate excluded."""


class MissionParseError(ScoppError):
    """Mission file could not be read or is structurally malformed."""


class MissionValidationError(ScoppError):
    """Mission file parsed but violates documented parameter ranges."""
