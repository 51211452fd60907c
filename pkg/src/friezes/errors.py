"""Exception hierarchy.

Two families: malformed input (``InvalidArgument`` and subclasses) and
mathematical validation failures (``ValidationFailure`` and subclasses).
The CLI maps the first family to exit status 2 and the second to 1.
"""


class InvalidArgument(ValueError):
    """Input violates a precondition."""


class CrossingError(InvalidArgument):
    """Two diagonals or arcs cross."""

    def __init__(self, first, second):
        super().__init__(f"diagonals {tuple(first)} and {tuple(second)} cross")
        self.pair = (tuple(first), tuple(second))


class ValidationFailure(Exception):
    """A well-formed object fails a mathematical check."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class NotAFriezeError(ValidationFailure):
    """Propagated rows do not close up with a row of 1s and a row of 0s."""


class PositivityError(NotAFriezeError):
    """An interior entry is zero or negative."""


class ReconstructionError(ValidationFailure):
    """A frieze does not come from the dissection read off its 1-entries."""


class NotAnInfiniteFriezeError(ValidationFailure):
    """A windowed infinite pattern has a nonpositive or out-of-range entry."""


class InternalInconsistency(ValidationFailure):
    """Derived data contradicts an invariant that holds for genuine input."""


class SpanTooSmall(ValidationFailure):
    """The search window for arcs was too small for the input."""


class NotRealizableError(ValidationFailure):
    """No strip p-angulation matches the input quiddity."""


class InvalidStripError(ValidationFailure):
    """A strip description is not a locally finite p-angulation."""


class ConstructionBug(RuntimeError):
    """A construction produced output failing its own certificate."""
