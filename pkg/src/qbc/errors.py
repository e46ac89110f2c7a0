"""Exception types shared across the package."""


class QbcError(Exception):
    """Base class for errors raised by this package."""


class GraphParseError(QbcError):
    """Malformed graph input; carries the 1-based line number when known."""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class EmptySideError(QbcError):
    """Density or a per-vertex criterion was requested on an empty vertex set."""


class InfeasibleBoundsError(QbcError):
    """Size/edge-count bounds admit no selection."""


class HeuristicFailureError(QbcError):
    """Greedy build ran out of vertices; carries the last nonempty state."""

    def __init__(self, message, last_selection=None):
        super().__init__(message)
        self.last_selection = last_selection


class UnsupportedFormError(QbcError):
    """An operation was asked to handle a model form it does not support."""


class SolverAdapterError(QbcError):
    """External solver failed or produced unusable output."""

    def __init__(self, message, captured_output=""):
        super().__init__(message)
        self.captured_output = captured_output


class VerificationError(QbcError):
    """A solver assignment violates the model; names the offending constraint."""

    def __init__(self, message, constraint=None):
        super().__init__(message)
        self.constraint = constraint
