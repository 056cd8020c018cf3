"""Exception types shared across the package.

Every precondition rejection at an API boundary raises one of these, so the
CLI can map failures onto stable exit codes.
"""


class SelfLoopError(ValueError):
    """An edge joins a vertex to itself."""

    def __init__(self, label: str):
        super().__init__(f"self-loop on vertex {label!r}")
        self.label = label


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the 1-based line number.

    Line number 0 means the problem is not tied to a file line.
    """

    def __init__(self, line_no: int, message: str):
        prefix = f"line {line_no}: " if line_no else ""
        super().__init__(prefix + message)
        self.line_no = line_no


class NotConnectedError(ValueError):
    """Graph is disconnected or too small for monitoring semantics."""


class MethodMismatchError(ValueError):
    """A forced solving method does not apply to the input graph."""


class NotP4SparseError(MethodMismatchError):
    """Structural case analysis found no join split and no spider."""


class LimitExceededError(ValueError):
    """Input exceeds a hard size limit; carries the limit that was hit."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.limit = limit


class GenerationError(RuntimeError):
    """A generator exhausted its retry budget or got infeasible parameters."""
