"""Exception types shared across the package."""


class GraphError(ValueError):
    """Input graph violates a structural precondition (not nice, not connected, ...)."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class InvariantViolation(RuntimeError):
    """A constructive procedure reached a state its correctness argument rules out."""


class SearchExhausted(InvariantViolation):
    """An exhaustive search ran out of candidates."""
