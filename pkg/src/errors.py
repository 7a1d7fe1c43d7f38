from typing import List, Optional


class Z2RError(ValueError):
    """Base class for every domain error raised by the library."""


class SizeExceeded(Z2RError):
    def __init__(self, size: int, limit: int):
        super().__init__(f"code of size {size} exceeds enumeration limit {limit}")
        self.size = size
        self.limit = limit


class InconsistentType(Z2RError):
    pass


class NotSelfDual(Z2RError):
    pass


class NonIntegral(Z2RError):
    pass


class HypothesisFailed(Z2RError):
    def __init__(self, message: str, pair: Optional[tuple] = None):
        super().__init__(message)
        self.pair = pair


class PreconditionFailed(Z2RError):
    """Raised by the building-up constructions with every failed check listed."""

    def __init__(self, failures: List[str]):
        super().__init__("; ".join(failures))
        self.failures = failures


class BoundExceeded(Z2RError):
    pass


class InvalidParameters(Z2RError):
    pass


class ParseError(Z2RError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
