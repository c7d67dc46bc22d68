"""Exception types raised across the package."""

from __future__ import annotations


class BrittonError(Exception):
    """Base class for all errors raised by this package."""


class GrammarError(BrittonError):
    """A grammar failed validation; ``violations`` lists every problem found."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid grammar")


class TooLong(BrittonError):
    """Raised when an expansion would exceed the caller's limit."""

    def __init__(self, length: int, limit: int):
        self.length = length
        self.limit = limit
        super().__init__(f"expansion has {length} letters, limit is {limit}")


class AlphabetMismatch(BrittonError):
    pass


class OrderMismatch(BrittonError):
    pass


class MalformedInput(BrittonError):
    pass


class InvalidInput(BrittonError):
    """Graph-of-groups input that failed validation."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid input")


class WordSyntaxError(BrittonError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")
