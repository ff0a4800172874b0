"""Exception types shared across the package."""


class ForestInvError(Exception):
    """Base class for all library errors."""


class ParseError(ForestInvError, ValueError):
    """Malformed tree text.  Carries the character offset of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class DomainError(ForestInvError, ValueError):
    """Input outside an operation's domain."""


class ResourceLimitError(ForestInvError, RuntimeError):
    """A brute-force guard was exceeded; oracles never approximate."""
