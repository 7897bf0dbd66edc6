"""Exception types raised by the sofic package.

Every precondition failure raises a subclass of :class:`SoficError`, so
callers can catch the whole family with one handler while tests can pin
down the specific condition.
"""


class SoficError(ValueError):
    """Base class for all errors raised by this package."""


class NotDeterministicError(SoficError):
    """An operation requiring a deterministic graph got a nondeterministic one."""


class NotIrreducibleError(SoficError):
    """An operation requiring an irreducible (strongly connected) graph got a reducible one."""


class NotEssentialError(SoficError):
    """An operation requiring an essential graph got one with stranded vertices."""


class NotSynchronizingError(SoficError):
    """An operation requiring a synchronizing presentation got a nonsynchronizing one."""


class NotFollowerSeparatedError(SoficError):
    """An operation requiring a follower-separated graph got one with merged follower sets."""


class NotSftError(SoficError):
    """An operation requiring a finite-type shift got a strictly sofic one."""


class UnknownVertexError(SoficError):
    """A vertex argument is not a vertex of the host graph."""


class SameVertexError(SoficError):
    """A pair operation was given the same vertex twice."""


class HostMismatchError(SoficError):
    """Two relations over different host graphs were combined."""


class NotAnElementError(SoficError):
    """A relation queried against a monoid is not one of its elements."""


class AlphabetMismatchError(SoficError):
    """A completion alphabet does not cover the graph's own alphabet."""


class AlphabetClashError(SoficError):
    """An input alphabet collides with the generators' reserved label tokens."""


class AllLanguagesEmptyError(SoficError):
    """Every input automaton has an empty language, leaving nothing to reduce."""


class TooSmallError(SoficError):
    """A requested family size is below the smallest constructible member."""


class CapExceededError(SoficError):
    """An exact search grew past its configured cap.

    The ``count`` attribute holds the size that tripped the cap.
    """

    def __init__(self, count, what="state count"):
        super().__init__(f"{what} {count} exceeds the configured cap")
        self.count = count


class ParseError(SoficError):
    """A graph document failed to parse.

    The ``line`` attribute holds the 1-based offending line number.
    """

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicateVertexError(ParseError):
    """A document declares the same vertex twice."""
