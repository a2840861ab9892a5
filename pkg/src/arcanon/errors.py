"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class ArcanonError(Exception):
    """Base class for every library error."""


class NotInClass(ArcanonError):
    """The input is not a member of the class an operation requires."""


class NotInterval(NotInClass):
    pass


class NotTightInterval(NotInClass):
    pass


class NotCA(NotInClass):
    pass


class NotTightCA(NotInClass):
    pass


class NoSolution(ArcanonError):
    """No graph has the given closed neighborhood hypergraph (in the searched class)."""


class PreconditionViolated(ArcanonError):
    pass


class SizeLimit(ArcanonError):
    """Input too large for an exhaustive search."""
