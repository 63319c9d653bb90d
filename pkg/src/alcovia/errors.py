"""Exception types shared across the package.

Every error raised by the library is a subclass of :class:`AlcoviaError`,
so callers can catch one type at the boundary.  Validation errors carry a
human-readable message; the CLI maps each class to a stable exit code.
"""

from __future__ import annotations

__all__ = [
    "AlcoviaError",
    "UnknownType",
    "RankOutOfRange",
    "NotDominant",
    "IndexOutOfRange",
    "InvalidWalk",
    "NotReducedWord",
    "NotInSaturatedSet",
    "SingularPoint",
    "GroupTooLarge",
    "TypeTooLong",
    "InternalOperatorDeath",
]


class AlcoviaError(Exception):
    """Base class for all library errors."""


class UnknownType(AlcoviaError):
    """The Cartan type label is not one of the supported families."""


class RankOutOfRange(AlcoviaError):
    """The rank is not admissible for the requested family."""


class NotDominant(AlcoviaError):
    """A coweight that must be dominant has a negative coordinate."""


class IndexOutOfRange(AlcoviaError):
    """A simple-reflection or affine-generator index is out of range."""


class InvalidWalk(AlcoviaError):
    """A walk violates its invariants (e.g. a fold at a positive crossing)."""


class NotReducedWord(AlcoviaError):
    """An expression expected to be reduced has a shorter equivalent."""


class NotInSaturatedSet(AlcoviaError):
    """The target coweight lies outside the saturated set of the shape."""


class SingularPoint(AlcoviaError):
    """An evaluation point makes a required denominator vanish."""


class GroupTooLarge(AlcoviaError):
    """The finite Weyl group exceeds the configured order guard."""


class TypeTooLong(AlcoviaError):
    """A walk type exceeds the configured letter-count guard."""


class InternalOperatorDeath(AlcoviaError):
    """Internal consistency failure inside a raising operator.

    This is a bug indicator, never a user-input error: it fires when the
    rewritten fold mask fails the end-alcove law that the operator's case
    analysis guarantees.
    """
