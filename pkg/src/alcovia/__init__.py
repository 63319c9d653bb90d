"""Exact arithmetic for positively folded alcove walks.

The package enumerates positively folded alcove walks in extended affine
Weyl groups, applies crystal raising operators, builds optimal-dimension
walks for every weight in a saturated set, computes Macdonald spherical
functions three independent ways, verifies affine Hecke algebra walk and
idempotent identities, and counts retraction fibers in regular affine
buildings — all over exact integers and rationals.
"""

from .errors import (
    AlcoviaError,
    GroupTooLarge,
    IndexOutOfRange,
    InternalOperatorDeath,
    InvalidWalk,
    NotDominant,
    NotInSaturatedSet,
    NotReducedWord,
    RankOutOfRange,
    SingularPoint,
    TypeTooLong,
    UnknownType,
)
from .rootsys import RootSystem, build_root_system

__version__ = "0.1.0"

__all__ = [
    "AlcoviaError",
    "GroupTooLarge",
    "IndexOutOfRange",
    "InternalOperatorDeath",
    "InvalidWalk",
    "NotDominant",
    "NotInSaturatedSet",
    "NotReducedWord",
    "RankOutOfRange",
    "RootSystem",
    "SingularPoint",
    "TypeTooLong",
    "UnknownType",
    "build_root_system",
    "__version__",
]
