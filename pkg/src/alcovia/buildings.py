"""Fiber counts for foldings of galleries against a fixed chamber.

A thickness assignment gives each wall family ``i`` (one per node,
including 0) a branching number ``q_i >= 1``.  A positively folded walk
then counts ``q_i`` preimage choices at every positive crossing of an
``i``-wall, ``q_i - 1`` at every fold on one, and exactly one at every
negative crossing; multiplying these over the steps and summing over
all walks of shape ``lam`` with weight ``mu`` counts the galleries that
retract onto the straight one.

>>> rs = build_root_system("A2")
>>> retraction_fiber_count(rs, (1, 1), (0, 0), Thickness.uniform(rs, 2))
5
>>> retraction_fiber_count(rs, (1, 1), (0, 0), Thickness.uniform(rs, 3))
14
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotInSaturatedSet
from .laurent import LaurentV
from .rootsys import Coweight, RootSystem, build_root_system
from .saturated import contains
from .walks import Walk, enumerate_P_lambda

__all__ = [
    "Thickness",
    "labelled_count",
    "retraction_fiber_count",
    "fiber_polynomial",
    "check_lower_bound",
]


@dataclass(frozen=True)
class Thickness:
    """Per-node branching numbers ``(q_0, ..., q_n)``, each at least 1."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values or any(
            not isinstance(q, int) or q < 1 for q in self.values
        ):
            raise ValueError("thickness values must be integers >= 1")

    @staticmethod
    def uniform(rs: RootSystem, q: int) -> "Thickness":
        return Thickness((q,) * (rs.rank + 1))

    def check_rank(self, rs: RootSystem) -> None:
        if len(self.values) != rs.rank + 1:
            raise ValueError(
                f"thickness has {len(self.values)} entries, expected {rs.rank + 1}"
            )


def labelled_count(p: Walk, th: Thickness) -> int:
    """Number of galleries retracting onto the straight one along ``p``.

    >>> rs = build_root_system("A1")
    >>> from .walks import WalkType, enumerate_walks
    >>> from .affine import translation
    >>> walks = enumerate_walks(WalkType((1, 0), translation(rs, (0,))))
    >>> [labelled_count(p, Thickness((4, 3))) for p in walks]
    [1, 3, 8]
    """
    th.check_rank(p.wtype.rs)
    total = 1
    for letter, (_, kind) in zip(p.wtype.letters, p.steps):
        if kind == "+":
            total *= th.values[letter]
        elif kind == "f":
            total *= th.values[letter] - 1
    return total


def retraction_fiber_count(
    rs: RootSystem,
    lam: Sequence[int],
    mu: Sequence[int],
    th: Thickness,
    max_letters: int | None = None,
) -> int:
    """Total fiber count over all walks of shape ``lam`` with weight ``mu``.

    Zero when ``mu`` is not a weight of the shape at all.
    """
    rs.check_dominant(lam)
    th.check_rank(rs)
    mu = tuple(mu)
    grouped = enumerate_P_lambda(rs, lam, max_letters)
    return sum(labelled_count(p, th) for p in grouped.get(mu, []))


def fiber_polynomial(
    rs: RootSystem,
    lam: Sequence[int],
    mu: Sequence[int],
    max_letters: int | None = None,
) -> LaurentV:
    """The uniform-thickness count as a polynomial in ``t = q - 1``.

    Each walk contributes ``(1 + t)^{pos} t^{folds}``, so the
    coefficients are nonnegative by construction; the value at
    ``t = q - 1`` equals :func:`retraction_fiber_count` at uniform
    thickness ``q``.

    >>> rs = build_root_system("A2")
    >>> print(fiber_polynomial(rs, (1, 1), (0, 0)))
    2v^2 + 3v
    """
    rs.check_dominant(lam)
    mu = tuple(mu)
    t = LaurentV.gen(1)
    one = LaurentV.one()
    grouped = enumerate_P_lambda(rs, lam, max_letters)
    total = LaurentV.zero()
    for p in grouped.get(mu, []):
        pos = sum(1 for _, kind in p.steps if kind == "+")
        folds = len(p.folds)
        total = total + (one + t) ** pos * t**folds
    return total


def check_lower_bound(
    rs: RootSystem,
    lam: Sequence[int],
    mu: Sequence[int],
    th: Thickness,
    max_letters: int | None = None,
) -> tuple[int, int]:
    """Fiber count together with its guaranteed lower bound.

    For ``mu`` in the saturated set the count is at least
    ``(min_i q_i - 1)^{<lam+mu, rho>}``; weights outside the saturated
    set raise :class:`~alcovia.errors.NotInSaturatedSet` (where the
    plain count would simply report 0).

    >>> rs = build_root_system("A2")
    >>> check_lower_bound(rs, (1, 1), (0, 0), Thickness.uniform(rs, 3))
    (14, 4)
    """
    rs.check_dominant(lam)
    th.check_rank(rs)
    mu = tuple(mu)
    if not contains(rs, lam, mu):
        raise NotInSaturatedSet(
            f"{mu} is not a weight of the shape {tuple(lam)}"
        )
    count = retraction_fiber_count(rs, lam, mu, th, max_letters)
    gap = rs.pair(tuple(a + b for a, b in zip(lam, mu)), rs.two_rho)
    assert gap % 2 == 0
    bound = (min(th.values) - 1) ** (gap // 2)
    assert count >= bound
    return count, bound
