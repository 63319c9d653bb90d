"""Positively folded alcove walks: encoding, statistics, enumeration.

A walk is stored compactly as its *type* (a word over the affine
letters ``{0..n}`` followed by a length-zero jump) together with a
*fold mask* — the set of 1-based step positions at which the walk
bounces off the wall instead of crossing it.  Every derived quantity
(alcove sequence, step walls and kinds, end alcove, statistics) is
recomputed from that pair, so equality of walks is equality of the
compact encodings.

Step kinds and statistics:

* ``'+'`` positive crossing (onto the positive side of the wall),
  counted by ``pos_cross``;
* ``'-'`` negative crossing, counted by ``neg_cross``;
* ``'f'`` positive fold — permitted only where a crossing would have
  been negative, i.e. where the walk stands on the positive side;
  counted by ``folds``.

``dim = pos_cross + folds`` and the signed count
``pos_cross - neg_cross`` always equals the signed length of the end
alcove, giving ``dim = (length + signed + folds) / 2``.

>>> rs = build_root_system("A1")
>>> grouped = enumerate_P_lambda(rs, (1,))
>>> sorted((mu, len(ps)) for mu, ps in grouped.items())
[((-1,), 1), ((1,), 2)]
>>> [steps_string(p) for ps in grouped.values() for p in ps]
['-@w=w1', '@w=w1', 'f@w=w1']
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .affine import (
    AffElem,
    AffRoot,
    affine_generator,
    classify_step,
    identity_elem,
    min_double_coset_rep,
    omega_label,
    translation,
)
from .errors import InvalidWalk, NotDominant, TypeTooLong
from .rootsys import Coweight, FinWeylElem, RootSystem, build_root_system

__all__ = [
    "WalkType",
    "Walk",
    "WalkStats",
    "DEFAULT_MAX_LETTERS",
    "walk_type_for_rep",
    "stats",
    "antidominant_walk",
    "enumerate_walks",
    "enumerate_P_lambda",
    "unfold_sequence",
    "steps_string",
]

#: Default guard on the number of letters in a walk type.
DEFAULT_MAX_LETTERS = 24


@dataclass(frozen=True)
class WalkType:
    """A word over ``{0..n}`` plus a length-zero jump appended at the end."""

    letters: tuple[int, ...]
    omega_part: AffElem

    @property
    def rs(self) -> RootSystem:
        return self.omega_part.rs

    def check_length(self, max_letters: int | None = None) -> None:
        bound = DEFAULT_MAX_LETTERS if max_letters is None else max_letters
        if len(self.letters) > bound:
            raise TypeTooLong(
                f"walk type has {len(self.letters)} letters, bound is {bound}"
            )


class Walk:
    """A positively folded alcove walk: a type plus a fold mask.

    ``folds`` holds 1-based positions into ``wtype.letters``.  The
    constructor replays the walk once, checking that every fold happens
    on the positive side of its wall, and caches the alcove sequence
    and per-step ``(wall, kind)`` data.

    >>> rs = build_root_system("A1")
    >>> wt = WalkType((1,), identity_elem(rs))
    >>> crossing, folded = Walk(wt, frozenset()), Walk(wt, frozenset({1}))
    >>> [kind for _, kind in crossing.steps], [kind for _, kind in folded.steps]
    (['-'], ['f'])
    >>> Walk(WalkType((1, 1), identity_elem(rs)), frozenset({2}))
    Traceback (most recent call last):
        ...
    alcovia.errors.InvalidWalk: fold at step 2 is on the negative side of its wall
    """

    __slots__ = ("wtype", "folds", "alcoves", "steps", "end")

    def __init__(self, wtype: WalkType, folds: frozenset[int] = frozenset()):
        rs = wtype.rs
        folds = frozenset(folds)
        bad = [k for k in folds if not 1 <= k <= len(wtype.letters)]
        if bad:
            raise InvalidWalk(f"fold positions {sorted(bad)} outside 1..{len(wtype.letters)}")
        self.wtype = wtype
        self.folds = folds
        alcoves: list[AffElem] = [identity_elem(rs)]
        steps: list[tuple[AffRoot, str]] = []
        for k, letter in zip(range(1, len(wtype.letters) + 1), wtype.letters):
            x = alcoves[-1]
            wall, sign = classify_step(x, letter)
            if k in folds:
                if sign != "-":
                    raise InvalidWalk(
                        f"fold at step {k} is on the negative side of its wall"
                    )
                steps.append((wall, "f"))
                alcoves.append(x)
            else:
                steps.append((wall, sign))
                alcoves.append(x * affine_generator(rs, letter))
        self.alcoves = alcoves
        self.steps = steps
        self.end = alcoves[-1] * wtype.omega_part

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Walk):
            return NotImplemented
        return self.wtype == other.wtype and self.folds == other.folds

    def __hash__(self) -> int:
        return hash((self.wtype, self.folds))

    def __repr__(self) -> str:
        return f"<Walk {steps_string(self)}>"


@dataclass(frozen=True)
class WalkStats:
    """All step statistics of one walk (see the module docstring)."""

    pos_cross: int
    neg_cross: int
    folds: int
    length: int
    signed: int
    dim: int
    weight: Coweight
    final_dir: FinWeylElem


def stats(p: Walk) -> WalkStats:
    """Compute the statistics record of a walk.

    >>> rs = build_root_system("A1")
    >>> wt = WalkType((1,), _omega_of(rs, (1,)))
    >>> s = stats(Walk(wt, frozenset({1})))
    >>> (s.pos_cross, s.folds, s.dim, s.weight, s.final_dir.length)
    (0, 1, 1, (1,), 1)
    """
    kinds = [kind for _, kind in p.steps]
    pos = kinds.count("+")
    neg = kinds.count("-")
    f = kinds.count("f")
    end = p.end
    signed = pos - neg
    assert signed == end.signed, "step signs must match the end alcove's signed length"
    length = len(p.wtype.letters)
    dim = pos + f
    assert 2 * dim == length + signed + f
    return WalkStats(
        pos_cross=pos,
        neg_cross=neg,
        folds=f,
        length=length,
        signed=signed,
        dim=dim,
        weight=end.trans,
        final_dir=end.fin,
    )


def _omega_of(rs: RootSystem, lam: Sequence[int]) -> AffElem:
    """Length-zero part shared by every walk type of shape ``lam``."""
    return min_double_coset_rep(rs, lam)[1].omega_part


def walk_type_for_rep(
    rs: RootSystem, lam: Sequence[int], u: FinWeylElem
) -> WalkType:
    """The walk type whose letters spell ``u`` followed by the minimal
    double-coset element of ``t_lam``.

    >>> rs = build_root_system("A2")
    >>> walk_type_for_rep(rs, (1, 1), rs.simple_fin(1)).letters
    (1, 0)
    """
    m, word = min_double_coset_rep(rs, lam)
    return WalkType(rs.fin_reduced_word(u) + word.letters, word.omega_part)


def antidominant_walk(rs: RootSystem, lam: Sequence[int]) -> Walk:
    """The unique all-negative, fold-free walk ending at ``t_{w_0 lam}``.

    >>> rs = build_root_system("A2")
    >>> p = antidominant_walk(rs, (1, 1))
    >>> s = stats(p)
    >>> (s.neg_cross, s.dim, s.weight)
    (4, 0, (-1, -1))
    >>> stats(antidominant_walk(rs, (0, 0))).length
    0
    """
    rs.check_dominant(lam)
    w0, _ = rs.longest_element()
    w0lam = rs.parabolic_longest(rs.stabilizer_indices(lam))
    u = w0 * w0lam  # minimal coset representative sending lam to w0(lam)
    walk = Walk(walk_type_for_rep(rs, lam, u), frozenset())
    assert all(kind == "-" for _, kind in walk.steps)
    assert walk.end == translation(rs, w0.act_coweight(tuple(lam)))
    return walk


def enumerate_walks(
    wtype: WalkType, max_letters: int | None = None
) -> list[Walk]:
    """All positively folded walks of one type, in a canonical order.

    Depth-first over the steps; at each step the crossing branch is
    explored before the fold branch (which exists only on the positive
    side of the wall).

    >>> rs = build_root_system("A1")
    >>> [steps_string(p) for p in enumerate_walks(WalkType((1,), identity_elem(rs)))]
    ['-@w=e', 'f@w=e']
    >>> [steps_string(p) for p in enumerate_walks(WalkType((), identity_elem(rs)))]
    ['@w=e']
    """
    wtype.check_length(max_letters)
    rs = wtype.rs
    gens = {letter: affine_generator(rs, letter) for letter in set(wtype.letters)}
    results: list[Walk] = []
    letters = wtype.letters

    def descend(k: int, alcove: AffElem, folds: tuple[int, ...]) -> None:
        if k > len(letters):
            results.append(Walk(wtype, frozenset(folds)))
            return
        letter = letters[k - 1]
        _, sign = classify_step(alcove, letter)
        descend(k + 1, alcove * gens[letter], folds)
        if sign == "-":
            descend(k + 1, alcove, folds + (k,))

    descend(1, identity_elem(rs), ())
    return results


def enumerate_P_lambda(
    rs: RootSystem, lam: Sequence[int], max_letters: int | None = None
) -> dict[Coweight, list[Walk]]:
    """Every walk of every type ``u . m`` for minimal coset reps ``u``,
    grouped by end weight; keys sorted, walks in enumeration order.

    >>> rs = build_root_system("A2")
    >>> grouped = enumerate_P_lambda(rs, (1, 1))
    >>> sum(len(ps) for ps in grouped.values()), len(grouped)
    (25, 7)
    >>> [len(enumerate_P_lambda(rs, (0, 0))[(0, 0)])]
    [1]
    """
    rs.check_dominant(lam)
    grouped: dict[Coweight, list[Walk]] = {}
    for u, _ in rs.coset_min_reps(lam):
        for walk in enumerate_walks(walk_type_for_rep(rs, lam, u), max_letters):
            grouped.setdefault(walk.end.trans, []).append(walk)
    return {mu: grouped[mu] for mu in sorted(grouped)}


def unfold_sequence(p: Walk) -> list[Walk]:
    """Walks ``p_0, ..., p_f`` keeping the first ``i`` folds of ``p``.

    ``p_0`` is fold-free, ``p_f`` is ``p`` itself; each prefix agrees
    with ``p`` up to its ``i``-th fold and crosses every wall after it.

    >>> rs = build_root_system("A1")
    >>> folded = Walk(WalkType((1,), identity_elem(rs)), frozenset({1}))
    >>> [steps_string(q) for q in unfold_sequence(folded)]
    ['-@w=e', 'f@w=e']
    """
    ordered = sorted(p.folds)
    return [Walk(p.wtype, frozenset(ordered[:i])) for i in range(len(ordered) + 1)]


def steps_string(p: Walk) -> str:
    """One character per step plus the length-zero jump label.

    >>> rs = build_root_system("A2")
    >>> steps_string(antidominant_walk(rs, (1, 1)))
    '----@w=e'
    """
    body = "".join(kind for _, kind in p.steps)
    return f"{body}@w={omega_label(p.wtype.omega_part)}"
