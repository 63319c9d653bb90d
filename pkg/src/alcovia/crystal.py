"""Raising root operators on positively folded alcove walks.

For a simple index ``i``, the operator looks at the walls parallel to
the wall of ``alpha_i``.  Among all levels ``k`` at which the walk
makes a negative crossing of ``H_{alpha_i + k delta}``, it takes ``k``
maximal (the *critical* hyperplane) and on it the first negative
crossing (the *critical crossing*).  If no negative crossing on any
level exists the operator is undefined.

What happens after the critical crossing decides the rewrite; all three
cases change only the fold mask, never the letters:

* case (a) — the next event on the ``alpha_i`` family is a fold one
  level up, on ``H_{alpha_i + (k+1) delta}``: that fold becomes a
  crossing and the critical crossing becomes a fold; the end alcove is
  translated by ``alpha_i^vee``.
* case (b) — the next event on the family is a positive crossing back
  through the critical hyperplane itself: both the critical crossing
  and that return crossing become folds; the end alcove is unchanged.
* case (c) — the walk never touches the family again: the critical
  crossing becomes a fold; the end alcove is reflected in the critical
  hyperplane.

Each application raises the dimension statistic by exactly one and
preserves the walk type.  The implementation asserts the predicted
end-alcove law after every application and raises
:class:`~alcovia.errors.InternalOperatorDeath` on any violation, since
a violation means the case analysis itself misfired.

>>> rs = build_root_system("A1")
>>> wt = WalkType((1,), identity_elem(rs))
>>> crossing = Walk(wt, frozenset())
>>> critical(crossing, 1)
CriticalData(hyperplane=AffRoot(grad=(1,), level=0), crossing_index=1, next_event=None)
>>> steps_string(raise_once(crossing, 1))
'f@w=e'
>>> raise_once(Walk(wt, frozenset({1})), 1) is None
True
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine import AffElem, AffRoot, identity_elem
from .errors import InternalOperatorDeath, InvalidWalk
from .rootsys import build_root_system
from .walks import Walk, WalkType, stats, steps_string

__all__ = ["CriticalData", "critical", "raise_once", "raise_power"]

FOLD_ABOVE = "fold-above"
CROSS_SAME = "cross-same"


@dataclass(frozen=True)
class CriticalData:
    """Where and how a raising operator will act.

    ``hyperplane`` is ``H_{alpha_i + k delta}`` with ``k`` maximal among
    negative-crossing levels; ``crossing_index`` is the 1-based step of
    the first negative crossing on it; ``next_event`` is ``(kind,
    step)`` for the decisive later event (``"fold-above"`` for case (a),
    ``"cross-same"`` for case (b)) or ``None`` for case (c).
    """

    hyperplane: AffRoot
    crossing_index: int
    next_event: tuple[str, int] | None

    @property
    def case(self) -> str:
        if self.next_event is None:
            return "c"
        return "a" if self.next_event[0] == FOLD_ABOVE else "b"


def critical(p: Walk, i: int) -> CriticalData | None:
    """Critical data of the raising operator for index ``i``, or None.

    >>> rs = build_root_system("A1")
    >>> folded = Walk(WalkType((1,), identity_elem(rs)), frozenset({1}))
    >>> critical(folded, 1) is None
    True
    """
    rs = p.wtype.rs
    rs.check_index(i)
    grad = rs._simple_rcs[i - 1]
    best_level: int | None = None
    for wall, kind in p.steps:
        if wall.grad == grad and kind == "-":
            if best_level is None or wall.level > best_level:
                best_level = wall.level
    if best_level is None:
        return None
    hyperplane = AffRoot(grad, best_level)
    crossing_index = next(
        k
        for k, (wall, kind) in enumerate(p.steps, start=1)
        if kind == "-" and wall == hyperplane
    )
    next_event: tuple[str, int] | None = None
    for k in range(crossing_index, len(p.steps)):
        wall, kind = p.steps[k]
        if wall.grad != grad:
            continue
        step_index = k + 1
        if kind == "f" and wall.level == best_level + 1:
            next_event = (FOLD_ABOVE, step_index)
        elif kind == "+" and wall.level == best_level:
            next_event = (CROSS_SAME, step_index)
        else:
            raise InternalOperatorDeath(
                f"unexpected event {kind} on {wall} at step {step_index} "
                f"after the critical crossing at step {crossing_index}"
            )
        break
    return CriticalData(hyperplane, crossing_index, next_event)


def raise_once(p: Walk, i: int) -> Walk | None:
    """Apply the raising operator once; None when undefined.

    The result has the same type, one more unit of dimension, and obeys
    the end-alcove law of the detected case.

    >>> rs = build_root_system("A1")
    >>> crossing = Walk(WalkType((1,), identity_elem(rs)), frozenset())
    >>> lifted = raise_once(crossing, 1)
    >>> stats(lifted).dim - stats(crossing).dim
    1
    """
    data = critical(p, i)
    if data is None:
        return None
    folds = set(p.folds)
    folds.add(data.crossing_index)
    if data.next_event is not None:
        kind, index = data.next_event
        if kind == FOLD_ABOVE:
            folds.discard(index)
        else:
            folds.add(index)
    try:
        result = Walk(p.wtype, frozenset(folds))
    except InvalidWalk as exc:  # pragma: no cover - guarded by the case analysis
        raise InternalOperatorDeath(f"rewritten fold mask is not positive: {exc}")
    _check_end_law(p, result, data, i)
    return result


def raise_power(p: Walk, i: int, m: int) -> Walk | None:
    """The ``m``-fold composition of :func:`raise_once` (``m = 0`` is identity).

    >>> rs = build_root_system("A1")
    >>> crossing = Walk(WalkType((1,), identity_elem(rs)), frozenset())
    >>> raise_power(crossing, 1, 0) == crossing
    True
    >>> raise_power(crossing, 1, 2) is None
    True
    """
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    current: Walk | None = p
    for _ in range(m):
        if current is None:
            return None
        current = raise_once(current, i)
    return current


def _check_end_law(p: Walk, result: Walk, data: CriticalData, i: int) -> None:
    rs = p.wtype.rs
    if data.case == "a":
        coroot = rs.coroot_omega_coords(rs._root_table[data.hyperplane.grad])
        expected = AffElem(
            rs,
            tuple(a + b for a, b in zip(coroot, p.end.trans)),
            p.end.fin,
        )
    elif data.case == "b":
        expected = p.end
    else:
        expected = _wall_reflection(rs, data.hyperplane) * p.end
    if result.end != expected:
        raise InternalOperatorDeath(
            f"end-alcove law failed in case ({data.case}) at index {i}: "
            f"walk {steps_string(p)} -> {steps_string(result)}"
        )
    if stats(result).dim != stats(p).dim + 1:
        raise InternalOperatorDeath(
            f"dimension did not increase by one in case ({data.case})"
        )


def _wall_reflection(rs, wall: AffRoot) -> AffElem:
    """The reflection ``s_{alpha + k delta} = t_{-k alpha^vee} s_alpha``."""
    coroot = rs.coroot_omega_coords(rs._root_table[wall.grad])
    return AffElem(
        rs,
        tuple(-wall.level * c for c in coroot),
        rs.reflection_fin(rs._root_table[wall.grad]),
    )
