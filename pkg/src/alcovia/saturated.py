"""Saturated weight sets and the optimal-dimension walk construction.

For a dominant coweight ``lam``, the saturated set ``Pi_lam`` consists
of every coweight whose dominant orbit representative lies below
``lam`` in dominance order (difference a nonnegative integer sum of
simple coroots).  Membership is decided exactly by solving the
triangular-free linear system over rationals; the full set is grown by
walking downward from ``lam`` one simple coroot at a time.

Given ``mu`` in ``Pi_lam`` and a reduced word for the longest element,
:func:`string_parameters` produces the exponent string ``m_1..m_N``
along the word (each ``m_k`` maximal keeping the running coweight in
the set) and :func:`build_path` feeds that string to the raising
operators, starting from the all-negative walk, to produce a walk of
weight ``mu`` and dimension exactly ``<lam + mu, rho>``.

>>> rs = build_root_system("A2")
>>> contains(rs, (1, 1), (0, 0))
True
>>> contains(rs, (1, 1), (3, 0))
False
>>> sorted(saturated_set(rs, (1, 0)))
[(-1, 1), (0, -1), (1, 0)]
>>> string_parameters(rs, (1, 1), (0, 0)).ms
(1, 1, 0)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .crystal import raise_power
from .errors import InternalOperatorDeath, NotInSaturatedSet, NotReducedWord
from .rootsys import Coweight, RootSystem, build_root_system
from .walks import Walk, antidominant_walk, stats

__all__ = [
    "StringData",
    "contains",
    "saturated_set",
    "string_parameters",
    "build_path",
]


@dataclass(frozen=True)
class StringData:
    """Exponent string of one weight along one longest-element word.

    ``mus`` lists the running coweights ``mu_0 = mu, ..., mu_N``
    (``mu_N`` is the lowest weight); ``ms[k]`` is the exponent consumed
    by letter ``word[k]``.
    """

    word: tuple[int, ...]
    mus: tuple[Coweight, ...]
    ms: tuple[int, ...]


def _coroot_coefficients(rs: RootSystem, diff: Sequence[int]) -> list[Fraction]:
    """Solve ``sum_i c_i alpha_i^vee = diff`` (omega coordinates), exactly."""
    n = rs.rank
    # Row i of the Cartan matrix is alpha_i^vee in omega coordinates, so
    # the system is  A^T c = diff.
    m = [[Fraction(rs.cartan[i][j]) for i in range(n)] + [Fraction(diff[j])] for j in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def dominance_leq(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Whether ``lam - mu`` is a nonnegative integer sum of simple coroots."""
    diff = tuple(a - b for a, b in zip(lam, mu))
    coeffs = _coroot_coefficients(rs, diff)
    return all(c.denominator == 1 and c >= 0 for c in coeffs)


def contains(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Membership of ``mu`` in the saturated set of ``lam``.

    >>> rs = build_root_system("A1")
    >>> [contains(rs, (2,), (m,)) for m in (-2, -1, 0, 1, 2, 3)]
    [True, False, True, False, True, False]
    """
    rs.check_dominant(lam)
    mu_plus, _ = rs.dominant_rep(mu)
    return dominance_leq(rs, mu_plus, lam)


def saturated_set(rs: RootSystem, lam: Sequence[int]) -> set[Coweight]:
    """The full saturated set, grown downward from ``lam``.

    Every member is reachable from ``lam`` by steps ``mu -> mu -
    alpha_i^vee`` that stay inside the set, so a pruned breadth-first
    descent collects exactly the set.

    >>> rs = build_root_system("A2")
    >>> len(saturated_set(rs, (1, 1)))
    7
    """
    rs.check_dominant(lam)
    coroots = [tuple(rs.cartan[i]) for i in range(rs.rank)]
    start = tuple(lam)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mu in frontier:
            for coroot in coroots:
                nu = tuple(a - b for a, b in zip(mu, coroot))
                if nu not in seen and contains(rs, lam, nu):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return seen


def _check_longest_word(rs: RootSystem, word: Sequence[int]) -> tuple[int, ...]:
    w0, canonical = rs.longest_element()
    if word is None:
        return canonical
    word = tuple(word)
    if len(word) != w0.length or rs.word_to_fin(word) != w0:
        raise NotReducedWord(
            f"{word} is not a reduced word for the longest element"
        )
    return word


def string_parameters(
    rs: RootSystem,
    lam: Sequence[int],
    mu: Sequence[int],
    word: Sequence[int] | None = None,
) -> StringData:
    """Greedy exponent string of ``mu`` along a longest-element word.

    Each ``m_k`` is the largest exponent whose coroot multiple keeps the
    running coweight inside the saturated set; the run always ends at
    the lowest weight.

    >>> rs = build_root_system("A2")
    >>> string_parameters(rs, (1, 1), (0, 0), word=(2, 1, 2)).ms
    (1, 1, 0)
    >>> string_parameters(rs, (1, 1), (1, 1)).mus[-1]
    (-1, -1)
    """
    rs.check_dominant(lam)
    word = _check_longest_word(rs, word)
    members = saturated_set(rs, lam)
    mu = tuple(mu)
    if mu not in members:
        raise NotInSaturatedSet(f"{mu} is not a weight of shape {tuple(lam)}")
    mus = [mu]
    ms = []
    current = mu
    for letter in word:
        coroot = tuple(rs.cartan[letter - 1])
        m = 0
        while tuple(a - b for a, b in zip(current, coroot)) in members:
            current = tuple(a - b for a, b in zip(current, coroot))
            m += 1
        ms.append(m)
        mus.append(current)
    w0, _ = rs.longest_element()
    lowest = w0.act_coweight(tuple(lam))
    assert current == lowest, "string run must terminate at the lowest weight"
    return StringData(word=word, mus=tuple(mus), ms=tuple(ms))


def build_path(
    rs: RootSystem,
    lam: Sequence[int],
    mu: Sequence[int],
    word: Sequence[int] | None = None,
) -> tuple[Walk, StringData]:
    """A walk of weight ``mu`` with the maximal dimension ``<lam+mu, rho>``.

    Starting from the all-negative walk (the unique walk of the lowest
    weight), the exponent string is replayed through the raising
    operators in reverse word order.

    >>> rs = build_root_system("A2")
    >>> walk, data = build_path(rs, (1, 1), (0, 0))
    >>> stats(walk).weight, stats(walk).dim
    ((0, 0), 2)
    """
    data = string_parameters(rs, lam, mu, word)
    walk = antidominant_walk(rs, lam)
    for letter, m in zip(reversed(data.word), reversed(data.ms)):
        lifted = raise_power(walk, letter, m)
        if lifted is None:
            raise InternalOperatorDeath(
                f"raising operator {letter}^{m} died during construction "
                f"for shape {tuple(lam)}, weight {tuple(mu)}"
            )
        walk = lifted
    final = stats(walk)
    assert final.weight == tuple(mu), "constructed walk has the wrong weight"
    target = rs.pair(tuple(a + b for a, b in zip(lam, mu)), rs.two_rho)
    assert target % 2 == 0 and final.dim == target // 2
    return walk, data
