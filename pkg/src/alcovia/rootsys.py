"""Reduced irreducible root systems in exact Cartan-integer arithmetic.

Everything is computed from the Cartan matrix ``A[i][j] = <alpha_i^vee,
alpha_j>`` with Bourbaki numbering — no ambient Euclidean space, no
floating point.  The three coordinate systems in play:

* roots: integer vectors of *root coordinates* (expansion in the simple
  roots ``alpha_j``); a root is positive iff all coordinates are >= 0;
* coroots: integer vectors of *coroot coordinates* (expansion in the
  simple coroots ``alpha_j^vee``), tracked in parallel during the
  reflection closure;
* coweights: integer vectors of *omega coordinates* (expansion in the
  fundamental coweights), so the defining pairing is
  ``pair(mu, alpha) = sum_j root_coords(alpha)_j * mu_j``.

The simple reflection ``s_i`` acts on omega coordinates by subtracting
``<mu, alpha_i>`` times row ``i`` of the Cartan matrix (the omega
coordinates of ``alpha_i^vee``), on root coordinates using row ``i``,
and on coroot coordinates using column ``i``.

>>> rs = build_root_system("A2")
>>> len(rs.positive_roots), rs.weyl_order
(3, 6)
>>> rs.theta.root_coords
(1, 1)
>>> rs.pair((1, 1), rs.theta)
2
>>> rs.simple_reflect(1, (1, 0))
(-1, 1)
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    GroupTooLarge,
    IndexOutOfRange,
    NotDominant,
    RankOutOfRange,
    UnknownType,
)

__all__ = [
    "Coweight",
    "RootCoords",
    "Root",
    "FinWeylElem",
    "RootSystem",
    "build_root_system",
    "DEFAULT_MAX_WEYL_ORDER",
    "MAX_WEYL_ORDER_ENV",
]

Coweight = tuple[int, ...]
RootCoords = tuple[int, ...]

#: Largest finite Weyl group order that full-group enumeration accepts by
#: default (the order of the E6 group); override with the environment
#: variable below or a per-call argument.
DEFAULT_MAX_WEYL_ORDER = 51840
MAX_WEYL_ORDER_ENV = "ALCOVIA_MAX_WEYL_ORDER"

_WEYL_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@dataclass(frozen=True)
class Root:
    """A root stored with both expansions.

    ``root_coords`` expands the root in simple roots; ``coroot_coords``
    expands the associated coroot in simple coroots.  Only one of each
    ``{alpha, -alpha}`` pair is stored in a root system's table (the
    positive one); negatives appear transiently as negated tuples.
    """

    root_coords: RootCoords
    coroot_coords: RootCoords
    positive: bool = True


class FinWeylElem:
    """An element of the finite Weyl group, stored by its action.

    ``images[j]`` is ``w(alpha_{j+1})`` and ``inv_images[j]`` is
    ``w^{-1}(alpha_{j+1})``, both as signed root-coordinate tuples.
    Equality and hashing use the images only, so two differently
    constructed copies of the same group element compare equal.

    >>> rs = build_root_system("A2")
    >>> s1, s2 = rs.simple_fin(1), rs.simple_fin(2)
    >>> (s1 * s2 * s1) == (s2 * s1 * s2)
    True
    >>> (s1 * s2).length
    2
    >>> (s1 * s2).inverse() == s2 * s1
    True
    >>> s1.act_coweight((1, 0))
    (-1, 1)
    """

    __slots__ = ("rs", "images", "inv_images", "_length")

    def __init__(
        self,
        rs: "RootSystem",
        images: tuple[RootCoords, ...],
        inv_images: tuple[RootCoords, ...],
    ):
        self.rs = rs
        self.images = images
        self.inv_images = inv_images
        self._length: int | None = None

    # ---- group structure ---------------------------------------------

    def __mul__(self, other: "FinWeylElem") -> "FinWeylElem":
        images = tuple(self.act_root(rc) for rc in other.images)
        inv_images = tuple(other.act_inv_root(rc) for rc in self.inv_images)
        return FinWeylElem(self.rs, images, inv_images)

    def inverse(self) -> "FinWeylElem":
        out = FinWeylElem(self.rs, self.inv_images, self.images)
        out._length = self._length
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinWeylElem):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        word = self.rs.fin_reduced_word(self)
        name = "*".join(f"s{i}" for i in word) if word else "e"
        return f"<FinWeylElem {name}>"

    # ---- actions ------------------------------------------------------

    def act_root(self, rc: RootCoords) -> RootCoords:
        """Apply ``w`` to a (signed) root in root coordinates."""
        n = self.rs.rank
        out = [0] * n
        for j, c in enumerate(rc):
            if c:
                img = self.images[j]
                for k in range(n):
                    out[k] += c * img[k]
        return tuple(out)

    def act_inv_root(self, rc: RootCoords) -> RootCoords:
        n = self.rs.rank
        out = [0] * n
        for j, c in enumerate(rc):
            if c:
                img = self.inv_images[j]
                for k in range(n):
                    out[k] += c * img[k]
        return tuple(out)

    def act_coweight(self, mu: Coweight) -> Coweight:
        """Apply ``w`` to a coweight: ``<w mu, alpha_j> = <mu, w^{-1} alpha_j>``."""
        return tuple(
            sum(c * m for c, m in zip(self.inv_images[j], mu))
            for j in range(self.rs.rank)
        )

    # ---- statistics ---------------------------------------------------

    @property
    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        if self._length is None:
            self._length = sum(
                1
                for root in self.rs.positive_roots
                if _is_negative(self.act_root(root.root_coords))
            )
        return self._length

    def is_identity(self) -> bool:
        return self.images == self.rs._simple_rcs


def _is_negative(rc: RootCoords) -> bool:
    """A root's coordinates are all >= 0 or all <= 0; negative means <= 0."""
    return any(c < 0 for c in rc)


@dataclass
class RootSystem:
    """All tabulated data of one reduced irreducible root system."""

    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]  # d_i with d_i * A[i][j] symmetric; short roots d = 1
    positive_roots: list[Root] = field(default_factory=list)
    two_rho: RootCoords = ()
    theta: Root | None = None
    weyl_order: int = 0
    _root_table: dict[RootCoords, Root] = field(default_factory=dict, repr=False)
    _simple_rcs: tuple[RootCoords, ...] = field(default=(), repr=False)

    # ---- basic pairings ----------------------------------------------

    def pair(self, mu: Sequence[int], alpha: "Root | RootCoords") -> int:
        """The defining pairing ``<mu, alpha>`` of a coweight with a root.

        >>> rs = build_root_system("A2")
        >>> alpha2 = rs._root_table[(0, 1)]
        >>> rs.pair((1, 0), alpha2)
        0
        >>> rs.pair((1, 1), rs.two_rho)
        4
        """
        rc = alpha.root_coords if isinstance(alpha, Root) else alpha
        return sum(c * m for c, m in zip(rc, mu))

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(
                f"simple index {i} out of range 1..{self.rank} for {self.type_label}"
            )

    def simple_reflect(self, i: int, mu: Sequence[int]) -> Coweight:
        """Reflect a coweight in the wall of ``alpha_i``.

        >>> build_root_system("A1").simple_reflect(1, (1,))
        (-1,)
        """
        self.check_index(i)
        k = self.pair(mu, self._simple_rcs[i - 1])
        row = self.cartan[i - 1]
        return tuple(m - k * a for m, a in zip(mu, row))

    def coroot_omega_coords(self, alpha: "Root | RootCoords") -> Coweight:
        """Omega coordinates of ``alpha^vee`` (row combination of the Cartan matrix)."""
        cc = (
            alpha.coroot_coords
            if isinstance(alpha, Root)
            else self.coroot_coords_of(alpha)
        )
        return tuple(
            sum(cc[k] * self.cartan[k][j] for k in range(self.rank))
            for j in range(self.rank)
        )

    def coroot_coords_of(self, rc: RootCoords) -> RootCoords:
        """Coroot coordinates, accepting signed root coordinates."""
        if _is_negative(rc):
            pos = self._root_table[tuple(-c for c in rc)]
            return tuple(-c for c in pos.coroot_coords)
        return self._root_table[rc].coroot_coords

    def is_root(self, rc: RootCoords) -> bool:
        probe = tuple(-c for c in rc) if _is_negative(rc) else tuple(rc)
        return probe in self._root_table

    # ---- Weyl elements ------------------------------------------------

    def identity_fin(self) -> FinWeylElem:
        elem = FinWeylElem(self, self._simple_rcs, self._simple_rcs)
        elem._length = 0
        return elem

    def simple_fin(self, i: int) -> FinWeylElem:
        """The simple reflection ``s_i`` as a group element."""
        self.check_index(i)
        images = []
        for j in range(self.rank):
            rc = list(self._simple_rcs[j])
            rc[i - 1] -= self.cartan[i - 1][j]
            images.append(tuple(rc))
        images_t = tuple(images)
        elem = FinWeylElem(self, images_t, images_t)
        elem._length = 1
        return elem

    def reflection_fin(self, alpha: "Root | RootCoords") -> FinWeylElem:
        """The reflection ``s_alpha`` in the wall of an arbitrary root.

        >>> rs = build_root_system("A2")
        >>> rs.reflection_fin(rs.theta) == rs.simple_fin(1) * rs.simple_fin(2) * rs.simple_fin(1)
        True
        """
        rc = alpha.root_coords if isinstance(alpha, Root) else tuple(alpha)
        if _is_negative(rc):
            rc = tuple(-c for c in rc)
        cc = self.coroot_coords_of(rc)
        images = []
        for j in range(self.rank):
            # s_alpha(alpha_j) = alpha_j - <alpha_j, alpha^vee> alpha
            k = sum(cc[m] * self.cartan[m][j] for m in range(self.rank))
            images.append(
                tuple(e - k * a for e, a in zip(self._simple_rcs[j], rc))
            )
        images_t = tuple(images)
        return FinWeylElem(self, images_t, images_t)

    def fin_reduced_word(self, w: FinWeylElem) -> tuple[int, ...]:
        """The lexicographically smallest reduced word of ``w``.

        Greedy: repeatedly strip the smallest left descent, i.e. the
        smallest ``i`` with ``w^{-1}(alpha_i)`` negative.

        >>> rs = build_root_system("A2")
        >>> w0, _ = rs.longest_element()
        >>> rs.fin_reduced_word(w0)
        (1, 2, 1)
        """
        word: list[int] = []
        current = w
        while True:
            for i in range(1, self.rank + 1):
                if _is_negative(current.inv_images[i - 1]):
                    word.append(i)
                    current = self.simple_fin(i) * current
                    break
            else:
                break
        return tuple(word)

    def word_to_fin(self, word: Iterable[int]) -> FinWeylElem:
        out = self.identity_fin()
        for i in word:
            out = out * self.simple_fin(i)
        return out

    # ---- orbits and representatives ----------------------------------

    def is_dominant(self, mu: Sequence[int]) -> bool:
        return all(c >= 0 for c in mu)

    def check_dominant(self, mu: Sequence[int]) -> None:
        if not self.is_dominant(mu):
            raise NotDominant(f"{tuple(mu)} has a negative coordinate")

    def dominant_rep(self, mu: Sequence[int]) -> tuple[Coweight, FinWeylElem]:
        """Return ``(mu_plus, w)`` with ``w(mu) = mu_plus`` dominant, ``w`` minimal.

        Ascent is greedy: reflect at the smallest index whose coordinate
        is strictly negative; zero coordinates are never touched, which
        keeps ``w`` out of the stabilizer and hence of minimal length.

        >>> rs = build_root_system("A2")
        >>> mu_plus, w = rs.dominant_rep((-1, 1))
        >>> mu_plus, w.length
        ((1, 0), 1)
        >>> rs.dominant_rep((0, -3))[0]
        (3, 0)
        """
        current = tuple(mu)
        w = self.identity_fin()
        while True:
            for i, c in enumerate(current, start=1):
                if c < 0:
                    current = self.simple_reflect(i, current)
                    w = self.simple_fin(i) * w
                    break
            else:
                return current, w

    def weyl_orbit(self, lam: Sequence[int]) -> set[Coweight]:
        """The full orbit of a dominant coweight.

        >>> sorted(build_root_system("A2").weyl_orbit((1, 0)))
        [(-1, 1), (0, -1), (1, 0)]
        """
        self.check_dominant(lam)
        start = tuple(lam)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for mu in frontier:
                for i in range(1, self.rank + 1):
                    nu = self.simple_reflect(i, mu)
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
            frontier = nxt
        return seen

    def coset_min_reps(
        self, lam: Sequence[int]
    ) -> list[tuple[FinWeylElem, tuple[int, ...]]]:
        """Minimal-length representatives of cosets modulo the stabilizer.

        One entry per orbit point: the unique shortest ``u`` with
        ``u(lam)`` equal to that point, with its lexicographically
        smallest reduced word; ordered by (length, word).

        >>> rs = build_root_system("A2")
        >>> [word for _, word in rs.coset_min_reps((1, 0))]
        [(), (1,), (2, 1)]
        >>> len(rs.coset_min_reps((1, 1)))
        6
        """
        self.check_dominant(lam)
        reps = []
        for point in self.weyl_orbit(lam):
            _, w = self.dominant_rep(point)
            u = w.inverse()
            reps.append((u, self.fin_reduced_word(u)))
        reps.sort(key=lambda item: (len(item[1]), item[1]))
        return reps

    def longest_element(self) -> tuple[FinWeylElem, tuple[int, ...]]:
        """The longest element ``w_0`` and its canonical reduced word.

        >>> rs = build_root_system("A2")
        >>> w0, word = rs.longest_element()
        >>> w0.length, word
        (3, (1, 2, 1))
        """
        _, w0 = self.dominant_rep((-1,) * self.rank)
        return w0, self.fin_reduced_word(w0)

    def stabilizer_indices(self, lam: Sequence[int]) -> tuple[int, ...]:
        """Simple indices generating the stabilizer of a dominant coweight."""
        self.check_dominant(lam)
        return tuple(i for i, c in enumerate(lam, start=1) if c == 0)

    def parabolic_longest(self, indices: Sequence[int]) -> FinWeylElem:
        """Longest element of the standard parabolic subgroup on ``indices``.

        Greedy ascent: extend on the right by the smallest index that
        still increases length, until none does.

        >>> rs = build_root_system("A2")
        >>> rs.parabolic_longest((1, 2)).length
        3
        >>> rs.parabolic_longest(()).length
        0
        """
        w = self.identity_fin()
        while True:
            for i in indices:
                candidate = w * self.simple_fin(i)
                if candidate.length > w.length:
                    w = candidate
                    break
            else:
                return w

    def parabolic_elements(self, indices: Sequence[int]) -> list[FinWeylElem]:
        """All elements of the standard parabolic subgroup on ``indices``."""
        seen = {self.identity_fin()}
        frontier = list(seen)
        while frontier:
            nxt = []
            for w in frontier:
                for i in indices:
                    u = w * self.simple_fin(i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return sorted(seen, key=lambda w: (w.length, self.fin_reduced_word(w)))

    # ---- full group enumeration (guarded) ----------------------------

    def max_weyl_order(self, override: int | None = None) -> int:
        if override is not None:
            return override
        env = os.environ.get(MAX_WEYL_ORDER_ENV)
        if env is not None:
            return int(env)
        return DEFAULT_MAX_WEYL_ORDER

    def require_enumerable(self, override: int | None = None) -> None:
        bound = self.max_weyl_order(override)
        if self.weyl_order > bound:
            raise GroupTooLarge(
                f"|W| = {self.weyl_order} for {self.type_label} exceeds the "
                f"bound {bound}; raise {MAX_WEYL_ORDER_ENV} to override"
            )

    def weyl_elements(self, max_order: int | None = None) -> list[FinWeylElem]:
        """Every element of the finite Weyl group, ordered by (length, word).

        >>> len(build_root_system("A2").weyl_elements())
        6
        """
        self.require_enumerable(max_order)
        elements = self.parabolic_elements(tuple(range(1, self.rank + 1)))
        assert len(elements) == self.weyl_order
        return elements


def build_root_system(type_label: str) -> RootSystem:
    """Construct the root system named by a label like ``"C2"`` or ``"E6"``.

    >>> build_root_system("G2").theta.root_coords
    (3, 2)
    >>> build_root_system("H3")
    Traceback (most recent call last):
        ...
    alcovia.errors.UnknownType: unsupported type label 'H3'
    >>> build_root_system("D3")
    Traceback (most recent call last):
        ...
    alcovia.errors.RankOutOfRange: rank 3 not supported for family D
    """
    match = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", type_label or "")
    family = match.group(1).upper() if match else ""
    if not match or family not in _RANK_RANGE:
        raise UnknownType(f"unsupported type label {type_label!r}")
    n = int(match.group(2))
    low, high = _RANK_RANGE[family]
    if n < low or (high is not None and n > high):
        raise RankOutOfRange(f"rank {n} not supported for family {family}")

    cartan = _cartan_matrix(family, n)
    sym = _symmetrizer(family, n)
    rs = RootSystem(
        type_label=f"{family}{n}",
        rank=n,
        cartan=cartan,
        symmetrizer=sym,
        weyl_order=_WEYL_ORDERS[family](n),
    )
    rs._simple_rcs = tuple(
        tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
    )
    _close_roots(rs)
    return rs


def _cartan_matrix(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, down: int = -1, up: int = -1) -> None:
        A[i - 1][j - 1] = down
        A[j - 1][i - 1] = up

    if family in ("A", "B", "C"):
        for i in range(1, n):
            bond(i, i + 1)
        if family == "B" and n >= 2:
            A[n - 1][n - 2] = -2  # <alpha_n^vee, alpha_{n-1}> (alpha_n short)
        if family == "C" and n >= 2:
            A[n - 2][n - 1] = -2  # <alpha_{n-1}^vee, alpha_n> (alpha_n long)
    elif family == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif family == "E":
        for edge in ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)):
            bond(*edge)
        if n >= 7:
            bond(6, 7)
        if n == 8:
            bond(7, 8)
    elif family == "F":
        bond(1, 2)
        bond(2, 3, down=-1, up=-2)  # <alpha_3^vee, alpha_2> = -2 (alpha_3 short)
        bond(3, 4)
    elif family == "G":
        bond(1, 2, down=-3, up=-1)  # alpha_1 short, <alpha_1^vee, alpha_2> = -3
    return tuple(tuple(row) for row in A)


def _symmetrizer(family: str, n: int) -> tuple[int, ...]:
    """Relative squared lengths d_i (short = 1) making diag(d) @ A symmetric."""
    if family == "B":
        return tuple([2] * (n - 1) + [1])
    if family == "C":
        return tuple([1] * (n - 1) + [2])
    if family == "F":
        return (2, 2, 1, 1)
    if family == "G":
        return (1, 3)
    return tuple([1] * n)


def _close_roots(rs: RootSystem) -> None:
    n = rs.rank
    simple = [
        Root(root_coords=rs._simple_rcs[i], coroot_coords=rs._simple_rcs[i])
        for i in range(n)
    ]
    table = {r.root_coords: r for r in simple}
    frontier = list(simple)
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(1, n + 1):
                rc = _reflect_rc(rs, i, root.root_coords)
                if _is_negative(rc) or rc in table:
                    continue
                cc = _reflect_cc(rs, i, root.coroot_coords)
                new = Root(root_coords=rc, coroot_coords=cc)
                table[rc] = new
                nxt.append(new)
        frontier = nxt
    rs.positive_roots = sorted(
        table.values(), key=lambda r: (sum(r.root_coords), r.root_coords)
    )
    rs._root_table = {r.root_coords: r for r in rs.positive_roots}
    rs.two_rho = tuple(
        sum(r.root_coords[j] for r in rs.positive_roots) for j in range(n)
    )
    # The highest root dominates every positive root coordinatewise.
    theta = max(rs.positive_roots, key=lambda r: sum(r.root_coords))
    assert all(
        all(t >= c for t, c in zip(theta.root_coords, r.root_coords))
        for r in rs.positive_roots
    ), "highest root must dominate coordinatewise"
    rs.theta = theta
    # Sanity: <alpha_i^vee, 2 rho> = 2 for every i.
    assert all(
        sum(rs.two_rho[j] * rs.cartan[i][j] for j in range(n)) == 2
        for i in range(n)
    ), "two_rho must pair to 2 with every simple coroot"


def _reflect_rc(rs: RootSystem, i: int, rc: RootCoords) -> RootCoords:
    k = sum(rs.cartan[i - 1][j] * rc[j] for j in range(rs.rank))
    out = list(rc)
    out[i - 1] -= k
    return tuple(out)


def _reflect_cc(rs: RootSystem, i: int, cc: RootCoords) -> RootCoords:
    k = sum(rs.cartan[j][i - 1] * cc[j] for j in range(rs.rank))
    out = list(cc)
    out[i - 1] -= k
    return tuple(out)
