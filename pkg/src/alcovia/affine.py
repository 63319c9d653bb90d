"""Extended affine Weyl group arithmetic: alcoves, lengths, walls, words.

An element is stored as a pair ``t_mu * w`` (translation coweight ``mu``,
finite part ``w``) — never as a word — so equality is structural.  The
group law is ``(t_mu u)(t_nu v) = t_{mu + u(nu)} (u v)``.

Alcoves are group elements: the fundamental alcove is the identity, and
the wall between ``x`` and ``x * s_i`` is the hyperplane ``x(alpha_i)``,
where ``alpha_0 = -theta + delta``.  A step ``x -> x * s_i`` is a
*positive* crossing exactly when the gradient of ``x(alpha_i)`` is a
negative root: the walk then moves from the negative to the positive
side of the wall, positivity of a side meaning that it contains a
subsector of the dominant chamber far from the origin.

Lengths come from the separating-hyperplane count.  For ``x = t_mu w``
and a positive root ``alpha``, the number of hyperplanes parallel to
``H_alpha`` separating the fundamental alcove from ``x`` is
``|a_alpha|`` with ``a_alpha = <mu, alpha> - [w^{-1}(alpha) < 0]``; the
length is the sum of ``|a_alpha|`` and the signed length is the sum of
``a_alpha`` (positive-side separations minus negative-side ones).

>>> rs = build_root_system("A2")
>>> length(translation(rs, (1, 1)))
4
>>> signed_length(translation(rs, (1, 1)))
4
>>> s0 = affine_generator(rs, 0)
>>> aff_mul(s0, s0) == identity_elem(rs)
True
>>> classify_step(identity_elem(rs), 0)
(AffRoot(grad=(1, 1), level=-1), '+')
>>> classify_step(identity_elem(rs), 1)
(AffRoot(grad=(1, 0), level=0), '-')
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotDominant
from .rootsys import Coweight, FinWeylElem, RootCoords, RootSystem, build_root_system

__all__ = [
    "AffElem",
    "AffRoot",
    "AffineWord",
    "identity_elem",
    "translation",
    "from_fin",
    "affine_generator",
    "aff_mul",
    "aff_act_on_affroot",
    "length",
    "signed_length",
    "reduced_word",
    "min_double_coset_rep",
    "classify_step",
    "omega_elements",
    "omega_label",
    "elements_up_to_length",
]


@dataclass(frozen=True)
class AffRoot:
    """The affine hyperplane ``H_{alpha + k delta}`` in normal form.

    ``grad`` holds the root coordinates of ``alpha`` with ``alpha``
    positive; ``level`` is ``k``.  ``H_{alpha + k delta}`` and
    ``H_{-alpha - k delta}`` are the same wall, so the positive-gradient
    form is canonical.
    """

    grad: RootCoords
    level: int


class AffElem:
    """An element ``t_mu * w`` of the extended affine Weyl group."""

    __slots__ = ("rs", "trans", "fin", "_length")

    def __init__(self, rs: RootSystem, trans: Coweight, fin: FinWeylElem):
        self.rs = rs
        self.trans = tuple(trans)
        self.fin = fin
        self._length: int | None = None

    def __mul__(self, other: "AffElem") -> "AffElem":
        trans = tuple(
            a + b for a, b in zip(self.trans, self.fin.act_coweight(other.trans))
        )
        return AffElem(self.rs, trans, self.fin * other.fin)

    def inverse(self) -> "AffElem":
        fin_inv = self.fin.inverse()
        trans = tuple(-c for c in fin_inv.act_coweight(self.trans))
        return AffElem(self.rs, trans, fin_inv)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffElem):
            return NotImplemented
        return self.trans == other.trans and self.fin == other.fin

    def __hash__(self) -> int:
        return hash((self.trans, self.fin.images))

    def is_identity(self) -> bool:
        return all(c == 0 for c in self.trans) and self.fin.is_identity()

    def __repr__(self) -> str:
        return f"<AffElem t{self.trans}*{self.rs.fin_reduced_word(self.fin) or 'e'}>"

    def separations(self) -> list[int]:
        """Per-positive-root signed separation counts ``a_alpha``."""
        out = []
        for root in self.rs.positive_roots:
            a = self.rs.pair(self.trans, root)
            pre = self.fin.act_inv_root(root.root_coords)
            if any(c < 0 for c in pre):
                a -= 1
            out.append(a)
        return out

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = sum(abs(a) for a in self.separations())
        return self._length

    @property
    def signed(self) -> int:
        return sum(self.separations())

    def act_affroot(self, grad: RootCoords, level: int) -> tuple[RootCoords, int]:
        """Image of the signed affine root ``alpha + k delta``.

        ``(t_mu w)(alpha + k delta) = w(alpha) + (k - <mu, w(alpha)>) delta``.
        """
        new_grad = self.fin.act_root(grad)
        return new_grad, level - self.rs.pair(self.trans, new_grad)


@dataclass(frozen=True)
class AffineWord:
    """Letters over ``{0..n}`` followed by a length-zero remainder.

    Multiplying ``s_{letters[0]} * ... * s_{letters[-1]} * omega_part``
    reproduces the source element; ``len(letters)`` equals its length.
    """

    letters: tuple[int, ...]
    omega_part: AffElem


def identity_elem(rs: RootSystem) -> AffElem:
    return AffElem(rs, (0,) * rs.rank, rs.identity_fin())


def translation(rs: RootSystem, mu: Sequence[int]) -> AffElem:
    """The pure translation ``t_mu``."""
    return AffElem(rs, tuple(mu), rs.identity_fin())


def from_fin(rs: RootSystem, w: FinWeylElem) -> AffElem:
    return AffElem(rs, (0,) * rs.rank, w)


def affine_generator(rs: RootSystem, i: int) -> AffElem:
    """The generator ``s_i`` for ``i`` in ``{0..n}``; ``s_0 = t_{theta^vee} s_theta``.

    >>> rs = build_root_system("A1")
    >>> length(affine_generator(rs, 0))
    1
    """
    if i == 0:
        theta = rs.theta
        return AffElem(
            rs, rs.coroot_omega_coords(theta), rs.reflection_fin(theta)
        )
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"affine letter {i} out of range 0..{rs.rank}")
    return from_fin(rs, rs.simple_fin(i))


def aff_mul(a: AffElem, b: AffElem) -> AffElem:
    """Group multiplication (also available as ``a * b``)."""
    return a * b


def aff_act_on_affroot(
    a: AffElem, beta: tuple[RootCoords, int]
) -> tuple[RootCoords, int]:
    """Action on a signed affine root given as ``(gradient coords, level)``.

    >>> rs = build_root_system("A2")
    >>> aff_act_on_affroot(identity_elem(rs), ((1, 0), 0))
    ((1, 0), 0)
    """
    grad, level = beta
    return a.act_affroot(tuple(grad), level)


def length(x: AffElem) -> int:
    """Number of hyperplanes separating the fundamental alcove from ``x``.

    >>> rs = build_root_system("A1")
    >>> omega = aff_mul(translation(rs, (1,)), from_fin(rs, rs.simple_fin(1)))
    >>> length(omega)
    0
    """
    return x.length


def signed_length(x: AffElem) -> int:
    """Positive-side separations minus negative-side separations.

    Equals ``<mu, 2 rho> - l(w)`` for ``x = t_mu w``.

    >>> rs = build_root_system("A2")
    >>> signed_length(translation(rs, rs.coroot_omega_coords(rs._root_table[(1, 0)])))
    2
    >>> signed_length(translation(rs, (-2, 1)))
    -2
    """
    return x.signed


def reduced_word(x: AffElem) -> AffineWord:
    """Greedy left-descent word with length-zero remainder.

    Repeatedly strips the smallest ``i`` in ``{0..n}`` with
    ``l(s_i x') < l(x')``; the letters come out in the order in which
    ``x = s_{i_1} ... s_{i_l} * omega_part`` multiplies.

    >>> rs = build_root_system("A2")
    >>> word = reduced_word(translation(rs, (1, 1)))
    >>> word.letters
    (0, 1, 2, 1)
    >>> length(word.omega_part)
    0
    """
    rs = x.rs
    gens = [affine_generator(rs, i) for i in range(rs.rank + 1)]
    letters: list[int] = []
    current = x
    current_len = current.length
    while current_len > 0:
        for i, gen in enumerate(gens):
            candidate = gen * current
            if candidate.length < current_len:
                letters.append(i)
                current = candidate
                current_len = candidate.length
                break
        else:  # pragma: no cover - impossible: positive length forces a descent
            raise AssertionError("no left descent found at positive length")
    return AffineWord(letters=tuple(letters), omega_part=current)


def min_double_coset_rep(rs: RootSystem, lam: Sequence[int]) -> tuple[AffElem, AffineWord]:
    """Minimal-length element of the double coset of ``t_lam``, with word.

    For dominant ``lam`` this is ``m = t_lam * (w_0 w_{0,lam})^{-1}``
    where ``w_{0,lam}`` is the longest element of the stabilizer; its
    length is ``l(t_lam) - l(w_0) + l(w_{0,lam})``.

    >>> rs = build_root_system("A2")
    >>> m, word = min_double_coset_rep(rs, (1, 1))
    >>> length(m), word.letters
    (1, (0,))
    >>> m0, word0 = min_double_coset_rep(rs, (0, 0))
    >>> m0.is_identity(), word0.letters
    (True, ())
    """
    rs.check_dominant(lam)
    w0, _ = rs.longest_element()
    w0lam = rs.parabolic_longest(rs.stabilizer_indices(lam))
    m = translation(rs, lam) * from_fin(rs, (w0 * w0lam).inverse())
    word = reduced_word(m)
    expect = sum(rs.pair(lam, r) for r in rs.positive_roots) - w0.length + w0lam.length
    assert m.length == expect == len(word.letters), "double-coset length identity"
    return m, word


def classify_step(x: AffElem, i: int) -> tuple[AffRoot, str]:
    """Wall and crossing sign of the step ``x -> x * s_i``.

    The wall is ``x(alpha_i)`` in normal form; the sign is ``'+'``
    exactly when the gradient of ``x(alpha_i)`` is a negative root
    (the step then lands on the positive side).

    >>> rs = build_root_system("A2")
    >>> classify_step(from_fin(rs, rs.simple_fin(1)), 1)
    (AffRoot(grad=(1, 0), level=0), '+')
    """
    rs = x.rs
    if i == 0:
        grad: RootCoords = tuple(-c for c in rs.theta.root_coords)
        level = 1
    elif 1 <= i <= rs.rank:
        grad = rs._simple_rcs[i - 1]
        level = 0
    else:
        raise IndexOutOfRange(f"affine letter {i} out of range 0..{rs.rank}")
    image_grad, image_level = x.act_affroot(grad, level)
    if any(c < 0 for c in image_grad):
        return AffRoot(tuple(-c for c in image_grad), -image_level), "+"
    return AffRoot(image_grad, image_level), "-"


def omega_elements(rs: RootSystem) -> list[tuple[str, AffElem]]:
    """The length-zero subgroup, as ``(label, element)`` pairs.

    The identity is labelled ``"e"``; every other element is the
    length-zero part of some ``t_{omega_i}`` and gets the label
    ``"w<i>"`` for the smallest such ``i``.

    >>> [label for label, _ in omega_elements(build_root_system("A2"))]
    ['e', 'w1', 'w2']
    >>> [label for label, _ in omega_elements(build_root_system("G2"))]
    ['e']
    """
    cached = getattr(rs, "_omega_cache", None)
    if cached is not None:
        return cached
    generators: list[tuple[str, AffElem]] = []
    for i in range(1, rs.rank + 1):
        mu = tuple(1 if j == i - 1 else 0 for j in range(rs.rank))
        gamma = reduced_word(translation(rs, mu)).omega_part
        generators.append((f"w{i}", gamma))
    labelled: dict[AffElem, str] = {identity_elem(rs): "e"}
    for label, gamma in generators:
        labelled.setdefault(gamma, label)
    # Close under multiplication; every product is again some generator's
    # class, which the assertion below pins down.
    frontier = list(labelled)
    while frontier:
        nxt = []
        for a in frontier:
            for _, g in generators:
                prod = a * g
                if prod not in labelled:
                    assert prod.length == 0
                    match = [lab for lab, gen in generators if gen == prod]
                    assert match, "length-zero product outside the generator classes"
                    labelled[prod] = match[0]
                    nxt.append(prod)
        frontier = nxt
    result = [(label, elem) for elem, label in labelled.items()]
    result.sort(key=lambda kv: (kv[0] != "e", kv[0]))
    rs._omega_cache = result
    return result


def omega_label(gamma: AffElem) -> str:
    """Label of a length-zero element (``"e"`` or ``"w<i>"``)."""
    for label, elem in omega_elements(gamma.rs):
        if elem == gamma:
            return label
    raise ValueError("element is not in the length-zero subgroup")


def elements_up_to_length(rs: RootSystem, bound: int) -> list[AffElem]:
    """All extended-group elements of length at most ``bound``.

    Breadth-first over the generators ``s_0..s_n`` starting from every
    length-zero element; deterministic order (length, translation, word).

    >>> len(elements_up_to_length(build_root_system("A1"), 1))
    6
    """
    gens = [affine_generator(rs, i) for i in range(rs.rank + 1)]
    seen: set[AffElem] = {elem for _, elem in omega_elements(rs)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for gen in gens:
                y = x * gen
                if y.length <= bound and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(
        seen,
        key=lambda x: (x.length, x.trans, tuple(x.fin.images)),
    )
