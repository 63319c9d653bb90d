"""The affine Hecke algebra in its standard basis, plus walk identities.

Elements are finite sums ``sum_x c_x T_x`` over extended affine Weyl
group elements with Laurent coefficients.  Multiplication follows the
braid/quadratic presentation:

* ``T_x T_y = T_{xy}`` whenever lengths add,
* ``T_s^2 = 1 + (v - v^{-1}) T_s`` for each generator ``s``,
* length-zero elements multiply through untouched.

The module also provides the alcove-walk basis ``x_w`` (products of
``T_s^{+-1}`` read off a word by crossing direction), the expansion of
``T_w`` as a fold-weighted sum of ``x`` elements over positively folded
walks, and the spherical idempotent laws.

>>> rs = build_root_system("A1")
>>> s1 = from_fin(rs, rs.simple_fin(1))
>>> t = HeckeElem.t_basis(rs, s1)
>>> print(t * t)
T[t_(0) * e]: 1
T[t_(0) * s1]: v - v^-1
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .affine import (
    AffElem,
    affine_generator,
    classify_step,
    from_fin,
    identity_elem,
    min_double_coset_rep,
    reduced_word,
    translation,
)
from .laurent import LaurentV
from .rootsys import RootSystem, build_root_system
from .walks import WalkType, enumerate_walks

__all__ = [
    "HeckeElem",
    "x_elem",
    "x_from_letters",
    "verify_walk_expansion",
    "one_zero",
    "check_idempotent_laws",
]


def _v_minus_vinv() -> LaurentV:
    return LaurentV.gen(1) - LaurentV.gen(-1)


def _elem_key(x: AffElem):
    return (x.length, x.trans, x.fin.images)


class HeckeElem:
    """A finite Laurent-coefficient combination of basis elements ``T_x``."""

    __slots__ = ("rs", "_terms")

    def __init__(self, rs: RootSystem, terms: dict[AffElem, LaurentV]):
        self.rs = rs
        self._terms = {x: c for x, c in terms.items() if c != LaurentV.zero()}

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(rs: RootSystem) -> "HeckeElem":
        return HeckeElem(rs, {})

    @staticmethod
    def one(rs: RootSystem) -> "HeckeElem":
        return HeckeElem(rs, {identity_elem(rs): LaurentV.one()})

    @staticmethod
    def t_basis(rs: RootSystem, x: AffElem) -> "HeckeElem":
        return HeckeElem(rs, {x: LaurentV.one()})

    # -- ring structure ----------------------------------------------

    def __add__(self, other: "HeckeElem") -> "HeckeElem":
        assert self.rs is other.rs
        out = dict(self._terms)
        for x, c in other._terms.items():
            out[x] = out.get(x, LaurentV.zero()) + c
        return HeckeElem(self.rs, out)

    def __sub__(self, other: "HeckeElem") -> "HeckeElem":
        return self + other.scale(LaurentV.from_int(-1))

    def scale(self, c: LaurentV | int) -> "HeckeElem":
        if isinstance(c, int):
            c = LaurentV.from_int(c)
        return HeckeElem(self.rs, {x: cc * c for x, cc in self._terms.items()})

    def _right_gen(self, j: int) -> "HeckeElem":
        """Right multiplication by the generator basis element ``T_{s_j}``."""
        gen = affine_generator(self.rs, j)
        vm = _v_minus_vinv()
        out: dict[AffElem, LaurentV] = {}

        def put(x: AffElem, c: LaurentV) -> None:
            out[x] = out.get(x, LaurentV.zero()) + c

        for u, c in self._terms.items():
            longer = u * gen
            put(longer, c)
            if longer.length < u.length:
                put(u, c * vm)
        return HeckeElem(self.rs, out)

    def _right_len_zero(self, gamma: AffElem) -> "HeckeElem":
        assert gamma.length == 0
        return HeckeElem(self.rs, {u * gamma: c for u, c in self._terms.items()})

    def __mul__(self, other: "HeckeElem") -> "HeckeElem":
        assert self.rs is other.rs
        out = HeckeElem.zero(self.rs)
        for y, c in other._terms.items():
            word = reduced_word(y)
            acc = self
            for j in word.letters:
                acc = acc._right_gen(j)
            if not word.omega_part.is_identity():
                acc = acc._right_len_zero(word.omega_part)
            out = out + acc.scale(c)
        return out

    # -- inspection --------------------------------------------------

    def coeff(self, x: AffElem) -> LaurentV:
        return self._terms.get(x, LaurentV.zero())

    def support(self) -> list[AffElem]:
        return sorted(self._terms, key=_elem_key)

    def terms(self) -> list[tuple[AffElem, LaurentV]]:
        return [(x, self._terms[x]) for x in self.support()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.rs is other.rs and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return "\n".join(f"T[{x!r}]: {c}" for x, c in self.terms())

    def __repr__(self) -> str:
        return f"HeckeElem({len(self._terms)} terms)"


def x_from_letters(
    rs: RootSystem,
    letters: Sequence[int],
    omega_part: AffElem | None = None,
) -> tuple[HeckeElem, AffElem]:
    """Signed generator product read off a word, with its endpoint.

    Each letter contributes ``T_{s_j}`` when the step from the current
    alcove crosses its wall positively and ``T_{s_j}^{-1}`` otherwise;
    a trailing length-zero element multiplies through.  The product
    depends only on the endpoint, not on the word (reduced or not).

    >>> rs = build_root_system("A1")
    >>> h1, end1 = x_from_letters(rs, (1, 0, 1, 1))
    >>> h2, end2 = x_from_letters(rs, (1, 0))
    >>> end1 == end2 and h1 == h2
    True
    """
    vm = _v_minus_vinv()
    h = HeckeElem.one(rs)
    cur = identity_elem(rs)
    for j in letters:
        _, sign = classify_step(cur, j)
        crossed = h._right_gen(j)
        h = crossed if sign == "+" else crossed - h.scale(vm)
        cur = cur * affine_generator(rs, j)
    if omega_part is not None and not omega_part.is_identity():
        h = h._right_len_zero(omega_part)
        cur = cur * omega_part
    return h, cur


def x_elem(rs: RootSystem, w: AffElem) -> HeckeElem:
    """The alcove-walk basis element attached to ``w``.

    For a translation by a dominant coweight every crossing is
    positive, so ``x`` and ``T`` agree there:

    >>> rs = build_root_system("A2")
    >>> x_elem(rs, translation(rs, (1, 1))) == HeckeElem.t_basis(rs, translation(rs, (1, 1)))
    True
    """
    word = reduced_word(w)
    h, end = x_from_letters(rs, word.letters, word.omega_part)
    assert end == w
    return h


def verify_walk_expansion(
    rs: RootSystem, w: AffElem, max_letters: int | None = None
) -> bool:
    """Check ``T_w`` against its fold-weighted walk expansion.

    The right side sums ``(v - v^{-1})^{folds} x_{end}`` over all
    positively folded walks whose type is the canonical word of ``w``.

    >>> rs = build_root_system("A1")
    >>> verify_walk_expansion(rs, from_fin(rs, rs.simple_fin(1)))
    True
    """
    word = reduced_word(w)
    wtype = WalkType(word.letters, word.omega_part)
    vm = _v_minus_vinv()
    rhs = HeckeElem.zero(rs)
    for p in enumerate_walks(wtype, max_letters):
        rhs = rhs + x_elem(rs, p.end).scale(vm ** len(p.folds))
    return rhs == HeckeElem.t_basis(rs, w)


def one_zero(rs: RootSystem, max_weyl_order: int | None = None) -> HeckeElem:
    """The unnormalized spherical element ``sum_w v^{l(w)} T_w``.

    >>> rs = build_root_system("A1")
    >>> print(one_zero(rs))
    T[t_(0) * e]: 1
    T[t_(0) * s1]: v
    """
    terms = {
        from_fin(rs, w): LaurentV.gen(w.length)
        for w in rs.weyl_elements(max_weyl_order)
    }
    return HeckeElem(rs, terms)


def check_idempotent_laws(
    rs: RootSystem,
    lam: Sequence[int] | None = None,
    max_weyl_order: int | None = None,
) -> dict[str, bool]:
    """Verify the absorption laws of the spherical element.

    Checks, for every finite Weyl group element ``w``: left and right
    absorption ``T_w e0 = e0 T_w = v^{l(w)} e0``; the square law
    ``e0 e0 = (sum_w v^{2 l(w)}) e0``; and, when ``lam`` is given, the
    translation law relating ``x`` of the dominant translation to the
    minimal double-coset representative.

    >>> rs = build_root_system("A2")
    >>> report = check_idempotent_laws(rs, (1, 1))
    >>> all(report.values())
    True
    """
    e0 = one_zero(rs, max_weyl_order)
    report: dict[str, bool] = {}
    left = right = True
    for w in rs.weyl_elements(max_weyl_order):
        tw = HeckeElem.t_basis(rs, from_fin(rs, w))
        expected = e0.scale(LaurentV.gen(w.length))
        left = left and (tw * e0 == expected)
        right = right and (e0 * tw == expected)
    report["left-absorption"] = left
    report["right-absorption"] = right
    square = sum(
        (LaurentV.gen(2 * w.length) for w in rs.weyl_elements(max_weyl_order)),
        LaurentV.zero(),
    )
    report["square"] = e0 * e0 == e0.scale(square)
    if lam is not None:
        rs.check_dominant(lam)
        m, _ = min_double_coset_rep(rs, lam)
        shift = rs.pair(lam, rs.two_rho) - m.length
        lhs = x_elem(rs, translation(rs, lam)) * e0
        rhs = (HeckeElem.t_basis(rs, m) * e0).scale(LaurentV.gen(shift))
        report["translation-absorption"] = lhs == rhs
    return report
