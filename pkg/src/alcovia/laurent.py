"""Exact Laurent polynomials in one variable ``v`` and group-algebra sums.

All coefficient arithmetic in this package happens in the ring
``Z[v, v^{-1}]`` where ``v**2`` plays the role of the deformation
parameter ``q``.  Working with ``v`` instead of ``q`` keeps half-integer
powers of ``q`` (which occur in length prefactors) as honest integers.

:class:`LaurentV` is a canonical, hashable, immutable-by-convention map
from integer exponents to nonzero integer coefficients.
:class:`GroupAlgebraElem` is a finitely supported map from coweights
(integer tuples) to :class:`LaurentV` coefficients — the exact container
for symmetric-function output such as spherical functions.

>>> v = LaurentV.gen()
>>> (v - ~v) ** 2
LaurentV({2: 1, 0: -2, -2: 1})
>>> print((v - ~v) ** 2)
v^2 - 2 + v^-2
>>> print(LaurentV({0: 2, -2: -1, -4: -1}))
2 - q^-1 - q^-2
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = ["LaurentV", "GroupAlgebraElem"]


class LaurentV:
    """A Laurent polynomial in ``v`` with integer coefficients.

    The representation is canonical: zero coefficients are never stored,
    so equality and hashing are structural.

    >>> v = LaurentV.gen()
    >>> v * v == LaurentV({2: 1})
    True
    >>> v + (-v)
    LaurentV({})
    >>> bool(v - v)
    False
    >>> ~v * v == LaurentV.one()
    True
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    clean[int(exp)] = int(coeff)
        self._terms = clean

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentV":
        return cls()

    @classmethod
    def one(cls) -> "LaurentV":
        return cls({0: 1})

    @classmethod
    def gen(cls, power: int = 1) -> "LaurentV":
        """Return ``v**power`` (``power`` may be negative).

        >>> LaurentV.gen(-3)
        LaurentV({-3: 1})
        """
        return cls({power: 1})

    @classmethod
    def from_int(cls, n: int) -> "LaurentV":
        return cls({0: n})

    # ---- ring structure ----------------------------------------------

    def __add__(self, other: "LaurentV | int") -> "LaurentV":
        other = _coerce(other)
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return LaurentV(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentV":
        return LaurentV({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentV | int") -> "LaurentV":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "LaurentV":
        return _coerce(other) + (-self)

    def __mul__(self, other: "LaurentV | int") -> "LaurentV":
        other = _coerce(other)
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentV(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentV":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use ~")
        result = LaurentV.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __invert__(self) -> "LaurentV":
        """Inverse of a monomial ``c * v**e`` with ``c`` in {1, -1}.

        >>> ~LaurentV.gen(5)
        LaurentV({-5: 1})
        """
        if len(self._terms) != 1:
            raise ValueError("only monomials are invertible in Z[v, v^-1]")
        ((exp, coeff),) = self._terms.items()
        if coeff not in (1, -1):
            raise ValueError("only unit coefficients are invertible over Z")
        return LaurentV({-exp: coeff})

    # ---- queries ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentV.from_int(other)
        if not isinstance(other, LaurentV):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def items(self) -> Iterator[tuple[int, int]]:
        """Iterate ``(exponent, coefficient)`` pairs, exponent-descending."""
        return iter(sorted(self._terms.items(), reverse=True))

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def min_exp(self) -> int:
        """Smallest exponent with nonzero coefficient (0 for the zero poly)."""
        return min(self._terms) if self._terms else 0

    def max_exp(self) -> int:
        """Largest exponent with nonzero coefficient (0 for the zero poly)."""
        return max(self._terms) if self._terms else 0

    def is_qinv_polynomial(self) -> bool:
        """True when every exponent is even and nonpositive.

        Such elements are integer polynomials in ``q^{-1} = v^{-2}``.

        >>> (1 - ~LaurentV.gen(2)).is_qinv_polynomial()
        True
        >>> LaurentV.gen().is_qinv_polynomial()
        False
        """
        return all(e <= 0 and e % 2 == 0 for e in self._terms)

    # ---- evaluation ---------------------------------------------------

    def eval_v(self, value: Fraction) -> Fraction:
        """Evaluate at ``v = value`` (exact rational arithmetic).

        Zero is a legal evaluation point only when no exponent is
        negative.
        """
        if value == 0:
            if any(e < 0 for e in self._terms):
                raise ZeroDivisionError("negative v-powers at v = 0")
            return Fraction(self._terms.get(0, 0))
        value = Fraction(value)
        return sum((c * value**e for e, c in self._terms.items()), Fraction(0))

    def eval_qinv(self, qinv: Fraction) -> Fraction:
        """Evaluate at ``q^{-1} = qinv`` for elements with even exponents.

        >>> poly = LaurentV({0: 2, -2: -1, -4: -1})
        >>> poly.eval_qinv(Fraction(1, 2))
        Fraction(5, 4)
        """
        if qinv == 0:
            # Only polynomials in q^{-1} survive the limit q -> infinity.
            if any(e > 0 for e in self._terms):
                raise ZeroDivisionError("positive v-powers at q^-1 = 0")
            return Fraction(self._terms.get(0, 0))
        qinv = Fraction(qinv)
        total = Fraction(0)
        for e, c in self._terms.items():
            if e % 2:
                raise ValueError("odd v-power has no value in terms of q alone")
            total += c * qinv ** (-e // 2)
        return total

    # ---- printing -----------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentV({dict(sorted(self._terms.items(), reverse=True))})"

    def __str__(self) -> str:
        """Human form: in ``q^-1`` when possible, otherwise in ``v``.

        >>> print(LaurentV.gen(3) + 2 * LaurentV.gen(-1))
        v^3 + 2v^-1
        >>> print(LaurentV.zero())
        0
        """
        if not self._terms:
            return "0"
        if self.is_qinv_polynomial():
            return self._format(lambda e: _power_name("q", e // 2))
        return self._format(lambda e: _power_name("v", e))

    def _format(self, name_of: "callable") -> str:
        parts: list[str] = []
        for exp, coeff in self.items():
            name = name_of(exp)
            mag = abs(coeff)
            if name == "1":
                body = str(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{mag}{name}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)


def _coerce(x: "LaurentV | int") -> LaurentV:
    if isinstance(x, LaurentV):
        return x
    if isinstance(x, int):
        return LaurentV.from_int(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into LaurentV")


def _power_name(sym: str, exp: int) -> str:
    if exp == 0:
        return "1"
    if exp == 1:
        return sym
    return f"{sym}^{exp}"


class GroupAlgebraElem:
    """A finite formal sum ``sum_mu  c_mu * x^mu`` over coweights ``mu``.

    Keys are integer tuples (fundamental-coweight coordinates); values are
    :class:`LaurentV` coefficients.  Zero coefficients are dropped, so
    equality is structural.

    >>> one = LaurentV.one()
    >>> a = GroupAlgebraElem({(1, 0): one})
    >>> b = GroupAlgebraElem({(0, 0): one})
    >>> sorted((a + b).terms())
    [((0, 0), LaurentV({0: 1})), ((1, 0), LaurentV({0: 1}))]
    >>> a + b == b + a
    True
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], LaurentV] | None = None):
        clean: dict[tuple[int, ...], LaurentV] = {}
        if terms:
            for mu, coeff in terms.items():
                if coeff:
                    clean[tuple(mu)] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> "GroupAlgebraElem":
        return cls()

    @classmethod
    def monomial(cls, mu: Iterable[int], coeff: LaurentV | int = 1) -> "GroupAlgebraElem":
        return cls({tuple(mu): _coerce(coeff)})

    def __add__(self, other: "GroupAlgebraElem") -> "GroupAlgebraElem":
        terms = dict(self._terms)
        for mu, coeff in other._terms.items():
            terms[mu] = terms.get(mu, LaurentV.zero()) + coeff
        return GroupAlgebraElem(terms)

    def __sub__(self, other: "GroupAlgebraElem") -> "GroupAlgebraElem":
        return self + other.scale(LaurentV.from_int(-1))

    def scale(self, factor: LaurentV | int) -> "GroupAlgebraElem":
        factor = _coerce(factor)
        return GroupAlgebraElem({mu: coeff * factor for mu, coeff in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> Iterator[tuple[tuple[int, ...], LaurentV]]:
        return iter(self._terms.items())

    def coeff(self, mu: Iterable[int]) -> LaurentV:
        return self._terms.get(tuple(mu), LaurentV.zero())

    def support(self) -> set[tuple[int, ...]]:
        return set(self._terms)

    def eval_point(self, point: Mapping[int, Fraction], qinv: Fraction) -> Fraction:
        """Evaluate with ``x^mu -> prod_i point[i]**mu_i`` and ``q^{-1} = qinv``.

        ``point`` maps 1-based coordinate indices to nonzero rationals.

        >>> from fractions import Fraction
        >>> e = GroupAlgebraElem({(1,): LaurentV.one(), (-1,): LaurentV.one()})
        >>> e.eval_point({1: Fraction(3)}, Fraction(1, 2))
        Fraction(10, 3)
        """
        total = Fraction(0)
        for mu, coeff in self._terms.items():
            value = coeff.eval_qinv(qinv)
            for i, power in enumerate(mu, start=1):
                base = Fraction(point[i])
                if base == 0:
                    raise ZeroDivisionError("evaluation point has a zero coordinate")
                value *= base**power
            total += value
        return total

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{mu}: {coeff!r}" for mu, coeff in sorted(self._terms.items())
        )
        return f"GroupAlgebraElem({{{inner}}})"

    def __str__(self) -> str:
        """One line per coweight, sorted, with pretty coefficients.

        >>> print(GroupAlgebraElem({(0, 0): LaurentV({0: 2, -2: -1})}))
        x^(0,0): 2 - q^-1
        """
        if not self._terms:
            return "0"
        lines = []
        for mu in sorted(self._terms):
            coord = ",".join(str(c) for c in mu)
            lines.append(f"x^({coord}): {self._terms[mu]}")
        return "\n".join(lines)
