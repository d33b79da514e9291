"""Integer Laurent polynomials in a single variable ``t``.

Polynomials are immutable and kept in canonical form: a mapping from
exponent to nonzero coefficient.  Coefficients are Python ints, so there is
no overflow at any size.

>>> p = LaurentPoly({1: 1, 3: 1})
>>> str(p)
't^3+t'
>>> p.at_one()
2
>>> str(p * LaurentPoly.monomial(-1))
't^2+1'
"""

from __future__ import annotations

import re
from types import MappingProxyType
from typing import Iterable, Mapping


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> LaurentPoly:
        """Sum of ``t**e`` over ``exponents`` (with multiplicity)."""
        terms: dict[int, int] = {}
        for e in exponents:
            terms[e] = terms.get(e, 0) + 1
        return cls(terms)

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._terms.items()))!r})"

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def shift(self, d: int) -> LaurentPoly:
        """Multiply by ``t**d`` (the grading shift)."""
        return LaurentPoly({e + d: c for e, c in self._terms.items()})

    def at_one(self) -> int:
        """Evaluate at ``t = 1``, i.e. forget the grading."""
        return sum(self._terms.values())

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def bar(self) -> LaurentPoly:
        """Substitute ``t -> 1/t``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def degree(self) -> int | None:
        """Largest exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def valuation(self) -> int | None:
        return min(self._terms) if self._terms else None

    def is_monomial(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def to_pairs(self) -> list[list[int]]:
        """JSON form: ``[[exponent, coeff], ...]`` ascending by exponent."""
        return [[e, c] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> LaurentPoly:
        terms: dict[int, int] = {}
        for e, c in pairs:
            terms[e] = terms.get(e, 0) + c
        return cls(terms)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = mag + ("t" if e == 1 else f"t^{e}")
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("-" if c < 0 else "+") + body)
        return "".join(out)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``."""
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        if not text:
            raise ValueError("empty polynomial string; zero is written '0'")
        pos = 0
        terms: dict[int, int] = {}
        while pos < len(text):
            match = _TERM.match(text, pos)
            if match is None or match.end() == pos:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            sign, digits, var, exp = match.groups()
            if (not digits and not var) or (pos and not sign):
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            coeff = int(digits) if digits else 1
            e = (int(exp) if exp else 1) if var else 0
            terms[e] = terms.get(e, 0) + (-coeff if sign == "-" else coeff)
            pos = match.end()
        return cls(terms)


_TERM = re.compile(r"([+-]?)(\d*)(t(?:\^(-?\d+))?)?")


def t_power(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e)


ZERO = LaurentPoly()
ONE = LaurentPoly.one()
T = LaurentPoly.monomial(1)
