"""Validated parameters (l, m, k, n) and the Cartan matrix of type A^(1)_{l-1}."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadN, EvenOrSmallL, MOutOfRange


@dataclass(frozen=True)
class BlobParams:
    """Parameters of b_n(q, m) with q a primitive root of quantum characteristic l.

    ``k`` is the residue in ``range(l)`` with ``2k = m (mod l)``.
    """

    l: int
    m: int
    k: int
    n: int

    def with_n(self, n: int) -> BlobParams:
        return validate_params(self.l, self.m, n)


def solve_k(l: int, m: int) -> int:
    # 2 is invertible mod odd l with inverse (l+1)/2
    return (m * (l + 1) // 2) % l


def validate_params(l: int, m: int, n: int) -> BlobParams:
    """Check the standing hypotheses and return the parameter bundle.

    For odd l the conditions q^4 != 1 and q^(2m) != 1 always hold; the
    remaining two, l not dividing 2m-2 or 2m+2, exclude m = 1 and m = l-1.
    """
    if l < 3 or l % 2 == 0:
        raise EvenOrSmallL(f"l must be odd and at least 3, got l={l}")
    if not 2 <= m <= l - 2:
        raise MOutOfRange(f"m must satisfy 2 <= m <= l-2 = {l - 2}, got m={m}")
    if n < 1:
        raise BadN(f"n must be a positive integer, got n={n}")
    return BlobParams(l=l, m=m, k=solve_k(l, m), n=n)


def cartan_entry(i: int, j: int, l: int) -> int:
    i, j = i % l, j % l
    if i == j:
        return 2
    if (i - j) % l in (1, l - 1):
        return -1
    return 0
