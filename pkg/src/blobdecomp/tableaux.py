"""One-line bipartitions, standard bitableaux and their walks on the Pascal triangle.

A standard one-line bitableau of size n is stored as its sign string: position
j carries ``+`` when entry j sits in the first component and ``-`` when it sits
in the second.  Every sign string is standard, and the running difference
(#plus - #minus) is the walk on the Pascal triangle, so the three descriptions
are interchangeable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .errors import BadPosition, MalformedWalk, SizeMismatch
from .params import BlobParams

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class OneLineBipartition:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"component sizes must be nonnegative: {self}")

    @property
    def n(self) -> int:
        return self.a + self.b

    @property
    def weight(self) -> int:
        return self.a - self.b

    @classmethod
    def from_weight(cls, w: int, n: int) -> OneLineBipartition:
        check_weight(w, n)
        return cls((n + w) // 2, (n - w) // 2)

    def __str__(self):
        return f"(({self.a}),({self.b}))"


def check_weight(w: int, n: int) -> int:
    if abs(w) > n or (n - w) % 2:
        raise ValueError(f"{w} is not a weight of level {n}")
    return w


def weights(n: int) -> list[int]:
    """The weights -n, -n+2, ..., n in ascending order."""
    return list(range(-n, n + 1, 2))


@dataclass(frozen=True)
class Bitableau:
    signs: str

    def __post_init__(self):
        if any(c not in "+-" for c in self.signs):
            raise ValueError(f"bitableau must be a string over '+-': {self.signs!r}")

    @property
    def n(self) -> int:
        return len(self.signs)

    @property
    def shape(self) -> OneLineBipartition:
        plus = self.signs.count(PLUS)
        return OneLineBipartition(plus, self.n - plus)

    @property
    def weight(self) -> int:
        return self.shape.weight

    def components(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Entries of the first and second component, left to right."""
        first = tuple(j for j, s in enumerate(self.signs, 1) if s == PLUS)
        second = tuple(j for j, s in enumerate(self.signs, 1) if s == MINUS)
        return first, second

    def restrict(self, k: int) -> Bitableau:
        return Bitableau(self.signs[:k])

    def __str__(self):
        return self.signs


@dataclass(frozen=True)
class Walk:
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(self.weights)
        object.__setattr__(self, "weights", w)
        if not w or w[0] != 0:
            raise MalformedWalk(f"a walk starts at weight 0, got {w[:1]}")
        for j in range(1, len(w)):
            if abs(w[j] - w[j - 1]) != 1:
                raise MalformedWalk(f"step {j} of {w} is {w[j] - w[j - 1]}, not +-1")

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    @classmethod
    def parse(cls, text: str) -> Walk:
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError as exc:
            if isinstance(exc, MalformedWalk):
                raise
            raise MalformedWalk(f"cannot parse walk {text!r}") from exc

    def __str__(self):
        return ",".join(map(str, self.weights))


def walk_of(t: Bitableau) -> Walk:
    out = [0]
    for s in t.signs:
        out.append(out[-1] + (1 if s == PLUS else -1))
    return Walk(tuple(out))


def tableau_of(w: Walk) -> Bitableau:
    ws = w.weights
    return Bitableau("".join(PLUS if ws[j] > ws[j - 1] else MINUS for j in range(1, len(ws))))


def t_lambda(lam: OneLineBipartition) -> Bitableau:
    """The unique maximal standard bitableau of shape ``lam``.

    With c = min(a, b): even entries up to 2c go to the first component, odd
    entries below 2c to the second, and the rest fill whichever component has
    room.
    """
    c = min(lam.a, lam.b)
    tail = PLUS if lam.a >= lam.b else MINUS
    signs = []
    for j in range(1, lam.n + 1):
        if j <= 2 * c:
            signs.append(PLUS if j % 2 == 0 else MINUS)
        else:
            signs.append(tail)
    return Bitableau("".join(signs))


def t_lambda_of_weight(w: int, n: int) -> Bitableau:
    return t_lambda(OneLineBipartition.from_weight(w, n))


def std(lam: OneLineBipartition) -> Iterator[Bitableau]:
    """All standard bitableaux of shape ``lam`` in lexicographic sign order."""
    n = lam.n
    for minus_pos in combinations(range(n), lam.b):
        signs = [PLUS] * n
        for j in minus_pos:
            signs[j] = MINUS
        yield Bitableau("".join(signs))


def all_tableaux(n: int) -> Iterator[Bitableau]:
    for signs in product(PLUS + MINUS, repeat=n):
        yield Bitableau("".join(signs))


# -- residues ---------------------------------------------------------------

def node_residue(col: int, comp: int, p: BlobParams) -> int:
    """Residue of the node in column ``col`` of component ``comp`` (1 or 2)."""
    if comp == 1:
        return (col - 1 + p.k) % p.l
    return (col - 1 - p.k) % p.l


def residue_of_tableau(t: Bitableau, p: BlobParams) -> tuple[int, ...]:
    out = []
    a = b = 0
    for s in t.signs:
        if s == PLUS:
            a += 1
            out.append(node_residue(a, 1, p))
        else:
            b += 1
            out.append(node_residue(b, 2, p))
    return tuple(out)


def residue_via_walk(w: Walk, p: BlobParams) -> tuple[int, ...]:
    # 2r = j - 2 + (w_j - w_{j-1})(w_j + m); (l+1)/2 inverts 2 mod l
    half = (p.l + 1) // 2
    ws = w.weights
    return tuple(
        ((j - 2 + (ws[j] - ws[j - 1]) * (ws[j] + p.m)) * half) % p.l
        for j in range(1, len(ws))
    )


# -- orders ------------------------------------------------------------------

class Order(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def weight_key(w: int) -> tuple[int, int]:
    """Sort key for the total order on weights: larger key means larger weight.

    Closer to the central axis is larger; between w and -w the negative one
    is larger.
    """
    return (-abs(w), -w)


def weight_order(x: int, y: int) -> Order:
    kx, ky = weight_key(x), weight_key(y)
    if kx == ky:
        return Order.EQUAL
    return Order.GREATER if kx > ky else Order.LESS


def weight_geq(x: int, y: int) -> bool:
    return weight_key(x) >= weight_key(y)


def bipartition_order(lam: OneLineBipartition, mu: OneLineBipartition) -> Order:
    if lam.n != mu.n:
        raise SizeMismatch(f"{lam} and {mu} have different sizes")
    return weight_order(lam.weight, mu.weight)


def tableau_order(s: Bitableau, t: Bitableau) -> Order:
    """Compare the truncated shapes of ``s`` and ``t`` level by level."""
    if s.n != t.n:
        raise SizeMismatch(f"bitableaux of sizes {s.n} and {t.n}")
    geq = leq = True
    for x, y in zip(walk_of(s).weights[1:], walk_of(t).weights[1:]):
        kx, ky = weight_key(x), weight_key(y)
        if kx < ky:
            geq = False
        elif kx > ky:
            leq = False
    if geq and leq:
        return Order.EQUAL
    if geq:
        return Order.GREATER
    if leq:
        return Order.LESS
    return Order.INCOMPARABLE


def apply_transposition(t: Bitableau, r: int) -> Bitableau | None:
    """Swap entries r and r+1; None when they lie in the same component."""
    if not 1 <= r <= t.n - 1:
        raise BadPosition(f"position {r} outside 1..{t.n - 1}")
    x, y = t.signs[r - 1], t.signs[r]
    if x == y:
        return None
    return Bitableau(t.signs[: r - 1] + y + x + t.signs[r + 1 :])


# -- degrees -----------------------------------------------------------------

def _below(alpha: tuple[int, int], beta: tuple[int, int]) -> bool:
    (c1, d1), (c2, d2) = alpha, beta
    return c1 > c2 or (c1 == c2 and d1 == 1 and d2 == 2)


def level_counts(t: Bitableau, p: BlobParams) -> list[tuple[int, int]]:
    """Per level k: (# addable, # removable) nodes of Shape(t|k) below the node
    of k with the same residue."""
    out = []
    a = b = 0
    for s in t.signs:
        if s == PLUS:
            a += 1
            node = (a, 1)
        else:
            b += 1
            node = (b, 2)
        r = node_residue(*node, p)
        addable = [(a + 1, 1), (b + 1, 2)]
        removable = [x for x in ((a, 1), (b, 2)) if x[0] >= 1]
        n_add = sum(1 for x in addable if _below(x, node) and node_residue(*x, p) == r)
        n_rem = sum(1 for x in removable if _below(x, node) and node_residue(*x, p) == r)
        out.append((n_add, n_rem))
    return out


def degree_g(t: Bitableau, p: BlobParams) -> int:
    return sum(n_add - n_rem for n_add, n_rem in level_counts(t, p))


@dataclass(frozen=True)
class DegreeBreakdown:
    a_positions: frozenset[int]
    r_positions: frozenset[int]

    @property
    def degree(self) -> int:
        return len(self.a_positions) - len(self.r_positions)


def degree_walk(t: Bitableau, p: BlobParams) -> DegreeBreakdown:
    """Degree from wall contacts of the walk.

    A position j counts +1 when the edge (j-1, j) leaves a wall toward the
    central axis and -1 when it lands on a wall while moving toward the axis.
    """
    l, m = p.l, p.m
    wall = -m % l
    w = walk_of(t).weights
    a_pos, r_pos = set(), set()
    for j in range(1, len(w)):
        prev, cur = w[j - 1], w[j]
        if prev % l == wall:
            if cur < 0 and cur % l == (1 - m) % l:
                a_pos.add(j)
            elif cur > 0 and cur % l == (-m - 1) % l:
                a_pos.add(j)
        if cur % l == wall:
            if cur < 0 and prev % l == (-m - 1) % l:
                r_pos.add(j)
            elif cur > 0 and prev % l == (1 - m) % l:
                r_pos.add(j)
    return DegreeBreakdown(frozenset(a_pos), frozenset(r_pos))
