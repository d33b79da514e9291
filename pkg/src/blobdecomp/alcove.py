"""Walls, alcoves and the infinite dihedral action on weights.

Walls sit at the integers congruent to -m mod l.  The fundamental alcove is
the open interval (-m, l-m) containing 0, and the two fundamental reflections
fix its walls.  The residue class of t^lambda is described by walks that copy
w(t^lambda) up to the first fundamental wall, then take kappa(lambda)
wall-to-wall steps of length l in free directions, then finish with a
straight segment in either direction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import IndexMismatch, NotAPartition, NotInResidueClass
from .params import BlobParams
from .tableaux import (
    Bitableau,
    Walk,
    check_weight,
    degree_g,
    residue_of_tableau,
    t_lambda_of_weight,
    tableau_of,
    walk_of,
)

TOWARD = "toward-axis"
AWAY = "away-from-axis"


@dataclass(frozen=True)
class AlcoveSystem:
    l: int
    m: int

    @classmethod
    def of(cls, p: BlobParams) -> AlcoveSystem:
        return cls(p.l, p.m)

    @property
    def left_wall(self) -> int:
        return -self.m

    @property
    def right_wall(self) -> int:
        return self.l - self.m

    def is_wall(self, x: int) -> bool:
        return (x + self.m) % self.l == 0

    def is_fundamental_wall(self, x: int) -> bool:
        return x in (self.left_wall, self.right_wall)

    def in_fundamental_alcove(self, x: int) -> bool:
        return self.left_wall < x < self.right_wall

    def s_minus(self, x: int) -> int:
        return -2 * self.m - x

    def s_plus(self, x: int) -> int:
        return 2 * (self.l - self.m) - x

    def walls(self, lo: int, hi: int) -> list[int]:
        """Wall positions in the closed interval [lo, hi]."""
        first = lo + (-(lo + self.m)) % self.l
        return list(range(first, hi + 1, self.l))


class Position(enum.Enum):
    ON_FUNDAMENTAL_WALL = "on fundamental wall"
    ON_OUTER_WALL = "on outer wall"
    IN_FUNDAMENTAL_ALCOVE = "in fundamental alcove"
    IN_OUTER_ALCOVE = "in outer alcove"


@dataclass(frozen=True)
class WeightPosition:
    classification: Position
    side: str | None
    kappa: int

    @property
    def on_wall(self) -> bool:
        return self.classification in (Position.ON_FUNDAMENTAL_WALL, Position.ON_OUTER_WALL)


def classify_weight(w: int, sys: AlcoveSystem) -> WeightPosition:
    """Locate ``w`` and count the alcoves strictly between it and the fundamental alcove."""
    l, m = sys.l, sys.m
    side = "negative" if w < 0 else "positive"
    if sys.is_wall(w):
        q = (w + m) // l
        if q in (0, 1):
            return WeightPosition(Position.ON_FUNDAMENTAL_WALL, side, 0)
        return WeightPosition(Position.ON_OUTER_WALL, side, -q if q < 0 else q - 1)
    a = (w + m) // l
    if a == 0:
        return WeightPosition(Position.IN_FUNDAMENTAL_ALCOVE, None, 0)
    return WeightPosition(Position.IN_OUTER_ALCOVE, side, abs(a) - 1)


def kappa(w: int, sys: AlcoveSystem) -> int:
    return classify_weight(w, sys).kappa


def orbit(w: int, sys: AlcoveSystem, n: int) -> tuple[int, ...]:
    """Weights of level n in the W-orbit of ``w``, ascending.

    W is generated by two reflections, so the orbit of w is w + 2lZ together
    with s_-(w) + 2lZ.
    """
    period = 2 * sys.l
    reps = {w % period, sys.s_minus(w) % period}
    return tuple(y for y in range(-n, n + 1) if y % period in reps and (n - y) % 2 == 0)


@dataclass(frozen=True)
class OrbitIndex:
    lam: int
    entries: tuple[int, ...]
    kappa: int
    on_wall: bool

    def __len__(self):
        return len(self.entries)

    def index_of(self, w: int) -> int:
        """1-based index k with entries[k-1] == w."""
        return self.entries.index(w) + 1


@dataclass(frozen=True)
class _Skeleton:
    prefix: tuple[int, ...]  # w(t^lambda) up to the first fundamental wall contact
    steps: int
    rem: int


def _skeleton(lam: int, p: BlobParams) -> _Skeleton | None:
    """None when the class of t^lambda is the singleton {t^lambda}."""
    sys = AlcoveSystem.of(p)
    ws = walk_of(t_lambda_of_weight(lam, p.n)).weights
    for level, x in enumerate(ws):
        if sys.is_fundamental_wall(x):
            break
    else:
        return None
    if level == p.n:
        return None
    steps, rem = divmod(p.n - level, p.l)
    return _Skeleton(ws[: level + 1], steps, rem)


def skeleton_walks(lam: int, p: BlobParams) -> Iterator[Bitableau]:
    """Every bitableau with the residue sequence of t^lambda, built from the
    wall-to-wall description (2^steps * (2 or 1) walks)."""
    check_weight(lam, p.n)
    sk = _skeleton(lam, p)
    if sk is None:
        yield t_lambda_of_weight(lam, p.n)
        return
    finals = (-1, 1) if sk.rem else (0,)

    def extend(ws: list[int], left: int) -> Iterator[list[int]]:
        if left == 0:
            for d in finals:
                x = ws[-1]
                yield ws + [x + d * i for i in range(1, sk.rem + 1)]
            return
        for d in (-1, 1):
            x = ws[-1]
            yield from extend(ws + [x + d * i for i in range(1, p.l + 1)], left - 1)

    for ws in extend(list(sk.prefix), sk.steps):
        yield tableau_of(Walk(tuple(ws)))


def index_m_set(lam: int, members: set[int] | frozenset[int]) -> tuple[int, ...]:
    """Order M_n(lambda): lambda first, then alternately the far-side and the
    near-side extreme of what remains."""
    rest = set(members) - {lam}
    out = [lam]
    negative = lam < 0
    i = 1
    while rest:
        take_max = (i % 2 == 1) == negative
        nxt = max(rest) if take_max else min(rest)
        out.append(nxt)
        rest.remove(nxt)
        i += 1
    return tuple(out)


def m_set(lam: int, p: BlobParams) -> OrbitIndex:
    check_weight(lam, p.n)
    sys = AlcoveSystem.of(p)
    pos = classify_weight(lam, sys)
    sk = _skeleton(lam, p)
    if sk is None:
        return OrbitIndex(lam, (lam,), pos.kappa, pos.on_wall)
    frontier = {sk.prefix[-1]}
    for _ in range(sk.steps):
        frontier = {x + d * p.l for x in frontier for d in (-1, 1)}
    if sk.rem:
        frontier = {x + d * sk.rem for x in frontier for d in (-1, 1)}
    return OrbitIndex(lam, index_m_set(lam, frontier), pos.kappa, pos.on_wall)


# -- wall-to-wall words ------------------------------------------------------

@dataclass(frozen=True)
class WallWord:
    letters: str
    final_direction: str | None

    @property
    def n_F(self) -> int:
        return self.letters.count("F")

    @property
    def n_I(self) -> int:
        return self.letters.count("I")

    @property
    def n_O(self) -> int:
        return self.letters.count("O")

    def prefix_ballot(self) -> bool:
        """At every prefix, #O >= #I."""
        depth = 0
        for c in self.letters:
            depth += {"O": 1, "I": -1}.get(c, 0)
            if depth < 0:
                return False
        return True


def _step_letter(x: int, y: int, sys: AlcoveSystem) -> str:
    if {x, y} == {sys.left_wall, sys.right_wall}:
        return "F"
    return "O" if abs(y) > abs(x) else "I"


def wall_word_of(s: Bitableau, lam: int, p: BlobParams) -> WallWord:
    if s.n != p.n or residue_of_tableau(s, p) != residue_of_tableau(t_lambda_of_weight(lam, p.n), p):
        raise NotInResidueClass(f"{s} does not have the residue sequence of t^{lam}")
    sys = AlcoveSystem.of(p)
    sk = _skeleton(lam, p)
    if sk is None:
        return WallWord("", None)
    w = walk_of(s).weights
    level = len(sk.prefix) - 1
    letters = []
    for _ in range(sk.steps):
        x, y = w[level], w[level + p.l]
        assert abs(y - x) == p.l, "class member leaves a wall-to-wall step"
        letters.append(_step_letter(x, y, sys))
        level += p.l
    direction = None
    if sk.rem:
        x, y = w[level], w[-1]
        direction = TOWARD if (y - x) * x < 0 else AWAY
    return WallWord("".join(letters), direction)


def degree_word(word: WallWord) -> int:
    return word.n_F + (1 if word.final_direction == TOWARD else 0)


# -- two-column partitions ---------------------------------------------------

@dataclass(frozen=True)
class TwoColumnPartition:
    """mu = (p, q)', the two-column partition with column lengths p >= q."""

    p: int
    q: int

    def __post_init__(self):
        if not self.p >= self.q >= 0:
            raise NotAPartition(f"({self.p},{self.q})' is not a partition")

    @property
    def size(self) -> int:
        return self.p + self.q

    def __str__(self):
        return f"({self.p},{self.q})'"


def mu_partition(kappa: int, i: int, j: int) -> TwoColumnPartition:
    if not 0 <= i <= j or kappa - j + i < j - i:
        raise NotAPartition(f"no partition mu_{i}^{j} for kappa={kappa}")
    return TwoColumnPartition(kappa - j + i, j - i)


def count_std_two_column(mu: TwoColumnPartition) -> int:
    """Ballot number C(p+q, q) - C(p+q, q-1)."""
    total = mu.p + mu.q
    return comb(total, mu.q) - (comb(total, mu.q - 1) if mu.q >= 1 else 0)


def simple_index_step(index: OrbitIndex) -> int:
    """Indices 1, 1+step, 1+2*step, ... carry the simples: 4 off walls, 2 on them."""
    return 2 if index.on_wall else 4


def count_degree_classes(lam: int, target: int, p: BlobParams) -> dict[int, int]:
    """Histogram degree -> count over class members of t^lambda with shape ``target``."""
    idx = m_set(lam, p)
    if target not in idx.entries:
        raise IndexMismatch(f"{target} is not in M_{p.n}({lam})")
    k = idx.index_of(target)
    if (k - 1) % simple_index_step(idx):
        raise IndexMismatch(f"{target} has index {k}, not of the form {simple_index_step(idx)}j+1")
    hist: dict[int, int] = {}
    for s in skeleton_walks(lam, p):
        if s.weight == target:
            d = degree_g(s, p)
            hist[d] = hist.get(d, 0) + 1
    return dict(sorted(hist.items()))


# -- ASCII rendering ---------------------------------------------------------

def render_triangle(p: BlobParams, walk: Walk | None = None, n: int | None = None) -> str:
    """Rows 0..n of the Pascal triangle; '|' on walls, '*' on walk vertices."""
    n = p.n if n is None else n
    sys = AlcoveSystem.of(p)
    on_walk = set(enumerate(walk.weights)) if walk is not None else set()
    width = len(str(n))
    lines = []
    for level in range(n + 1):
        row = []
        for x in range(-n, n + 1):
            if (level, x) in on_walk:
                row.append("*")
            elif sys.is_wall(x):
                row.append("|")
            elif abs(x) <= level and (level - x) % 2 == 0:
                row.append(".")
            else:
                row.append(" ")
        lines.append(f"{level:>{width}} " + "".join(row).rstrip())
    return "\n".join(lines)
