"""Brute-force ground truth.

Nothing here uses the closed formulas for graded dimensions or decomposition
numbers.  Residue classes come from a depth-first search over walks, degrees
from the addable/removable-node count, and the decomposition column from
solving the triangular system dim Delta = sum [Delta:L] dim L under two
assumptions: simples of the idempotent truncation are concentrated in degree
0, and off-diagonal decomposition numbers have zero constant term.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import NotSolvable, TooLarge
from .laurent import ONE, ZERO, LaurentPoly
from .params import BlobParams
from .tableaux import (
    Bitableau,
    check_weight,
    degree_g,
    residue_of_tableau,
    t_lambda_of_weight,
    weight_key,
    weights,
)

MAX_CLASS_N = 18
MAX_STD_SIZE = 24


@dataclass(frozen=True)
class ClassMember:
    tableau: Bitableau
    degree: int

    @property
    def shape(self) -> int:
        return self.tableau.weight


@dataclass(frozen=True)
class ResidueClass:
    lam: int
    target: tuple[int, ...]
    members: tuple[ClassMember, ...]

    def shapes(self) -> frozenset[int]:
        return frozenset(mem.shape for mem in self.members)


@lru_cache(maxsize=None)
def enumerate_residue_class(lam: int, p: BlobParams, max_n: int = MAX_CLASS_N) -> ResidueClass:
    """All bitableaux sharing the residue sequence of t^lambda.

    Walks are extended one level at a time and a step survives only if the
    residue it produces matches the target; the result is in lexicographic
    sign order.
    """
    if p.n > max_n:
        raise TooLarge(f"class enumeration is bounded by n <= {max_n}, got n={p.n}")
    check_weight(lam, p.n)
    target = residue_of_tableau(t_lambda_of_weight(lam, p.n), p)
    half = (p.l + 1) // 2
    found = []

    def dfs(j: int, x: int, signs: list[str]) -> None:
        if j > p.n:
            found.append("".join(signs))
            return
        for sign, d in (("+", 1), ("-", -1)):
            y = x + d
            if ((j - 2 + d * (y + p.m)) * half) % p.l == target[j - 1]:
                signs.append(sign)
                dfs(j + 1, y, signs)
                signs.pop()

    dfs(1, 0, [])
    members = tuple(ClassMember(Bitableau(s), degree_g(Bitableau(s), p)) for s in found)
    return ResidueClass(lam, target, members)


def oracle_cell_dim_subalgebra(lam: int, mu: int, p: BlobParams) -> LaurentPoly:
    """Graded dimension of e(i^lambda) Delta(mu): sum of t^deg over class members of shape mu."""
    cls = enumerate_residue_class(lam, p)
    return LaurentPoly.from_exponents(mem.degree for mem in cls.members if mem.shape == mu)


def oracle_count_std(p: int, q: int) -> int:
    """Standard tableaux of the two-row shape (p, q), counted by listing them."""
    if not p >= q >= 0:
        raise ValueError(f"({p},{q}) is not a partition")
    if p + q > MAX_STD_SIZE:
        raise TooLarge(f"enumeration bounded by size {MAX_STD_SIZE}")
    count = 0
    entries = range(1, p + q + 1)
    for second in combinations(entries, q):
        first = [e for e in entries if e not in second]
        if all(first[c] < second[c] for c in range(q)):
            count += 1
    return count


@lru_cache(maxsize=None)
def _oracle_column(lam: int, p: BlobParams) -> tuple[tuple[int, LaurentPoly], ...]:
    cls = enumerate_residue_class(lam, p)
    shapes = sorted(cls.shapes(), key=weight_key)
    if not shapes or shapes[0] != lam:
        raise NotSolvable(f"{lam} is not the minimum of its class shapes {shapes}")
    simple: dict[int, int] = {}
    column: dict[int, LaurentPoly] = {}
    for pos, nu in enumerate(shapes):
        dim = oracle_cell_dim_subalgebra(lam, nu, p)
        const = dim.constant_term()
        if const < 0:
            raise NotSolvable(f"negative constant term in dim Delta_{lam}({nu}) = {dim}")
        simple[nu] = const
        if nu == lam:
            if dim != ONE:
                raise NotSolvable(f"dim Delta_{lam}({lam}) = {dim}, expected 1")
            column[nu] = ONE
            continue
        residual = dim - const
        for prev in shapes[1:pos]:
            if simple[prev]:
                residual -= dict(_oracle_column(prev, p)).get(nu, ZERO) * simple[prev]
        # what remains is [Delta(nu) : L(lam)] times dim L_lam(lam) = 1
        if residual.constant_term() != 0 or not residual.is_nonnegative():
            raise NotSolvable(f"residual {residual} for mu={nu}, lambda={lam} is not admissible")
        column[nu] = residual
    return tuple(sorted(column.items()))


def oracle_decomposition_column(lam: int, p: BlobParams) -> dict[int, LaurentPoly]:
    """[Delta(mu) : L(lam)]_t for every weight mu of level n, recovered from enumeration."""
    check_weight(lam, p.n)
    found = dict(_oracle_column(lam, p))
    return {mu: found.get(mu, ZERO) for mu in weights(p.n)}
