"""Graded dimensions and graded decomposition numbers.

For a weight lambda, e = e(i^lambda) cuts b_n down to a positively graded
subalgebra whose cell modules are indexed by M_n(lambda) = (lambda_1, ...,
lambda_N).  The closed forms below give dim_t of those truncated cell and
simple modules, and the column [Delta(mu) : L(lambda)]_t of the full
decomposition matrix.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache

from .alcove import (
    OrbitIndex,
    count_std_two_column,
    m_set,
    mu_partition,
    simple_index_step,
)
from .errors import InconsistentData
from .laurent import ONE, ZERO, LaurentPoly
from .params import BlobParams
from .tableaux import (
    OneLineBipartition,
    check_weight,
    degree_g,
    std,
    weight_geq,
    weight_key,
    weights,
)

# non-wall indices 4j+1..4j+4 carry the extra shifts 0, 1, 1, 2; wall indices 2j+1, 2j+2 carry 0, 1
_SHIFTS = {4: (0, 1, 1, 2), 2: (0, 1)}


@dataclass(frozen=True)
class GradedCellDims:
    index: OrbitIndex
    cell: dict[int, LaurentPoly]
    simple: dict[int, LaurentPoly]

    @property
    def lam(self) -> int:
        return self.index.lam

    def in_index_order(self, which: str = "cell") -> list[LaurentPoly]:
        table = self.cell if which == "cell" else self.simple
        return [table[w] for w in self.index.entries]


def _ballot_sum(kappa: int, j: int) -> LaurentPoly:
    return LaurentPoly({2 * i: count_std_two_column(mu_partition(kappa, i, j)) for i in range(j + 1)})


def _cell_closed_form(idx: OrbitIndex) -> dict[int, LaurentPoly]:
    entries = idx.entries
    if len(entries) == 1:
        return {entries[0]: ONE}
    if not idx.on_wall and idx.kappa == 0:
        return {entries[0]: ONE, entries[1]: LaurentPoly.monomial(1)}
    step = simple_index_step(idx)
    out = {}
    for k, w in enumerate(entries, 1):
        j, r = divmod(k - 1, step)
        out[w] = _ballot_sum(idx.kappa, j).shift(_SHIFTS[step][r])
    return out


def simple_dims_subalgebra(lam: int, p: BlobParams) -> dict[int, LaurentPoly]:
    """dim_t e(i^lambda) L(lambda_k): |Std(mu_0^j)| at k = 4j+1 (2j+1 on a wall), else 0."""
    idx = m_set(lam, p)
    if len(idx) == 1:
        return {lam: ONE}
    step = simple_index_step(idx)
    out = {}
    for k, w in enumerate(idx.entries, 1):
        j, r = divmod(k - 1, step)
        out[w] = LaurentPoly.constant(count_std_two_column(mu_partition(idx.kappa, 0, j))) if r == 0 else ZERO
    return out


def cell_dims_subalgebra(lam: int, p: BlobParams) -> GradedCellDims:
    idx = m_set(lam, p)
    return GradedCellDims(idx, _cell_closed_form(idx), simple_dims_subalgebra(lam, p))


def decomposition_column(lam: int, p: BlobParams) -> dict[int, LaurentPoly]:
    """[Delta(mu) : L(lam)]_t for every weight mu of level n."""
    check_weight(lam, p.n)
    idx = m_set(lam, p)
    col = {mu: ZERO for mu in weights(p.n)}
    if len(idx) == 1:
        col[lam] = ONE
        return col
    if not idx.on_wall and idx.kappa == 0:
        col[idx.entries[0]] = ONE
        col[idx.entries[1]] = LaurentPoly.monomial(1)
        return col
    for k, mu in enumerate(idx.entries, 1):
        if idx.on_wall:
            col[mu] = LaurentPoly.monomial(k - 1)
        else:
            j, r = divmod(k - 1, 4)
            col[mu] = LaurentPoly.monomial(2 * j + _SHIFTS[4][r])
    return col


# -- the full matrix ---------------------------------------------------------

@dataclass(frozen=True)
class DecompColumn:
    lam: int
    kappa: int
    m_set: tuple[int, ...]
    entries: dict[int, LaurentPoly]


@dataclass(frozen=True)
class DecompMatrix:
    n: int
    l: int
    m: int
    weights: tuple[int, ...]
    columns: dict[int, DecompColumn]

    def entry(self, mu: int, lam: int) -> LaurentPoly:
        return self.columns[lam].entries[mu]

    def to_dict(self) -> dict:
        return {
            "params": {"n": self.n, "l": self.l, "m": self.m},
            "weights": list(self.weights),
            "columns": [
                {
                    "lambda": lam,
                    "kappa": col.kappa,
                    "m_set": list(col.m_set),
                    "entries": [
                        {"mu": mu, "poly": col.entries[mu].to_pairs()} for mu in self.weights
                    ],
                }
                for lam, col in sorted(self.columns.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> DecompMatrix:
        params = doc["params"]
        columns = {}
        for c in doc["columns"]:
            entries = {e["mu"]: LaurentPoly.from_pairs(e["poly"]) for e in c["entries"]}
            columns[c["lambda"]] = DecompColumn(c["lambda"], c["kappa"], tuple(c["m_set"]), entries)
        return cls(params["n"], params["l"], params["m"], tuple(doc["weights"]), columns)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["mu", "lambda", "poly"])
        for mu in self.weights:
            for lam in self.weights:
                writer.writerow([mu, lam, str(self.entry(mu, lam))])
        return buf.getvalue()


def decomposition_matrix(p: BlobParams) -> DecompMatrix:
    ws = tuple(weights(p.n))
    columns = {}
    for lam in ws:
        idx = m_set(lam, p)
        columns[lam] = DecompColumn(lam, idx.kappa, idx.entries, decomposition_column(lam, p))
    return DecompMatrix(p.n, p.l, p.m, ws, columns)


@lru_cache(maxsize=None)
def cell_dim_full(mu: int, p: BlobParams) -> LaurentPoly:
    """dim_t Delta(mu): sum of t^deg(t) over all standard bitableaux of shape mu."""
    shape = OneLineBipartition.from_weight(mu, p.n)
    return LaurentPoly.from_exponents(degree_g(t, p) for t in std(shape))


def simple_dims_full(p: BlobParams, matrix: DecompMatrix | None = None) -> dict[int, LaurentPoly]:
    """dim_t L(lam) for every weight, solving the unitriangular system upward from the minimum."""
    matrix = matrix or decomposition_matrix(p)
    out: dict[int, LaurentPoly] = {}
    for lam in sorted(matrix.weights, key=weight_key):
        dim = cell_dim_full(lam, p)
        for mu, known in out.items():
            dim = dim - matrix.entry(lam, mu) * known
        if any(c < 0 for c in dim.terms.values()):
            raise InconsistentData(f"dim_t L({lam}) = {dim} has a negative coefficient")
        out[lam] = dim
    return dict(sorted(out.items()))


# -- consistency report ------------------------------------------------------

@dataclass
class Check:
    name: str
    ok: bool = True
    fatal: bool = True
    failures: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.ok = False
        self.failures.append(msg)


@dataclass
class ConsistencyReport:
    params: BlobParams
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks if c.fatal)

    @property
    def warnings(self) -> list[Check]:
        return [c for c in self.checks if not c.fatal and not c.ok]

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "ok" if c.ok else ("FAIL" if c.fatal else "WARN")
            out.append(f"[{status}] n={self.params.n} l={self.params.l} m={self.params.m}: {c.name}")
            out.extend(f"    {msg}" for msg in c.failures[:5])
        return out


def verify_consistency(p: BlobParams, with_oracle: bool = True) -> ConsistencyReport:
    from .oracle import oracle_cell_dim_subalgebra

    matrix = decomposition_matrix(p)
    identity = Check("dim Delta = sum [Delta:L] dim L closes")
    nonneg = Check("simple dims nonnegative and nonzero")
    ungraded = Check("decomposition numbers at t=1 are 0 or 1")
    triangular = Check("unitriangular in the order on weights")
    oracle = Check("closed-form truncated cell dims equal enumeration")
    bar = Check("dim_t L(lambda) bar-invariant", fatal=False)

    try:
        simple = simple_dims_full(p, matrix)
    except InconsistentData as exc:
        nonneg.fail(str(exc))
        simple = None
    if simple is not None:
        for lam in matrix.weights:
            total = ZERO
            for mu in matrix.weights:
                total = total + matrix.entry(lam, mu) * simple[mu]
            if total != cell_dim_full(lam, p):
                identity.fail(f"row {lam}: {total} != {cell_dim_full(lam, p)}")
            if not simple[lam] or not simple[lam].is_nonnegative():
                nonneg.fail(f"dim_t L({lam}) = {simple[lam]}")
            if simple[lam].bar() != simple[lam]:
                bar.fail(f"dim_t L({lam}) = {simple[lam]}")
    else:
        identity.fail("simple dims could not be computed")

    for lam in matrix.weights:
        for mu in matrix.weights:
            e = matrix.entry(mu, lam)
            if e.at_one() not in (0, 1) or (e and not e.is_nonnegative()):
                ungraded.fail(f"[Delta({mu}):L({lam})] = {e}")
            if mu == lam and e != ONE:
                triangular.fail(f"diagonal entry at {lam} is {e}")
            elif e and not weight_geq(mu, lam):
                triangular.fail(f"[Delta({mu}):L({lam})] = {e} but {mu} is not above {lam}")
    checks = [identity, nonneg, ungraded, triangular]

    if with_oracle:
        for lam in matrix.weights:
            dims = cell_dims_subalgebra(lam, p)
            for mu in matrix.weights:
                expected = dims.cell.get(mu, ZERO)
                got = oracle_cell_dim_subalgebra(lam, mu, p)
                if expected != got:
                    oracle.fail(f"lambda={lam}, mu={mu}: closed form {expected}, enumeration {got}")
        checks.append(oracle)
    checks.append(bar)
    return ConsistencyReport(p, checks)
