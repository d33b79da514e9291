import json
from math import comb

import pytest

from blobdecomp import LaurentPoly, validate_params
from blobdecomp.alcove import count_std_two_column, m_set, mu_partition
from blobdecomp.laurent import ONE, T, ZERO
from blobdecomp.repdims import (
    DecompMatrix,
    cell_dim_full,
    cell_dims_subalgebra,
    decomposition_column,
    decomposition_matrix,
    simple_dims_full,
    simple_dims_subalgebra,
    verify_consistency,
)
from blobdecomp.tableaux import Bitableau, degree_g, weight_key, weights

from conftest import FAMILIES


def polys(*texts):
    return [LaurentPoly.parse(s) for s in texts]


def test_kappa_two_instance():
    p = validate_params(5, 2, 16)
    dims = cell_dims_subalgebra(-16, p)
    assert dims.index.kappa == 2
    assert dims.in_index_order("cell") == polys("1", "t", "t", "t^2", "t^2+1", "t^3+t")
    assert dims.in_index_order("simple") == polys("1", "0", "0", "0", "1", "0")
    col = decomposition_column(-16, p)
    assert [col[w] for w in dims.index.entries] == polys("1", "t", "t", "t^2", "t^2", "t^3")


def test_wall_instance():
    p = validate_params(5, 2, 12)
    dims = cell_dims_subalgebra(-12, p)
    assert dims.index.entries == (-12, 8, -2) and dims.index.on_wall
    assert dims.in_index_order() == polys("1", "t", "t^2+1")
    col = decomposition_column(-12, p)
    assert [col[w] for w in dims.index.entries] == [ONE, T, T * T]


def test_fundamental_alcove_is_trivial():
    p = validate_params(5, 2, 10)
    dims = cell_dims_subalgebra(0, p)
    assert dims.cell == {0: ONE} and dims.simple == {0: ONE}
    col = decomposition_column(0, p)
    assert col[0] == ONE and sum(1 for v in col.values() if v) == 1


def test_kappa_zero_instance():
    p = validate_params(5, 2, 6)
    dims = cell_dims_subalgebra(-4, p)
    assert len(dims.index) == 2
    assert dims.in_index_order() == [ONE, T]
    assert dims.in_index_order("simple") == [ONE, ZERO]


def test_kappa_three_simple():
    p = validate_params(5, 2, 19)
    simple = simple_dims_subalgebra(-19, p)
    idx = m_set(-19, p)
    assert [simple[w].constant_term() for w in idx.entries] == [1, 0, 0, 0, 2, 0, 0, 0]


@pytest.mark.parametrize("l, m", FAMILIES)
def test_subalgebra_laws(l, m):
    for n in range(1, 17):
        p = validate_params(l, m, n)
        for lam in weights(n):
            dims = cell_dims_subalgebra(lam, p)
            idx = dims.index
            assert dims.cell[lam] == ONE and dims.simple[lam] == ONE
            for w in idx.entries:
                assert dims.cell[w].is_nonnegative() and dims.cell[w].valuation() >= 0
                c = dims.simple[w].constant_term()
                assert dims.simple[w] == c and c >= 0
            if len(idx) == 1 or (not idx.on_wall and idx.kappa == 0):
                continue
            step = 2 if idx.on_wall else 4
            col = decomposition_column(lam, p)
            for k, w in enumerate(idx.entries, 1):
                j = (k - 1) // step
                expected = sum(count_std_two_column(mu_partition(idx.kappa, i, j)) for i in range(j + 1))
                assert dims.cell[w].at_one() == expected
                # the column entry has the top degree of the truncated cell module
                assert col[w].is_monomial() and col[w].degree() == dims.cell[w].degree()


@pytest.mark.parametrize("l, m", FAMILIES)
def test_column_support_and_shape(l, m):
    for n in range(1, 17):
        p = validate_params(l, m, n)
        for lam in weights(n):
            col = decomposition_column(lam, p)
            assert set(col) == set(weights(n))
            support = {w for w, v in col.items() if v}
            assert support == set(m_set(lam, p).entries)
            for mu in support - {lam}:
                assert col[mu].is_monomial() and col[mu].valuation() >= 1
                assert weight_key(mu) > weight_key(lam)


def test_off_wall_exponents():
    p = validate_params(5, 2, 19)
    idx = m_set(-19, p)
    col = decomposition_column(-19, p)
    assert [col[w].degree() for w in idx.entries] == [0, 1, 1, 2, 2, 3, 3, 4]


def test_wall_exponents():
    for n in range(1, 15):
        p = validate_params(5, 2, n)
        for lam in weights(n):
            idx = m_set(lam, p)
            if idx.on_wall and len(idx) > 1:
                col = decomposition_column(lam, p)
                assert [col[w] for w in idx.entries] == [LaurentPoly.monomial(k) for k in range(len(idx))]


def test_matrix_n2_is_identity():
    p = validate_params(5, 2, 2)
    mat = decomposition_matrix(p)
    assert mat.weights == (-2, 0, 2)
    for mu in mat.weights:
        for lam in mat.weights:
            assert mat.entry(mu, lam) == (ONE if mu == lam else ZERO)
    full = simple_dims_full(p)
    assert all(full[w] == cell_dim_full(w, p) for w in mat.weights)


def test_matrix_column_support_n13():
    mat = decomposition_matrix(validate_params(5, 2, 13))
    assert {mu for mu in mat.weights if mat.entry(mu, -13)} == {-13, -11, -3, -1, 7, 9}


def test_json_round_trip():
    mat = decomposition_matrix(validate_params(5, 2, 9))
    text = mat.to_json()
    doc = json.loads(text)
    assert set(doc) == {"params", "weights", "columns"}
    assert doc["params"] == {"n": 9, "l": 5, "m": 2}
    assert [c["lambda"] for c in doc["columns"]] == sorted(mat.weights)
    again = DecompMatrix.from_dict(doc)
    assert again == mat
    assert again.to_json() == text


def test_csv_layout():
    mat = decomposition_matrix(validate_params(5, 2, 6))
    rows = mat.to_csv().splitlines()
    assert rows[0] == "mu,lambda,poly"
    assert len(rows) == 1 + len(mat.weights) ** 2
    assert "2,-6,t" in rows


def test_cell_dim_full():
    p = validate_params(5, 2, 6)
    for a in range(7):
        mu = 2 * a - 6
        assert cell_dim_full(mu, p).at_one() == comb(6, a)
    assert cell_dim_full(6, p) == LaurentPoly.monomial(degree_g(Bitableau("++++++"), p))
    assert cell_dim_full(4, p).coeff(-1) >= 1


def test_simple_dims_full_minimum_and_t1_sum_rule():
    p = validate_params(5, 2, 11)
    mat = decomposition_matrix(p)
    full = simple_dims_full(p, mat)
    bottom = min(mat.weights, key=weight_key)
    assert full[bottom] == cell_dim_full(bottom, p)
    for mu in mat.weights:
        a = (p.n + mu) // 2
        assert sum(mat.entry(mu, lam).at_one() * full[lam].at_one() for lam in mat.weights) == comb(p.n, a)


@pytest.mark.parametrize("params", [(5, 2, 2), (5, 2, 13), (7, 3, 14)])
def test_verify_consistency(params):
    report = verify_consistency(validate_params(*params))
    assert report.passed, "\n".join(report.lines())
    assert all(line.startswith(("[ok]", "[WARN]", "    ")) for line in report.lines())
