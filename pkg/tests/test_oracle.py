import pytest

from blobdecomp import validate_params
from blobdecomp.alcove import degree_word, wall_word_of
from blobdecomp.errors import TooLarge
from blobdecomp.laurent import ONE, T
from blobdecomp.oracle import (
    enumerate_residue_class,
    oracle_cell_dim_subalgebra,
    oracle_count_std,
    oracle_decomposition_column,
)
from blobdecomp.repdims import decomposition_column
from blobdecomp.tableaux import all_tableaux, degree_walk, residue_of_tableau, t_lambda_of_weight, weights

from conftest import FAMILIES


def test_class_is_complete_and_exact():
    # compare the pruned search with a filter over all 2^n sign strings
    for n in range(1, 11):
        p = validate_params(5, 2, n)
        for lam in weights(n):
            cls = enumerate_residue_class(lam, p)
            brute = [t for t in all_tableaux(n) if residue_of_tableau(t, p) == cls.target]
            assert sorted(t.signs for t in brute) == [m.tableau.signs for m in cls.members]


def test_fundamental_alcove_class_is_t_lambda():
    p = validate_params(5, 2, 10)
    cls = enumerate_residue_class(0, p)
    assert [m.tableau for m in cls.members] == [t_lambda_of_weight(0, 10)]


@pytest.mark.parametrize("l, m", FAMILIES)
def test_class_invariants(l, m):
    for n in range(1, 15):
        p = validate_params(l, m, n)
        for lam in weights(n):
            cls = enumerate_residue_class(lam, p)
            total = sum(oracle_cell_dim_subalgebra(lam, mu, p).at_one() for mu in weights(n))
            assert total == len(cls.members)
            for mem in cls.members:
                assert residue_of_tableau(mem.tableau, p) == cls.target
                assert mem.degree == degree_walk(mem.tableau, p).degree
                assert mem.degree == degree_word(wall_word_of(mem.tableau, lam, p))


def test_class_size_bound():
    with pytest.raises(TooLarge):
        enumerate_residue_class(1, validate_params(5, 2, 19))
    assert enumerate_residue_class(-19, validate_params(5, 2, 19), max_n=19).members


@pytest.mark.parametrize("pq, count", [((1, 1), 1), ((2, 1), 2), ((3, 3), 5), ((4, 0), 1), ((4, 2), 9)])
def test_count_std(pq, count):
    assert oracle_count_std(*pq) == count


def test_count_std_rejects_bad_shape():
    with pytest.raises(ValueError):
        oracle_count_std(1, 2)


def test_recovery_examples():
    p = validate_params(5, 2, 16)
    col = oracle_decomposition_column(-16, p)
    order = (-16, 12, -8, 4, -6, 2)
    assert [col[w] for w in order] == [ONE, T, T, T * T, T * T, T * T * T]
    p = validate_params(5, 2, 12)
    col = oracle_decomposition_column(-12, p)
    assert [col[w] for w in (-12, 8, -2)] == [ONE, T, T * T]


@pytest.mark.parametrize("l, m", [(5, 2), (7, 3)])
def test_recovery_matches_closed_form(l, m):
    for n in range(1, 15):
        p = validate_params(l, m, n)
        for lam in weights(n):
            assert oracle_decomposition_column(lam, p) == decomposition_column(lam, p)
