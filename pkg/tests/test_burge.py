"""Burge words, Burge matrices, and the tally bijection between them."""

import pytest

from cayburge.burge import (
    BurgeWord,
    column_sums,
    enumerate_burge,
    enumerate_mat,
    enumerate_weakly_increasing,
    is_burge_matrix,
    is_burge_word,
    matrix_size,
    matrix_to_word,
    row_sums,
    two_sided_brute,
    word_to_matrix,
)
from cayburge.words import AscentSetSpec, descent_set

# |Mat[n]| and |BMat[n]| anchors from shape-wise inclusion-exclusion
# (see tools/make_fixtures.py for the independent derivation)
MAT = [1, 1, 5, 33, 281, 2961]
BMAT = [1, 1, 4, 24, 196, 2016]

MAT2 = {
    ((2,),),
    ((1, 1),),
    ((1,), (1,)),
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
}


def test_worked_biword_roundtrip():
    u = (1, 1, 1, 2, 3, 3, 3, 3, 3)
    v = (3, 3, 1, 3, 4, 2, 2, 2, 2)
    m = ((1, 0, 2, 0), (0, 0, 1, 0), (0, 4, 0, 1))
    bw = BurgeWord(u, v)
    assert is_burge_word(bw)
    assert word_to_matrix(bw) == m
    assert matrix_to_word(m) == bw
    assert bw.size == 9 == matrix_size(m)


def test_is_burge_word():
    assert is_burge_word(BurgeWord((1, 2), (1, 1)))
    assert not is_burge_word(BurgeWord((1, 1), (1, 2)))
    # strict containment: plateau of v is a weak but not strict descent
    assert is_burge_word(BurgeWord((1, 1), (2, 1)), binary=True)
    assert not is_burge_word(BurgeWord((1, 1), (1, 1)), binary=True)
    # u must be weakly increasing and both words Cayley
    assert not is_burge_word(BurgeWord((2, 1), (1, 2)))
    assert not is_burge_word(BurgeWord((1, 3), (1, 1)))


def test_is_burge_matrix():
    assert is_burge_matrix(())
    assert is_burge_matrix(((2,),))
    assert not is_burge_matrix(((1, 0), (1, 0)))  # zero column
    assert not is_burge_matrix(((0, 0), (1, 1)))  # zero row
    assert not is_burge_matrix(((2,),), binary=True)
    assert not is_burge_matrix(((-1, 2),))


def test_row_and_column_sums():
    m = ((1, 0, 2, 0), (0, 0, 1, 0), (0, 4, 0, 1))
    assert row_sums(m) == (3, 1, 5)
    assert column_sums(m) == (1, 4, 3, 1)


def test_enumerate_weakly_increasing():
    assert list(enumerate_weakly_increasing(3)) == [
        (1, 1, 1),
        (1, 1, 2),
        (1, 2, 2),
        (1, 2, 3),
    ]
    for n in range(1, 8):
        got = list(enumerate_weakly_increasing(n))
        assert got == sorted(got)
        assert len(got) == 2 ** (n - 1)


def test_enumerate_burge_size_two():
    got = set(enumerate_burge(2))
    assert got == {
        BurgeWord((1, 1), (1, 1)),
        BurgeWord((1, 1), (2, 1)),
        BurgeWord((1, 2), (1, 1)),
        BurgeWord((1, 2), (1, 2)),
        BurgeWord((1, 2), (2, 1)),
    }
    assert set(enumerate_burge(2, binary=True)) == got - {BurgeWord((1, 1), (1, 1))}


def test_enumerate_burge_counts():
    for n in range(6):
        assert sum(1 for _ in enumerate_burge(n)) == MAT[n]
        assert sum(1 for _ in enumerate_burge(n, binary=True)) == BMAT[n]


def test_enumerate_mat_size_two():
    assert set(enumerate_mat(2)) == MAT2
    assert set(enumerate_mat(2, binary=True)) == MAT2 - {((2,),)}


def test_enumerate_mat_counts_and_validity():
    for n in range(6):
        for binary in (False, True):
            got = list(enumerate_mat(n, binary=binary))
            assert len(got) == (BMAT if binary else MAT)[n]
            assert len(set(got)) == len(got)
            assert all(is_burge_matrix(m, binary=binary) for m in got)


def test_word_matrix_roundtrip_exhaustive():
    for n in range(5):
        for binary in (False, True):
            for bw in enumerate_burge(n, binary=binary):
                m = word_to_matrix(bw)
                assert is_burge_matrix(m, binary=binary)
                assert matrix_to_word(m) == bw
            for m in enumerate_mat(n, binary=binary):
                assert word_to_matrix(matrix_to_word(m)) == m


def test_descents_transfer_to_matrix_shape():
    # rows tally the top word, columns the bottom word
    for bw in enumerate_burge(4):
        m = word_to_matrix(bw)
        assert len(m) == max(bw.u)
        assert len(m[0]) == max(bw.v)
        assert descent_set(bw.u) <= descent_set(bw.v)


def test_word_to_matrix_rejects_non_burge():
    with pytest.raises(ValueError):
        word_to_matrix(BurgeWord((1, 1), (1, 2)))


def test_enumerate_mat_row_filter():
    spec = AscentSetSpec(3, (1,))
    got = list(enumerate_mat(3, row_sums_spec=spec))
    assert len(got) == 8
    assert all(row_sums(m) == (1, 2) for m in got)
    bgot = list(enumerate_mat(3, binary=True, row_sums_spec=spec))
    assert all(row_sums(m) == (1, 2) for m in bgot)
    with pytest.raises(ValueError):
        list(enumerate_mat(3, row_sums_spec=AscentSetSpec(4, (1,))))


def test_two_sided_brute_size_two():
    poly = two_sided_brute(2)
    assert dict(poly.items()) == {(1, 1): 1, (1, 2): 1, (2, 1): 1, (2, 2): 2}
    bpoly = two_sided_brute(2, binary=True)
    assert dict(bpoly.items()) == {(1, 2): 1, (2, 1): 1, (2, 2): 2}


def test_two_sided_brute_totals():
    for n in range(5):
        assert two_sided_brute(n).eval(1, 1) == MAT[n]
        assert two_sided_brute(n, binary=True).eval(1, 1) == BMAT[n]


def test_two_sided_brute_empty():
    assert two_sided_brute(0).eval(1, 1) == 1
    assert dict(two_sided_brute(0).items()) == {(0, 0): 1}
