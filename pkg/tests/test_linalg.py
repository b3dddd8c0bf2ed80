import random
from fractions import Fraction

import pytest

from facetray import (PreconditionError, delta_matrix, gram, is_psd, rank,
                      rank_factorize, rat_from_str, rat_to_str, symmat,
                      symmat_from_json, symmat_to_json)
from facetray.errors import ParseError

from _data import SEVEN_RANK3_GRAM, SEVEN_RANK3_MATRIX


def identity(k):
    return symmat([[1 if i == j else 0 for j in range(k)] for i in range(k)])


def test_rank_examples():
    assert rank(identity(4).entries) == 4
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank(delta_matrix(4, {2, 3, 4}).entries) == 2
    assert rank([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]) == 1


def test_rank_invariances():
    rng = random.Random(5)
    for _ in range(20):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        a = [[rng.randint(-4, 4) for _ in range(m)] for _ in range(n)]
        r = rank(a)
        rows = a[:]
        rng.shuffle(rows)
        cols = list(range(m))
        rng.shuffle(cols)
        shuffled = [[row[c] for c in cols] for row in rows]
        transposed = [[a[i][j] for i in range(n)] for j in range(m)]
        assert rank(shuffled) == r
        assert rank(transposed) == r


def test_is_psd_examples():
    assert is_psd(delta_matrix(4, {2}))
    assert not is_psd(symmat([[1, 0], [0, -1]]))
    assert not is_psd(symmat([[1, 2], [2, 1]]))
    assert not is_psd(symmat([[0, 1], [1, 0]]))  # zero pivot, nonzero row
    assert is_psd(symmat([[0, 0], [0, 1]]))
    assert is_psd(symmat([[0]]))


def test_gram_examples():
    vecs = [(0, 1), (1, -1), (1, 0), (1, 1)]
    assert gram(vecs) == delta_matrix(4, {2, 3, 4})
    basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert gram(basis) == identity(3)
    assert gram(SEVEN_RANK3_GRAM) == SEVEN_RANK3_MATRIX
    assert rank(SEVEN_RANK3_MATRIX.entries) == 3


def test_gram_is_always_psd_with_span_rank():
    rng = random.Random(11)
    for _ in range(25):
        n, k = rng.randint(1, 6), rng.randint(1, 4)
        vecs = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(n)]
        g = gram(vecs)
        assert is_psd(g)
        assert rank(g.entries) == rank(vecs)


def test_rank_factorize_examples():
    f = rank_factorize(identity(3))
    assert f.k == 3 and f.pivots == (1, 1, 1)
    assert f.reconstruct() == identity(3)

    f = rank_factorize(delta_matrix(4, {2, 3, 4}))
    assert f.k == 2
    assert f.reconstruct() == delta_matrix(4, {2, 3, 4})

    ones = symmat([[1, 1, 1], [1, 1, 1], [1, 1, 1]])
    f = rank_factorize(ones)
    assert f.k == 1
    assert f.reconstruct() == ones

    with pytest.raises(PreconditionError):
        rank_factorize(symmat([[1, 0], [0, -1]]))


def test_rank_factorize_random_gram_matrices():
    rng = random.Random(23)
    for _ in range(25):
        n, k = rng.randint(1, 6), rng.randint(1, 4)
        vecs = [[Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                 for _ in range(k)] for _ in range(n)]
        g = gram(vecs)
        f = rank_factorize(g)
        assert f.reconstruct() == g
        assert f.k == rank(g.entries)
        assert all(d > 0 for d in f.pivots)


def test_symmat_validation():
    with pytest.raises(ValueError):
        symmat([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        symmat([[1, 2, 3], [2, 1, 1]])
    m = symmat([["1/2", -1], [-1, 2]])
    assert m.entry(1, 1) == Fraction(1, 2)
    assert m.trace() == Fraction(5, 2)
    assert (m + m).entry(1, 2) == -2
    assert m.scaled(2).entry(1, 1) == 1


def test_rational_strings():
    assert rat_to_str(Fraction(3)) == "3"
    assert rat_to_str(Fraction(-2, 6)) == "-1/3"
    assert rat_from_str("7/2") == Fraction(7, 2)
    for bad in ("x", "1/0", 3):
        with pytest.raises(ParseError):
            rat_from_str(bad)


def test_symmat_json_round_trip():
    m = delta_matrix(5, {1, 2, 3})
    assert symmat_from_json(symmat_to_json(m)) == m
    with pytest.raises(ParseError):
        symmat_from_json({"p": 2, "entries": [["1", "2"], ["3", "4"]]})
    with pytest.raises(ParseError):
        symmat_from_json({"p": 2, "entries": [["1"]]})
