from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import charpoly_signature

from braidsig.symform import NotSymmetricError, SymBilinearForm, diagonalize, signature_nullity


@pytest.mark.parametrize(
    "mat,expected",
    [
        ([[-2, 1], [1, -2]], (-2, 0)),
        ([[0, 1], [1, 0]], (0, 0)),
        ([[0]], (0, 1)),
        (np.zeros((0, 0), dtype=np.int64), (0, 0)),
        ([[1, 0, 0], [0, 0, 0], [0, 0, -5]], (0, 1)),
    ],
)
def test_examples(mat, expected):
    assert signature_nullity(mat) == expected


def test_rejects_asymmetric():
    with pytest.raises(NotSymmetricError):
        SymBilinearForm.from_array([[1, 2], [0, 1]])


def test_diagonal_is_congruent_count():
    d = diagonalize([[0, 1], [1, 0]])
    assert sorted(d) == [Fraction(-1), Fraction(1)]


def test_negation():
    f = SymBilinearForm.from_array([[2, 1], [1, -3]])
    assert signature_nullity(-f) == tuple(x * s for x, s in zip(signature_nullity(f), (-1, 1)))


def test_large_entries_fall_back_exactly():
    # entries big enough that fraction-free elimination would overflow int64
    big = 10**12
    m = np.array([[big, big - 1, 3], [big - 1, big, 7], [3, 7, -big]], dtype=object)
    assert signature_nullity(m) == charpoly_signature(m.tolist())


sym = st.integers(0, 7).flatmap(
    lambda n: st.lists(st.integers(-5, 5), min_size=n * n, max_size=n * n).map(
        lambda v: (lambda a: a + a.T)(np.array(v, dtype=np.int64).reshape(n, n))
    )
)


@settings(max_examples=300, deadline=None)
@given(sym)
def test_matches_charpoly_oracle(a):
    assert signature_nullity(a) == charpoly_signature(a)


@settings(max_examples=200, deadline=None)
@given(sym, st.data())
def test_direct_sum_adds(a, data):
    b = data.draw(sym)
    n, m = len(a), len(b)
    s = np.zeros((n + m, n + m), dtype=np.int64)
    s[:n, :n], s[n:, n:] = a, b
    sa, sb = signature_nullity(a), signature_nullity(b)
    assert signature_nullity(s) == (sa[0] + sb[0], sa[1] + sb[1])
