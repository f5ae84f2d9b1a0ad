import random

import numpy as np
from oracles import charpoly_signature

from braidsig import _jit
from braidsig.kernels import batch_closure_signature, closure_signature, int_signature, strand_blocks
from braidsig.symform import diagonalize


def test_int_signature_against_oracle():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 8)
        m = np.array([rng.randint(-6, 6) for _ in range(n * n)], dtype=np.int64).reshape(n, n)
        a = m + m.T
        sig, null, ok = int_signature(a)
        assert ok
        assert (sig, null) == charpoly_signature(a)


def test_overflow_never_gives_a_wrong_answer():
    big = 3_000_000_000
    a = np.array([[big, big - 1, 1], [big - 1, big, 1], [1, 1, -big]], dtype=np.int64)
    sig, null, ok = int_signature(a)
    if ok:
        # if elimination survived it must still be right
        d = diagonalize(a.tolist())
        assert sig == sum(1 for x in d if x > 0) - sum(1 for x in d if x < 0)


def test_strand_blocks_and_split_nullity():
    assert strand_blocks(np.array([1, 1], dtype=np.int64), 3) == 2
    assert strand_blocks(np.array([1, 2], dtype=np.int64), 3) == 1
    assert closure_signature(np.array([1, 1], dtype=np.int64), 3)[:2] == (-1, 1)


def test_batch_padding():
    words = np.array([[1, 1, 1, 0], [1, -2, 1, -2]], dtype=np.int8)
    sigs, nulls, oks = batch_closure_signature(words, np.array([3, 4]), 3)
    assert sigs.tolist() == [-2, 0] and oks.all()


def test_backend_flag():
    assert isinstance(_jit.USING_NUMBA, bool)
