import os
import subprocess
import sys

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import alexander_from_burau, alexander_from_seifert, charpoly_signature, same_up_to_units

from braidsig.braid import BraidWord, closure_stats, is_connected, mirror
from braidsig.seifert import (
    DisconnectedSurfaceError,
    batch_link_signature,
    link_signature,
    seifert_matrix,
    signature_nullity_of_closure,
)

D2 = (1, 2, 1, 1, 2, 1)


def connected_words(strands, max_size=9):
    gens = st.integers(1, strands - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return (
        st.lists(gens, min_size=strands - 1, max_size=max_size)
        .map(lambda l: BraidWord(strands, tuple(l)))
        .filter(is_connected)
    )


def test_trefoil():
    data = seifert_matrix(BraidWord(2, (1, 1, 1)))
    assert data.symmetrized.entries == ((-2, 1), (1, -2))
    assert link_signature(BraidWord(2, (1, 1, 1))) == (-2, 0)


@pytest.mark.parametrize(
    "strands,letters,expected",
    [
        (2, (1, 1), (-1, 0)),
        (3, (1, -2, 1, -2), (0, 0)),
        (3, D2, (-4, 0)),
        (3, D2 + (1, 2), (-6, 0)),
        (3, D2 + (1, 2, 1), (-7, 0)),
        (3, D2 + (1, 2, 1, 2), (-8, 0)),
        (3, D2 + (2, 2), (-6, 0)),
        (3, (1, 1, 1, 2, 2), (-3, 0)),
        (2, (1, -1), (0, 1)),
    ],
)
def test_known_signatures(strands, letters, expected):
    assert link_signature(BraidWord(strands, letters)) == expected


def test_t33_nullity_is_zero():
    # Delta(-1) = 4 for T(3,3), so M + M^T is non-degenerate
    w = BraidWord(3, D2)
    assert alexander_from_burau(D2, 3).subs(sp.Symbol("t"), -1) == 4
    assert signature_nullity_of_closure(w) == (-4, 0)


def test_figure_eight_betti():
    assert closure_stats(BraidWord(3, (1, -2, 1, -2))).betti == 2


def test_disconnected_surface_is_rejected_but_split_aware_signature_works():
    w = BraidWord(3, (1, 1))
    with pytest.raises(DisconnectedSurfaceError):
        seifert_matrix(w)
    # Hopf link plus an unlinked unknot
    assert link_signature(w) == (-1, 1)
    assert link_signature(BraidWord(4, (1, 1, 1, 3, 3))) == (-3, 1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4]).flatmap(lambda n: connected_words(n, 8)))
def test_alexander_polynomial_matches_burau(w):
    m = seifert_matrix(w).matrix
    assert same_up_to_units(alexander_from_seifert(m), alexander_from_burau(w.letters, w.strands))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 4]).flatmap(lambda n: connected_words(n, 10)))
def test_intersection_form_and_signature(w):
    data = seifert_matrix(w)
    m = np.asarray(data.matrix, dtype=np.int64)
    if closure_stats(w).components == 1:
        assert round(abs(np.linalg.det(m - m.T))) == 1
    assert signature_nullity_of_closure(w) == charpoly_signature(m + m.T)
    nullity = signature_nullity_of_closure(w)[1]
    assert nullity <= closure_stats(w).components - 1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4]).flatmap(lambda n: connected_words(n, 10)))
def test_mirror(w):
    s, n = link_signature(w)
    assert link_signature(mirror(w)) == (-s, n)


def test_batch_matches_single():
    words = [(1, 1, 1), (1, -2, 1, -2), D2, (2, 2, 1, -2)]
    sigs, nulls = batch_link_signature(words, 3)
    for w, s, n in zip(words, sigs, nulls):
        assert link_signature(BraidWord(3, w)) == (s, n)


def test_numpy_fallback_agrees():
    code = (
        "from braidsig import _jit; from braidsig.theorems import verify_inequality;"
        "r = verify_inequality(6, 3); print(_jit.USING_NUMBA, r['checked'], len(r['violations']))"
    )
    env = dict(os.environ, BRAIDSIG_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", str(sum(4**k - 2 * 2**k for k in range(1, 7))), "0"]
