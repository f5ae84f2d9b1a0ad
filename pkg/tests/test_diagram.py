import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidsig.braid import BraidWord, closure_components, exponent_sum, is_connected
from braidsig.diagram import DiagramError, PlanarDiagram, braid_to_pd, goeritz, gordon_litherland
from braidsig.seifert import link_signature


def connected_words(strands, max_size=10):
    gens = st.integers(1, strands - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return (
        st.lists(gens, min_size=strands - 1, max_size=max_size)
        .map(lambda l: BraidWord(strands, tuple(l)))
        .filter(is_connected)
    )


any_connected = st.sampled_from([2, 3, 4]).flatmap(connected_words)


def test_edges_must_pair_up():
    with pytest.raises(DiagramError):
        PlanarDiagram(((1, 2, 3, 4),))


def test_trefoil_diagram():
    pd = braid_to_pd(BraidWord(2, (1, 1, 1)))
    assert len(pd) == 3 and pd.num_components() == 1
    assert pd.is_alternating() and pd.nugatory_crossings() == []
    assert pd.signs() == [1, 1, 1]
    assert gordon_litherland(pd) == (-2, 0)


def test_hopf_orientation_matters():
    pd = braid_to_pd(BraidWord(2, (1, 1)))
    assert gordon_litherland(pd) == (-1, 0)
    assert pd.writhe((False, True)) == -2
    assert gordon_litherland(pd, (False, True)) == (1, 0)


def test_kink_is_nugatory():
    pd = braid_to_pd(BraidWord(3, (1, 2, 2)))
    assert pd.nugatory_crossings()


@settings(max_examples=300, deadline=None)
@given(any_connected, st.sampled_from([0, 1]))
def test_gordon_litherland_matches_seifert(w, shaded):
    pd = braid_to_pd(w)
    assert gordon_litherland(pd, shaded=shaded)[0] == link_signature(w)[0]


@settings(max_examples=200, deadline=None)
@given(any_connected)
def test_diagram_bookkeeping(w):
    pd = braid_to_pd(w)
    assert pd.num_components() == closure_components(w)
    assert pd.writhe() == exponent_sum(w)
    corner, count = pd.faces()
    assert count == len(pd) + 2
    assert gordon_litherland(pd.mirror())[0] == -gordon_litherland(pd)[0]


@settings(max_examples=100, deadline=None)
@given(any_connected)
def test_goeritz_shape(w):
    pd = braid_to_pd(w)
    for shaded in (0, 1):
        g, etas, _ = goeritz(pd, shaded)
        assert (g == g.T).all()
        assert len(etas) == len(pd)
