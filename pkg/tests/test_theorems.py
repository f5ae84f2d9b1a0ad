import pytest

from braidsig.braid import BraidWord
from braidsig.garside3 import MurasugiClass
from braidsig.seifert import link_signature
from braidsig.theorems import (
    EXCEPTIONS,
    crossing_number_3braid,
    link_report,
    merge_reports,
    murasugi_erle_sigma,
    positive_predicate,
    smooth,
    t2c_smoothing_candidates,
    verify_inequality,
    verify_main_theorem,
    verify_positivity,
    verify_signature_formula,
    verify_smoothing_candidates,
    verify_smoothing_lemma,
    verify_t2c_theorem,
)
from braidsig.twobridge import parse_conway

D2 = (1, 2, 1, 1, 2, 1)


def W(*letters):
    return BraidWord(3, letters)


@pytest.mark.parametrize(
    "cls,sigma",
    [(MurasugiClass(0, 1), -4), (MurasugiClass(5, 1, q=3), -7), (MurasugiClass(3, 1), -7), (MurasugiClass(0, 0), 0)],
)
def test_murasugi_erle(cls, sigma):
    assert murasugi_erle_sigma(cls) == sigma


def test_positive_predicate():
    assert positive_predicate(MurasugiClass(4, 1, p=2))
    assert not positive_predicate(MurasugiClass(4, 1, p=3))
    assert not positive_predicate(MurasugiClass(0, -1))


@pytest.mark.parametrize(
    "word,cr,index,name",
    [
        (W(*D2), 6, 3, "T(3,3)"),
        (W(1, 2), 0, 1, "Unknot"),
        (W(*D2, -1, 2, 2, 2), 7, 2, "T(2,7)"),
        (W(*D2, 2, 2), 8, 3, "Pretzel(-2,2,4)"),
        (W(1, 1, 1, 2, 2), 5, 3, "ConnectedSum(T(2,2),T(2,3))"),
    ],
)
def test_crossing_number(word, cr, index, name):
    data = crossing_number_3braid(word)
    assert (data.cr, data.braid_index, data.name) == (cr, index, name)


def test_figure_eight_is_homogeneous():
    data = crossing_number_3braid(W(1, -2, 1, -2))
    assert data.cr == 4 and data.status == "exact"


def test_split_word_raises_and_reports():
    with pytest.raises(ValueError):
        crossing_number_3braid(W(1, 1))
    rep = link_report(W(1, 1))
    assert rep.name.startswith("SplitSum") and rep.components == 3


def test_link_report_two_bridge():
    rep = link_report(parse_conway("C(2,1,1,1,2)@5p"))
    assert (rep.crossing_number, rep.sigma, rep.components) == (7, 0, 1)


def test_smooth():
    assert smooth(BraidWord(2, (1, 1, 1)), 0).letters == (1, 1)
    assert smooth(BraidWord(2, (1, 1)), 1).letters == (1,)
    with pytest.raises(IndexError):
        smooth(BraidWord(2, (1,)), 3)
    before = link_signature(W(*D2))[0]
    for k in range(6):
        assert abs(link_signature(smooth(W(*D2), k))[0] - before) <= 1


def test_smoothing_candidates():
    names = lambda c: [x["name"] for x in t2c_smoothing_candidates(c)["candidates"]]  # noqa: E731
    assert names(3) == ["T(2,2)"]
    assert names(4) == ["T(2,3)", "ConnectedSum(T(2,2),T(2,2))"]
    assert names(5) == ["T(2,4)", "ConnectedSum(T(2,2),T(2,3))"]
    rep = verify_smoothing_candidates(12)
    assert rep["violations"] == []
    assert all(x["realized"] for item in rep["details"]["lists"] for x in item["candidates"])


def test_small_inequality_cases():
    rep = verify_inequality(1, 2)
    assert rep["violations"] == [] and rep["details"]["equality_words"] == []
    rep = verify_inequality(3, 2)
    assert rep["details"]["equality_words"] == ["1 1", "-1 -1", "1 1 1", "-1 -1 -1"]


def test_t2c_chain():
    rep = verify_smoothing_lemma(4)
    assert rep["details"]["t2c_chain_sigma"][:5] == [0, -1, -2, -3, -4]


def test_exceptions():
    assert EXCEPTIONS == {(1, 0), (2, 0), (3, 0), (3, 1), (3, -1), (5, 0)}


@pytest.mark.parametrize(
    "run",
    [
        lambda **kw: verify_inequality(7, 3, **kw),
        lambda **kw: verify_inequality(6, 4, samples=2000, **kw),
        lambda **kw: verify_main_theorem(10, **kw),
        lambda **kw: verify_t2c_theorem(10, **kw),
        lambda **kw: verify_smoothing_lemma(5, samples=300, **kw),
        lambda **kw: verify_signature_formula(**kw),
        lambda **kw: verify_positivity(**kw),
    ],
)
def test_sharding_merges_to_the_full_report(run):
    full = run()
    parts = [run(shards=3, shard_index=i) for i in range(3)]
    assert merge_reports(parts) == full


def test_reports_are_deterministic():
    assert verify_inequality(6, 4, samples=500, seed=7) == verify_inequality(6, 4, samples=500, seed=7)
