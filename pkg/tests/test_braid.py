import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidsig.braid import (
    BraidParseError,
    BraidWord,
    closure_stats,
    free_reduce,
    markov_reduce,
    mirror,
    parse_braid,
    split_blocks,
    word_flags,
)


def words(strands=3, max_size=10):
    gens = st.integers(1, strands - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(gens, max_size=max_size).map(lambda l: BraidWord(strands, tuple(l)))


@pytest.mark.parametrize(
    "text,strands,letters",
    [
        ("1 2 1", 3, (1, 2, 1)),
        ("B2: 1 1 1", 2, (1, 1, 1)),
        ("1 -2 1 -2", 3, (1, -2, 1, -2)),
        ("B4: 1 3", 4, (1, 3)),
        ("B3:", 3, ()),
    ],
)
def test_parse(text, strands, letters):
    w = parse_braid(text)
    assert (w.strands, w.letters) == (strands, letters)


@pytest.mark.parametrize("text,token", [("1 0 2", "0"), ("1 x", "x"), ("B2: 1 2", "2"), ("", None)])
def test_parse_errors_name_the_token(text, token):
    with pytest.raises(BraidParseError) as info:
        parse_braid(text)
    if token is not None:
        assert info.value.token == token


@given(words())
def test_format_round_trip(w):
    assert parse_braid(str(w)) == w


def test_closure_stats_examples():
    s = closure_stats(BraidWord(3, (1, 2, 1, 1, 2, 1)))
    assert (s.components, s.seifert_circles, s.crossings, s.euler_char, s.betti) == (3, 3, 6, -3, 4)
    s = closure_stats(BraidWord(1, ()))
    assert (s.components, s.crossings) == (1, 0)
    s = closure_stats(BraidWord(2, (1, 1, 1)))
    assert (s.components, s.seifert_circles, s.crossings, s.betti) == (1, 2, 3, 2)


def test_mirror_and_flags():
    assert mirror(BraidWord(3, (1, 2, 1))).letters == (-1, -2, -1)
    assert mirror(BraidWord(3, ())).letters == ()
    assert word_flags(BraidWord(3, (1, 2, 1))) == (True, True, 3)
    assert word_flags(BraidWord(3, (1, -2, 1, -2))) == (False, True, 0)
    assert word_flags(BraidWord(3, (1, -1))) == (False, False, 0)


@pytest.mark.parametrize("letters,reduced", [((1, -1, 2), (2,)), ((1, 2, -2, -1), ()), ((1, 2, 1), (1, 2, 1))])
def test_free_reduce(letters, reduced):
    assert free_reduce(BraidWord(3, letters)).letters == reduced


@given(words())
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(a != -b for a, b in zip(r.letters, r.letters[1:]))


@given(words(4))
def test_euler_characteristic_bookkeeping(w):
    s = closure_stats(w)
    if s.connected_surface:
        assert s.euler_char == s.seifert_circles - s.crossings
        assert s.betti == 1 - s.euler_char
    else:
        assert s.euler_char is None and s.betti is None


def test_markov_reduce():
    assert markov_reduce(BraidWord(3, (1, 2))) == [BraidWord(1, ())]
    assert len(markov_reduce(BraidWord(3, (1, -1)))) == 3
    assert markov_reduce(BraidWord(4, (1, 1, 3, 3))) == [BraidWord(2, (1, 1))] * 2
    assert markov_reduce(BraidWord(3, (1, 1, 1, 2))) == [BraidWord(2, (1, 1, 1))]


def test_split_blocks():
    assert split_blocks(BraidWord(4, (1, 1, 3, 3))) == [BraidWord(2, (1, 1))] * 2


def test_word_operations():
    w = BraidWord(3, (1, -2))
    assert w.inverse().letters == (2, -1)
    assert w.rotate(1).letters == (-2, 1)
    assert w.conjugate(BraidWord(3, (2,))).letters in {(2, 1, -2, -2), (-2, 1, -2, 2)}
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
