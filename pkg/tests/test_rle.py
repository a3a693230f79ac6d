import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rlemaw import InvalidInput
from rlemaw.rle import (SENTINEL, RleString, Run, bridge_windows, decode, encode, format_rle,
                        from_runs, interior, interior_power, is_bridge, parse_rle)

texts = st.text(alphabet="abc", max_size=30)
symbols = st.characters(blacklist_characters=SENTINEL, blacklist_categories=("Cs",))


def runs_of(text):
    return [tuple(r) for r in encode(text).runs]


@pytest.mark.parametrize("text,runs", [
    ("aacccccccbbabbbb", [("a", 2), ("c", 7), ("b", 2), ("a", 1), ("b", 4)]),
    ("", []),
    ("abc", [("a", 1), ("b", 1), ("c", 1)]),
])
def test_encode(text, runs):
    assert runs_of(text) == runs
    assert encode(text).size == len(runs)


@pytest.mark.parametrize("runs,text", [([("a", 2), ("b", 1)], "aab"), ([], ""), ([("a", 1), ("b", 4)], "abbbb")])
def test_decode(runs, text):
    assert decode(RleString(tuple(runs))) == text


def test_encode_rejects_sentinel():
    with pytest.raises(InvalidInput):
        encode("ab" + SENTINEL)


def test_bytes_are_latin1_symbols():
    rle = encode(b"\x00\x00\xff")
    assert rle.runs == (Run("\x00", 2), Run("\xff", 1))


def test_runs_must_be_maximal():
    with pytest.raises(InvalidInput):
        RleString((Run("a", 1), Run("a", 2)))
    with pytest.raises(InvalidInput):
        RleString((Run("a", 0),))
    assert from_runs([("a", 1), ("a", 2), ("b", 1)]).runs == (Run("a", 3), Run("b", 1))


@given(texts)
def test_round_trip(text):
    assert decode(encode(text)) == text


@given(st.text(alphabet=symbols, max_size=40))
def test_round_trip_any_symbols(text):
    rle = encode(text)
    assert decode(rle) == text
    assert parse_rle(format_rle(rle)) == rle
    assert "\n" not in format_rle(rle)


RUNS_T = encode("aacccccccbbabbbb").with_sentinels()


def test_interior_chain():
    assert decode(interior(RUNS_T)) == "acccccccbbab"
    assert decode(interior(encode("acccccccbbab"))) == "cbba"
    assert interior(encode("ab")).runs == ()
    assert decode(interior_power(RUNS_T, 3)) == "b"
    assert interior_power(RUNS_T, 4).runs == ()
    assert interior_power(RUNS_T, 1) == interior(RUNS_T)


def test_b4_windows():
    got = {tuple(o.bridge.runs) for o in bridge_windows(RUNS_T, 4)}
    want = {
        ((SENTINEL, 1), ("a", 2), ("c", 7), ("b", 1)),
        (("a", 1), ("c", 7), ("b", 2), ("a", 1)),
        (("c", 1), ("b", 2), ("a", 1), ("b", 1)),
        (("b", 1), ("a", 1), ("b", 4), (SENTINEL, 1)),
    }
    assert got == want


def test_two_run_windows_include_sentinels():
    got = [decode(o.bridge) for o in bridge_windows(encode("ab"), 2)]
    assert got == [SENTINEL + "a", "ab", "b" + SENTINEL]


def test_interior_window_keeps_middle_run():
    # the middle run stays whole: ac^3b, not acb
    interior_windows = [o for o in bridge_windows(encode("acccb"), 3) if SENTINEL not in decode(o.bridge)]
    assert [decode(o.bridge) for o in interior_windows] == ["acccb"]


def bridge_substrings(text, ell):
    """Bridges with ell runs among all substrings of $text$.

    The one-character end runs differ from their neighbours, so the inner
    runs of such a substring are always whole runs of the text.
    """
    padded = SENTINEL + text + SENTINEL
    out = set()
    for i, j in itertools.combinations(range(len(padded) + 1), 2):
        runs = tuple(Run(s, len(list(g))) for s, g in itertools.groupby(padded[i:j]))
        if len(runs) == ell and runs[0].exponent == 1 and runs[-1].exponent == 1:
            out.add(runs)
    return out


@pytest.mark.parametrize("text", ["".join(p) for n in range(9) for p in itertools.product("ab", repeat=n)][::7]
                         + ["aacccccccbbabbbb", "abcabcaab", "aabbaabbbab", "acccb"])
def test_windows_match_substring_scan(text):
    for ell in range(2, 7):
        got = {tuple(o.bridge.runs) for o in bridge_windows(encode(text), ell)}
        assert got == bridge_substrings(text, ell), (text, ell)
        assert all(is_bridge(o.bridge) for o in bridge_windows(encode(text), ell))


def test_aggregate_counts_occurrences():
    occ = bridge_windows(encode("abcabcab"), 3, aggregate=True)
    counts = {decode(o.bridge): o.count for o in occ}
    assert counts["abc"] == 2 and counts["bca"] == 2 and counts["cab"] == 2


@pytest.mark.parametrize("bad", ["a", "a^", "a^0", "a^x", "a^2b", "\\"])
def test_parse_rle_errors(bad):
    with pytest.raises(InvalidInput):
        parse_rle(bad)


def test_parse_rle_merges_and_escapes():
    assert decode(parse_rle("a^2 a^1 \\^^1 \\s^2 \\u{41}^1")) == "aaa^  A"
    assert parse_rle("") == RleString()


@given(st.text(alphabet="abc", max_size=14), st.integers(2, 6))
def test_windows_match_substring_scan_random(text, ell):
    assert {tuple(o.bridge.runs) for o in bridge_windows(encode(text), ell)} == bridge_substrings(text, ell)
