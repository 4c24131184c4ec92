from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from delsub.balls import (
    ADJACENT_TRANSPOSITION,
    GENERIC,
    SINGLE_FLIP,
    apply_del_sub,
    ball_intersection,
    classify_pair,
    constrained_deletion_matches,
    decompose_intersection,
    deletion_ball,
    ds_ball,
    is_bad,
    preimage_ball,
    substitution_ball,
    witnesses,
)
from delsub.words import run_count


def all_words(n):
    return ["".join(bits) for bits in product("01", repeat=n)]


@st.composite
def distinct_pairs(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    x = draw(st.text(alphabet="01", min_size=n, max_size=n))
    y = draw(st.text(alphabet="01", min_size=n, max_size=n).filter(lambda w: w != x))
    return x, y


def test_deletion_ball_example():
    assert deletion_ball("0110") == ["010", "011", "110"]


def test_ds_ball_small_example():
    assert ds_ball("010") == ["00", "01", "10", "11"]


def test_balls_reject_empty_word():
    with pytest.raises(ValueError):
        deletion_ball("")
    with pytest.raises(ValueError):
        ds_ball("")


@given(st.text(alphabet="01", min_size=1, max_size=12))
def test_ball_size_laws(x):
    assert len(deletion_ball(x)) == run_count(x)
    assert len(substitution_ball(x)) == len(x) + 1
    assert x in substitution_ball(x)


@given(st.text(alphabet="01", min_size=1, max_size=8))
def test_ds_ball_matches_apply_del_sub(x):
    n = len(x)
    generated = {
        apply_del_sub(x, i, sub)
        for i in range(1, n + 1)
        for sub in [None, *range(1, n)]
    }
    assert sorted(generated) == ds_ball(x)


def test_apply_del_sub_examples():
    assert apply_del_sub("0110", 1, 2) == "100"
    assert apply_del_sub("0110", 4, None) == "011"
    assert apply_del_sub("00", 2, 1) == "1"


def test_apply_del_sub_rejects_bad_positions():
    with pytest.raises(ValueError):
        apply_del_sub("0110", 0, None)
    with pytest.raises(ValueError):
        apply_del_sub("0110", 5, None)
    with pytest.raises(ValueError):
        apply_del_sub("0110", 1, 4)
    with pytest.raises(ValueError):
        apply_del_sub("0", 1, 1)


def test_ball_intersection_examples():
    assert ball_intersection("0110", "1010", "del") == ["010", "110"]
    assert ball_intersection("0110", "1010", "sub") == ["0010", "1110"]
    assert ball_intersection("0011", "1100", "sub") == []


def test_ball_intersection_validation():
    with pytest.raises(ValueError):
        ball_intersection("01", "01", "del")
    with pytest.raises(ValueError):
        ball_intersection("01", "011", "del")
    with pytest.raises(ValueError):
        ball_intersection("01", "10", "nope")


@given(distinct_pairs())
def test_ball_intersection_is_set_intersection(pair):
    x, y = pair
    for kind, builder in [
        ("del", deletion_ball),
        ("sub", substitution_ball),
        ("ds", ds_ball),
    ]:
        expected = sorted(set(builder(x)) & set(builder(y)))
        assert ball_intersection(x, y, kind) == expected


def test_classify_pair_examples():
    cls = classify_pair("0110", "1010")
    assert (cls.d, cls.s, cls.case) == (2, 2, ADJACENT_TRANSPOSITION)
    assert (cls.prefix, cls.alpha, cls.suffix) == ("", "0", "10")

    cls = classify_pair("0000", "0100")
    assert (cls.d, cls.s, cls.case) == (1, 2, SINGLE_FLIP)

    cls = classify_pair("0011", "1100")
    assert (cls.d, cls.s, cls.case) == (0, 0, GENERIC)


@given(distinct_pairs())
def test_classify_pair_counts_and_windows(pair):
    x, y = pair
    cls = classify_pair(x, y)
    assert cls.d == len(ball_intersection(x, y, "del"))
    assert cls.s == len(ball_intersection(x, y, "sub"))
    assert cls.prefix + cls.x_window + cls.suffix == x
    assert cls.prefix + cls.y_window + cls.suffix == y


def test_decompose_intersection_examples():
    dec = decompose_intersection("0110", "1010")
    assert (dec.size_s, dec.size_d, dec.size_overlap) == (6, 5, 4)
    assert (dec.size_b_extra, dec.total) == (0, 7)

    dec = decompose_intersection("010101", "100101")
    assert dec.total == 15 == 4 * 6 - 9


@given(distinct_pairs(min_n=2, max_n=8))
def test_decompose_total_matches_ball_intersection(pair):
    x, y = pair
    dec = decompose_intersection(x, y)
    assert dec.total == len(ball_intersection(x, y, "ds"))
    assert dec.total == dec.size_b_extra + dec.size_d + dec.size_s - dec.size_overlap


def test_witness_examples():
    assert witnesses("00", "1") == [(1, 1), (2, 1)]
    assert witnesses("00", "0") == [(1, None), (2, None)]
    assert witnesses("010", "00") == [(1, 1), (2, None), (3, 2)]


def test_witnesses_rejects_wrong_length():
    with pytest.raises(ValueError):
        witnesses("00", "00")


@given(st.text(alphabet="01", min_size=2, max_size=9))
def test_witnesses_cover_exactly_the_ball(x):
    for z in ds_ball(x):
        found = witnesses(x, z)
        assert found
        for i, sub in found:
            assert apply_del_sub(x, i, sub) == z
    outside = set(all_words(len(x) - 1)) - set(ds_ball(x))
    for z in outside:
        assert witnesses(x, z) == []


def test_is_bad_needs_shared_element():
    with pytest.raises(ValueError):
        is_bad("0011", "1100", "011")
    with pytest.raises(ValueError):
        is_bad("0011", "1100", "000", convention="sideways")


def test_is_bad_generic_pair():
    # 000 reaches 0011 only through late deletions with an early flip and
    # 1100 only through early deletions, so a flip escapes the interval.
    assert not is_bad("0011", "1100", "000", convention="pre")
    assert not is_bad("0011", "1100", "000", convention="post")


@settings(max_examples=60)
@given(distinct_pairs(min_n=3, max_n=8))
def test_is_bad_symmetry_and_convention_order(pair):
    x, y = pair
    for z in ball_intersection(x, y, "ds"):
        for conv in ("pre", "post"):
            assert is_bad(x, y, z, conv) == is_bad(y, x, z, conv)
        if is_bad(x, y, z, "pre"):
            assert is_bad(x, y, z, "post")


def test_preimage_ball_examples():
    assert preimage_ball("00", 3) == sorted(set(all_words(3)) - {"111"})
    assert preimage_ball("0", 2) == all_words(2)


@given(st.integers(2, 8), st.data())
def test_preimage_ball_duality(n, data):
    z = data.draw(st.text(alphabet="01", min_size=n - 1, max_size=n - 1))
    members = set(preimage_ball(z, n))
    for x in all_words(n):
        assert (x in members) == (z in set(ds_ball(x)))


def test_constrained_deletion_matches_examples():
    assert constrained_deletion_matches("00", "010") == ["00", "01", "10"]
    assert constrained_deletion_matches("11", "000") == []
    assert constrained_deletion_matches("0", "01") == ["0", "1"]


@given(st.integers(2, 9), st.data())
def test_constrained_deletion_matches_is_small(n, data):
    u = data.draw(st.text(alphabet="01", min_size=n - 1, max_size=n - 1))
    v = data.draw(st.text(alphabet="01", min_size=n, max_size=n))
    found = constrained_deletion_matches(u, v)
    assert len(found) <= 3
    if len(found) == 3:
        assert u in found
