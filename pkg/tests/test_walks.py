import pytest

from bgtilt import (
    NotAWalk,
    ParseError,
    SignMismatch,
    check_pair,
    enumerate_admissible_walks,
    is_admissible,
    is_admissible_set,
    make_signed_walk,
)

from conftest import load


def test_make_signed_walk_from_text():
    g = load("line3")
    W = make_signed_walk(g, "a+ b- c+")
    assert len(W) == 3
    assert str(W) == "a+ b- c+"


def test_signs_after_first_may_be_omitted():
    g = load("line3")
    assert make_signed_walk(g, "a+ b c") == make_signed_walk(g, "a+ b- c+")


def test_walk_is_canonical_under_involution():
    g = load("line3")
    W = make_signed_walk(g, "a+ b- c+")
    rev = make_signed_walk(g, "cb+ bb- ab+")
    assert W == rev
    assert str(W) == str(rev)


def test_round_trip_through_str():
    g = load("triangle")
    W = make_signed_walk(g, "a+ b- c+")
    assert make_signed_walk(g, str(W)) == W


def test_rejects_non_walk():
    g = load("line3")
    with pytest.raises(NotAWalk):
        make_signed_walk(g, "a+ c-")


def test_rejects_unknown_half_edge():
    g = load("line3")
    with pytest.raises(ParseError):
        make_signed_walk(g, "zz+")


def test_rejects_non_alternating_signs():
    g = load("line3")
    with pytest.raises(SignMismatch):
        make_signed_walk(g, "a+ b+")


def test_single_edge_walks_are_admissible(g1):
    assert is_admissible(make_signed_walk(g1, "a+"))
    assert is_admissible(make_signed_walk(g1, "a-"))


def test_check_pair_is_symmetric():
    g = load("triangle")
    W = make_signed_walk(g, "a+ b-")
    W2 = make_signed_walk(g, "c+")
    assert (check_pair(W, W2).compatible == check_pair(W2, W).compatible)


def test_opposite_stalks_on_same_edge_are_incompatible(g1):
    plus = make_signed_walk(g1, "a+")
    minus = make_signed_walk(g1, "a-")
    report = check_pair(plus, minus)
    assert not report.sign_ok
    assert not report.compatible


def test_admissible_set_on_line2():
    g = load("line2")
    pair = [make_signed_walk(g, "a+"), make_signed_walk(g, "a+ b-")]
    assert is_admissible_set(pair)
    bad = [make_signed_walk(g, "a+"), make_signed_walk(g, "b-")]
    assert not is_admissible_set(bad)


def test_enumeration_counts_and_stabilization():
    g = load("line2")
    walks, stabilized = enumerate_admissible_walks(g, 2)
    assert len(walks) == 6
    assert stabilized
    # prefix enumeration finds the four stalks
    walks1, stabilized1 = enumerate_admissible_walks(g, 1)
    assert len(walks1) == 4
    assert not stabilized1


def test_enumeration_is_deduplicated_and_sorted():
    g = load("triangle")
    walks, _ = enumerate_admissible_walks(g, 3)
    assert walks == sorted(walks)
    assert len(set(walks)) == len(walks)


def test_loop_plus_pendant_walk_of_excess_length():
    # the pendant edge can be traversed twice around the loop, so the
    # admissible walks only stabilize one step past the edge count
    g = load("lpp")
    walks3, stabilized = enumerate_admissible_walks(g, 3)
    assert stabilized
    long = [W for W in walks3 if len(W) == 3]
    assert [str(W) for W in long] == ["f+ e- fb+", "f- e+ fb-"]
    assert all(is_admissible(W) for W in long)
