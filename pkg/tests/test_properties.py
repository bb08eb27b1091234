import random

from hypothesis import given, settings, strategies as st

from bgtilt import (
    check_pair,
    flip,
    is_admissible,
    is_tilting_discrete,
    make_signed_walk,
    opposite_graph,
    parse_graph,
    serialize_graph,
)
from bgtilt.oracle import HomTarget, cb_hom_dim, la_hom_dim

from conftest import ALL_GRAPHS, CROSSCHECK_CORPUS, load, random_string_word

SMALL = ["g1", "line2", "line3", "star2", "loop", "lpp", "digon", "loewy"]


def draw_walk(g, data, max_len=4):
    """Grow a signed walk with hypothesis-driven choices."""
    halves = sorted(g.half_edges)
    h = data.draw(st.sampled_from(halves))
    sign = data.draw(st.sampled_from("+-"))
    walk_halves, signs = [h], [sign]
    edge_sign = {g.edge_of(h): sign}
    length = data.draw(st.integers(1, max_len))
    while len(walk_halves) < length:
        v = g.source[g.partner[walk_halves[-1]]]
        nxt_sign = {"+": "-", "-": "+"}[signs[-1]]
        options = [x for x in halves if g.source[x] == v
                   and edge_sign.get(g.edge_of(x), nxt_sign) == nxt_sign]
        if not options:
            break
        x = data.draw(st.sampled_from(options))
        walk_halves.append(x)
        signs.append(nxt_sign)
        edge_sign[g.edge_of(x)] = nxt_sign
    return make_signed_walk(g, [h + s for h, s in zip(walk_halves, signs)])


@given(name=st.sampled_from(ALL_GRAPHS), data=st.data())
@settings(max_examples=60, deadline=None)
def test_walk_round_trips_and_involution(name, data):
    g = load(name)
    W = draw_walk(g, data)
    assert make_signed_walk(g, str(W)) == W
    rev = [g.partner[h] + s for h, s in
           zip(reversed(W.halves), reversed(W.signs))]
    assert make_signed_walk(g, rev) == W


@given(name=st.sampled_from(SMALL), data=st.data())
@settings(max_examples=40, deadline=None)
def test_check_pair_is_symmetric(name, data):
    g = load(name)
    W = draw_walk(g, data)
    W2 = draw_walk(g, data)
    assert check_pair(W, W2).compatible == check_pair(W2, W).compatible


@given(name=st.sampled_from(SMALL), data=st.data())
@settings(max_examples=40, deadline=None)
def test_admissibility_dualizes_to_the_opposite_graph(name, data):
    # flipping every sign alone is not a symmetry (it reverses the roles in
    # the cyclic-order condition); it becomes one on the opposite ribbon graph
    g = load(name)
    W = draw_walk(g, data)
    opp = opposite_graph(g)
    flipped = make_signed_walk(
        opp, [h + {"+": "-", "-": "+"}[s]
              for h, s in zip(W.halves, W.signs)])
    assert is_admissible(W) == is_admissible(flipped)


@given(name=st.sampled_from(SMALL), seed=st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_cb_matches_linear_algebra(name, seed):
    g = load(name)
    rng = random.Random(seed)
    w1 = random_string_word(g, rng)
    w2 = random_string_word(g, rng)
    expected = la_hom_dim(g, HomTarget.string(w1), HomTarget.string(w2))
    assert cb_hom_dim(w1, w2) == expected


@given(name=st.sampled_from(SMALL), seed=st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_string_self_hom_contains_identity(name, seed):
    g = load(name)
    w = random_string_word(g, random.Random(seed))
    assert cb_hom_dim(w, w) >= 1


@given(name=st.sampled_from(CROSSCHECK_CORPUS), data=st.data(),
       direction=st.sampled_from(["left", "right"]))
@settings(max_examples=40, deadline=None)
def test_flip_preserves_shape_invariants(name, data, direction):
    g = load(name)
    edge = data.draw(st.sampled_from(sorted(g.edge_names)))
    flipped = flip(g, edge, direction)
    assert flipped.n_edges() == g.n_edges()
    assert len(flipped.vertices) == len(g.vertices)
    assert is_tilting_discrete(flipped) == is_tilting_discrete(g)
    # the flipped graph survives its own validation round trip
    assert parse_graph(serialize_graph(flipped)) == flipped
