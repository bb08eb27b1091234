import pathlib

import pytest

from bgtilt import parse_graph

DATA = pathlib.Path(__file__).parent / "data"

# graphs whose admissible walks are finite (at most one odd cycle, no even)
TILTING_DISCRETE = [
    "g1", "line2", "line3", "star2", "star3", "loop", "lpp", "triangle",
    "line3m", "star3m", "loopm", "lppm", "trianglem",
]

# the Theorem-crosscheck corpus: every shape with trivial multiplicity plus
# one multiplicity-3 variant per shape family
CROSSCHECK_CORPUS = TILTING_DISCRETE

ALL_GRAPHS = CROSSCHECK_CORPUS + ["digon", "walk1", "loewy", "twoloop"]

# shape -> its multiplicity-3 variant
MULT_VARIANTS = [
    ("line3", "line3m"), ("star3", "star3m"), ("loop", "loopm"),
    ("lpp", "lppm"), ("triangle", "trianglem"),
]


def graph_path(name):
    return DATA / f"{name}.bg"


def load(name):
    return parse_graph(graph_path(name).read_text())


@pytest.fixture
def g1():
    return load("g1")


def random_string_word(g, rng, max_len=6):
    """A pseudo-random valid string of A, grown letter by letter."""
    from bgtilt.errors import InvalidString
    from bgtilt.oracle import Letter, StringWord

    halves = sorted(g.half_edges)
    length = rng.randrange(max_len + 1)
    if length == 0:
        edge = rng.choice(sorted({g.edge_of(h) for h in halves}))
        return StringWord(g, (), trivial_edge=edge)
    letters = []
    for _ in range(length):
        candidates = [Letter(h, d) for h in halves for d in (True, False)]
        rng.shuffle(candidates)
        for cand in candidates:
            try:
                StringWord(g, tuple(letters) + (cand,))
            except InvalidString:
                continue
            letters.append(cand)
            break
        else:
            break  # no valid extension; keep what we have
    if not letters:
        edge = rng.choice(sorted({g.edge_of(h) for h in halves}))
        return StringWord(g, (), trivial_edge=edge)
    return StringWord(g, tuple(letters))
