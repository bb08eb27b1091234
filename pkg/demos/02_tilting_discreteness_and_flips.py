"""Tilting-discreteness, the finiteness boundary, and edge flips.

A Brauer graph algebra is tilting-discrete exactly when the graph has at
most one odd cycle and no even cycle.  On the wrong side of that boundary
the admissible walks keep growing with the length cap; on the right side
the enumeration stabilizes.  Flipping (mutating) an edge never changes the
verdict.
"""

import pathlib

from bgtilt import (
    cycle_profile,
    enumerate_admissible_walks,
    flip,
    is_tilting_discrete,
    parse_graph,
)

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"


def load(name):
    return parse_graph((DATA / f"{name}.bg").read_text())


def verdict(name):
    g = load(name)
    prof = cycle_profile(g)
    print(f"{name:10s} betti={prof.betti} "
          f"tilting-discrete={is_tilting_discrete(g)}")


def growth(name):
    g = load(name)
    n = g.n_edges()
    counts = []
    for cap in (n, 2 * n, 3 * n):
        walks, stabilized = enumerate_admissible_walks(g, cap)
        counts.append((cap, len(walks), stabilized))
    print(f"{name}: walk counts by cap:",
          ", ".join(f"cap {c} -> {k} (stab={s})" for c, k, s in counts))


if __name__ == "__main__":
    print("-- verdicts --")
    for name in ("g1", "triangle", "digon", "twoloop", "walk1"):
        verdict(name)

    print("\n-- growth on the infinite side --")
    growth("digon")
    growth("walk1")

    print("\n-- stabilization on the discrete side --")
    growth("triangle")
    growth("lpp")  # note: stabilizes one step past the edge count

    print("\n-- flips preserve the verdict --")
    g = load("triangle")
    for edge in sorted(g.edge_names):
        for direction in ("left", "right"):
            flipped = flip(g, edge, direction)
            assert is_tilting_discrete(flipped) == is_tilting_discrete(g)
            print(f"flip {edge} {direction}: still "
                  f"tilting-discrete={is_tilting_discrete(flipped)}")
