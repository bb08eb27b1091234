"""Classify two-term tilting complexes of small Brauer graph algebras.

Walks through the basic pipeline on two tiny graphs: parse a ribbon graph,
enumerate admissible signed walks, group them into complete sets (one per
basic two-term tilting complex), and print the Hasse quiver of the tilting
order.
"""

import pathlib

from bgtilt import (
    enumerate_admissible_walks,
    enumerate_two_term_tilting,
    hasse_quiver,
    parse_graph,
)

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"


def classify(name):
    g = parse_graph((DATA / f"{name}.bg").read_text())
    print(f"=== {name}: {len(g.vertices)} vertices, {g.n_edges()} edges")
    walks, stabilized = enumerate_admissible_walks(g, g.n_edges() + 1)
    print(f"admissible walks (stabilized={stabilized}):")
    for W in walks:
        print(f"  {W}")
    sets = enumerate_two_term_tilting(g)
    print(f"{len(sets)} complete admissible sets "
          "(= basic two-term tilting complexes):")
    for s in sets:
        print(f"  {s}")
    q = hasse_quiver(g)
    print("Hasse quiver of the tilting order:")
    for idx, node in enumerate(q.nodes):
        print(f"  {idx}: {node}")
    for a, b in q.arrows:
        print(f"  {a} -> {b}")
    print()


if __name__ == "__main__":
    classify("g1")      # a single edge: Lambda and Lambda[1]
    classify("line2")   # two edges in a line: six complete sets
    classify("triangle")  # an odd cycle: still finitely many
