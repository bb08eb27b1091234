"""Command-line front end: parsing, classification, verification, export.

Exit codes: 0 success, 1 usage error, 2 parse/validation error,
3 enumeration refused (not tilting-discrete and no --cap), 4 verification
mismatch.
"""

import argparse
import json
import sys

from .errors import BGTiltError, NotEnumerable
from .ribbon_core import (cycle_profile, flip, is_tilting_discrete,
                          parse_graph, serialize_graph)
from .walks import enumerate_admissible_walks, make_signed_walk
from .oracle import crosscheck_bijection, hom_dim, strings_of_walk
from .tilt import admissible_walks_auto, enumerate_two_term_tilting, hasse_quiver

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_REFUSED = 3
EXIT_MISMATCH = 4


class _Parser(argparse.ArgumentParser):
    """argparse's usage failures exit 2; the contract reserves 2 for bad
    input files, so remap them to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_graph(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise BGTiltError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_graph(text)


def _emit_json(data):
    print(json.dumps(data, indent=2, sort_keys=True))


def cmd_validate(args):
    g = _read_graph(args.graph)
    prof = cycle_profile(g)
    if args.format == "json":
        _emit_json({
            "vertices": sorted(g.vertices),
            "multiplicities": {v: g.multiplicity[v] for v in sorted(g.vertices)},
            "edges": {name: sorted(g.edge_names[name])
                      for name in sorted(g.edge_names)},
            "betti": prof.betti,
            "tilting_discrete": is_tilting_discrete(g),
        })
        return EXIT_OK
    print(f"valid Brauer graph: {len(g.vertices)} vertices, "
          f"{g.n_edges()} edges, betti {prof.betti}")
    for v in sorted(g.vertices):
        halves = " ".join(g.vertex_order(v))
        print(f"  vertex {v} mult={g.multiplicity[v]}: {halves}")
    for name in sorted(g.edge_names):
        h1, h2 = sorted(g.edge_names[name])
        print(f"  edge {name}: {h1} {h2}")
    verdict = "yes" if is_tilting_discrete(g) else "no"
    print(f"tilting-discrete: {verdict}")
    return EXIT_OK


def cmd_walks(args):
    g = _read_graph(args.graph)
    walks, stabilized = admissible_walks_auto(g, args.cap)
    walks = sorted(walks)
    if args.format == "json":
        _emit_json({"walks": [str(W) for W in walks],
                    "stabilized": stabilized})
        return EXIT_OK
    for W in walks:
        print(W)
    print(f"{len(walks)} admissible walks"
          + (" (stabilized)" if stabilized else ""))
    return EXIT_OK


def cmd_tilt2(args):
    g = _read_graph(args.graph)
    sets = enumerate_two_term_tilting(g, args.cap)
    if args.format == "json":
        _emit_json({"complete_sets": [s.serialize() for s in sets]})
        return EXIT_OK
    for s in sets:
        print(s)
    print(f"{len(sets)} complete admissible sets")
    return EXIT_OK


def cmd_hasse(args):
    g = _read_graph(args.graph)
    quiver = hasse_quiver(g, args.cap)
    if args.format == "dot":
        print(quiver.to_dot())
    elif args.format == "json":
        _emit_json(quiver.to_json_data())
    else:
        for idx, node in enumerate(quiver.nodes):
            print(f"{idx}: {node}")
        for a, b in quiver.arrows:
            print(f"{a} -> {b}")
    return EXIT_OK


def cmd_flip(args):
    g = _read_graph(args.graph)
    flipped = flip(g, args.edge, args.direction)
    sys.stdout.write(serialize_graph(flipped))
    return EXIT_OK


def cmd_discrete(args):
    g = _read_graph(args.graph)
    prof = cycle_profile(g)
    verdict = is_tilting_discrete(g)
    if args.format == "json":
        data = {"tilting_discrete": verdict, "betti": prof.betti,
                "cycle_lengths": list(prof.cycle_lengths)}
        if prof.parity_summary is not None:
            data["parity_summary"] = dict(prof.parity_summary)
        _emit_json(data)
        return EXIT_OK
    print(f"tilting-discrete: {'yes' if verdict else 'no'}")
    print(f"betti: {prof.betti}")
    if prof.betti == 0:
        print("cycles: none (tree)")
    elif prof.betti == 1:
        parity = "odd" if prof.cycle_lengths[0] % 2 else "even"
        print(f"cycles: one of length {prof.cycle_lengths[0]} ({parity})")
    else:
        odd = prof.parity_summary["odd"]
        even = prof.parity_summary["even"]
        print(f"cycles: basis with {odd} odd and {even} even")
    return EXIT_OK


def cmd_verify(args):
    g = _read_graph(args.graph)
    cap = args.cap if args.cap is not None else g.n_edges()
    report = crosscheck_bijection(g, cap)
    print(f"checked {report.walks_checked} walks and "
          f"{report.pairs_checked} pairs at cap {cap}")
    print(f"{len(report.disagreements)} disagreements")
    if args.verbose or not report.ok:
        for d in report.disagreements:
            print(f"  {d}")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_hom(args):
    g = _read_graph(args.graph)
    W = make_signed_walk(g, args.walk)
    W2 = make_signed_walk(g, args.other)
    m1, n1 = strings_of_walk(g, W)
    m2, n2 = strings_of_walk(g, W2)
    dims = {
        "hom_m_to_n_other": hom_dim(g, m1, n2),
        "hom_m_other_to_n": hom_dim(g, m2, n1),
        "hom_m_to_n_self": hom_dim(g, m1, n1),
        "hom_m_other_to_n_other": hom_dim(g, m2, n2),
    }
    if args.format == "json":
        _emit_json({"walk": str(W), "other": str(W2),
                    "m": str(m1), "n": str(n1),
                    "m_other": str(m2), "n_other": str(n2),
                    "dims": dims})
        return EXIT_OK
    print(f"walk  {W}: M = {m1}, N = {n1}")
    print(f"other {W2}: M = {m2}, N = {n2}")
    print(f"dim Hom(M, N_other)       = {dims['hom_m_to_n_other']}")
    print(f"dim Hom(M_other, N)       = {dims['hom_m_other_to_n']}")
    print(f"dim Hom(M, N)             = {dims['hom_m_to_n_self']}")
    print(f"dim Hom(M_other, N_other) = {dims['hom_m_other_to_n_other']}")
    compatible = all(v == 0 for v in dims.values())
    print(f"pretilting pair: {'yes' if compatible else 'no'}")
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="bgtilt",
                     description="Two-term tilting complexes of Brauer "
                                 "graph algebras from signed walks")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, func, help_, cap=False, formats=("text", "json")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="graph file")
        if cap:
            p.add_argument("--cap", type=int, default=None,
                           help="maximum walk length")
        if formats:
            p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--verbose", action="store_true")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "parse a graph file and print a summary")
    add("walks", cmd_walks, "enumerate admissible signed walks", cap=True)
    add("tilt2", cmd_tilt2, "enumerate complete admissible sets", cap=True)
    add("hasse", cmd_hasse, "Hasse quiver of the two-term tilting order",
        cap=True, formats=("text", "json", "dot"))
    p = add("flip", cmd_flip, "flip the graph at an edge", formats=None)
    p.add_argument("--edge", required=True, help="edge name or half-edge")
    p.add_argument("--direction", choices=("left", "right"), default="left")
    add("discrete", cmd_discrete, "tilting-discreteness verdict")
    p = add("verify", cmd_verify,
            "cross-check combinatorics against the homological oracle",
            cap=True, formats=None)
    p = add("hom", cmd_hom, "hom dimensions between two walks' M/N parts")
    p.add_argument("walk", help='first walk, e.g. "a+ b-"')
    p.add_argument("other", help="second walk")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except NotEnumerable as exc:
        print(f"bgtilt: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except BGTiltError as exc:
        print(f"bgtilt: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
