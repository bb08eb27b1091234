"""Two-term complexes from signed walks, Hom-vanishing, and the tilting poset.

A signed walk translates into a two-term complex whose differential entries
are short paths between adjacent walk positions.  Hom-vanishing into the
shift is decided combinatorially via the (U2)/(L2) witness search; complete
admissible sets (= basic two-term tilting complexes) are the maximal cliques
of the compatibility graph, ordered by Hom-vanishing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .errors import (
    Disconnected,
    GraphMismatch,
    InternalInvariantViolation,
    NotEnumerable,
    NotShortString,
    SummandOverlap,
)
from .ribbon_core import Virtual, augmented_cyclic_order, is_tilting_discrete
from .walks import (
    SignedWalk,
    check_pair,
    common_subwalk_sites,
    enumerate_admissible_walks,
    make_signed_walk,
)


@dataclass(frozen=True)
class PathLabel:
    """The path [h]^t (h | sigma^j h); socle=True marks the socle element.

    As a map of projectives, left multiplication by the path sends
    P_{edge(sigma^j h)} to P_{edge(h)}.
    """

    start_half: str
    cycle_power: int = 0
    steps: int = 0
    socle: bool = False

    def head_edge(self, g):
        return g.edge_of(self.start_half)

    def tail_edge(self, g):
        return g.edge_of(self.target_half(g))

    def target_half(self, g):
        h = self.start_half
        for _ in range(self.steps):
            h = g.next[h]
        return h

    def is_short(self, g):
        v = g.source[self.start_half]
        return (not self.socle and self.cycle_power == 0
                and 0 < self.steps < g.val(v))

    def __str__(self):
        if self.socle:
            return f"soc[{self.start_half}]"
        out = ""
        if self.cycle_power:
            out += f"[{self.start_half}]^{self.cycle_power}"
        return out + f"({self.start_half}|s^{self.steps})"


def sigma_steps(g, x, y):
    """The discrete log j with sigma^j(x) = y, for x, y at the same vertex."""
    h = x
    for j in range(g.val(g.source[x])):
        if h == y:
            return j
        h = g.next[h]
    raise InternalInvariantViolation(f"{y!r} not in the sigma-orbit of {x!r}")


@dataclass(frozen=True)
class TwoTermComplex:
    """Degree-0/-1 projective summands with a bidiagonal short differential.

    ``differential`` maps (row into degree0, column into degree_minus1) to a
    PathLabel; the label's head edge is the row summand and its tail edge the
    column summand.
    """

    degree0: tuple  # canonical edge representatives (half-edge tokens)
    degree_minus1: tuple
    differential: tuple  # sorted ((row, col), PathLabel) pairs

    def entries(self):
        return dict(self.differential)

    def summand_edges(self):
        return set(self.degree0) | set(self.degree_minus1)


def _make_complex(degree0, degree_minus1, entries):
    return TwoTermComplex(tuple(degree0), tuple(degree_minus1),
                          tuple(sorted(entries.items())))


def complex_of_walk(g, W):
    """The two-term complex of a signed walk.

    Degree-0 summands sit at plus positions, degree -1 at minus positions;
    each adjacent position pair contributes one short-path entry.
    """
    rep = W.reps()[0]
    l = len(W)
    plus_rows = {}
    minus_cols = {}
    degree0 = []
    degree_minus1 = []
    for p in range(1, l + 1):
        if rep.sign(p) == "+":
            plus_rows[p] = len(degree0)
            degree0.append(g.edge_of(rep.half(p)))
        else:
            minus_cols[p] = len(degree_minus1)
            degree_minus1.append(g.edge_of(rep.half(p)))
    entries = {}
    for p in range(1, l):
        if rep.sign(p) == "+":
            x = rep.bar(p)
            y = rep.half(p + 1)
            key = (plus_rows[p], minus_cols[p + 1])
        else:
            x = rep.half(p + 1)
            y = rep.bar(p)
            key = (plus_rows[p + 1], minus_cols[p])
        entries[key] = PathLabel(x, 0, sigma_steps(g, x, y))
    return _make_complex(degree0, degree_minus1, entries)


def walk_of_complex(g, T):
    """The unique signed walk with complex_of_walk(g, W) = T.

    Accepts summands in any order as long as the nonzero entries chain the
    summands into a single string.
    """
    entries = T.entries()
    for label in entries.values():
        if not label.is_short(g):
            raise NotShortString(f"entry {label} is not a short path")
    overlap = set(T.degree0) & set(T.degree_minus1)
    if overlap:
        raise SummandOverlap(f"edges in both degrees: {sorted(overlap)}")
    slots = ([("+", idx) for idx in range(len(T.degree0))]
             + [("-", idx) for idx in range(len(T.degree_minus1))])
    if len(slots) == 1:
        sign, _ = slots[0]
        edge = (T.degree0 or T.degree_minus1)[0]
        return make_signed_walk(g, [edge + sign])
    adj = {s: [] for s in slots}
    for (row, col), label in entries.items():
        a, b = ("+", row), ("-", col)
        adj[a].append((b, label))
        adj[b].append((a, label))
    ends = [s for s in slots if len(adj[s]) == 1]
    if len(ends) != 2 or any(len(adj[s]) > 2 for s in slots):
        raise Disconnected("differential does not chain into a single string")
    # Traverse the chain from one end.
    order = [min(ends)]
    labels = []
    prev = None
    while len(order) < len(slots):
        nxts = [(s, lab) for s, lab in adj[order[-1]] if s != prev]
        if not nxts:
            raise Disconnected("differential does not chain into a single "
                               "string")
        prev = order[-1]
        nxt, lab = nxts[0]
        order.append(nxt)
        labels.append(lab)
    if len(labels) != len(entries):
        raise Disconnected("differential does not chain into a single string")
    # Recover the half-edge at each slot from the labels.
    halves = [None] * len(order)
    for a, label in enumerate(labels):
        x = label.start_half
        y = label.target_half(g)
        if order[a][0] == "+":
            earlier, later = g.partner[x], y
        else:
            earlier, later = g.partner[y], x
        for pos, h in ((a, earlier), (a + 1, later)):
            if halves[pos] is None:
                halves[pos] = h
            elif halves[pos] != h:
                raise NotShortString(
                    "entries do not assemble into a half-walk")
    signs = [s for s, _ in order]
    degrees = [(T.degree0 if s == "+" else T.degree_minus1)[idx]
               for s, idx in order]
    for h, edge in zip(halves, degrees):
        if g.edge_of(h) != edge:
            raise NotShortString("entries do not match the summand edges")
    W = SignedWalk(g, halves, signs)
    rebuilt = complex_of_walk(g, W)
    if rebuilt not in (_renumber_along(T, order),
                       _renumber_along(T, order[::-1])):
        raise NotShortString("complex is not of walk type")
    return W


def _renumber_along(T, order):
    """Rewrite T with summands listed in chain order (for comparison)."""
    entries = T.entries()
    new_plus = []
    new_minus = []
    remap = {}
    for s, idx in order:
        if s == "+":
            remap[(s, idx)] = len(new_plus)
            new_plus.append(T.degree0[idx])
        else:
            remap[(s, idx)] = len(new_minus)
            new_minus.append(T.degree_minus1[idx])
    new_entries = {}
    for (row, col), label in entries.items():
        new_entries[(remap[("+", row)], remap[("-", col)])] = label
    return _make_complex(new_plus, new_minus, new_entries)


def reordered_equal(g, T1, T2):
    """Equality of two two-term complexes up to permutation of summands."""
    if (sorted(T1.degree0) != sorted(T2.degree0)
            or sorted(T1.degree_minus1) != sorted(T2.degree_minus1)):
        return False
    e1, e2 = T1.entries(), T2.entries()
    if len(e1) != len(e2):
        return False
    n0, n1 = len(T1.degree0), len(T1.degree_minus1)

    def row_sig(T, entries, r):
        return (T.degree0[r],
                sorted(str(lab) for (i, _), lab in entries.items() if i == r))

    def col_sig(T, entries, c):
        return (T.degree_minus1[c],
                sorted(str(lab) for (_, j), lab in entries.items() if j == c))

    def match(assign_r, assign_c):
        if len(assign_r) < n0:
            r = len(assign_r)
            for r2 in range(n0):
                if r2 in assign_r.values():
                    continue
                if row_sig(T1, e1, r) != row_sig(T2, e2, r2):
                    continue
                assign_r[r] = r2
                if match(assign_r, assign_c):
                    return True
                del assign_r[r]
            return False
        if len(assign_c) < n1:
            c = len(assign_c)
            for c2 in range(n1):
                if c2 in assign_c.values():
                    continue
                if col_sig(T1, e1, c) != col_sig(T2, e2, c2):
                    continue
                assign_c[c] = c2
                if match(assign_r, assign_c):
                    return True
                del assign_c[c]
            return False
        return all(e2.get((assign_r[i], assign_c[j])) == lab
                   for (i, j), lab in e1.items())

    return match({}, {})


# -- Hom vanishing into the shift ---------------------------------------------

@dataclass(frozen=True)
class HomVanishReport:
    vanishes: bool
    u2_witness: Optional[tuple] = None  # (rep_w, rep_wp, i, j, case)
    l2_witness: Optional[tuple] = None  # (site, rep data)


def _distinct(items):
    return len(set(items)) == len(items)


def _u2_witness(W, Wp):
    """A (U2) witness for Hom(M of W, N of Wp), or None.

    W plays the lemma's role of the shift target, Wp the source.
    """
    g = W.graph
    for a, x in enumerate(W.reps()):
        for b, y in enumerate(Wp.reps()):
            for i in range(1, len(W) + 1):
                if x.sign(i) != "+":
                    continue
                for j in range(1, len(Wp) + 1):
                    if y.sign(j) != "-":
                        continue
                    if x.vertex(i) != y.vertex(j):
                        continue
                    ei, ej = x.half(i), y.half(j)
                    if ei == ej:
                        return (a, b, i, j, "i")
                    aug = augmented_cyclic_order(g, x.vertex(i))
                    xs, ys = x.bar(i - 1), y.bar(j - 1)
                    if (xs == ys and
                            aug.contains_cyclic_subordering((ei, ej, xs))):
                        return (a, b, i, j, "ii")
                    if aug.contains_cyclic_subordering((ei, ej, ys, xs)):
                        return (a, b, i, j, "iii")
                    if aug.contains_cyclic_subordering((ei, ej, xs, ys)):
                        return (a, b, i, j, "iv")
    return None


def _l2_witness(W, Wp):
    """An (L2) witness for Hom(M of W, N of Wp), or None."""
    g = W.graph
    for site in common_subwalk_sites(W, Wp):
        x = W.reps()[site.rep_first]
        y = Wp.reps()[site.rep_second]
        i, j, ell = site.i, site.j, site.length
        if any(x.sign(i + k) != y.sign(j + k) for k in range(ell)):
            continue
        t1 = x.half(i)
        tl_bar = x.bar(i + ell - 1)
        start = (y.bar(j - 1), x.bar(i - 1), t1)
        end = (tl_bar, y.half(j + ell), x.half(i + ell))
        aug_s = augmented_cyclic_order(g, g.source[t1])
        aug_e = augmented_cyclic_order(g, g.source[tl_bar])
        if (aug_s.contains_cyclic_subordering(start)
                and aug_e.contains_cyclic_subordering(end)):
            return (site, site.rep_first, site.rep_second)
    return None


def hom_vanishes_into_shift(source, target):
    """Whether Hom(T_source, T_target[1]) = 0 in the homotopy category."""
    if source.graph != target.graph:
        raise GraphMismatch("walks on different graphs")
    u2 = _u2_witness(target, source)
    if u2 is not None:
        return HomVanishReport(False, u2_witness=u2)
    l2 = _l2_witness(target, source)
    if l2 is not None:
        return HomVanishReport(False, l2_witness=l2)
    return HomVanishReport(True)


# -- complete sets, order, Hasse quiver ---------------------------------------

@dataclass(frozen=True)
class CompleteSet:
    walks: tuple  # SignedWalk members, canonically sorted

    def serialize(self):
        return [str(W) for W in self.walks]

    def __str__(self):
        return "{" + ", ".join(self.serialize()) + "}"


def admissible_walks_auto(g, cap=None):
    """Admissible walks with an automatically grown cap when none is given.

    Refuses on non-tilting-discrete graphs without a cap; on tilting-discrete
    graphs the cap is grown until the enumeration frontier dies out (finite
    by the odd-cycle criterion).
    """
    if cap is not None:
        return enumerate_admissible_walks(g, cap)
    if not is_tilting_discrete(g):
        raise NotEnumerable(
            "admissible walks form an infinite set; supply a cap")
    n = g.n_edges()
    attempt = n
    while attempt <= 8 * n:
        walks, stabilized = enumerate_admissible_walks(g, attempt)
        if stabilized:
            return walks, True
        attempt += n
    raise InternalInvariantViolation(
        "enumeration did not stabilize on a tilting-discrete graph")


def enumerate_two_term_tilting(g, cap=None):
    """All complete admissible sets, as maximal cliques of compatibility."""
    walks, _ = admissible_walks_auto(g, cap)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(walks)))
    for a in range(len(walks)):
        for b in range(a + 1, len(walks)):
            if check_pair(walks[a], walks[b]).compatible:
                graph.add_edge(a, b)
    n = g.n_edges()
    sets = []
    for clique in nx.find_cliques(graph):
        members = sorted(walks[idx] for idx in clique)
        if len(members) != n:
            raise InternalInvariantViolation(
                f"complete set of size {len(members)}, expected {n}: "
                f"{[str(w) for w in members]}")
        covered = set()
        for W in members:
            covered |= W.edges_used()
        if len(covered) != n:
            raise InternalInvariantViolation(
                f"complete set does not cover every edge: "
                f"{[str(w) for w in members]}")
        sets.append(CompleteSet(tuple(members)))
    sets.sort(key=lambda s: s.serialize())
    return sets


def order_ge(S, S2):
    """The tilting order: S >= S2 iff Hom(T_X, T_Y[1]) = 0 for all X in S,
    Y in S2."""
    graphs = {W.graph for W in S.walks} | {W.graph for W in S2.walks}
    if len(graphs) != 1:
        raise GraphMismatch("complete sets on different graphs")
    return all(hom_vanishes_into_shift(X, Y).vanishes
               for X in S.walks for Y in S2.walks)


@dataclass(frozen=True)
class HasseQuiver:
    nodes: tuple  # CompleteSet, canonically sorted
    arrows: tuple  # (source index, target index) cover pairs

    def to_dot(self):
        lines = ["digraph hasse {"]
        for idx, node in enumerate(self.nodes):
            lines.append(f'  n{idx} [label="{node}"];')
        for a, b in self.arrows:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines)

    def to_json_data(self):
        return {
            "nodes": [node.serialize() for node in self.nodes],
            "arrows": [list(arrow) for arrow in self.arrows],
        }


def _stalk_set(g, sign):
    walks = sorted(
        make_signed_walk(g, [g.edge_of(h) + sign])
        for h in g.half_edges if h == g.edge_of(h))
    return CompleteSet(tuple(walks))


def hasse_quiver(g, cap=None):
    """Cover relations of the tilting order on all complete sets."""
    sets = enumerate_two_term_tilting(g, cap)
    k = len(sets)
    ge = [[a != b and order_ge(sets[a], sets[b]) for b in range(k)]
          for a in range(k)]
    arrows = []
    for a in range(k):
        for b in range(k):
            if not ge[a][b]:
                continue
            if any(ge[a][c] and ge[c][b] for c in range(k)
                   if c not in (a, b)):
                continue
            arrows.append((a, b))
    quiver = HasseQuiver(tuple(sets), tuple(sorted(arrows)))
    _assert_hasse_shape(g, quiver, ge)
    return quiver


def _assert_hasse_shape(g, quiver, ge):
    k = len(quiver.nodes)
    undirected = nx.Graph()
    undirected.add_nodes_from(range(k))
    undirected.add_edges_from(quiver.arrows)
    if k and not nx.is_connected(undirected):
        raise InternalInvariantViolation("Hasse quiver is disconnected")
    sources = [a for a in range(k)
               if not any(ge[b][a] for b in range(k) if b != a)]
    sinks = [a for a in range(k)
             if not any(ge[a][b] for b in range(k) if b != a)]
    try:
        plus_idx = quiver.nodes.index(_stalk_set(g, "+"))
        minus_idx = quiver.nodes.index(_stalk_set(g, "-"))
    except ValueError:
        raise InternalInvariantViolation(
            "a stalk complete set is missing from the enumeration") from None
    if sources != [plus_idx]:
        raise InternalInvariantViolation("unique maximum is not the all-plus "
                                         "stalk set")
    if sinks != [minus_idx]:
        raise InternalInvariantViolation("unique minimum is not the all-minus "
                                         "stalk set")
