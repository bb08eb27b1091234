"""Ribbon/Brauer graph data model: parsing, validation, cycles, flips.

A Brauer graph is a tuple (V, H, s, partner, next, mult) where ``partner``
is a fixed-point-free involution pairing half-edges into edges and ``next``
is a permutation of H whose orbits are the fibers of ``s`` (the
counter-clockwise ordering of half-edges around each vertex).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import (
    ParseError,
    UnknownEdge,
    UnknownVertex,
    ValidationError,
)


class Virtual(NamedTuple):
    """Virtual edge marker vr+(h) / vr-(h) flanking a real half-edge."""

    sign: str  # "+" or "-"
    half: str

    def __str__(self):
        return f"vr{self.sign}({self.half})"


def vr_minus(half):
    return Virtual("-", half)


def vr_plus(half):
    return Virtual("+", half)


class BrauerGraph:
    """Immutable ribbon graph with per-vertex multiplicities.

    Equality is structural on (V, H, s, partner, next, mult); edge names are
    presentation data only.
    """

    def __init__(self, vertices, source, partner, next_, multiplicity,
                 edge_names=None):
        self.vertices = frozenset(vertices)
        self.source = dict(source)
        self.partner = dict(partner)
        self.next = dict(next_)
        self.multiplicity = dict(multiplicity)
        self.half_edges = frozenset(self.source)
        self.prev = {h2: h1 for h1, h2 in self.next.items()}
        if edge_names is None:
            edge_names = {}
            for h in sorted(self.half_edges):
                if h < self.partner[h]:
                    edge_names[h] = (h, self.partner[h])
        self.edge_names = dict(edge_names)
        self._half_to_edge_name = {}
        for name, (h1, h2) in self.edge_names.items():
            self._half_to_edge_name[h1] = name
            self._half_to_edge_name[h2] = name

    # -- basic accessors ----------------------------------------------------

    def val(self, v):
        return sum(1 for h in self.source if self.source[h] == v)

    def edge_of(self, h):
        """Canonical representative of the edge through h (lex-smaller token)."""
        return min(h, self.partner[h])

    def edge_name_of(self, h):
        return self._half_to_edge_name[h]

    def halves_of_edge_name(self, name):
        if name not in self.edge_names:
            raise UnknownEdge(f"no edge named {name!r}")
        return self.edge_names[name]

    def n_edges(self):
        return len(self.half_edges) // 2

    def vertex_order(self, v):
        """Half-edges around v in sigma-order, starting at the smallest token."""
        fiber = sorted(h for h in self.half_edges if self.source[h] == v)
        if not fiber:
            raise UnknownVertex(f"no half-edge at {v!r}")
        order = [fiber[0]]
        h = self.next[fiber[0]]
        while h != fiber[0]:
            order.append(h)
            h = self.next[h]
        return order

    def is_truncated(self, h):
        """sigma(h) = h and multiplicity 1 at s(h)."""
        return self.next[h] == h and self.multiplicity[self.source[h]] == 1

    # -- structural equality ------------------------------------------------

    def _key(self):
        return (
            self.vertices,
            frozenset(self.source.items()),
            frozenset(self.partner.items()),
            frozenset(self.next.items()),
            frozenset(self.multiplicity.items()),
        )

    def __eq__(self, other):
        if not isinstance(other, BrauerGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"BrauerGraph({len(self.vertices)} vertices, "
                f"{self.n_edges()} edges)")


@dataclass(frozen=True)
class CycleProfile:
    betti: int
    cycle_lengths: tuple  # embedded cycle lengths, only populated for betti <= 1
    parity_summary: Optional[dict] = None  # {"odd": a, "even": b} for betti >= 2


@dataclass(frozen=True)
class AugmentedCyclicOrder:
    vertex: str
    sequence: tuple  # alternating Virtual("-",h), h, Virtual("+",h) slots

    def position(self, item):
        return self.sequence.index(item)

    def contains_cyclic_subordering(self, items):
        """True iff the (pairwise distinct) items occur in this cyclic order.

        Items may be non-contiguous in the sequence.
        """
        if len(set(items)) != len(items):
            return False
        try:
            pos = [self.sequence.index(x) for x in items]
        except ValueError:
            return False
        n = len(self.sequence)
        rel = [(p - pos[0]) % n for p in pos]
        return all(rel[k] < rel[k + 1] for k in range(len(rel) - 1))


# -- parsing / serialization ------------------------------------------------

_VERTEX_RE = re.compile(r"^vertex\s+(\S+)\s+mult=(-?\d+)\s*:\s*(.*)$")
_EDGE_RE = re.compile(r"^edge\s+(\S+)\s*:\s*(\S+)\s+(\S+)\s*$")


def parse_graph(text):
    """Parse the line-based graph file format into a validated BrauerGraph."""
    vertices = []
    mult = {}
    source = {}
    next_ = {}
    edge_names = {}
    seen_in_edges = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _VERTEX_RE.match(line)
        if m:
            name, k, rest = m.group(1), int(m.group(2)), m.group(3).split()
            if name in mult:
                raise ParseError(f"line {lineno}: duplicate vertex {name!r}")
            if not rest:
                raise ParseError(f"line {lineno}: vertex {name!r} has no half-edges")
            if k < 1:
                raise ValidationError(
                    "BadMultiplicity", f"vertex {name!r} has mult={k}")
            vertices.append(name)
            mult[name] = k
            for h in rest:
                if h in source:
                    raise ValidationError(
                        "DuplicateHalfEdge",
                        f"half-edge {h!r} listed twice among vertex lines")
                source[h] = name
            for a, b in zip(rest, rest[1:] + rest[:1]):
                next_[a] = b
            continue
        m = _EDGE_RE.match(line)
        if m:
            name, h1, h2 = m.groups()
            if name in edge_names:
                raise ParseError(f"line {lineno}: duplicate edge name {name!r}")
            if h1 == h2:
                raise ValidationError(
                    "FixedPointPairing",
                    f"edge {name!r} pairs {h1!r} with itself")
            for h in (h1, h2):
                if h in seen_in_edges:
                    raise ValidationError(
                        "DuplicateHalfEdge",
                        f"half-edge {h!r} listed twice among edge lines")
                seen_in_edges[h] = name
            edge_names[name] = (h1, h2)
            continue
        raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}")

    for h in source:
        if h not in seen_in_edges:
            raise ValidationError(
                "UnpairedHalfEdge", f"half-edge {h!r} has no edge line")
    for h in seen_in_edges:
        if h not in source:
            raise ValidationError(
                "UnpairedHalfEdge", f"half-edge {h!r} has no vertex line")

    partner = {}
    for h1, h2 in edge_names.values():
        partner[h1] = h2
        partner[h2] = h1

    g = BrauerGraph(vertices, source, partner, next_, mult, edge_names)
    _check_connected(g)
    return g


def _check_connected(g):
    if not g.vertices:
        raise ValidationError("Disconnected", "empty graph")
    start = next(iter(sorted(g.vertices)))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for h in g.half_edges:
            if g.source[h] == v:
                w = g.source[g.partner[h]]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    if seen != g.vertices:
        missing = sorted(g.vertices - seen)
        raise ValidationError(
            "Disconnected", f"vertices unreachable from {start!r}: {missing}")


def serialize_graph(g):
    """Inverse of parse_graph, with vertices and edges sorted by name."""
    lines = []
    for v in sorted(g.vertices):
        halves = " ".join(g.vertex_order(v))
        lines.append(f"vertex {v} mult={g.multiplicity[v]}: {halves}")
    for name in sorted(g.edge_names):
        h1, h2 = sorted(g.edge_names[name])
        lines.append(f"edge {name}: {h1} {h2}")
    return "\n".join(lines) + "\n"


# -- cycle analysis ---------------------------------------------------------

def cycle_profile(g):
    betti = g.n_edges() - len(g.vertices) + 1
    if betti == 0:
        return CycleProfile(0, ())
    # Multigraph view: (u, v) endpoint pairs per edge; prune leaves, then the
    # 2-core carries all cycles.
    edges = {}
    for name, (h1, h2) in g.edge_names.items():
        edges[name] = (g.source[h1], g.source[h2])
    live = set(edges)
    deg = {v: 0 for v in g.vertices}
    for u, v in edges.values():
        deg[u] += 1
        deg[v] += 1
    changed = True
    while changed:
        changed = False
        for name in sorted(live):
            u, v = edges[name]
            if u != v and (deg[u] == 1 or deg[v] == 1):
                live.discard(name)
                deg[u] -= 1
                deg[v] -= 1
                changed = True
    if betti == 1:
        return CycleProfile(1, (len(live),))
    # betti >= 2: fundamental cycle basis over a spanning tree of the 2-core.
    core_vertices = sorted({v for name in live for v in edges[name]})
    parent = {}
    depth = {}
    tree = set()
    root = core_vertices[0]
    parent[root] = None
    depth[root] = 0
    frontier = [root]
    remaining = set(live)
    while frontier:
        u = frontier.pop()
        for name in sorted(remaining):
            a, b = edges[name]
            if a == u and b not in parent:
                parent[b] = u
                depth[b] = depth[u] + 1
                tree.add(name)
                remaining.discard(name)
                frontier.append(b)
            elif b == u and a not in parent:
                parent[a] = u
                depth[a] = depth[u] + 1
                tree.add(name)
                remaining.discard(name)
                frontier.append(a)
    lengths = []
    for name in sorted(live - tree):
        a, b = edges[name]
        # tree distance a..b
        dist = 0
        x, y = a, b
        while x != y:
            if depth[x] >= depth[y]:
                x = parent[x]
            else:
                y = parent[y]
            dist += 1
        lengths.append(dist + 1)
    odd = sum(1 for n in lengths if n % 2 == 1)
    even = len(lengths) - odd
    return CycleProfile(betti, (), {"odd": odd, "even": even})


def is_tilting_discrete(g):
    """True iff the graph has at most one odd cycle and no even cycle."""
    prof = cycle_profile(g)
    if prof.betti == 0:
        return True
    if prof.betti == 1:
        return prof.cycle_lengths[0] % 2 == 1
    return False


# -- opposite and flips -----------------------------------------------------

def opposite_graph(g):
    inv = {b: a for a, b in g.next.items()}
    return BrauerGraph(g.vertices, g.source, g.partner, inv, g.multiplicity,
                       g.edge_names)


def resolve_edge(g, E):
    """Accept an edge name or either half-edge token; return (h, partner)."""
    if E in g.edge_names:
        h1, h2 = g.edge_names[E]
        return min(h1, h2), max(h1, h2)
    if E in g.half_edges:
        return min(E, g.partner[E]), max(E, g.partner[E])
    raise UnknownEdge(f"unknown edge {E!r}")


def flip(g, E, direction="left"):
    """Flip (mutate) the graph at edge E.

    The two moved half-edges are repositioned per the left-flip case table;
    the permutation on the untouched half-edges is the induced splice.
    """
    if direction not in ("left", "right"):
        raise ValueError(f"direction must be left or right, got {direction!r}")
    e, ebar = resolve_edge(g, E)
    if direction == "right":
        return opposite_graph(flip(opposite_graph(g), E, "left"))
    if g.n_edges() == 1:
        return g

    source = dict(g.source)
    nxt = dict(g.next)
    moved = (e, ebar)

    # New (vertex, successor) for each moved half-edge.
    plan = {}
    for h in moved:
        hb = g.partner[h]
        p = g.prev[h]
        if p == h:
            plan[h] = (g.source[h], h)  # lone at its vertex: stays put
        elif p == hb:
            t = g.partner[g.prev[hb]]
            plan[h] = (g.source[t], t)
        elif g.next[h] == hb:
            plan[h] = (g.source[g.partner[p]], hb)
        else:
            t = g.partner[p]
            plan[h] = (g.source[t], t)

    # Splice both moved half-edges out of the permutation.
    for h in moved:
        if nxt[h] == h:
            del nxt[h]
            continue
        pred = next(p for p, s in nxt.items() if s == h)
        nxt[pred] = nxt[h]
        del nxt[h]

    # Re-insert, placing chain targets outside E first.
    order = sorted(moved, key=lambda h: plan[h][1] in moved)
    if all(plan[h][1] in moved for h in moved):
        # Both successors inside E: the pair forms its own 2-cycle.
        a, b = moved
        source[a] = plan[a][0]
        source[b] = plan[b][0]
        nxt[a] = b
        nxt[b] = a
    else:
        for h in order:
            v, succ = plan[h]
            source[h] = v
            if succ == h:
                nxt[h] = h
                continue
            pred = next(p for p, s in nxt.items() if s == succ)
            nxt[pred] = h
            nxt[h] = succ

    out = BrauerGraph(g.vertices, source, g.partner, nxt, g.multiplicity,
                      g.edge_names)
    _assert_ribbon(out)
    return out


def _assert_ribbon(g):
    """Defensive check that next-orbits match source fibers after a flip."""
    from .errors import InternalInvariantViolation

    if set(g.next) != set(g.half_edges) or set(g.next.values()) != set(g.half_edges):
        raise InternalInvariantViolation("flip produced a non-permutation")
    for h in g.half_edges:
        if g.source[g.next[h]] != g.source[h]:
            raise InternalInvariantViolation(
                f"flip broke the orbit/fiber correspondence at {h!r}")


def augmented_cyclic_order(g, v):
    """(vr-(e1), e1, vr+(e1), ..., vr-(ek), ek, vr+(ek)) in sigma-order."""
    if v not in g.vertices:
        raise UnknownVertex(f"unknown vertex {v!r}")
    seq = []
    for h in g.vertex_order(v):
        seq.extend([vr_minus(h), h, vr_plus(h)])
    return AugmentedCyclicOrder(v, tuple(seq))
