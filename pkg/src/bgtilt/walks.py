"""Signed walks, non-crossing conditions NC1-NC3, admissibility, enumeration.

A signed walk is the unordered pair {w, wbar} of mutually inverse half-edge
sequences with alternating signs that are constant on edges.  The stored
representative is the lexicographically smaller sequence.  Virtual edges
vr+/- position the walk's endpoints inside the augmented cyclic orders.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    GraphMismatch,
    NoSignature,
    NotAWalk,
    ParseError,
    SignMismatch,
)
from .ribbon_core import Virtual, augmented_cyclic_order, vr_minus, vr_plus

OPP = {"+": "-", "-": "+"}


class _Rep:
    """One oriented representative of a signed walk, with virtual ends."""

    def __init__(self, graph, halves, signs):
        self.graph = graph
        self.halves = halves  # tuple, positions 1..l map to halves[i-1]
        self.signs = signs

    def __len__(self):
        return len(self.halves)

    def half(self, i):
        """e_i for i in 0..l+1; the boundary slots are virtual edges."""
        l = len(self.halves)
        if i == 0:
            return vr_minus(self.halves[0]) if self.signs[0] == "+" \
                else vr_plus(self.halves[0])
        if i == l + 1:
            last = self.graph.partner[self.halves[-1]]
            return vr_minus(last) if self.signs[-1] == "+" else vr_plus(last)
        return self.halves[i - 1]

    def bar(self, i):
        """partner of e_i; virtual edges are their own partners."""
        h = self.half(i)
        if isinstance(h, Virtual):
            return h
        return self.graph.partner[h]

    def sign(self, i):
        """epsilon of e_i; boundary virtuals carry the opposite sign."""
        l = len(self.halves)
        if i == 0:
            return OPP[self.signs[0]]
        if i == l + 1:
            return OPP[self.signs[-1]]
        return self.signs[i - 1]

    def vertex(self, i):
        """Vertex visited at position i, for i in 1..l+1."""
        l = len(self.halves)
        if i == l + 1:
            return self.graph.source[self.graph.partner[self.halves[-1]]]
        return self.graph.source[self.halves[i - 1]]

    def neighbourhood(self, i):
        """{bar(e_{i-1}), e_i} at the i-th visited vertex, i in 1..l+1."""
        return (self.bar(i - 1), self.half(i))


class SignedWalk:
    """Canonical signed walk on a BrauerGraph."""

    def __init__(self, graph, halves, signs, _validated=False):
        halves = tuple(halves)
        signs = tuple(signs)
        if not _validated:
            _validate_walk(graph, halves, signs)
        rev = tuple(graph.partner[h] for h in reversed(halves))
        if rev < halves:
            halves, signs = rev, tuple(reversed(signs))
        self.graph = graph
        self.halves = halves
        self.signs = signs
        edge_sign = {}
        for h, s in zip(halves, signs):
            edge_sign[graph.edge_of(h)] = s
        self.edge_sign = edge_sign

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SignedWalk):
            return NotImplemented
        return (self.halves == other.halves and self.signs == other.signs
                and self.graph == other.graph)

    def __hash__(self):
        return hash((self.halves, self.signs))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (len(self.halves), self.halves, self.signs)

    def __repr__(self):
        return f"SignedWalk({self})"

    def __str__(self):
        return " ".join(f"{h}{s}" for h, s in zip(self.halves, self.signs))

    def __len__(self):
        return len(self.halves)

    # -- representatives and endpoint data ------------------------------------

    def reps(self):
        """Both oriented representatives (canonical first)."""
        g = self.graph
        rev = tuple(g.partner[h] for h in reversed(self.halves))
        return (
            _Rep(g, self.halves, self.signs),
            _Rep(g, rev, tuple(reversed(self.signs))),
        )

    def endpoints(self):
        """The two (vertex, sign) endpoint records."""
        g = self.graph
        return (
            (g.source[self.halves[0]], self.signs[0]),
            (g.source[g.partner[self.halves[-1]]], self.signs[-1]),
        )

    def boundary(self):
        """The two virtual edges e_0 and e_{l+1} of the canonical rep."""
        rep = self.reps()[0]
        return (rep.half(0), rep.half(len(self.halves) + 1))

    def edges_used(self):
        return {self.graph.edge_of(h) for h in self.halves}


def _validate_walk(graph, halves, signs):
    if not halves:
        raise NotAWalk("empty walk")
    for h in halves:
        if h not in graph.half_edges:
            raise ParseError(f"unknown half-edge {h!r}")
    for a, b in zip(halves, halves[1:]):
        if graph.source[b] != graph.source[graph.partner[a]]:
            raise NotAWalk(
                f"{b!r} does not continue {a!r}: "
                f"source({b!r}) != source(partner({a!r}))")
    for a, b in zip(signs, signs[1:]):
        if a == b:
            raise SignMismatch("signs must alternate")
    edge_sign = {}
    for h, s in zip(halves, signs):
        e = graph.edge_of(h)
        if edge_sign.setdefault(e, s) != s:
            raise NoSignature(
                f"edge {e!r} reappears with conflicting alternation")


def make_signed_walk(g, tokens):
    """Build a canonical SignedWalk from text or a token sequence.

    Tokens are ``<half-edge><sign>``; signs after the first may be omitted
    and are then inferred by alternation.
    """
    if isinstance(tokens, str):
        tokens = tokens.split()
    if not tokens:
        raise NotAWalk("empty walk")
    halves = []
    explicit = []
    for tok in tokens:
        if tok and tok[-1] in "+-":
            halves.append(tok[:-1])
            explicit.append(tok[-1])
        else:
            halves.append(tok)
            explicit.append(None)
    if explicit[0] is None:
        raise ParseError(f"first token {tokens[0]!r} must carry a sign")
    signs = [explicit[0]]
    for k in range(1, len(halves)):
        signs.append(OPP[signs[-1]])
        if explicit[k] is not None and explicit[k] != signs[-1]:
            raise SignMismatch(
                f"token {tokens[k]!r} contradicts the alternating signature")
    return SignedWalk(g, halves, signs)


# -- common subwalks ----------------------------------------------------------

@dataclass(frozen=True)
class SubwalkSite:
    """Occurrence of a maximal common subwalk across one half-walk pairing."""

    rep_first: int  # 0 = canonical representative, 1 = its reverse
    rep_second: int
    i: int  # 1-based start in the first walk's chosen representative
    j: int  # 1-based start in the second walk's
    length: int
    sequence: tuple

    def involution_image(self, m, n):
        return (1 - self.rep_first, 1 - self.rep_second,
                m - self.i - self.length + 2, n - self.j - self.length + 2)


def common_subwalk_sites(W, W2):
    """Occurrence-indexed maximal common subwalks over the four pairings,
    deduplicated under simultaneous involution of both walks."""
    if W.graph != W2.graph:
        raise GraphMismatch("walks on different graphs")
    reps1 = W.reps()
    reps2 = W2.reps()
    m, n = len(W), len(W2)
    sites = []
    for a in (0, 1):
        x = reps1[a].halves
        for b in (0, 1):
            y = reps2[b].halves
            for i0 in range(m):
                for j0 in range(n):
                    if x[i0] != y[j0]:
                        continue
                    if i0 > 0 and j0 > 0 and x[i0 - 1] == y[j0 - 1]:
                        continue  # not the start of this diagonal run
                    ell = 1
                    while (i0 + ell < m and j0 + ell < n
                           and x[i0 + ell] == y[j0 + ell]):
                        ell += 1
                    site = SubwalkSite(a, b, i0 + 1, j0 + 1, ell,
                                       tuple(x[i0:i0 + ell]))
                    key = (site.rep_first, site.rep_second, site.i, site.j)
                    if key <= site.involution_image(m, n):
                        sites.append(site)
    sites.sort(key=lambda s: (s.rep_first, s.rep_second, s.i, s.j))
    return sites


# -- intersecting vertices ----------------------------------------------------

@dataclass(frozen=True)
class IntersectionSite:
    vertex: str
    pos_w: int
    pos_w2: int
    neighborhood_w: tuple  # (bar(e_{i-1}), e_i)
    neighborhood_w2: tuple

    def members(self):
        return self.neighborhood_w + self.neighborhood_w2


def _neighbourhoods(W):
    rep = W.reps()[0]
    out = []
    for i in range(1, len(W) + 2):
        out.append((i, rep.vertex(i), rep.neighbourhood(i)))
    return out


def intersection_sites(W, W2):
    """Vertex occurrence pairs whose neighbourhoods are pairwise disjoint."""
    if W.graph != W2.graph:
        raise GraphMismatch("walks on different graphs")
    nbs1 = _neighbourhoods(W)
    nbs2 = _neighbourhoods(W2)
    same = W == W2
    sites = []
    for i, v1, nb1 in nbs1:
        for j, v2, nb2 in nbs2:
            if same and j <= i:
                continue
            if v1 != v2:
                continue
            members = nb1 + nb2
            if len(set(members)) == 4:
                sites.append(IntersectionSite(v1, i, j, nb1, nb2))
    return sites


# -- pair checking ------------------------------------------------------------

@dataclass
class PairReport:
    sign_ok: bool
    nc1_failures: list = field(default_factory=list)
    nc2_failures: list = field(default_factory=list)
    nc3_failures: list = field(default_factory=list)

    @property
    def compatible(self):
        return (self.sign_ok and not self.nc1_failures
                and not self.nc2_failures and not self.nc3_failures)


def _sign_condition(W, W2):
    for v1, s1 in W.endpoints():
        for v2, s2 in W2.endpoints():
            if v1 == v2 and s1 != s2:
                return False
    return True


def _site_sign(W, half):
    return W.edge_sign[W.graph.edge_of(half)]


def _nc1_holds(W, W2, site):
    return all(_site_sign(W, t) == _site_sign(W2, t) for t in site.sequence)


def _nc2_holds(W, W2, site):
    g = W.graph
    x = W.reps()[site.rep_first]
    y = W2.reps()[site.rep_second]
    i, j, ell = site.i, site.j, site.length
    m, n = len(x), len(y)
    exempt_start = (i == 1 and j == 1)
    exempt_end = (i + ell == m + 1 and j + ell == n + 1)
    t1 = x.half(i)
    tl_bar = x.bar(i + ell - 1)
    v_start = augmented_cyclic_order(g, g.source[t1])
    v_end = augmented_cyclic_order(g, g.source[tl_bar])
    xs, ys = x.bar(i - 1), y.bar(j - 1)
    xe, ye = x.half(i + ell), y.half(j + ell)
    start = {
        1: v_start.contains_cyclic_subordering((t1, xs, ys)),
        2: v_start.contains_cyclic_subordering((t1, ys, xs)),
    }
    end = {
        1: v_end.contains_cyclic_subordering((tl_bar, ye, xe)),
        2: v_end.contains_cyclic_subordering((tl_bar, xe, ye)),
    }
    return any((exempt_start or start[p]) and (exempt_end or end[p])
               for p in (1, 2))


def _nc3_holds(W, W2, site):
    g = W.graph
    if sum(1 for h in site.members() if isinstance(h, Virtual)) > 1:
        return True  # unconstrained case: the sign condition governs it
    aug = augmented_cyclic_order(g, site.vertex)

    def oriented(walk, nb):
        u, v = nb
        su = _member_sign(walk, u)
        return (u, v) if su == "+" else (v, u)

    ap, am = oriented(W, site.neighborhood_w)
    bp, bm = oriented(W2, site.neighborhood_w2)
    return (aug.contains_cyclic_subordering((ap, am, bp, bm))
            or aug.contains_cyclic_subordering((ap, am, bm, bp))
            or aug.contains_cyclic_subordering((bp, bm, am, ap)))


def _member_sign(W, h):
    if isinstance(h, Virtual):
        return OPP[_site_sign(W, h.half)]
    return _site_sign(W, h)


def check_pair(W, W2):
    """Evaluate the sign condition and NC1-NC3 for an (unordered) walk pair."""
    if W.graph != W2.graph:
        raise GraphMismatch("walks on different graphs")
    report = PairReport(sign_ok=_sign_condition(W, W2))
    for site in common_subwalk_sites(W, W2):
        if not _nc1_holds(W, W2, site):
            report.nc1_failures.append(site)
        if not _nc2_holds(W, W2, site):
            report.nc2_failures.append(site)
    for site in intersection_sites(W, W2):
        if not _nc3_holds(W, W2, site):
            report.nc3_failures.append(site)
    return report


def is_admissible(W):
    return check_pair(W, W).compatible


def is_admissible_set(ws):
    ws = sorted(ws)
    for idx, W in enumerate(ws):
        for W2 in ws[idx:]:
            if not check_pair(W, W2).compatible:
                return False
    return True


# -- enumeration ---------------------------------------------------------------

class _OrientedView(SignedWalk):
    """A SignedWalk whose stored representative keeps a fixed orientation.

    Used by the enumerator, whose pruning logic must know which end of the
    half-walk is still growing.
    """

    def __init__(self, graph, halves, signs):
        self.graph = graph
        self.halves = tuple(halves)
        self.signs = tuple(signs)
        self.edge_sign = {graph.edge_of(h): s
                          for h, s in zip(self.halves, self.signs)}


def _extension_viable(view):
    """False iff the oriented prefix has a failure that persists under every
    right-extension.

    Failures touching the growing right end (virtual members there, or runs
    reaching the last position) may be cured by extending; failures at the
    fixed left end or in the interior cannot.  The sign condition is never
    pruned on, since both endpoint records move as the walk grows.
    """
    l = len(view.halves)

    def touches_growing_end(rep, start, length):
        if rep == 0:
            return start + length == l + 1
        return start == 1

    for site in common_subwalk_sites(view, view):
        if not _nc1_holds(view, view, site):
            return False
        if not _nc2_holds(view, view, site):
            if not (touches_growing_end(site.rep_first, site.i, site.length)
                    or touches_growing_end(site.rep_second, site.j,
                                           site.length)):
                return False
    for site in intersection_sites(view, view):
        if not _nc3_holds(view, view, site):
            if site.pos_w <= l and site.pos_w2 <= l:
                return False
    return True


def enumerate_admissible_walks(g, cap):
    """All admissible walks of length <= cap, plus a stabilization flag.

    Depth-first extension over half-walks with alternating, edge-consistent
    signs, pruned by self-compatibility: a branch is abandoned once it has a
    non-crossing failure that no right-extension can cure.  stabilized is
    true iff no viable prefix of length cap+1 exists; since every prefix of
    an admissible walk is viable, this certifies that raising the cap cannot
    add walks.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    found = {}
    frontier_alive = [False]

    def recurse(halves, signs, edge_sign):
        view = _OrientedView(g, halves, signs)
        if not _extension_viable(view):
            return
        if len(halves) > cap:
            frontier_alive[0] = True
            return
        walk = SignedWalk(g, halves, signs, _validated=True)
        if is_admissible(walk):
            found[(walk.halves, walk.signs)] = walk
        last = halves[-1]
        nxt_sign = OPP[signs[-1]]
        v = g.source[g.partner[last]]
        for h in sorted(g.half_edges):
            if g.source[h] != v:
                continue
            e = g.edge_of(h)
            if edge_sign.get(e, nxt_sign) != nxt_sign:
                continue
            edge_sign2 = dict(edge_sign)
            edge_sign2[e] = nxt_sign
            recurse(halves + [h], signs + [nxt_sign], edge_sign2)

    for h in sorted(g.half_edges):
        for s in ("+", "-"):
            recurse([h], [s], {g.edge_of(h): s})

    walks = sorted(found.values())
    return walks, not frontier_alive[0]
