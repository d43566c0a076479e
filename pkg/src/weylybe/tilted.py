"""Tilted Bruhat digraphs, intervals and orders, with their shelling checks.

The digraph D(W) has an edge u -> tau u whenever tau raises the length of u by
one, or lowers it by l(tau) where l(tau) = 2 ht(alpha) - 1.  Edges carry the
label of tau in a reflection ordering.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .operators import MultiplicativeFunction, quantum_family
from .root_system import RootSystem, dihedral_containing
from .scalars import EpsPoly
from .weyl import ReflectionOrdering, WeylGroup, default_ordering, subgroup_elements, weyl_group
from .ybe import apply_product


class TheoremViolation(AssertionError):
    """A structural property that must hold for every finite Weyl group failed."""


class StructuralError(RuntimeError):
    pass


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    root: int
    label: int
    down: bool


class TiltedDigraph:
    def __init__(self, rs: RootSystem, ordering: ReflectionOrdering | None = None):
        self.rs = rs
        self.group: WeylGroup = weyl_group(rs)
        self.ordering = ordering or default_ordering(rs)
        g = self.group
        heights = [sum(r) for r in rs.positive_roots]
        L = g.lengths
        out = [[] for _ in range(g.size)]
        edges = []
        for u in range(g.size):
            for k in range(rs.num_positive):
                v = g.left[k][u]
                up = L[v] == L[u] + 1
                down = L[v] == L[u] - g.reflection_lengths[k] and g.reflection_lengths[k] == 2 * heights[k] - 1
                if up or down:
                    out[u].append(Edge(u, v, k, self.ordering.label(k), down))
            out[u].sort(key=lambda e: e.label)
            edges.extend(out[u])
        self.out = out
        self.edges = edges
        # label -> target, per source vertex
        self.step = [{e.label: e.target for e in es} for es in out]
        self._dist = {}

    @property
    def size(self) -> int:
        return self.group.size

    @property
    def ordering_size(self) -> int:
        return len(self.ordering.order)

    def distances_from(self, u: int) -> list:
        if u not in self._dist:
            dist = [-1] * self.size
            dist[u] = 0
            queue = deque([u])
            while queue:
                x = queue.popleft()
                for e in self.out[x]:
                    if dist[e.target] < 0:
                        dist[e.target] = dist[x] + 1
                        queue.append(e.target)
            if min(dist) < 0:
                raise StructuralError(f"D(W) not strongly connected from {self.name(u)}")
            self._dist[u] = dist
        return self._dist[u]

    def distance(self, u: int, v: int) -> int:
        return self.distances_from(u)[v]

    def name(self, w: int) -> str:
        return self.group.word_string(w)

    def edge(self, u: int, v: int) -> Edge | None:
        for e in self.out[u]:
            if e.target == v:
                return e
        return None

    def to_json(self) -> str:
        return json.dumps({
            "vertices": [self.name(w) for w in range(self.size)],
            "edges": [{"source": self.name(e.source), "target": self.name(e.target),
                       "label": e.label, "down": e.down} for e in self.edges],
        })

    def to_dot(self, name: str = "D") -> str:
        lines = [f"digraph {name} {{"]
        for w in range(self.size):
            lines.append(f'  "{self.name(w)}";')
        for e in self.edges:
            style = ", style=dashed" if e.down else ""
            lines.append(f'  "{self.name(e.source)}" -> "{self.name(e.target)}" [label="{e.label}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_digraph(rs: RootSystem, ordering: ReflectionOrdering | None = None) -> TiltedDigraph:
    return TiltedDigraph(rs, ordering)


def tilted_distance(D: TiltedDigraph, u: int, v: int) -> int:
    return D.distance(u, v)


# --- graded posets ----------------------------------------------------------

@dataclass
class GradedPoset:
    elements: list
    rank: dict
    covers: list  # (lower, upper, label)
    bottom: int
    top: int | None = None
    names: dict = field(default_factory=dict)

    def __post_init__(self):
        self.up = {x: [] for x in self.elements}
        for a, b, lab in self.covers:
            if self.rank[b] != self.rank[a] + 1:
                raise ValueError("covers must raise rank by one")
            self.up[a].append((lab, b))
        for x in self.up:
            self.up[x].sort()
        pos = {x: i for i, x in enumerate(self.elements)}
        self._pos = pos
        ups = {}
        for x in sorted(self.elements, key=lambda z: -self.rank[z]):
            mask = 1 << pos[x]
            for _, y in self.up[x]:
                mask |= ups[y]
            ups[x] = mask
        self._ups = ups

    def __len__(self):
        return len(self.elements)

    def leq(self, x, y) -> bool:
        return bool(self._ups[x] >> self._pos[y] & 1)

    def upset(self, x) -> list:
        return [y for y in self.elements if self.leq(x, y)]

    def interval(self, x, y) -> list:
        return [z for z in self.elements if self.leq(x, z) and self.leq(z, y)]

    def maximal_elements(self) -> list:
        return [x for x in self.elements if not self.up[x]]

    def to_json(self) -> str:
        nm = lambda x: self.names.get(x, str(x))
        return json.dumps({
            "elements": [nm(x) for x in self.elements],
            "rank": {nm(x): self.rank[x] for x in self.elements},
            "covers": [[nm(a), nm(b), lab] for a, b, lab in self.covers],
            "bottom": nm(self.bottom),
            "top": None if self.top is None else nm(self.top),
        })

    def to_dot(self, name: str = "P", down=None) -> str:
        nm = lambda x: self.names.get(x, str(x))
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for x in self.elements:
            lines.append(f'  "{nm(x)}";')
        for a, b, lab in self.covers:
            style = ", style=dashed" if down and (a, b) in down else ""
            lines.append(f'  "{nm(a)}" -> "{nm(b)}" [label="{lab}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _names(D: TiltedDigraph, elems) -> dict:
    return {w: D.name(w) for w in elems}


def tilted_interval(D: TiltedDigraph, u: int, v: int) -> GradedPoset:
    du = D.distances_from(u)
    total = du[v]
    elems = [w for w in range(D.size) if du[w] + D.distance(w, v) == total]
    inside = set(elems)
    covers = [(e.source, e.target, e.label) for w in elems for e in D.out[w]
              if e.target in inside and du[e.target] == du[w] + 1]
    return GradedPoset(elems, {w: du[w] for w in elems}, covers, u, v, _names(D, elems))


def tilted_order(D: TiltedDigraph, u: int) -> GradedPoset:
    du = D.distances_from(u)
    elems = list(range(D.size))
    covers = [(e.source, e.target, e.label) for w in elems for e in D.out[w]
              if du[e.target] == du[w] + 1]
    P = GradedPoset(elems, {w: du[w] for w in elems}, covers, u, None, _names(D, elems))
    maxima = P.maximal_elements()
    if len(maxima) == 1:
        P.top = maxima[0]
    return P


def down_edges(D: TiltedDigraph) -> set:
    return {(e.source, e.target) for e in D.edges if e.down}


# --- monotone paths -----------------------------------------------------------

def monotone_walks(D: TiltedDigraph, u: int, decreasing: bool = False) -> dict:
    """All label-monotone walks from u, grouped by endpoint.

    Labels from one vertex are distinct, so a walk is determined by its label
    set and there are at most 2^N of them.
    """
    N = D.ordering_size
    found = {}
    stack = [(u, (N + 1) if decreasing else 0, ())]
    while stack:
        w, last, labels = stack.pop()
        found.setdefault(w, []).append(labels)
        for lab, t in D.step[w].items():
            if (lab < last) if decreasing else (lab > last):
                stack.append((t, lab, labels + (lab,)))
    return found


def walk_vertices(D: TiltedDigraph, u: int, labels) -> list:
    path = [u]
    for lab in labels:
        path.append(D.step[path[-1]][lab])
    return path


def extremal_geodesic(D: TiltedDigraph, u: int, v: int, largest: bool = False) -> tuple:
    """Label word of the lexicographically smallest (or largest) shortest path u -> v.

    Every label determines the next vertex, so the greedy choice along
    vertices that stay on a geodesic is optimal.
    """
    word = []
    w = u
    while w != v:
        d = D.distance(w, v)
        options = [lab for lab, t in D.step[w].items() if D.distance(t, v) == d - 1]
        lab = max(options) if largest else min(options)
        word.append(lab)
        w = D.step[w][lab]
    return tuple(word)


def shortest_paths(D: TiltedDigraph, u: int, v: int) -> list:
    """Label words of every shortest path u -> v (exhaustive enumeration)."""
    out = []

    def rec(w, acc):
        if w == v:
            out.append(tuple(acc))
            return
        d = D.distance(w, v)
        for lab, t in D.step[w].items():
            if D.distance(t, v) == d - 1:
                acc.append(lab)
                rec(t, acc)
                acc.pop()

    rec(u, [])
    return out


def unique_increasing_path(D: TiltedDigraph, u: int, v: int, decreasing: bool = False) -> list:
    """The unique strictly monotone path u -> v as a list of edges.

    Raises TheoremViolation if it is not unique, not shortest, or not the
    lexicographic extreme among shortest paths.
    """
    walks = monotone_walks(D, u, decreasing).get(v, [])
    if len(walks) != 1:
        raise TheoremViolation(f"{len(walks)} monotone paths from {D.name(u)} to {D.name(v)}")
    labels = walks[0]
    if len(labels) != D.distance(u, v):
        raise TheoremViolation("monotone path is not a shortest path")
    if labels != extremal_geodesic(D, u, v, largest=decreasing):
        raise TheoremViolation("monotone path is not lexicographically extreme")
    verts = walk_vertices(D, u, labels)
    return [D.edge(a, b) for a, b in zip(verts, verts[1:])]


@dataclass
class PathReport:
    pairs: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_monotone_paths(D: TiltedDigraph) -> PathReport:
    """Unique increasing and decreasing paths for every ordered pair of elements."""
    rep = PathReport()
    for u in range(D.size):
        inc = monotone_walks(D, u)
        dec = monotone_walks(D, u, decreasing=True)
        du = D.distances_from(u)
        for v in range(D.size):
            rep.pairs += 1
            a, b = inc.get(v, []), dec.get(v, [])
            ok = (len(a) == 1 and len(b) == 1 and len(a[0]) == du[v] == len(b[0])
                  and a[0] == extremal_geodesic(D, u, v)
                  and b[0] == extremal_geodesic(D, u, v, largest=True))
            if not ok:
                rep.failures.append((D.name(u), D.name(v), len(a), len(b)))
    return rep


# --- product identity -------------------------------------------------------

def tilted_product(D: TiltedDigraph, u: int) -> dict:
    """R_{phi^-1(1)} ... R_{phi^-1(N)} (u) with R = 1 + eps Q and E = 1."""
    g = D.group
    Q = quantum_family(g, MultiplicativeFunction.constant_one(D.rs))
    ops = [Q[k] for k in D.ordering.order]
    return apply_product(ops, {u: EpsPoly([Fraction(1)])})


def check_product_identity(D: TiltedDigraph, u: int) -> bool:
    got = tilted_product(D, u)
    du = D.distances_from(u)
    if set(got) != set(range(D.size)):
        return False
    return all(got[v] == EpsPoly([0] * du[v] + [1]) for v in range(D.size))


# --- diamond completion -----------------------------------------------------

def diamond_completion(D: TiltedDigraph, u: int, x: int, v: int):
    """Given u -k-> x -l-> v with k > l, find y with u -m-> y -n-> v, l < n, m < k, m < n.

    The search runs over the reflections of the dihedral subgroup generated by
    the reflections labeled k and l, so y lies in the coset W'u.
    Returns (y, m, n).
    """
    e1, e2 = D.edge(u, x), D.edge(x, v)
    if e1 is None or e2 is None:
        raise ValueError("u -> x -> v is not a path in D(W)")
    k, l = e1.label, e2.label
    if not k > l:
        raise ValueError("labels must decrease along u -> x -> v")
    sub = dihedral_containing(D.rs, e1.root, e2.root)
    candidates = []
    for r in sorted(sub.roots, key=D.ordering.label):
        m = D.ordering.label(r)
        y = D.step[u].get(m)
        if y is None:
            continue
        e = D.edge(y, v)
        if e is not None and l < e.label and m < k and m < e.label:
            candidates.append((y, m, e.label))
    if not candidates:
        raise TheoremViolation(f"no diamond completion for {D.name(u)}, {D.name(x)}, {D.name(v)}")
    return candidates[0]


def decreasing_two_paths(D: TiltedDigraph):
    for u in range(D.size):
        for e1 in D.out[u]:
            for e2 in D.out[e1.target]:
                if e1.label > e2.label:
                    yield u, e1.target, e2.target


def in_coset(D: TiltedDigraph, y: int, u: int, root_a: int, root_b: int) -> bool:
    """Whether y lies in W'u for W' generated by the two given reflections."""
    g = D.group
    sub = dihedral_containing(D.rs, root_a, root_b)
    return any(g.mul(w, u) == y for w in subgroup_elements(g, sub))


# --- Moebius function, Eulerian and shelling checks -----------------------------

def mobius(P: GradedPoset, bottoms=None) -> dict:
    """mu(x, y) for all x <= y (x restricted to ``bottoms`` if given)."""
    mu = {}
    order = sorted(P.elements, key=lambda z: P.rank[z])
    for x in (P.elements if bottoms is None else bottoms):
        above = [z for z in order if P.leq(x, z)]
        mx = {}
        for y in above:
            if y == x:
                mx[y] = 1
            else:
                mx[y] = -sum(mx[z] for z in above if z in mx and P.leq(z, y))
            mu[(x, y)] = mx[y]
    return mu


def is_lower_eulerian(P: GradedPoset) -> bool:
    mu = mobius(P)
    return all(val == (-1) ** (P.rank[y] - P.rank[x]) for (x, y), val in mu.items())


def is_eulerian(P: GradedPoset) -> bool:
    if P.top is None or not all(P.leq(x, P.top) for x in P.elements):
        return False
    return is_lower_eulerian(P)


@dataclass
class ShellingReport:
    intervals: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def el_shelling_check(P: GradedPoset) -> ShellingReport:
    """Unique increasing chain = lexicographically first, unique decreasing chain = last, per interval."""
    rep = ShellingReport()
    order = sorted(P.elements, key=lambda z: -P.rank[z])
    for y in P.elements:
        below = [z for z in order if P.leq(z, y)]
        # inc[z][lab]: number of increasing chains z -> y whose first label is > lab
        lexmin, lexmax, n_inc, n_dec = {}, {}, {}, {}
        for z in below:
            if z == y:
                lexmin[z] = lexmax[z] = ()
                n_inc[z] = {None: 1}
                n_dec[z] = {None: 1}
                continue
            steps = [(lab, t) for lab, t in P.up[z] if P.leq(t, y)]
            lexmin[z] = min((lab,) + lexmin[t] for lab, t in steps)
            lexmax[z] = max((lab,) + lexmax[t] for lab, t in steps)
            ci, cd = {}, {}
            for lab, t in steps:
                ci[lab] = ci.get(lab, 0) + sum(c for f, c in n_inc[t].items() if f is None or f > lab)
                cd[lab] = cd.get(lab, 0) + sum(c for f, c in n_dec[t].items() if f is None or f < lab)
            n_inc[z] = {k: c for k, c in ci.items() if c}
            n_dec[z] = {k: c for k, c in cd.items() if c}
        for z in below:
            if z == y:
                continue
            rep.intervals += 1
            inc_count = sum(n_inc[z].values())
            dec_count = sum(n_dec[z].values())
            ok = inc_count == 1 and dec_count == 1
            if ok:
                ok = (_is_monotone(lexmin[z], inc=True) and _is_monotone(lexmax[z], inc=False))
            if not ok:
                rep.failures.append((P.names.get(z, z), P.names.get(y, y), inc_count, dec_count))
    return rep


def _is_monotone(word, inc: bool) -> bool:
    return all((a < b) if inc else (a > b) for a, b in zip(word, word[1:]))


def bruhat_interval_poset(g: WeylGroup, u: int, v: int) -> tuple:
    """Elements and cover pairs of the classical Bruhat interval [u, v]."""
    elems = [w for w in range(g.size) if g.bruhat_leq(u, w) and g.bruhat_leq(w, v)]
    inside = set(elems)
    covers = {(a, b) for a in elems for b in g.bruhat_covers[a] if b in inside}
    return set(elems), covers
