"""Weyl group elements as integer matrices acting on root coordinates.

An element is stored as the matrix whose column j is the image of the simple
root alpha_j.  Words are lists of 1-based simple-root indices, read left to
right as a product, so ``[1, 2]`` is s_1 s_2.

:class:`WeylGroup` enumerates the whole group once and keeps index tables
(left multiplication by every reflection, lengths, inverses) that the operator
and poset code work with.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .root_system import (
    DihedralSubsystem,
    DomainError,
    RootSystem,
    build_root_system,
    dihedral_subsystems,
)

DEFAULT_BOUND = 10_000


class GroupTooLarge(RuntimeError):
    pass


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _matvec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def _is_negative(v):
    return any(x < 0 for x in v)


@dataclass(frozen=True, eq=False)
class WeylElement:
    rs: RootSystem
    matrix: tuple

    def __eq__(self, other):
        return (isinstance(other, WeylElement) and self.rs.key == other.rs.key
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.rs.key, self.matrix))

    def __mul__(self, other):
        return multiply(self, other)

    def __call__(self, v):
        return _matvec(self.matrix, tuple(v))

    @cached_property
    def length(self) -> int:
        return sum(1 for r in self.rs.positive_roots if _is_negative(_matvec(self.matrix, r)))

    @cached_property
    def word(self) -> list:
        return reduced_word(self)

    def __repr__(self):
        return f"WeylElement({self.rs.name}, {''.join(map(str, self.word)) or 'e'})"


@dataclass(frozen=True)
class Reflection:
    root: tuple
    root_index: int
    element: WeylElement


def identity(rs: RootSystem) -> WeylElement:
    n = rs.rank
    return WeylElement(rs, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    return WeylElement(rs, rs.simple_reflection_matrix(i))


def reflection_element(rs: RootSystem, root) -> WeylElement:
    root = tuple(root)
    cols = [rs.reflect(root, e) for e in _units(rs.rank)]
    return WeylElement(rs, tuple(tuple(cols[c][r] for c in range(rs.rank)) for r in range(rs.rank)))


def _units(n):
    return [tuple(int(i == k) for k in range(n)) for i in range(n)]


def multiply(*elements: WeylElement) -> WeylElement:
    if not elements:
        raise ValueError("multiply needs at least one element")
    result = elements[0]
    for e in elements[1:]:
        if e.rs.key != result.rs.key:
            raise DomainError(f"cannot multiply elements of {result.rs.name} and {e.rs.name}")
        result = WeylElement(result.rs, _matmul(result.matrix, e.matrix))
    return result


def inverse(w: WeylElement) -> WeylElement:
    g = weyl_group(w.rs)
    return g.elements[g.inverse[g.index[w]]]


def length(w: WeylElement) -> int:
    return w.length


def from_word(rs: RootSystem, word) -> WeylElement:
    w = identity(rs)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise DomainError(f"simple index {i} out of range for {rs.name}")
        w = WeylElement(rs, _matmul(w.matrix, rs.simple_reflection_matrix(i)))
    return w


def left_descents(w: WeylElement) -> list:
    """Simple indices i (1-based) with l(s_i w) < l(w)."""
    winv = inverse(w)
    return [i for i in range(1, w.rs.rank + 1) if _is_negative(winv(w.rs.simple_root(i)))]


def reduced_word(w: WeylElement) -> list:
    """Reduced word of ``w``; the smallest left descent is always taken first."""
    rs = w.rs
    word = []
    cur = w
    while True:
        desc = left_descents(cur)
        if not desc:
            break
        i = desc[0]
        word.append(i)
        cur = multiply(simple_reflection(rs, i), cur)
    return word


def longest_element(rs: RootSystem) -> WeylElement:
    g = weyl_group(rs)
    return g.elements[g.longest]


class WeylGroup:
    """Enumerated Weyl group with index-based tables.

    ``elements[0]`` is the identity and the list is ordered by length (BFS).
    ``reflections[k]`` corresponds to ``rs.positive_roots[k]``.
    ``left[k][w]`` is the index of t_k * w for reflection k.
    """

    def __init__(self, rs: RootSystem, bound: int = DEFAULT_BOUND):
        self.rs = rs
        e = identity(rs)
        simples = [rs.simple_reflection_matrix(i) for i in range(1, rs.rank + 1)]
        elements = [e]
        index = {e.matrix: 0}
        queue = deque([e.matrix])
        while queue:
            m = queue.popleft()
            for s in simples:
                nm = _matmul(m, s)
                if nm not in index:
                    if len(elements) >= bound:
                        raise GroupTooLarge(f"{rs.name} has more than {bound} elements")
                    index[nm] = len(elements)
                    elements.append(WeylElement(rs, nm))
                    queue.append(nm)
        self.elements = elements
        self.matrices = [w.matrix for w in elements]
        self._index = index
        self.size = len(elements)
        # inversion sets: w^-1(alpha) < 0  <=>  l(t_alpha w) < l(w)
        roots = rs.positive_roots
        self.lengths = [sum(1 for r in roots if _is_negative(_matvec(m, r))) for m in self.matrices]
        # BFS over simple right multiplication visits elements in length order
        assert all(self.lengths[i] <= self.lengths[i + 1] for i in range(self.size - 1))
        for w, l in zip(elements, self.lengths):
            w.__dict__["length"] = l
        self.reflections = []
        for k, r in enumerate(roots):
            self.reflections.append(Reflection(r, k, reflection_element(rs, r)))
        self.reflection_index = [index[t.element.matrix] for t in self.reflections]
        self.left = []
        for t in self.reflections:
            tm = t.element.matrix
            self.left.append([index[_matmul(tm, m)] for m in self.matrices])
        self.right_simple = [[index[_matmul(m, s)] for m in self.matrices] for s in simples]
        self.inverse = [0] * self.size
        for w in range(self.size):
            if self.inverse[w]:
                continue
            # compute inverse by walking back along a word
            inv = 0
            for i in self.word_indices(w):
                inv = self.left[i - 1][inv]
            self.inverse[w] = inv
            self.inverse[inv] = w
        self.longest = max(range(self.size), key=lambda w: self.lengths[w])
        self.reflection_lengths = [self.lengths[i] for i in self.reflection_index]

    # lookups
    def index_of(self, w: WeylElement) -> int:
        if w.rs.key != self.rs.key:
            raise DomainError(f"element of {w.rs.name} used with {self.rs.name}")
        return self._index[w.matrix]

    @property
    def index(self):
        return _IndexView(self)

    def word_indices(self, w: int) -> list:
        """Reduced word (1-based letters) for the element with index ``w``, smallest left descent first."""
        word = []
        cur = w
        while self.lengths[cur] > 0:
            for i in range(self.rs.rank):
                nxt = self.left[i][cur]
                if self.lengths[nxt] < self.lengths[cur]:
                    word.append(i + 1)
                    cur = nxt
                    break
        return word

    def from_word(self, word) -> int:
        w = 0
        for i in word:
            w = self.right_simple[i - 1][w]
        return w

    def word_string(self, w: int, letters: str | None = None) -> str:
        word = self.word_indices(w)
        if not word:
            return "e"
        if letters:
            return "".join(letters[i - 1] for i in word)
        return "-".join(map(str, word)) if self.rs.rank > 9 else "".join(map(str, word))

    def mul(self, u: int, v: int) -> int:
        """Index of the product u*v."""
        for i in reversed(self.word_indices(u)):
            v = self.left[i - 1][v]
        return v

    # Bruhat order
    @cached_property
    def bruhat_covers(self) -> list:
        """``covers[u]`` = indices v = t u with l(v) = l(u) + 1."""
        out = []
        for u in range(self.size):
            lu = self.lengths[u]
            out.append(sorted({tab[u] for tab in self.left if self.lengths[tab[u]] == lu + 1}))
        return out

    @cached_property
    def bruhat_upsets(self) -> list:
        """Bitmask of the principal upper set of every element."""
        ups = [0] * self.size
        for u in sorted(range(self.size), key=lambda w: -self.lengths[w]):
            mask = 1 << u
            for v in self.bruhat_covers[u]:
                mask |= ups[v]
            ups[u] = mask
        return ups

    def bruhat_leq(self, u: int, v: int) -> bool:
        return bool(self.bruhat_upsets[u] >> v & 1)


class _IndexView:
    def __init__(self, g):
        self.g = g

    def __getitem__(self, w):
        return self.g.index_of(w)


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem, bound: int = DEFAULT_BOUND) -> WeylGroup:
    return WeylGroup(rs, bound)


def group_of(type_label: str, rank: int) -> WeylGroup:
    return weyl_group(build_root_system(type_label, rank))


def enumerate_group(rs: RootSystem, bound: int = DEFAULT_BOUND) -> list:
    """All elements, identity first, in BFS (length) order."""
    return list(weyl_group(rs, bound).elements)


def all_reflections(rs: RootSystem) -> list:
    return list(weyl_group(rs).reflections)


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    if u.rs.key != v.rs.key:
        raise DomainError("elements from different groups")
    g = weyl_group(u.rs)
    return g.bruhat_leq(g.index_of(u), g.index_of(v))


# --- reflection orderings -------------------------------------------------

@dataclass(frozen=True)
class ReflectionOrdering:
    """Reflections listed in increasing label order.

    ``order[j]`` is the positive-root index of the reflection with label j+1.
    """

    rs: RootSystem
    order: tuple
    source_word: tuple = ()
    label_of: dict = field(init=False, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "label_of", {k: j + 1 for j, k in enumerate(self.order)})

    @property
    def reflections(self) -> list:
        g = weyl_group(self.rs)
        return [g.reflections[k] for k in self.order]

    def label(self, root_index: int) -> int:
        return self.label_of[root_index]

    def reversed(self) -> "ReflectionOrdering":
        return ReflectionOrdering(self.rs, tuple(reversed(self.order)), tuple(reversed(self.source_word)))

    def to_json(self) -> list:
        return list(self.order)


def is_reduced(rs: RootSystem, word) -> bool:
    return from_word(rs, word).length == len(word)


def reflection_ordering_from_word(rs: RootSystem, word) -> ReflectionOrdering:
    """Reflection ordering attached to a reduced word s_1 ... s_N of w0.

    The reflection with label j is s_N ... s_{j+1} s_j s_{j+1} ... s_N, whose
    root is s_N ... s_{j+1}(alpha_{i_j}).
    """
    word = tuple(word)
    g = weyl_group(rs)
    if len(word) != rs.num_positive or not is_reduced(rs, word):
        raise DomainError(f"{word} is not a reduced word of w0 for {rs.name}")
    order = []
    for j in range(len(word)):
        v = rs.simple_root(word[j])
        for i in word[j + 1:]:
            v = rs.reflect(rs.simple_root(i), v)
        order.append(rs.index(v))
    assert len(set(order)) == len(order) == len(g.reflections)
    return ReflectionOrdering(rs, tuple(order), word)


def lex_smallest_w0_word(rs: RootSystem) -> tuple:
    g = weyl_group(rs)
    return tuple(g.word_indices(g.longest))


def default_ordering(rs: RootSystem) -> ReflectionOrdering:
    """Ordering from the lexicographically smallest reduced word of w0."""
    return reflection_ordering_from_word(rs, lex_smallest_w0_word(rs))


def random_w0_word(rs: RootSystem, rng: random.Random) -> tuple:
    """Reduced word of w0 built by peeling off a random left descent at each step."""
    g = weyl_group(rs)
    word = []
    cur = g.longest
    while g.lengths[cur]:
        desc = [i for i in range(rs.rank) if g.lengths[g.left[i][cur]] < g.lengths[cur]]
        i = rng.choice(desc)
        word.append(i + 1)
        cur = g.left[i][cur]
    return tuple(word)


def random_ordering(rs: RootSystem, seed: int, avoid=None) -> ReflectionOrdering:
    """Seeded random reflection ordering, distinct from ``avoid`` when possible."""
    rng = random.Random(seed)
    for _ in range(200):
        o = reflection_ordering_from_word(rs, random_w0_word(rs, rng))
        if avoid is None or o.order != avoid.order:
            return o
    return o


def ybe_sequence(rs: RootSystem, sub: DihedralSubsystem, first: int | None = None) -> list:
    """Root indices of a, aba, ababa, ..., bab, b for the subsystem's canonical pair."""
    a, b = sub.canonical_pair
    if first is not None:
        if first not in (a, b):
            raise DomainError("first generator must belong to the canonical pair")
        if first == b:
            a, b = b, a
    m = len(sub.roots)
    ra, rb = rs.positive_roots[a], rs.positive_roots[b]
    # a, aba, ababa, ... have roots alpha, s_a(beta), s_a s_b(alpha), s_a s_b s_a(beta), ...
    seq = []
    odd, even = ra, rs.reflect(ra, rb)
    for k in range(m):
        v = odd if k % 2 == 0 else even
        p = v if any(x > 0 for x in v) else tuple(-x for x in v)
        seq.append(rs.index(p))
        if k % 2 == 0:
            odd = rs.reflect(ra, rs.reflect(rb, odd))
        else:
            even = rs.reflect(ra, rs.reflect(rb, even))
    assert seq[-1] == b and len(set(seq)) == m
    return seq


def is_reflection_ordering(rs: RootSystem, candidate) -> bool:
    """Check monotonicity of labels along every dihedral subsystem."""
    order = [c.root_index if isinstance(c, Reflection) else int(c) for c in candidate]
    if sorted(order) != list(range(rs.num_positive)):
        raise DomainError("candidate is not a permutation of the reflections")
    label = {k: j for j, k in enumerate(order)}
    for sub in dihedral_subsystems(rs):
        labels = [label[k] for k in ybe_sequence(rs, sub)]
        inc = all(x < y for x, y in zip(labels, labels[1:]))
        dec = all(x > y for x, y in zip(labels, labels[1:]))
        if not (inc or dec):
            return False
    return True


# --- cosets -----------------------------------------------------------------

@dataclass
class CosetDecomposition:
    """Right cosets W'w of a dihedral reflection subgroup (W' acting on the left)."""

    subgroup: DihedralSubsystem
    subgroup_elements: list
    representatives: list
    membership: dict
    cosets: list

    def check_descent_correspondence(self, g: WeylGroup) -> bool:
        for rep, coset in zip(self.representatives, self.cosets):
            for wp in self.subgroup_elements:
                x = g.mul(wp, rep)
                for k in self.subgroup.roots:
                    lhs = g.lengths[g.left[k][wp]] < g.lengths[wp]
                    rhs = g.lengths[g.left[k][x]] < g.lengths[x]
                    if lhs != rhs:
                        return False
        return True


def subgroup_elements(g: WeylGroup, sub: DihedralSubsystem) -> list:
    """Indices of the reflection subgroup generated by the subsystem's reflections."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for w in frontier:
            for k in sub.canonical_pair:
                v = g.left[k][w]
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted(seen)


def coset_decomposition(rs: RootSystem, sub: DihedralSubsystem) -> CosetDecomposition:
    g = weyl_group(rs)
    sub_elems = subgroup_elements(g, sub)
    assert len(sub_elems) == sub.order
    membership = {}
    reps, cosets = [], []
    for w in range(g.size):
        if w in membership:
            continue
        coset = sorted({g.mul(x, w) for x in sub_elems})
        minlen = min(g.lengths[c] for c in coset)
        minima = [c for c in coset if g.lengths[c] == minlen]
        if len(minima) != 1:
            raise AssertionError(f"coset of {g.word_string(w)} has {len(minima)} minimal elements")
        rep = minima[0]
        for x in sub_elems:
            membership[g.mul(x, rep)] = (len(reps), x)
        reps.append(rep)
        cosets.append(coset)
    return CosetDecomposition(sub, sub_elems, reps, membership, cosets)
