"""Finite crystallographic root systems in the simple-root basis.

Roots are integer coefficient tuples.  Conventions for the Dynkin labelling:

* A, D, E, F, G follow Bourbaki.  In G2 the first simple root is short.
* B_n and C_n are numbered from the double bond: in B_n the first simple root
  is the unique short one, in C_n it is the unique long one.  With this choice
  the rank-2 system B2 has simple roots ``alpha`` (short, index 1) and
  ``beta`` (long, index 2) and positive roots alpha, beta, alpha+beta,
  2alpha+beta.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

SHORT = "short"
LONG = "long"

MAX_RANK = 8


class ConfigurationError(ValueError):
    """Invalid (type, rank) combination or unsupported input."""


class DomainError(ValueError):
    """Argument outside the domain of an operation."""


def _inner_products(type_label: str, rank: int):
    """Gram matrix of the simple roots, scaled so that short roots have norm 1 or 2."""
    n = rank
    B = [[Fraction(0)] * n for _ in range(n)]

    def bond(i, j, val):
        B[i][j] = B[j][i] = Fraction(val)

    if type_label == "A":
        for i in range(n):
            B[i][i] = Fraction(2)
        for i in range(n - 1):
            bond(i, i + 1, -1)
    elif type_label == "B":
        # index 0 short, the rest long
        B[0][0] = Fraction(1)
        for i in range(1, n):
            B[i][i] = Fraction(2)
        bond(0, 1, -1)
        for i in range(1, n - 1):
            bond(i, i + 1, -1)
    elif type_label == "C":
        # index 0 long, the rest short
        B[0][0] = Fraction(4)
        for i in range(1, n):
            B[i][i] = Fraction(2)
        bond(0, 1, -2)
        for i in range(1, n - 1):
            bond(i, i + 1, -1)
    elif type_label == "D":
        for i in range(n):
            B[i][i] = Fraction(2)
        for i in range(n - 2):
            bond(i, i + 1, -1)
        bond(n - 3, n - 1, -1)
    elif type_label == "E":
        for i in range(n):
            B[i][i] = Fraction(2)
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        for i, j in edges:
            bond(i, j, -1)
    elif type_label == "F":
        for i, d in enumerate([2, 2, 1, 1]):
            B[i][i] = Fraction(d)
        bond(0, 1, -1)
        bond(1, 2, -1)
        bond(2, 3, Fraction(-1, 2))
    elif type_label == "G":
        B[0][0] = Fraction(2)
        B[1][1] = Fraction(6)
        bond(0, 1, -3)
    return B


_VALID = {
    "A": range(1, MAX_RANK + 1),
    "B": range(2, MAX_RANK + 1),
    "C": range(3, MAX_RANK + 1),
    "D": range(4, MAX_RANK + 1),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
}

_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class CartanDatum:
    type_label: str
    rank: int
    cartan_matrix: tuple

    def __post_init__(self):
        A = self.cartan_matrix
        for i, row in enumerate(A):
            for j, a in enumerate(row):
                if i == j and a != 2:
                    raise ConfigurationError("Cartan diagonal must be 2")
                if i != j and a > 0:
                    raise ConfigurationError("Cartan off-diagonal entries must be <= 0")


@dataclass(frozen=True)
class RootSystem:
    """Positive roots of a finite root system, simple roots first."""

    cartan: CartanDatum
    positive_roots: tuple
    gram: tuple = field(repr=False)
    norms: tuple = field(repr=False)
    root_index: dict = field(repr=False, compare=False, hash=False)
    length_classes: tuple = field(repr=False)

    @property
    def type_label(self) -> str:
        return self.cartan.type_label

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def key(self) -> tuple:
        return (self.cartan.type_label, self.cartan.rank)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def __hash__(self):
        return hash(self.key)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.key == other.key

    @property
    def simply_laced(self) -> bool:
        return len(set(self.length_classes)) == 1

    def simple_root(self, i: int) -> tuple:
        """Simple root alpha_i, 1-based."""
        return self.positive_roots[i - 1]

    def index(self, root) -> int:
        """Index of a positive root in ``positive_roots``."""
        try:
            return self.root_index[tuple(root)]
        except KeyError:
            raise DomainError(f"{tuple(root)} is not a positive root of {self.name}") from None

    def is_root(self, v) -> bool:
        v = tuple(v)
        return v in self.root_index or tuple(-x for x in v) in self.root_index

    def form(self, u, v) -> Fraction:
        """Invariant inner product of two coefficient vectors."""
        B = self.gram
        return sum((u[i] * v[j] * B[i][j] for i in range(self.rank) for j in range(self.rank)
                    if u[i] and v[j]), Fraction(0))

    def pairing(self, v, root) -> int:
        """<v, root^vee> = 2 (v, root) / (root, root)."""
        val = 2 * self.form(v, root) / self.form(root, root)
        assert val.denominator == 1
        return int(val)

    def reflect(self, root, v) -> tuple:
        """Apply the reflection in ``root`` to the vector ``v``."""
        c = self.pairing(v, root)
        return tuple(x - c * r for x, r in zip(v, root))

    def simple_reflection_matrix(self, i: int) -> tuple:
        """Matrix (rows = output coordinates) of s_i, 1-based index."""
        cols = [self.reflect(self.simple_root(i), e) for e in _unit_vectors(self.rank)]
        return tuple(tuple(cols[c][r] for c in range(self.rank)) for r in range(self.rank))

    @property
    def simple_reflection_matrices(self) -> tuple:
        return tuple(self.simple_reflection_matrix(i) for i in range(1, self.rank + 1))

    def to_json(self) -> str:
        return json.dumps({
            "type": self.type_label,
            "rank": self.rank,
            "positive_roots": [list(r) for r in self.positive_roots],
            "length_class": list(self.length_classes),
        })


def _unit_vectors(n):
    return [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Enumerate the positive roots of the given finite type."""
    if not isinstance(type_label, str) or type_label.upper() not in _VALID:
        raise ConfigurationError(f"unknown root system type {type_label!r}")
    t = type_label.upper()
    if not isinstance(rank, int) or rank not in _VALID[t]:
        raise ConfigurationError(f"unsupported rank {rank!r} for type {t}")

    B = _inner_products(t, rank)
    cartan = tuple(tuple(int(2 * B[i][j] / B[i][i]) for j in range(rank)) for i in range(rank))
    datum = CartanDatum(t, rank, cartan)

    simple = _unit_vectors(rank)

    def refl(i, v):
        # s_i(v) = v - <v, alpha_i^vee> alpha_i
        c = sum(cartan[i][j] * v[j] for j in range(rank))
        w = list(v)
        w[i] -= c
        return tuple(w)

    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rank):
                w = refl(i, v)
                if all(x >= 0 for x in w) and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    roots = sorted(seen, key=lambda r: (sum(r), tuple(-x for x in r)))
    if len(roots) != _POSITIVE_COUNT[t](rank):
        raise AssertionError(f"root enumeration for {t}{rank} found {len(roots)} roots")

    gram = tuple(tuple(row) for row in B)

    def norm(r):
        return sum((r[i] * r[j] * B[i][j] for i in range(rank) for j in range(rank)), Fraction(0))

    norms = tuple(norm(r) for r in roots)
    longest = max(norms)
    classes = tuple(LONG if n == longest else SHORT for n in norms)
    return RootSystem(datum, tuple(roots), gram, norms,
                      {r: k for k, r in enumerate(roots)}, classes)


def height(rs: RootSystem, root) -> int:
    root = tuple(root)
    if any(x < 0 for x in root):
        raise DomainError(f"height is only defined for positive roots, got {root}")
    rs.index(root)
    return sum(root)


def length_class(rs: RootSystem, root) -> str:
    root = tuple(root)
    if any(x < 0 for x in root):
        root = tuple(-x for x in root)
    return rs.length_classes[rs.index(root)]


def fundamental_weight_coefficient(rs: RootSystem, s_index: int, root, pairing: str = "root") -> int:
    """<omega_s, alpha> for a positive root.

    ``pairing="root"`` returns the coefficient of alpha_s in alpha.
    ``pairing="coroot"`` returns the coefficient of alpha_s^vee in alpha^vee.
    """
    root = tuple(root)
    if any(x < 0 for x in root):
        raise DomainError("positive root expected")
    c = root[s_index - 1]
    if pairing == "root":
        return c
    if pairing == "coroot":
        val = c * rs.form(rs.simple_root(s_index), rs.simple_root(s_index)) / rs.form(root, root)
        assert val.denominator == 1
        return int(val)
    raise ValueError(f"unknown pairing {pairing!r}")


# --- dihedral subsystems -------------------------------------------------

SUBTYPES = {2: "A1xA1", 3: "A2", 4: "B2", 6: "G2"}


@dataclass(frozen=True)
class DihedralSubsystem:
    """Positive roots of a rank-2 reflection subsystem with its simple pair.

    Root references are indices into the ambient ``positive_roots``.
    """

    roots: frozenset
    canonical_pair: tuple
    subtype: str
    maximal: bool

    @property
    def order(self) -> int:
        """Order of the reflection subgroup."""
        return 2 * len(self.roots)


def _positive(v):
    return v if any(x > 0 for x in v) else tuple(-x for x in v)


def _rank_of(vectors) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def reflection_closure(rs: RootSystem, root_indices) -> frozenset:
    """Positive roots of the reflection subgroup generated by the given reflections."""
    current = {rs.positive_roots[k] for k in root_indices}
    changed = True
    while changed:
        changed = False
        for a in list(current):
            for b in list(current):
                c = _positive(rs.reflect(a, b))
                if c not in current:
                    current.add(c)
                    changed = True
    return frozenset(rs.index(c) for c in current)


def canonical_pair(rs: RootSystem, roots) -> tuple:
    """The two extreme rays of the positive cone spanned by a rank-2 set of roots.

    Ordered by ambient root index.
    """
    vecs = {k: rs.positive_roots[k] for k in roots}
    ks = sorted(vecs)
    first, second = vecs[ks[0]], vecs[ks[1]]
    # pick two coordinates on which the plane projects isomorphically
    i, j = next((i, j) for i, j in itertools.combinations(range(rs.rank), 2)
                if first[i] * second[j] - first[j] * second[i] != 0) if rs.rank > 1 else (0, 0)

    def cross(u, v):
        return u[i] * v[j] - u[j] * v[i]

    extremes = []
    for k in ks:
        signs = {(cross(vecs[k], vecs[m]) > 0) for m in ks if m != k}
        if len(signs) == 1:
            extremes.append(k)
    if len(extremes) != 2:
        raise AssertionError(f"expected two extreme roots, found {extremes}")
    return tuple(extremes)


@lru_cache(maxsize=None)
def _all_dihedral(rs: RootSystem) -> tuple:
    out = {}
    n = rs.num_positive
    for a, b in itertools.combinations(range(n), 2):
        roots = reflection_closure(rs, (a, b))
        if roots in out:
            continue
        pair = canonical_pair(rs, roots)
        in_plane = frozenset(k for k in range(n)
                             if _rank_of([rs.positive_roots[a], rs.positive_roots[b],
                                          rs.positive_roots[k]]) == 2)
        out[roots] = DihedralSubsystem(roots, pair, SUBTYPES[len(roots)], in_plane == roots)
    return tuple(sorted(out.values(), key=lambda d: (d.canonical_pair, sorted(d.roots))))


def dihedral_subsystems(rs: RootSystem, maximal_only: bool = False) -> list:
    """All rank-2 reflection subsystems, each generated subgroup listed once."""
    subs = list(_all_dihedral(rs))
    if maximal_only:
        subs = [d for d in subs if d.maximal]
    return subs


def dihedral_containing(rs: RootSystem, i: int, j: int) -> DihedralSubsystem:
    """The reflection subsystem generated by two distinct reflections (by root index)."""
    roots = reflection_closure(rs, (i, j))
    for d in _all_dihedral(rs):
        if d.roots == roots:
            return d
    raise AssertionError("generated subsystem missing from enumeration")
