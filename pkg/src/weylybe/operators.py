"""Operators on the group algebra k[W]: mixed and quantum Bruhat operators.

Operators are column-sparse matrices over the enumerated group: the column of
an element ``w`` (an index into :class:`~weylybe.weyl.WeylGroup`) is a dict
``row -> scalar``.  Reflections are referred to by the index of their positive
root.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .root_system import LONG, SHORT, DomainError, RootSystem
from .scalars import EpsPoly, MultiPoly, RationalFunction, is_zero, to_string
from .weyl import WeylGroup


class ParameterizationError(ValueError):
    pass


class DegenerateParameterError(ValueError):
    pass


def _div(a, b):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / Fraction(b)
    return a / b


class LinearOperator:
    """Sparse endomorphism of k[W]; ``cols[w]`` maps row indices to scalars."""

    __slots__ = ("group", "cols")

    def __init__(self, group: WeylGroup, cols: Mapping[int, Mapping[int, object]] | None = None):
        self.group = group
        self.cols = {}
        for c, col in (cols or {}).items():
            kept = {r: v for r, v in col.items() if not is_zero(v)}
            if kept:
                self.cols[c] = kept

    @classmethod
    def identity(cls, group: WeylGroup, one=1) -> "LinearOperator":
        return cls(group, {w: {w: one} for w in range(group.size)})

    @classmethod
    def zero(cls, group: WeylGroup) -> "LinearOperator":
        return cls(group)

    def entry(self, row: int, col: int):
        return self.cols.get(col, {}).get(row, 0)

    def apply(self, vec: Mapping[int, object]) -> dict:
        out: dict = {}
        for c, x in vec.items():
            col = self.cols.get(c)
            if not col:
                continue
            for r, m in col.items():
                y = m * x
                out[r] = out[r] + y if r in out else y
        return {r: v for r, v in out.items() if not is_zero(v)}

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        """Composition: (self @ other)(v) = self(other(v))."""
        return LinearOperator(self.group, {c: self.apply(col) for c, col in other.cols.items()})

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            tgt = cols.setdefault(c, {})
            for r, v in col.items():
                tgt[r] = tgt[r] + v if r in tgt else v
        return LinearOperator(self.group, cols)

    def __neg__(self):
        return LinearOperator(self.group, {c: {r: -v for r, v in col.items()}
                                           for c, col in self.cols.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "LinearOperator":
        return LinearOperator(self.group, {c: {r: s * v for r, v in col.items()}
                                           for c, col in self.cols.items()})

    def map_scalars(self, f: Callable) -> "LinearOperator":
        return LinearOperator(self.group, {c: {r: f(v) for r, v in col.items()}
                                           for c, col in self.cols.items()})

    def first_difference(self, other: "LinearOperator"):
        """(row, col, mine, theirs) of the first unequal entry, or None."""
        for c in sorted(set(self.cols) | set(other.cols)):
            a, b = self.cols.get(c, {}), other.cols.get(c, {})
            for r in sorted(set(a) | set(b)):
                x, y = a.get(r, 0), b.get(r, 0)
                if not x == y:
                    return r, c, x, y
        return None

    def __eq__(self, other):
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def to_json(self) -> str:
        g = self.group
        triples = [[g.word_string(c), g.word_string(r), to_string(v)]
                   for c in sorted(self.cols) for r, v in sorted(self.cols[c].items())]
        return json.dumps(triples)


# --- multiplicative functions and parameters ------------------------------

class MultiplicativeFunction:
    """E(alpha) = prod_i E(alpha_i) ** c_i for alpha = sum c_i alpha_i."""

    def __init__(self, rs: RootSystem, simple_values):
        if len(simple_values) != rs.rank:
            raise ValueError(f"need {rs.rank} simple values, got {len(simple_values)}")
        self.rs = rs
        self.simple_values = tuple(Fraction(v) if isinstance(v, int) else v for v in simple_values)
        self._cache = {}

    def __call__(self, root):
        k = root if isinstance(root, int) else self.rs.index(root)
        if k not in self._cache:
            val = 1
            for v, c in zip(self.simple_values, self.rs.positive_roots[k]):
                if c:
                    val = val * v ** c
            self._cache[k] = Fraction(val) if isinstance(val, int) else val
        return self._cache[k]

    @classmethod
    def constant_one(cls, rs: RootSystem) -> "MultiplicativeFunction":
        return cls(rs, [Fraction(1)] * rs.rank)

    def scaled_by_height(self, h) -> "MultiplicativeFunction":
        """alpha -> h**ht(alpha) E(alpha)."""
        return MultiplicativeFunction(self.rs, [h * v for v in self.simple_values])


@dataclass
class ParamSet:
    """Parameters p_tau, q_tau (keyed by root index) and kappa per length class."""

    rs: RootSystem
    p: dict
    q: dict
    kappa: dict

    def kappa_of(self, k: int):
        return self.kappa[self.rs.length_classes[k]]

    def with_q(self, k: int, value) -> "ParamSet":
        q = dict(self.q)
        q[k] = value
        return ParamSet(self.rs, dict(self.p), q, dict(self.kappa))


def params_from_multiplicative(rs: RootSystem, E1: MultiplicativeFunction,
                               E2: MultiplicativeFunction, kappa_short, kappa_long) -> ParamSet:
    """p = kappa E1/(E1 - E2), q = kappa E2/(E1 - E2) on every positive root."""
    kappa = {SHORT: kappa_short, LONG: kappa_long}
    p, q = {}, {}
    for k, root in enumerate(rs.positive_roots):
        e1, e2 = E1(k), E2(k)
        d = e1 - e2
        if is_zero(d):
            raise ParameterizationError(f"E1 = E2 on root {root}")
        c = kappa[rs.length_classes[k]]
        p[k] = _div(c * e1, d)
        q[k] = _div(c * e2, d)
    return ParamSet(rs, p, q, kappa)


def symbolic_params(rs: RootSystem, prefix1: str = "e1_", prefix2: str = "e2_"):
    """Indeterminate E1, E2 values per simple root plus kappa_short, kappa_long.

    Returns (params, E1, E2, variable names).
    """
    names = ([f"{prefix1}{i}" for i in range(1, rs.rank + 1)]
             + [f"{prefix2}{i}" for i in range(1, rs.rank + 1)]
             + ["k_short", "k_long"])
    xs = MultiPoly.variables(*names)
    E1 = MultiplicativeFunction(rs, xs[: rs.rank])
    E2 = MultiplicativeFunction(rs, xs[rs.rank: 2 * rs.rank])
    ks, kl = xs[-2], xs[-1]
    if rs.simply_laced:
        ks = kl
    return params_from_multiplicative(rs, E1, E2, ks, kl), E1, E2, names


def random_rational(rng: random.Random, lo: int = 1, hi: int = 97) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))


def random_params(rs: RootSystem, rng: random.Random):
    """Random exact-rational E1, E2, kappa; resampled until E1 != E2 on every root."""
    while True:
        E1 = MultiplicativeFunction(rs, [random_rational(rng) for _ in range(rs.rank)])
        E2 = MultiplicativeFunction(rs, [random_rational(rng) for _ in range(rs.rank)])
        if all(E1(k) != E2(k) for k in range(rs.num_positive)):
            break
    ks, kl = random_rational(rng), random_rational(rng)
    if rs.simply_laced:
        ks = kl
    return params_from_multiplicative(rs, E1, E2, ks, kl), E1, E2


# --- operator families ------------------------------------------------------

def mixed_bruhat_operator(g: WeylGroup, tau: int, params: ParamSet) -> LinearOperator:
    """M_tau(w) = p_tau tau w if l(tau w) > l(w), else q_tau tau w."""
    p, q = params.p[tau], params.q[tau]
    row_of = g.left[tau]
    L = g.lengths
    cols = {}
    for w in range(g.size):
        v = row_of[w]
        cols[w] = {v: p if L[v] > L[w] else q}
    return LinearOperator(g, cols)


def mixed_family(g: WeylGroup, params: ParamSet) -> dict:
    return {k: mixed_bruhat_operator(g, k, params) for k in range(g.rs.num_positive)}


def r_operator(M: LinearOperator, bound: int | None = None) -> LinearOperator:
    """R = 1 + eps M with EpsPoly entries."""
    g = M.group
    cols = {w: {w: EpsPoly([1], bound)} for w in range(g.size)}
    for c, col in M.cols.items():
        for r, v in col.items():
            tgt = cols.setdefault(c, {})
            add = EpsPoly([0, v], bound)
            tgt[r] = tgt[r] + add if r in tgt else add
    return LinearOperator(g, cols)


def rescale(family: Mapping[int, LinearOperator], gamma) -> dict:
    """Conjugate every operator by Gamma(v) = gamma_v v.

    ``gamma`` is a sequence or mapping from element index to nonzero scalar.
    """
    g = next(iter(family.values())).group
    gam = [gamma[w] for w in range(g.size)]
    if any(is_zero(x) for x in gam):
        raise DomainError("rescaling factors must be nonzero")
    out = {}
    for k, M in family.items():
        cols = {}
        for c, col in M.cols.items():
            cols[c] = {r: _div(gam[r] * v, gam[c]) for r, v in col.items()}
        out[k] = LinearOperator(g, cols)
    return out


def quantum_bruhat_operator(g: WeylGroup, tau: int, E: MultiplicativeFunction) -> LinearOperator:
    """Q_tau: minimal length-raising steps, and maximal lowering steps weighted by E(alpha)."""
    rs = g.rs
    ht = sum(rs.positive_roots[tau])
    ltau = g.reflection_lengths[tau]
    allow_down = ltau == 2 * ht - 1
    e = E(tau) if allow_down else 0
    row_of = g.left[tau]
    L = g.lengths
    cols = {}
    for w in range(g.size):
        v = row_of[w]
        if L[v] == L[w] + 1:
            cols[w] = {v: Fraction(1)}
        elif allow_down and L[v] == L[w] - ltau and not is_zero(e):
            cols[w] = {v: e}
    return LinearOperator(g, cols)


def quantum_family(g: WeylGroup, E: MultiplicativeFunction) -> dict:
    return {k: quantum_bruhat_operator(g, k, E) for k in range(g.rs.num_positive)}


def type_a_pairings(x) -> list:
    """Simple-root pairings for type A from coordinates x_1..x_n.

    Chosen so that the root of the transposition (ij) pairs to x_j - x_i.
    """
    x = [Fraction(v) for v in x]
    return [x[i + 1] - x[i] for i in range(len(x) - 1)]


def yang_operator(g: WeylGroup, tau: int, x, varkappa: Mapping[str, object]) -> LinearOperator:
    """Left multiplication by 1 + varkappa_tau tau / <x, alpha>.

    ``x`` lists the values <x, alpha_i> on the simple roots.
    """
    rs = g.rs
    root = rs.positive_roots[tau]
    denom = sum((Fraction(xi) * c for xi, c in zip(x, root)), Fraction(0))
    if denom == 0:
        raise DegenerateParameterError(f"<x, alpha> = 0 for root {root}")
    coeff = _div(varkappa[rs.length_classes[tau]], denom)
    row_of = g.left[tau]
    cols = {}
    for w in range(g.size):
        cols[w] = {w: Fraction(1)}
        if not is_zero(coeff):
            cols[w][row_of[w]] = coeff
    return LinearOperator(g, cols)


def yang_family(g: WeylGroup, x, varkappa) -> dict:
    return {k: yang_operator(g, k, x, varkappa) for k in range(g.rs.num_positive)}


def degenerating_family(g: WeylGroup, E: MultiplicativeFunction, delta: MultiPoly) -> dict:
    """Rescaled mixed operators on the path to the quantum Bruhat operators.

    kappa = 1/delta, E1 = 1, E2(alpha) = delta**(2 ht alpha) E(alpha), and the
    rescaling gamma_w = delta**l(w).
    """
    rs = g.rs
    E1 = MultiplicativeFunction(rs, [MultiPoly.const(1, delta.vars)] * rs.rank)
    E2 = E.scaled_by_height(delta * delta)
    kappa = RationalFunction.coerce(1) / delta
    params = params_from_multiplicative(rs, E1, E2, kappa, kappa)
    gamma = [delta ** g.lengths[w] for w in range(g.size)]
    return rescale(mixed_family(g, params), gamma)
