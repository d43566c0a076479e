"""Quantum Chevalley (Monk) products [w] * [s] in the small quantum ring of G/B."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .operators import MultiplicativeFunction, quantum_bruhat_operator
from .root_system import DomainError, RootSystem, fundamental_weight_coefficient
from .scalars import MultiPoly, is_zero, to_string
from .weyl import WeylGroup, weyl_group


@dataclass
class SchubertExpression:
    """Linear combination of Schubert classes, keyed by group element index."""

    group: WeylGroup
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if not is_zero(c)}

    def add(self, w: int, c) -> None:
        cur = self.terms.get(w, 0) + c
        if is_zero(cur):
            self.terms.pop(w, None)
        else:
            self.terms[w] = cur

    def __eq__(self, other):
        if not isinstance(other, SchubertExpression):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(k, 0) == other.terms.get(k, 0) for k in keys)

    __hash__ = None

    def items(self):
        g = self.group
        return sorted(self.terms.items(), key=lambda t: (g.lengths[t[0]], t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            name = f"[{self.group.word_string(w)}]"
            parts.append(name if c == 1 else f"({to_string(c)}){name}")
        return " + ".join(parts)

    def to_json(self) -> str:
        return json.dumps([[self.group.word_string(w), to_string(c)] for w, c in self.items()])


def quantum_parameters(rs: RootSystem, prefix: str = "q") -> MultiplicativeFunction:
    """E with one indeterminate per simple root, so E(alpha) prints as a monomial in simple-root exponents."""
    return MultiplicativeFunction(rs, MultiPoly.variables(*[f"{prefix}{i}" for i in range(1, rs.rank + 1)]))


def _check_simple(rs: RootSystem, s: int) -> None:
    if not 1 <= s <= rs.rank:
        raise DomainError(f"s must be a simple reflection index in 1..{rs.rank}, got {s}")


def quantum_chevalley(rs: RootSystem, w: int, s: int, E: MultiplicativeFunction | None = None,
                      pairing: str = "root", classical: bool = False) -> SchubertExpression:
    """[w] * [s_s] via the right-multiplication form of the quantum Monk rule.

    Classical terms [w tau] with l(w tau) = l(w) + 1, quantum terms E(alpha)[w tau]
    with l(w tau) = l(w) - 2 ht(alpha) + 1, both weighted by <omega_s, alpha>.
    ``classical=True`` drops the quantum terms (E = 0).
    """
    _check_simple(rs, s)
    g = weyl_group(rs)
    if E is None and not classical:
        E = quantum_parameters(rs)
    out = SchubertExpression(g)
    lw = g.lengths[w]
    for k, root in enumerate(rs.positive_roots):
        c = fundamental_weight_coefficient(rs, s, root, pairing)
        if c == 0:
            continue
        v = g.mul(w, g.reflection_index[k])
        lv = g.lengths[v]
        if lv == lw + 1:
            out.add(v, c)
        elif not classical and lv == lw - 2 * sum(root) + 1:
            out.add(v, c * E(k))
    return out


def quantum_chevalley_from_operators(rs: RootSystem, w: int, s: int, E: MultiplicativeFunction | None = None,
                                     pairing: str = "root") -> SchubertExpression:
    """Same product computed as sum_alpha <omega_s, alpha> inv(Q_tau(inv(w)))."""
    _check_simple(rs, s)
    g = weyl_group(rs)
    E = E or quantum_parameters(rs)
    out = SchubertExpression(g)
    winv = g.inverse[w]
    for k, root in enumerate(rs.positive_roots):
        c = fundamental_weight_coefficient(rs, s, root, pairing)
        if c == 0:
            continue
        col = quantum_bruhat_operator(g, k, E).cols.get(winv, {})
        for r, val in col.items():
            out.add(g.inverse[r], c * val)
    return out


def classical_chevalley_oracle(rs: RootSystem, w: int, s: int, pairing: str = "root") -> SchubertExpression:
    """Classical Chevalley rule read off the Bruhat covers of w."""
    _check_simple(rs, s)
    g = weyl_group(rs)
    out = SchubertExpression(g)
    refl_root = {t: k for k, t in enumerate(g.reflection_index)}
    for v in g.bruhat_covers[w]:
        tau = g.mul(g.inverse[w], v)
        c = fundamental_weight_coefficient(rs, s, rs.positive_roots[refl_root[tau]], pairing)
        if c:
            out.add(v, c)
    return out
