"""Yang-Baxter checks for operator families and the rank-2 equation systems.

For a dihedral reflection subgroup with canonical generators a, b the two
sides are R_a R_aba R_ababa ... R_b and the reversed product.  Both are
applied column by column to basis elements; operators in the family stabilize
every coset W'w, so columns are visited coset by coset.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Mapping

from .operators import LinearOperator, MultiplicativeFunction, ParamSet, mixed_family, params_from_multiplicative
from .root_system import DihedralSubsystem, RootSystem, build_root_system, dihedral_subsystems
from .scalars import EpsPoly, is_zero
from .weyl import WeylGroup, coset_decomposition, weyl_group, ybe_sequence


def ybe_word(rs: RootSystem, sub: DihedralSubsystem, first: int | None = None) -> list:
    """Reflections (root indices) a, aba, ababa, ..., bab, b."""
    return ybe_sequence(rs, sub, first)


def _apply_r(M: LinearOperator, vec: dict) -> dict:
    """(1 + eps M) applied to a vector with EpsPoly coordinates."""
    out = dict(vec)
    cols = M.cols
    for c, x in vec.items():
        col = cols.get(c)
        if not col:
            continue
        for r, m in col.items():
            y = (x * m).shift(1)
            out[r] = out[r] + y if r in out else y
    return out


def _apply_plain(R: LinearOperator, vec: dict) -> dict:
    return R.apply(vec)


def apply_product(ops, vec: dict, r_form: bool = False) -> dict:
    """Apply ops[0] ops[1] ... ops[-1] to ``vec`` (rightmost first).

    With ``r_form=False`` each M in ``ops`` acts as 1 + eps M.
    """
    step = _apply_plain if r_form else _apply_r
    for M in reversed(ops):
        vec = step(M, vec)
    return {r: v for r, v in vec.items() if not is_zero(v)}


def _basis(w: int, r_form: bool):
    return {w: 1 if r_form else EpsPoly([1])}


@dataclass
class YbeReport:
    group: str
    subgroup_count: int
    checked: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"group": self.group, "passed": self.passed, "subgroup_count": self.subgroup_count,
                "checked": self.checked, "failures": self.failures,
                "elapsed_ms": round(self.elapsed_ms, 1)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _compare(g: WeylGroup, lhs: dict, rhs: dict, col: int):
    for r in sorted(set(lhs) | set(rhs)):
        x, y = lhs.get(r, 0), rhs.get(r, 0)
        if not x == y:
            return {"row": g.word_string(r), "col": g.word_string(col),
                    "lhs": str(x), "rhs": str(y)}
    return None


def check_ybe(family: Mapping[int, LinearOperator], rs: RootSystem, *, r_form: bool = False,
              cosets: str = "all", subgroups=None, stop_on_failure: bool = False) -> YbeReport:
    """Compare both sides of the Yang-Baxter equation on every dihedral subgroup.

    ``family`` maps root index to M_tau (or to R_tau when ``r_form``).
    ``cosets="all"`` checks every column of the operators; ``"one"`` only the
    columns of the subgroup itself (the coset of the identity).
    ``stop_on_failure`` ends the sweep at the first failing subgroup.
    """
    t0 = time.perf_counter()
    g = weyl_group(rs)
    subs = dihedral_subsystems(rs) if subgroups is None else list(subgroups)
    report = YbeReport(rs.name, len(subs))
    for sub in subs:
        seq = ybe_word(rs, sub)
        left = [family[k] for k in seq]
        right = left[::-1]
        cd = coset_decomposition(rs, sub)
        blocks = cd.cosets if cosets == "all" else [cd.cosets[0]]
        failure = None
        for rep, block in zip(cd.representatives, blocks):
            for w in block:
                lhs = apply_product(left, _basis(w, r_form), r_form)
                rhs = apply_product(right, _basis(w, r_form), r_form)
                diff = _compare(g, lhs, rhs, w)
                if diff:
                    failure = {"subgroup": list(sub.canonical_pair), "subtype": sub.subtype,
                               "coset": g.word_string(rep), **diff}
                    break
            if failure:
                break
        report.checked += 1
        if failure:
            report.failures.append(failure)
            if stop_on_failure:
                break
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


def ybe_sides(family, rs: RootSystem, sub: DihedralSubsystem, r_form: bool = False):
    """Both sides of the equation for one subgroup, as full operators."""
    g = weyl_group(rs)
    seq = ybe_word(rs, sub)
    left = [family[k] for k in seq]
    cols_l, cols_r = {}, {}
    for w in range(g.size):
        cols_l[w] = apply_product(left, _basis(w, r_form), r_form)
        cols_r[w] = apply_product(left[::-1], _basis(w, r_form), r_form)
    return LinearOperator(g, cols_l), LinearOperator(g, cols_r)


def eps_coefficient(op: LinearOperator, k: int) -> LinearOperator:
    return op.map_scalars(lambda e: e.coefficient(k))


def commutator(A: LinearOperator, B: LinearOperator) -> LinearOperator:
    return A @ B - B @ A


def check_classical_ybe(family: Mapping[int, LinearOperator], rs: RootSystem) -> YbeReport:
    """[M_ij, M_jk] = [M_jk, M_ik] + [M_ik, M_ij] on every A2-type subgroup.

    (ij), (ik), (jk) are a, aba, b of the canonical pair.
    """
    t0 = time.perf_counter()
    subs = [s for s in dihedral_subsystems(rs) if s.subtype == "A2"]
    report = YbeReport(rs.name, len(subs))
    for sub in subs:
        a, aba, b = ybe_word(rs, sub)
        Mij, Mik, Mjk = family[a], family[aba], family[b]
        lhs = commutator(Mij, Mjk)
        rhs = commutator(Mjk, Mik) + commutator(Mik, Mij)
        report.checked += 1
        d = lhs.first_difference(rhs)
        if d:
            g = lhs.group
            report.failures.append({"subgroup": list(sub.canonical_pair), "row": g.word_string(d[0]),
                                    "col": g.word_string(d[1]), "lhs": str(d[2]), "rhs": str(d[3])})
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


# --- rank-2 equation systems ----------------------------------------------

def system_a2_residuals(params: ParamSet, sub: DihedralSubsystem) -> list:
    """Left-hand sides of the six quadratic equations and the cubic one (lhs - rhs)."""
    ij, ik, jk = ybe_word(params.rs, sub)
    p, q = params.p, params.q
    qij, qik, qjk = q[ij], q[ik], q[jk]
    pij, pik, pjk = p[ij], p[ik], p[jk]
    eqs = [
        -qij * qjk + pjk * qik + qik * qij,
        qij * qjk - qjk * qik - qik * pij,
        pij * qjk - qjk * pik - qik * pij,
        -qij * pjk + pjk * qik + pik * qij,
        pij * pjk - qjk * pik - pik * pij,
        -pij * pjk + pjk * pik + pik * qij,
        qij * pik * qjk - pij * qik * pjk,
    ]
    return eqs


def check_system_a2(params: ParamSet, sub: DihedralSubsystem) -> bool:
    if sub.subtype != "A2":
        raise ValueError("A2 subsystem expected")
    return all(is_zero(e) for e in system_a2_residuals(params, sub))


def check_p_equals_q_plus_kappa(params: ParamSet, roots=None) -> bool:
    roots = range(params.rs.num_positive) if roots is None else roots
    return all(params.p[k] - params.q[k] == params.kappa_of(k) for k in roots)


def a2_reduced_residual(params: ParamSet, sub: DihedralSubsystem):
    """q_a q_b - q_aba (q_a + q_b + kappa), the single equation left once p = q + kappa."""
    a, aba, b = ybe_word(params.rs, sub)
    q = params.q
    return q[a] * q[b] - q[aba] * (q[a] + q[b] + params.kappa_of(a))


def system_b2_residual(params: ParamSet, sub: DihedralSubsystem):
    rs = params.rs
    a, aba, bab, b = ybe_word(rs, sub)
    q = params.q
    ka, kb = params.kappa_of(a), params.kappa_of(b)
    return (q[a] * q[b]
            - (q[a] * q[aba] + q[aba] * q[bab] + q[bab] * q[b] + ka * q[aba] + kb * q[bab]))


def check_system_b2(params: ParamSet, sub: DihedralSubsystem) -> bool:
    if sub.subtype != "B2":
        raise ValueError("B2 subsystem expected")
    return is_zero(system_b2_residual(params, sub))


def system_g2_residuals(params: ParamSet, sub: DihedralSubsystem) -> tuple:
    rs = params.rs
    a, aba, ababa, babab, bab, b = ybe_word(rs, sub)
    q = params.q
    ka, kb = params.kappa_of(a), params.kappa_of(b)
    qa, qb, q3, q5, Q3, Q5 = q[a], q[b], q[aba], q[ababa], q[bab], q[babab]
    g1 = (qa * qb
          - (qa * q3 + q3 * q5 + q5 * Q5 + Q5 * Q3 + Q3 * qb
             + ka * q3 + ka * Q5 + kb * Q3 + kb * q5))
    g2 = (-qa * Q3 + qa * q5 - qb * q3 + qb * Q5 + q3 * Q5 + Q3 * q5
          + qa * qb * q3 * Q3 - qa * qb * q3 * q5 - qa * qb * Q3 * Q5 - qa * qb * q5 * Q5
          + qa * q3 * Q3 * Q5 + qb * Q3 * q5 * Q5 + qb * q3 * Q3 * q5
          + qa * q3 * q5 * Q5 + q3 * Q3 * q5 * Q5
          + ka * (q5 - qa * qb * Q5 + qb * q3 * Q3 + qa * q3 * Q5 + q3 * Q3 * Q5 + q3 * q5 * Q5)
          + kb * (Q5 - qa * qb * q5 + qa * q3 * Q3 + qb * Q3 * q5 + q3 * Q3 * q5 + Q3 * q5 * Q5)
          + ka * ka * q3 * Q5 + ka * kb * q3 * Q3 + kb * kb * Q3 * q5)
    return g1, g2


def check_system_g2(params: ParamSet, sub: DihedralSubsystem) -> bool:
    if sub.subtype != "G2":
        raise ValueError("G2 subsystem expected")
    return all(is_zero(r) for r in system_g2_residuals(params, sub))


# --- products over reflection orderings ------------------------------------

def invariant_product(family: Mapping[int, LinearOperator], ordering, r_form: bool = False) -> LinearOperator:
    """R_{phi^-1(1)} ... R_{phi^-1(N)} as a full operator."""
    g = weyl_group(ordering.rs)
    ops = [family[k] for k in ordering.order]
    cols = {w: apply_product(ops, _basis(w, r_form), r_form) for w in range(g.size)}
    return LinearOperator(g, cols)


# --- braid relations ---------------------------------------------------------

def check_involution_scaling(family: Mapping[int, LinearOperator], params: ParamSet) -> bool:
    """M_tau^2 = p_tau q_tau Id."""
    for k, M in family.items():
        g = M.group
        if not (M @ M) == LinearOperator.identity(g, params.p[k] * params.q[k]):
            return False
    return True


def braid_pairs(rs: RootSystem) -> list:
    """Pairs of simple reflections (root indices) joined by a single bond."""
    A = rs.cartan.cartan_matrix
    return [(i, j) for i in range(rs.rank) for j in range(i + 1, rs.rank)
            if A[i][j] * A[j][i] == 1]


def check_braid_relations(family: Mapping[int, LinearOperator], rs: RootSystem) -> bool:
    """M_i M_j M_i = M_j M_i M_j for simple reflections joined by a single bond."""
    for i, j in braid_pairs(rs):
        Mi, Mj = family[i], family[j]
        if not (Mi @ (Mj @ Mi)) == (Mj @ (Mi @ Mj)):
            return False
    return True


def type_a_params(n: int, q_values, kappa):
    """Type A_{n-1} parameters with E2(alpha_i) = q_i and E1(alpha_i) = q_i + kappa.

    With this choice q_{i,i+1} = q_i and p_{i,i+1} = q_i + kappa.
    """
    rs = build_root_system("A", n - 1)
    E2 = MultiplicativeFunction(rs, list(q_values))
    E1 = MultiplicativeFunction(rs, [v + kappa for v in E2.simple_values])
    return params_from_multiplicative(rs, E1, E2, kappa, kappa)


def check_braid_specialization(n: int, q_values, kappa) -> bool:
    params = type_a_params(n, q_values, kappa)
    g = weyl_group(params.rs)
    return check_braid_relations(mixed_family(g, params), params.rs)
