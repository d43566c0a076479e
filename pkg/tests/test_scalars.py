from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from weylybe.scalars import (EpsPoly, EvaluationError, MultiPoly, RationalFunction, is_zero, substitute,
                             to_string)

NAMES = ("p", "q", "k")
SYM = dict(zip(NAMES, sympy.symbols(NAMES)))


def to_sympy(x):
    if isinstance(x, MultiPoly):
        return sum((c * sympy.Mul(*[SYM[v] ** e for v, e in zip(x.vars, m)]) for m, c in x.terms.items()),
                   sympy.Integer(0))
    if isinstance(x, RationalFunction):
        return to_sympy(x.num) / to_sympy(x.den)
    return sympy.Rational(Fraction(x).numerator, Fraction(x).denominator)


monomials = st.tuples(*[st.integers(0, 2)] * 3)
polys = st.dictionaries(monomials, st.integers(-5, 5), max_size=4).map(
    lambda d: MultiPoly(NAMES, {m: c for m, c in d.items() if c}))
nonzero_polys = polys.filter(lambda f: not f.is_zero())


def same(ours, expected) -> bool:
    return sympy.cancel(to_sympy(ours) - expected) == 0


def test_rational_basics():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert to_string(Fraction(5, 6)) == "5/6"
    assert to_string(3) == "3/1"


def test_partial_fractions_collapse():
    p, q = MultiPoly.variables("p", "q")
    assert p / (p - q) + (-q) / (p - q) == 1


def test_division_by_zero():
    p, q = MultiPoly.variables("p", "q")
    with pytest.raises(ZeroDivisionError):
        p / (p - p)
    with pytest.raises(ZeroDivisionError):
        (p / q) / MultiPoly.const(0, ("p",))


def test_substitute():
    p, q = MultiPoly.variables("p", "q")
    assert substitute(p / (p - q), {"p": 2, "q": 1}) == 2
    with pytest.raises(EvaluationError):
        substitute(p / (p - q), {"p": 1, "q": 1})


def test_type_a_long_q_value():
    # q13 = q1 q2 / (q1 + q2 + kappa) at kappa = q1 = q2 = 1
    q1, q2, k = MultiPoly.variables("q1", "q2", "k")
    q13 = q1 * q2 / (q1 + q2 + k)
    assert substitute(q13, {"q1": 1, "q2": 1, "k": 1}) == Fraction(1, 3)


def test_type_a_long_p_value():
    # with p = q + kappa: p13 (p1 + p2 - kappa) = p1 p2
    q1, q2, k = MultiPoly.variables("q1", "q2", "k")
    q13 = q1 * q2 / (q1 + q2 + k)
    p1, p2, p13 = q1 + k, q2 + k, q13 + k
    assert p13 * (p1 + p2 - k) == p1 * p2


def test_canonical_string_forms():
    p, q = MultiPoly.variables("p", "q")
    assert str(p * p - q) == "p^2 - q"
    assert str((p + q) / (2 * p)).count("|") == 1


@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()
    assert same(a * b + c, to_sympy(a) * to_sympy(b) + to_sympy(c))


@given(polys, nonzero_polys, polys, nonzero_polys)
def test_rational_function_arithmetic_matches_sympy(a, b, c, d):
    x, y = a / b, c / d
    sx, sy = to_sympy(a) / to_sympy(b), to_sympy(c) / to_sympy(d)
    assert same(x + y, sx + sy)
    assert same(x - y, sx - sy)
    assert same(x * y, sx * sy)
    if not c.is_zero():
        assert same(x / y, sx / sy)


@given(polys, nonzero_polys, nonzero_polys)
def test_equality_is_consistent(a, b, m):
    x = a / b
    assert x == (a * m) / (b * m)
    assert x - x == 0
    assert (x == x + 1) is False


@given(polys, nonzero_polys, st.tuples(*[st.integers(-6, 6)] * 3))
def test_evaluation_matches_sympy(a, b, point):
    env = dict(zip(NAMES, point))
    den = to_sympy(b).subs({SYM[n]: v for n, v in env.items()})
    assume(den != 0)
    got = substitute(a / b, env)
    want = (to_sympy(a) / to_sympy(b)).subs({SYM[n]: v for n, v in env.items()})
    assert sympy.Rational(got.numerator, got.denominator) == want


@given(polys, nonzero_polys, st.integers(-3, 3))
def test_subs_matches_evaluation(a, b, value):
    x = a / b
    assume(not b.subs("p", value).is_zero())
    y = x.subs("p", value)
    for point in [(1, 2), (3, -1), (2, 5)]:
        env = {"q": point[0], "k": point[1]}
        try:
            want = x.evaluate({"p": value, **env})
        except EvaluationError:
            continue
        assert y.evaluate({"p": value, **env}) == want


def test_vanishes_at():
    d, e = MultiPoly.variables("d", "e")
    assert (d * e / (1 + d)).vanishes_at("d", 0)
    assert not ((1 + d) / (1 + e)).vanishes_at("d", 0)


eps_coeffs = st.lists(st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20)), max_size=5)


@given(eps_coeffs, eps_coeffs, st.integers(0, 6))
def test_eps_truncation_agrees_with_exact(a, b, bound):
    exact = EpsPoly(a) * EpsPoly(b)
    trunc = EpsPoly(a, bound) * EpsPoly(b, bound)
    for k in range(bound + 1):
        assert trunc.coefficient(k) == exact.coefficient(k)
    assert trunc.degree() <= bound
    if exact.degree() <= bound:
        assert trunc == exact


@given(eps_coeffs, eps_coeffs, eps_coeffs)
def test_eps_ring(a, b, c):
    x, y, z = EpsPoly(a), EpsPoly(b), EpsPoly(c)
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert is_zero(x - x)
    assert (x.shift(2)).coefficient(2) == x.coefficient(0)


def test_eps_over_rational_functions():
    p, q = MultiPoly.variables("p", "q")
    x = EpsPoly([1, p / q])
    y = x * x
    assert y.coefficient(2) == (p * p) / (q * q)
    assert y.at(1) == 1 + 2 * p / q + (p * p) / (q * q)
