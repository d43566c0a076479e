"""Exact scalar rings used by the operator code.

Rationals are :class:`fractions.Fraction`.  On top of that this module provides
multivariate integer polynomials (:class:`MultiPoly`), rational functions with
factored denominators (:class:`RationalFunction`) and truncated polynomials in
a formal variable epsilon (:class:`EpsPoly`) whose coefficients may be any of
the above.

All values are immutable.  Equality of rational functions is decided exactly
by clearing denominators, no multivariate gcd is ever computed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping

BigRational = Fraction


class ScalarError(ArithmeticError):
    pass


class EvaluationError(ScalarError):
    """Raised when a denominator vanishes under substitution."""


def _align(a: "MultiPoly", b: "MultiPoly"):
    if a.vars == b.vars:
        return a.vars, a.terms, b.terms
    names = list(a.vars)
    for v in b.vars:
        if v not in names:
            names.append(v)
    names = tuple(names)
    return names, a._embed(names), b._embed(names)


def _glex_key(mono):
    return (sum(mono), mono)


class MultiPoly:
    """Polynomial with integer coefficients in named variables.

    ``terms`` maps exponent tuples (one entry per name in ``vars``) to nonzero
    integers.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Iterable[str], terms: Mapping[tuple, int] | None = None):
        self.vars = tuple(vars)
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # construction helpers
    @classmethod
    def var(cls, name: str, vars: Iterable[str] | None = None) -> "MultiPoly":
        names = tuple(vars) if vars is not None else (name,)
        mono = tuple(1 if v == name else 0 for v in names)
        return cls(names, {mono: 1})

    @classmethod
    def const(cls, c: int, vars: Iterable[str] = ()) -> "MultiPoly":
        names = tuple(vars)
        return cls(names, {(0,) * len(names): int(c)})

    @staticmethod
    def variables(*names: str) -> list["MultiPoly"]:
        return [MultiPoly.var(n, names) for n in names]

    def _embed(self, names):
        pos = [names.index(v) for v in self.vars]
        out = {}
        for mono, c in self.terms.items():
            e = [0] * len(names)
            for p, k in zip(pos, mono):
                e[p] = k
            out[tuple(e)] = c
        return out

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other, self.vars)
        if isinstance(other, Fraction) and other.denominator == 1:
            return MultiPoly.const(other.numerator, self.vars)
        return None

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> int:
        return self.terms.get((0,) * len(self.vars), 0)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    # arithmetic
    def __neg__(self):
        return MultiPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        names, ta, tb = _align(self, o)
        out = dict(ta)
        for m, c in tb.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly(names, out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly(self.vars)
            return MultiPoly(self.vars, {m: c * other for m, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Fraction):
                return RationalFunction.coerce(self) * other
            return NotImplemented
        names, ta, tb = _align(self, o)
        out: dict = {}
        for ma, ca in ta.items():
            for mb, cb in tb.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly(names, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return RationalFunction.coerce(self) / other

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RationalFunction.coerce(self) ** n
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (Fraction, RationalFunction)):
                return RationalFunction.coerce(self) == other
            return NotImplemented
        names, ta, tb = _align(self, o)
        return ta == tb

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(Fraction(self.constant_value()))
            else:
                # variables that do not occur must not affect the hash
                used = [i for i in range(len(self.vars)) if any(m[i] for m in self.terms)]
                key = frozenset(
                    (tuple((self.vars[i], m[i]) for i in used if m[i]), c)
                    for m, c in self.terms.items()
                )
                self._hash = hash(key)
        return self._hash

    # structure
    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _glex_key(t[0]), reverse=True)

    def leading_coefficient(self) -> int:
        if not self.terms:
            return 0
        return max(self.terms.items(), key=lambda t: _glex_key(t[0]))[1]

    def content(self) -> int:
        return reduce(math.gcd, self.terms.values(), 0)

    def min_exponents(self) -> tuple:
        if not self.terms:
            return (0,) * len(self.vars)
        return tuple(min(col) for col in zip(*self.terms))

    def shift_monomial(self, exps: Iterable[int]) -> "MultiPoly":
        """Multiply by the monomial with exponent vector ``exps`` (entries may be negative)."""
        exps = tuple(exps)
        return MultiPoly(self.vars, {tuple(a + b for a, b in zip(m, exps)): c
                                     for m, c in self.terms.items()})

    def exact_div_int(self, d: int) -> "MultiPoly":
        return MultiPoly(self.vars, {m: c // d for m, c in self.terms.items()})

    def evaluate(self, assignment: Mapping[str, Fraction | int]) -> Fraction:
        vals = [Fraction(assignment[v]) if any(m[i] for m in self.terms) else Fraction(0)
                for i, v in enumerate(self.vars)]
        total = Fraction(0)
        for m, c in self.terms.items():
            t = Fraction(c)
            for v, k in zip(vals, m):
                if k:
                    t *= v ** k
            total += t
        return total

    def subs(self, name: str, value: int) -> "MultiPoly":
        """Substitute an integer for a single variable, keeping the other variables."""
        if name not in self.vars:
            return self
        i = self.vars.index(name)
        out: dict = {}
        for m, c in self.terms.items():
            k = m[i]
            coeff = c * value ** k
            if not coeff:
                continue
            mm = m[:i] + (0,) + m[i + 1:]
            s = out.get(mm, 0) + coeff
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
        return MultiPoly(self.vars, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, m) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"


def _split_denominator(p: MultiPoly):
    """Write p = c * x^e * f with f primitive and leading coefficient positive.

    Returns (c, factor dict) where the factor dict maps single-variable and
    primitive polynomials to exponents.
    """
    mins = p.min_exponents()
    factors: dict = {}
    if any(mins):
        p = p.shift_monomial(-k for k in mins)
        for name, k in zip(p.vars, mins):
            if k:
                factors[MultiPoly.var(name, p.vars)] = k
    c = p.content()
    if p.leading_coefficient() < 0:
        c = -c
    rest = p.exact_div_int(c)
    if not rest.is_constant():
        factors[rest] = factors.get(rest, 0) + 1
    return c, factors


def _is_variable(f: MultiPoly):
    if len(f.terms) != 1:
        return None
    (m, c), = f.terms.items()
    if c != 1 or sum(m) != 1:
        return None
    return f.vars[m.index(1)]


class RationalFunction:
    """Quotient of integer polynomials with a factored denominator.

    The denominator is ``dconst * prod(f**e for f, e in dfac.items())`` with
    ``dconst > 0`` and every factor primitive with positive leading
    coefficient.  Common integer content and common powers of single-variable
    factors are cancelled; other common factors may remain.
    """

    __slots__ = ("num", "dconst", "dfac")

    def __init__(self, num: MultiPoly, dconst: int = 1, dfac: Mapping | None = None):
        dfac = {f: e for f, e in (dfac or {}).items() if e}
        if num.is_zero():
            self.num, self.dconst, self.dfac = num, 1, {}
            return
        if dconst < 0:
            num, dconst = -num, -dconst
        if dconst == 0:
            raise ScalarError("zero denominator")
        g = math.gcd(num.content(), dconst)
        if g > 1:
            num = num.exact_div_int(g)
            dconst //= g
        mins = None
        for f in list(dfac):
            name = _is_variable(f)
            if name is None:
                continue
            if mins is None:
                names, _, _ = _align(num, f)
                if names != num.vars:
                    num = MultiPoly(names, num._embed(names))
                mins = list(num.min_exponents())
            if name not in num.vars:
                continue
            i = num.vars.index(name)
            k = min(mins[i], dfac[f])
            if k:
                shift = [0] * len(num.vars)
                shift[i] = -k
                num = num.shift_monomial(shift)
                mins[i] -= k
                if dfac[f] == k:
                    del dfac[f]
                else:
                    dfac[f] -= k
        self.num, self.dconst, self.dfac = num, dconst, dfac

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, MultiPoly):
            return cls(x)
        if isinstance(x, int):
            return cls(MultiPoly.const(x))
        if isinstance(x, Fraction):
            return cls(MultiPoly.const(x.numerator), x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")

    @classmethod
    def from_polys(cls, num: MultiPoly, den: MultiPoly) -> "RationalFunction":
        if den.is_zero():
            raise ScalarError("division by zero polynomial")
        c, fac = _split_denominator(den)
        return cls(num, c, fac)

    @property
    def den(self) -> MultiPoly:
        out = MultiPoly.const(self.dconst, self.num.vars)
        for f, e in self.dfac.items():
            out = out * f ** e
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _cofactor(self, dconst, dfac):
        out = MultiPoly.const(dconst // self.dconst, self.num.vars)
        for f, e in dfac.items():
            k = e - self.dfac.get(f, 0)
            if k:
                out = out * f ** k
        return out

    def __add__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.dconst == o.dconst and self.dfac == o.dfac:
            return RationalFunction(self.num + o.num, self.dconst, dict(self.dfac))
        dconst = self.dconst * o.dconst // math.gcd(self.dconst, o.dconst)
        dfac = dict(self.dfac)
        for f, e in o.dfac.items():
            if e > dfac.get(f, 0):
                dfac[f] = e
        num = self.num * self._cofactor(dconst, dfac) + o.num * o._cofactor(dconst, dfac)
        return RationalFunction(num, dconst, dfac)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.dconst, dict(self.dfac))

    def __sub__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return RationalFunction(MultiPoly(self.num.vars))
            return RationalFunction(self.num * other, self.dconst, dict(self.dfac))
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RationalFunction(MultiPoly(()))
        dfac = dict(self.dfac)
        for f, e in o.dfac.items():
            dfac[f] = dfac.get(f, 0) + e
        return RationalFunction(self.num * o.num, self.dconst * o.dconst, dfac)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        c, fac = _split_denominator(self.num)
        num = MultiPoly.const(self.dconst, self.num.vars)
        for f, e in self.dfac.items():
            num = num * f ** e
        if c < 0:
            num, c = -num, -c
        return RationalFunction(num, c, fac)

    def __truediv__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.dconst ** n,
                                {f: e * n for f, e in self.dfac.items()})

    def __eq__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).num.is_zero()

    def __hash__(self):
        raise TypeError("RationalFunction is not hashable")

    def evaluate(self, assignment: Mapping[str, Fraction | int]) -> Fraction:
        d = Fraction(self.dconst)
        for f, e in self.dfac.items():
            d *= f.evaluate(assignment) ** e
        if d == 0:
            raise EvaluationError(f"denominator vanishes at {dict(assignment)}")
        return self.num.evaluate(assignment) / d

    def subs(self, name: str, value: int) -> "RationalFunction":
        """Substitute an integer for one variable; raises if the denominator vanishes."""
        num = self.num.subs(name, value)
        den = self.den.subs(name, value)
        if den.is_zero():
            raise EvaluationError(f"denominator vanishes at {name}={value}")
        return RationalFunction.from_polys(num, den)

    def vanishes_at(self, name: str, value: int = 0) -> bool:
        """True if the function is regular at name=value and its value there is zero."""
        try:
            return self.subs(name, value).is_zero()
        except EvaluationError:
            return False

    def __str__(self):
        return f"{self.num} | {self.den}"

    def __repr__(self):
        return f"RationalFunction({self})"


class EpsPoly:
    """Polynomial in the formal variable epsilon with scalar coefficients.

    ``coeffs[k]`` is the coefficient of epsilon**k.  When ``bound`` is set,
    products drop every term of degree above it.
    """

    __slots__ = ("coeffs", "bound")

    def __init__(self, coeffs: Iterable = (), bound: int | None = None):
        cs = list(coeffs)
        if bound is not None:
            cs = cs[: bound + 1]
        while cs and is_zero(cs[-1]):
            cs.pop()
        self.coeffs = cs
        self.bound = bound

    def _coerce(self, other):
        if isinstance(other, EpsPoly):
            return other
        return EpsPoly([other], self.bound)

    def _bound(self, other):
        if self.bound is None:
            return other.bound
        if other.bound is None:
            return self.bound
        return min(self.bound, other.bound)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return EpsPoly(out, self._bound(o))

    __radd__ = __add__

    def __neg__(self):
        return EpsPoly([-c for c in self.coeffs], self.bound)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, EpsPoly):
            if is_zero(other):
                return EpsPoly((), self.bound)
            return EpsPoly([c * other for c in self.coeffs], self.bound)
        bound = self._bound(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return EpsPoly((), bound)
        top = len(a) + len(b) - 2
        if bound is not None:
            top = min(top, bound)
        out = [0] * (top + 1)
        for i, x in enumerate(a):
            if i > top:
                break
            for j, y in enumerate(b):
                if i + j > top:
                    break
                out[i + j] = out[i + j] + x * y
        return EpsPoly(out, bound)

    def __rmul__(self, other):
        if is_zero(other):
            return EpsPoly((), self.bound)
        return EpsPoly([other * c for c in self.coeffs], self.bound)

    def shift(self, k: int = 1) -> "EpsPoly":
        """Multiply by epsilon**k."""
        return EpsPoly([0] * k + self.coeffs, self.bound)

    def at(self, value):
        """Evaluate at a concrete epsilon."""
        total = 0
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def __eq__(self, other):
        o = self._coerce(other)
        if len(self.coeffs) != len(o.coeffs):
            return False
        return all(x == y for x, y in zip(self.coeffs, o.coeffs))

    __hash__ = None

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if is_zero(c):
                continue
            mono = "" if k == 0 else ("eps" if k == 1 else f"eps^{k}")
            if not mono:
                parts.append(f"({to_string(c)})")
            else:
                parts.append(mono if c == 1 else f"({to_string(c)})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"EpsPoly({self})"


def is_zero(x) -> bool:
    if isinstance(x, (MultiPoly, RationalFunction, EpsPoly)):
        return x.is_zero()
    return x == 0


def eps(bound: int | None = None) -> EpsPoly:
    return EpsPoly([0, 1], bound)


def substitute(expr, assignment: Mapping[str, Fraction | int]) -> Fraction:
    """Evaluate a polynomial or rational function at a rational point."""
    if isinstance(expr, (MultiPoly, RationalFunction)):
        return expr.evaluate(assignment)
    return Fraction(expr)


def to_string(x) -> str:
    """Serialize a scalar: rationals as ``n/d``, rational functions as ``num | den``."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return f"{x}/1"
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)
