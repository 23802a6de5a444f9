"""Exact rational functions, differential forms, and boundary-divisor orders.

Polynomials are sparse maps from exponent tuples to integers or Fractions.
Rational functions are kept as unreduced numerator/denominator pairs and
compared by cross-multiplication, so no multivariate gcd is ever needed.
Variables are 0-based internally (x_1 is index 0).
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterable, Mapping


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class MPoly:
    """Sparse polynomial in a fixed number of variables."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, object] | None = None):
        self.n = n
        self.terms: dict[tuple, object] = {}
        for e, c in (terms or {}).items():
            if len(e) != n:
                raise ValueError("exponent length does not match the number of variables")
            if c:
                self.terms[tuple(e)] = _norm(c)

    @classmethod
    def const(cls, n: int, c=1) -> "MPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, i: int) -> "MPoly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.n != self.n:
                raise ValueError("variable count mismatch")
            return other
        return MPoly.const(self.n, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        p = MPoly(self.n)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MPoly(self.n)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        p = MPoly(self.n)
        p.terms = {e: _norm(c) for e, c in out.items()}
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MPoly.const(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, (MPoly, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def diff(self, i: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return MPoly(self.n, out)

    def __call__(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for x, k in zip(point, e):
                t *= Fraction(x) ** k
            total += t
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


class RatFun:
    """num/den with exact coefficients; never reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.const(num.n)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = num, den

    @property
    def n(self) -> int:
        return self.num.n

    @classmethod
    def const(cls, n: int, c=1) -> "RatFun":
        return cls(MPoly.const(n, c))

    @classmethod
    def zero(cls, n: int) -> "RatFun":
        return cls(MPoly(n))

    def _lift(self, other) -> "RatFun":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, MPoly):
            return RatFun(other)
        return RatFun.const(self.n, other)

    def __add__(self, other):
        other = self._lift(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return RatFun(self.num * other.den, self.den * other.num)

    def diff(self, i: int) -> "RatFun":
        return RatFun(self.num.diff(i) * self.den - self.num * self.den.diff(i), self.den * self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, (RatFun, MPoly, int, Fraction)):
            return NotImplemented
        other = self._lift(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def __call__(self, point) -> Fraction:
        return self.num(point) / self.den(point)

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


class DiffForm:
    """p-form on n variables: sum over increasing index tuples I of c_I dx_I."""

    def __init__(self, n: int, degree: int, comps: Mapping[tuple, RatFun] | None = None):
        self.n, self.degree = n, degree
        self.comps: dict[tuple, RatFun] = {}
        for I, c in (comps or {}).items():
            I = tuple(I)
            if len(I) != degree or list(I) != sorted(set(I)) or any(not 0 <= i < n for i in I):
                raise ValueError(f"invalid basis index {I}")
            if not c.is_zero():
                self.comps[I] = c

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps.values())

    def __eq__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        if (self.n, self.degree) != (other.n, other.degree):
            return False
        keys = set(self.comps) | set(other.comps)
        z = RatFun.zero(self.n)
        return all(self.comps.get(k, z) == other.comps.get(k, z) for k in keys)

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"[{c!r}] d" + "d".join(f"x{i + 1}" for i in I) for I, c in sorted(self.comps.items()))
        return f"DiffForm({self.degree}: {body or '0'})"


def exterior_derivative(phi: DiffForm) -> DiffForm:
    """d(c dx_I) = sum_j dc/dx_j dx_j ^ dx_I, reordered to increasing indices.

    Moving dx_j past the indices of I smaller than j gives the sign.
    """
    if phi.degree >= phi.n:
        return DiffForm(phi.n, phi.degree + 1)
    out: dict[tuple, RatFun] = {}
    for I, c in phi.comps.items():
        for j in range(phi.n):
            if j in I:
                continue
            dc = c.diff(j)
            if dc.is_zero():
                continue
            sign = -1 if sum(1 for i in I if i < j) % 2 else 1
            J = tuple(sorted(I + (j,)))
            term = dc if sign > 0 else -dc
            out[J] = out[J] + term if J in out else term
    return DiffForm(phi.n, phi.degree + 1, out)


def build_f(l: int) -> MPoly:
    """f = (1 - x_1 x_2)(1 - x_2 x_3) ... (1 - x_{l-1} x_l)."""
    if l < 2:
        raise ValueError("l must be at least 2")
    f = MPoly.const(l)
    for i in range(l - 1):
        f = f * (1 - MPoly.var(l, i) * MPoly.var(l, i + 1))
    return f


def build_omega(l: int) -> DiffForm:
    return DiffForm(l, l, {tuple(range(l)): RatFun(MPoly.const(l), build_f(l))})


def build_alpha(l: int) -> DiffForm:
    """sum_i x_i / f dx_1 ... (dx_i omitted) ... dx_l."""
    f = build_f(l)
    comps = {}
    for i in range(l):
        I = tuple(k for k in range(l) if k != i)
        comps[I] = RatFun(MPoly.var(l, i), f)
    return DiffForm(l, l - 1, comps)


def exactness_check(l: int) -> bool:
    """d(alpha_l) = omega_l for odd l and 0 for even l."""
    d = exterior_derivative(build_alpha(l))
    target = build_omega(l) if l % 2 else DiffForm(l, l)
    return d == target


def telescoping_check(l: int) -> bool:
    """sum_i (-1)^i x_i df/dx_i is the zero polynomial."""
    f = build_f(l)
    total = MPoly(l)
    for i in range(l):
        term = MPoly.var(l, i) * f.diff(i)
        total = total + (term if (i + 1) % 2 == 0 else -term)
    return total.is_zero()


def random_monomial_form(n: int, degree: int, seed: int = 0, max_exp: int = 3) -> DiffForm:
    """Form with random monomial coefficients, for d o d checks."""
    rng = random.Random(seed)
    comps = {}
    for I in itertools.combinations(range(n), degree):
        e = tuple(rng.randint(0, max_exp) for _ in range(n))
        comps[I] = RatFun(MPoly(n, {e: rng.randint(-5, 5) or 1}))
    return DiffForm(n, degree, comps)


# -- boundary divisors ------------------------------------------------------------------

class DivisorPartition:
    """Unordered split of the marked points z_1..z_n into two parts of size >= 2."""

    __slots__ = ("n", "S1", "S2")

    def __init__(self, S1: Iterable[int], S2: Iterable[int] | None = None, n: int | None = None):
        S1 = frozenset(S1)
        if S2 is None:
            if n is None:
                raise ValueError("give S2 or n")
            S2 = frozenset(range(1, n + 1)) - S1
        S2 = frozenset(S2)
        n = n or len(S1) + len(S2)
        if S1 & S2 or S1 | S2 != frozenset(range(1, n + 1)):
            raise ValueError("parts must be disjoint and cover z_1..z_n")
        if len(S1) < 2 or len(S2) < 2:
            raise ValueError("each part needs at least two points")
        if 1 not in S1:
            S1, S2 = S2, S1
        self.n, self.S1, self.S2 = n, S1, S2

    def together(self, i: int, j: int) -> int:
        """1 if z_i and z_j lie in the same part (indices taken mod n)."""
        i = (i - 1) % self.n + 1
        j = (j - 1) % self.n + 1
        return int((i in self.S1) == (j in self.S1))

    def __eq__(self, other):
        return isinstance(other, DivisorPartition) and (self.n, self.S1) == (other.n, other.S1)

    def __hash__(self):
        return hash((self.n, self.S1))

    def __repr__(self):
        return f"{{{','.join(map(str, sorted(self.S1)))}}}|{{{','.join(map(str, sorted(self.S2)))}}}"


def divisor_order(partition: DivisorPartition, l: int) -> int:
    """ord_D omega_l = (l-1)/2 - (1/2) sum_i I_D(i, i+2), with n = l + 3."""
    if partition.n != l + 3:
        raise ValueError(f"partition has {partition.n} points, expected l+3 = {l + 3}")
    twice = l - 1 - sum(partition.together(i, i + 2) for i in range(1, partition.n + 1))
    if twice % 2:
        raise ArithmeticError(f"non-integral order for {partition}")
    return twice // 2


def all_partitions(n: int) -> list[DivisorPartition]:
    out = []
    rest = list(range(2, n + 1))
    for k in range(1, n - 2):
        for c in itertools.combinations(rest, k):
            out.append(DivisorPartition((1,) + c, n=n))
    return out


def alternating_partition(l: int) -> DivisorPartition:
    """{odd z_i} | {even z_i} on n = l + 3 points."""
    n = l + 3
    return DivisorPartition(range(1, n + 1, 2), n=n)


def lambda_partition(lam: Iterable[int], l: int) -> DivisorPartition:
    """Partition for a subset of the labels {0, ..., l+1}.

    Label i sits at z_{i+3} (indices mod n), so l + 1 sits at z_1 and z_2 is
    the one point carrying no label.
    """
    n = l + 3
    lam = set(lam)
    if not lam <= set(range(l + 2)):
        raise ValueError("labels must lie in 0..l+1")
    return DivisorPartition({(i + 2) % n + 1 for i in lam}, n=n)


def divisor_sweep(n: int) -> dict:
    """Orders over every partition of n = l + 3 points."""
    l = n - 3
    orders = {p: divisor_order(p, l) for p in all_partitions(n)}
    low = min(orders.values())
    argmin = sorted(orders, key=repr)
    argmin = [p for p in argmin if orders[p] == low]
    alt = alternating_partition(l) if n % 2 == 0 else None
    return {
        "n": n,
        "l": l,
        "partitions": len(orders),
        "min_order": low,
        "argmin": [repr(p) for p in argmin],
        "unique_alternating": alt is not None and argmin == [alt],
    }
