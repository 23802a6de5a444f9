"""Exact polynomials in commuting formal symbols.

:class:`FormalPoly` maps monomials, stored as sorted tuples of symbol keys,
to exact rational coefficients. :class:`PsiPoly` specialises the keys to even
integers ``n`` standing for the symbols psi_n. The grade of a psi monomial is
the sum of its entries.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping

from .estimate import Estimate


def _norm(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


class FormalPoly:
    """Sparse polynomial with exact coefficients over orderable symbol keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        self._terms: dict[tuple, object] = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(sorted(mono))
                c = _norm(c)
                if c:
                    c = self._terms.get(mono, 0) + c
                    if c:
                        self._terms[mono] = _norm(c)
                    else:
                        self._terms.pop(mono, None)

    @classmethod
    def _raw(cls, terms: dict):
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(): 1})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def symbol(cls, key: Hashable):
        return cls._raw({(key,): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Iterable = ()):
        return self._terms.get(tuple(sorted(mono)), 0)

    def _coerce(self, other):
        if isinstance(other, FormalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _norm(v)
            else:
                out.pop(m, None)
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(sorted(m1 + m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return type(self)._raw({m: _norm(c) for m, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = type(self).one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def substitute(self, mapping: Callable[[Hashable], "FormalPoly"], target=None):
        """Replace every symbol by a polynomial and expand."""
        target = target or FormalPoly
        out = target.zero()
        cache: dict = {}
        for mono, c in self._terms.items():
            term = target.const(c)
            for k in mono:
                if k not in cache:
                    cache[k] = mapping(k)
                term = term * cache[k]
            out = out + term
        return out

    def evaluate(self, values: Callable[[Hashable], object]):
        """Evaluate numerically; ``values(key)`` may return floats or Estimates."""
        total = Estimate(0.0)
        cache: dict = {}
        for mono, c in self._terms.items():
            term = Estimate(float(c))
            for k in mono:
                if k not in cache:
                    v = values(k)
                    cache[k] = v if isinstance(v, Estimate) else Estimate(float(v))
                term = term * cache[k]
            total = total + term
        return total

    def map_coefficients(self, f):
        return type(self)({m: f(c) for m, c in self._terms.items()})

    def _key_str(self, k) -> str:
        return str(k)

    def format(self, symbol: str = "", power: str = "^", times: str = "*") -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            factors = []
            i = 0
            while i < len(mono):
                j = i
                while j < len(mono) and mono[j] == mono[i]:
                    j += 1
                f = symbol + self._key_str(mono[i])
                factors.append(f if j - i == 1 else f"{f}{power}{j - i}")
                i = j
            body = times.join(factors)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}{times}{body}"
            parts.append(("-" if c < 0 else "+", s))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"{type(self).__name__}({self.format()!r})"

    def to_json(self) -> list:
        return [{"monomial": [self._key_str(k) for k in m], "coeff": str(c)} for m, c in self.items()]


class PsiPoly(FormalPoly):
    """Polynomial in the formal symbols psi_n (n even, n >= 0).

    ``psi_0`` is only kept as a symbol when explicitly requested; by default it
    is the constant 1.
    """

    __slots__ = ()

    @classmethod
    def psi(cls, n: int, formal_zero: bool = False):
        if n < 0 or n % 2:
            raise ValueError(f"psi index must be even and nonnegative, got {n}")
        if n == 0 and not formal_zero:
            return cls.one()
        return cls.symbol(n)

    def grades(self) -> set[int]:
        return {sum(m) for m in self._terms}

    def is_homogeneous(self, grade: int | None = None) -> bool:
        g = self.grades()
        if grade is None:
            return len(g) <= 1
        return g <= {grade}

    def set_psi0(self) -> "PsiPoly":
        """Specialise a formal psi_0 to 1."""
        out = type(self).zero()
        for m, c in self._terms.items():
            out = out + type(self)({tuple(k for k in m if k != 0): c})
        return out

    def to_json(self) -> list:
        return [{"monomial": list(m), "coeff": str(c)} for m, c in self.items()]

    def format(self, symbol: str = "p", power: str = "^", times: str = "*") -> str:
        return super().format(symbol, power, times)

    _TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?((?:p\d+(?:\^\d+)?\*?)*)$")

    @classmethod
    def parse(cls, s: str) -> "PsiPoly":
        """Inverse of :meth:`format` (e.g. ``"3*p2^2 + p4"``)."""
        s = s.replace(" ", "")
        if s == "0":
            return cls.zero()
        out = cls.zero()
        for sign, chunk in re.findall(r"([+-]?)([^+-]+)", s):
            mt = cls._TERM.match(chunk)
            if not mt:
                raise ValueError(f"cannot parse term {chunk!r}")
            c = Fraction(mt.group(1)) if mt.group(1) else Fraction(1)
            mono = []
            for n, e in re.findall(r"p(\d+)(?:\^(\d+))?", mt.group(2)):
                mono += [int(n)] * int(e or 1)
            if not mono and not mt.group(1):
                raise ValueError(f"empty term in {s!r}")
            out = out + cls({tuple(mono): -c if sign == "-" else c})
        return out
