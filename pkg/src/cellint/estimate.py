"""A real number carried together with an absolute error bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _exact(c) -> bool:
    return isinstance(c, (int, Fraction))


@dataclass(frozen=True)
class Estimate:
    """Value with a nonnegative absolute error bound.

    Arithmetic propagates bounds to first order plus the cross term, so a sum
    or product of estimates remains a valid enclosure whenever the inputs are.
    """

    value: float
    error: float = 0.0

    def __post_init__(self):
        if not (self.error >= 0.0):
            raise ValueError(f"error bound must be nonnegative, got {self.error}")

    def __float__(self):
        return float(self.value)

    def __neg__(self):
        return Estimate(-self.value, self.error)

    def __add__(self, other):
        if isinstance(other, Estimate):
            return Estimate(self.value + other.value, self.error + other.error)
        return Estimate(self.value + float(other), self.error)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Estimate):
            v = self.value * other.value
            e = (abs(self.value) * other.error + abs(other.value) * self.error
                 + self.error * other.error)
            return Estimate(v, e)
        c = float(other)
        return Estimate(self.value * c, abs(c) * self.error)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, Estimate):
            raise TypeError("division by an Estimate is not supported")
        return self * (1.0 / float(c))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = Estimate(1.0)
        for _ in range(n):
            out = out * self
        return out

    def agrees(self, other, tol: float = 0.0) -> bool:
        """True when the two enclosures overlap up to an extra slack ``tol``."""
        if not isinstance(other, Estimate):
            other = Estimate(float(other))
        return abs(self.value - other.value) <= self.error + other.error + tol

    def to_dict(self) -> dict:
        return {"value": self.value, "error": self.error}

    def __str__(self):
        if self.error == 0.0:
            return f"{self.value:.15g}"
        digits = max(1, min(16, 1 - int(math.floor(math.log10(self.error))) + int(math.floor(math.log10(abs(self.value) or 1.0)))))
        return f"{self.value:.{digits}g} ± {self.error:.1e}"
