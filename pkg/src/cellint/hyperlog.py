"""One-variable hyperlogarithms and the variable-swap expansion.

A hyperword is a sequence of letters, each standing for a one-form:

    0         dt / t
    1         dt / (1 - t)
    Sigma(s)  dt / (s - t),  s >= 1

``L_w(z)`` is the iterated integral over [0, z] with the leftmost letter as
the outermost integration, normalised to vanish at 0. Words over {0, 1}
ending in 1 are regular at 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from scipy.signal import lfilter

from ._quad import PanelGrid, graded_breakpoints
from .estimate import Estimate
from .words import Word, deconcatenations, substitute_ones

import itertools


@dataclass(frozen=True)
class Sigma:
    """The letter dt/(s - t); ``Sigma(1/x)`` is the bar letter x^{-1}."""

    value: float
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.value >= 1.0:
            raise ValueError(f"Sigma parameter must be >= 1, got {self.value}")

    def __str__(self):
        return f"s({self.label})" if self.label else f"s({self.value:.6g})"


def _letter_str(a) -> str:
    return str(a)


class HyperWord(tuple):
    """Immutable sequence of letters from {0, 1, Sigma(s)}."""

    __slots__ = ()

    def __new__(cls, letters: Iterable = ()):
        out = []
        for a in letters:
            if isinstance(a, Sigma):
                out.append(a)
            elif a in (0, 1):
                out.append(int(a))
            else:
                raise ValueError(f"invalid hyperword letter {a!r}")
        return super().__new__(cls, out)

    def __add__(self, other):
        return HyperWord(tuple(self) + tuple(other))

    def __str__(self):
        return "[" + "|".join(_letter_str(a) for a in self) + "]"

    def __repr__(self):
        return f"HyperWord({str(self)})"

    def singular_point(self) -> float:
        """Nearest point of [1, inf) where some letter's form is singular."""
        pts = [1.0 if a == 1 else a.value for a in self if a != 0]
        return min(pts) if pts else math.inf


def _validate(w: HyperWord, z: float, allow_one: bool):
    if len(w) and w[-1] == 0:
        raise ValueError(f"word {w} ends in 0 and is not regular at the origin")
    if not (0.0 <= z <= 1.0) or (z == 1.0 and not allow_one):
        raise ValueError(f"z={z} outside the allowed range")


# -- power series ----------------------------------------------------------------

def _series_coeffs(w: HyperWord, z: float, K: int) -> np.ndarray:
    """Scaled Taylor coefficients d_k = c_k z^k of L_w at the point z."""
    d = np.zeros(K)
    d[0] = 1.0
    k = np.arange(K, dtype=float)
    k[0] = 1.0
    for a in reversed(w):
        if a == 0:
            e = d / k
        else:
            r = z / (1.0 if a == 1 else a.value)
            e = lfilter([0.0, r], [1.0, -r], d) / k
        e[0] = 0.0
        d = e
    return d


def eval_series(w: Sequence, z: float, tol: float = 1e-14, k_max: int = 1 << 24) -> Estimate:
    """L_w(z) for 0 <= z < 1 by summing its Taylor series.

    The cutoff doubles until a geometric bound on the tail, built from the
    observed ratio of the last coefficients and the convergence radius, drops
    below ``tol`` relative to the value.
    """
    w = HyperWord(w)
    _validate(w, z, allow_one=False)
    if not w:
        return Estimate(1.0)
    if z == 0.0:
        return Estimate(0.0)
    rho = z / w.singular_point() if w.singular_point() < math.inf else 0.0
    K = 64
    if rho > 0:
        K = min(k_max, max(K, int(2 ** math.ceil(math.log2(40.0 / (1.0 - rho))))))
    while True:
        d = _series_coeffs(w, z, K)
        total = float(np.sum(d))
        last, prev = d[-1], d[-2]
        if rho == 0.0 or last == 0.0:
            tail = 0.0
        else:
            r = max(rho, last / prev if prev > 0 else 1.0)
            tail = math.inf if r >= 1.0 else 2.0 * last * r / (1.0 - r)
        rounding = 4e-16 * math.sqrt(K) * abs(total) + 1e-300
        if tail <= tol * max(1.0, abs(total)) or K >= k_max:
            return Estimate(total, tail + rounding)
        K *= 2


def eval_at_one(w: Sequence[int], tol: float = 1e-14) -> Estimate:
    """Regularised value L_w(1) for a {0,1}-word starting with 0 and ending in 1.

    Splits the path at 1/2: L_w(1) = sum_k L_{u_k}(1/2) L_{w_{k+1..n}}(1/2)
    where u_k is the reversed complement of the prefix w_1..w_k. Both factors
    converge like 2^{-k}.
    """
    w = Word(w)
    if not w:
        return Estimate(1.0)
    if w[0] != 0 or w[-1] != 1:
        raise ValueError(f"word {w} must start with 0 and end in 1 to converge at 1")
    return _at_one(w, tol)


@lru_cache(maxsize=8192)
def _at_one(w: Word, tol: float) -> Estimate:
    total = Estimate(0.0)
    for k in range(len(w) + 1):
        pre = HyperWord(1 - a for a in reversed(w[:k]))
        suf = HyperWord(w[k:])
        total = total + eval_series(pre, 0.5, tol) * eval_series(suf, 0.5, tol)
    return total


# -- quadrature -------------------------------------------------------------------

def _form(a, t: np.ndarray, one_minus_t: np.ndarray) -> np.ndarray:
    if a == 0:
        return 1.0 / t
    if a == 1:
        return 1.0 / one_minus_t
    return 1.0 / ((a.value - 1.0) + one_minus_t)


def _quad_once(w: HyperWord, z: float, target: float, depth: int, p: int, split: int) -> float:
    grid = PanelGrid(graded_breakpoints(z, target, depth, split), p)
    f = np.ones_like(grid.t)
    end = 1.0
    for a in reversed(w):
        f, end = grid.cumulative(f * _form(a, grid.t, grid.one_minus_t))
    return end


def eval_quadrature(w: Sequence, z: float, tol: float = 1e-12, p: int = 20) -> Estimate:
    """L_w(z) by nested composite Gauss-Legendre integration.

    Panels shrink geometrically toward the nearest singular point. The error
    is taken from comparing ``p`` and ``p + 8`` nodes per panel, with panels
    split further until the two agree to ``tol``. At z = 1 the path stops at
    1 - 2^-50 and the omitted piece is bounded from the log-type growth of
    the inner integrals.
    """
    w = HyperWord(w)
    _validate(w, z, allow_one=True)
    if not w:
        return Estimate(1.0)
    if z == 0.0:
        return Estimate(0.0)
    target = min(w.singular_point(), 2.0)
    remainder = 0.0
    zz = z
    if z == 1.0:
        if w[0] == 1 or (isinstance(w[0], Sigma) and w[0].value == 1.0):
            raise ValueError(f"word {w} is not integrable at 1")
        if target == 1.0:
            delta = 2.0 ** -50
            zz = 1.0 - delta
            n = len(w)
            # inner integrals grow at most like log^n(1/(1-t)) times n-dependent constants
            remainder = delta * (1.0 + math.log(1.0 / delta)) ** n * 2.0 ** n
    depth = 50 if target <= 1.0 else 8
    split = 1
    while True:
        a = _quad_once(w, zz, target, depth, p, split)
        b = _quad_once(w, zz, target, depth, p + 8, split)
        diff = abs(a - b)
        if diff <= tol * max(1.0, abs(b)) or split >= 16:
            return Estimate(b, diff + remainder + 1e-15 * abs(b))
        split *= 2


# -- the swap expansion ------------------------------------------------------------

@dataclass(frozen=True)
class SwapTerm:
    """One product ``sign * L_{[x_prefix | tail]}(x) * L_{y_word}(y)``.

    ``tail`` is ``"y^-1"`` (the letter Sigma(1/y)) or ``"1"``. In a restricted
    expansion ``y_word`` is evaluated at 1.
    """

    sign: int
    x_prefix: Word
    tail: str
    y_word: Word

    def x_word(self, y: float) -> HyperWord:
        last = Sigma(1.0 / y, "y^-1") if self.tail == "y^-1" else 1
        return HyperWord(tuple(self.x_prefix) + (last,))

    def __str__(self):
        xs = "|".join(map(str, self.x_prefix)) + ("|" if self.x_prefix else "") + self.tail
        ys = "|".join(map(str, self.y_word))
        return f"{'+' if self.sign > 0 else '-'} L[{xs}](x) * L[{ys}](y)"


@dataclass(frozen=True)
class SwapExpansion:
    word: Word
    terms: tuple[SwapTerm, ...]
    restricted: bool = False

    def evaluate(self, x: float, y: float = 1.0, flip_empty_prefix: bool = False) -> Estimate:
        """Right-hand side at (x, y); ``y`` is ignored for restricted expansions.

        ``flip_empty_prefix`` negates the terms whose x-word is a single
        letter, the variant shown in the worked three-variable example.
        """
        total = Estimate(0.0)
        for t in self.terms:
            s = t.sign
            if flip_empty_prefix and not t.x_prefix:
                s = -s
            if self.restricted:
                xv = eval_series(t.x_word(1.0), x)
                yv = eval_at_one(t.y_word)
            else:
                xv = eval_series(t.x_word(y), x)
                yv = eval_series(HyperWord(t.y_word), y)
            total = total + s * (xv * yv)
        return total

    def to_strings(self) -> list[str]:
        return [str(t) for t in self.terms]


def swap_expand(i: Sequence[int], restricted: bool = False) -> SwapExpansion:
    """Rewrite L_{[x^{-1}|i]}(y) as a sum of products of hyperlogs in x and y.

    General form: for every split i = a b and every eps in {0,1}^{l(a)}, the
    term (-1)^{w(a)-l(a)} L_{[a(eps)|y^{-1}]}(x) L_b(y); then, for splits with
    b_1 = 1, the same with tail 1 and the opposite sign. The restricted form
    (y = 1) keeps splits with b empty or b_1 = 0 and tail 1.
    """
    i = Word(i)
    if not i or i[-1] != 1:
        raise ValueError("swap expansion needs a nonempty word ending in 1")
    terms = []
    splits = deconcatenations(i)
    for a, b in splits:
        if restricted and b and b[0] == 1:
            continue
        sign = (-1) ** (a.weight - a.length)
        tail = "1" if restricted else "y^-1"
        for eps in itertools.product((0, 1), repeat=a.length):
            terms.append(SwapTerm(sign, substitute_ones(a, eps), tail, b))
    if not restricted:
        for a, b in splits:
            if b and b[0] == 1:
                sign = (-1) ** (a.weight - a.length)
                for eps in itertools.product((0, 1), repeat=a.length):
                    terms.append(SwapTerm(-sign, substitute_ones(a, eps), "1", b))
    return SwapExpansion(i, tuple(terms), restricted)


def verify_swap(i: Sequence[int], samples: int = 20, tol: float = 1e-6, seed: int = 0,
                restricted: bool = False, max_weight: int = 4) -> dict:
    """Check the swap expansion at random points of (0.05, 0.95)^2.

    The left side is computed by quadrature, the right side by series. For the
    restricted form y = 1 and only x is sampled. The report also carries the
    residual obtained when the single-letter terms change sign, which is the
    variant of the worked example.
    """
    i = Word(i)
    if i.weight > max_weight:
        raise ValueError(f"weight {i.weight} exceeds the configured maximum {max_weight}")
    exp = swap_expand(i, restricted)
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0.05, 0.95, size=(samples, 2))
    worst = 0.0
    worst_flip = 0.0
    for x, y in pts:
        yy = 1.0 if restricted else y
        lhs = eval_quadrature(HyperWord((Sigma(1.0 / x, "x^-1"),) + tuple(i)), yy)
        rhs = exp.evaluate(x, yy)
        worst = max(worst, abs(lhs.value - rhs.value))
        if not restricted:
            worst_flip = max(worst_flip, abs(lhs.value - exp.evaluate(x, yy, True).value))
    report = {
        "word": str(i),
        "samples": int(samples),
        "max_residual": worst,
        "tol": tol,
        "seed": seed,
        "restricted": restricted,
        "terms": len(exp.terms),
        "pass": bool(worst < tol),
    }
    if not restricted:
        report["flipped_sign_residual"] = worst_flip
    return report
