"""The towers F_l, G_l on [0,1], their coefficients, and the alpha table.

F_1 = 1 and F_l(1, x) = int_0^1 F_{l-1}(1, t) / (1 - t x) dt, so that
int_0^1 F_l(1, x) dx = xi_l. G_1 = 1 and

    G_l(1, x) = int_0^1 K_l(t, x) G_{l-1}(1, t) dt,
    K_l = 1/(1 - t x) for l even,  t x / (1 - t x) for l odd,

which gives G_2(1, x) = -log(1-x)/x. The towers are linked by
F_l = sum_k a_{l,k} F_k + G_l.

Numerically both towers are evaluated by Nystrom products on one graded
Gauss-Legendre grid, with panels shrinking geometrically toward t = 1.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ._quad import PanelGrid, graded_breakpoints
from .beta import beta, beta_recurrence
from .estimate import Estimate
from .hyperlog import HyperWord, eval_series
from .mzv import psi_numeric, psi_words
from .psipoly import FormalPoly, PsiPoly
from .words import Word, enumerate_admissible, is_admissible, words_in_I, x_set
from .xi import xi_symbolic

PSI_VARIANT = "words"


# -- Nystrom evaluation ----------------------------------------------------------------

@lru_cache(maxsize=8)
def _grid(p: int) -> PanelGrid:
    return PanelGrid(graded_breakpoints(1.0, 1.0, 50), p)


def _one_minus_prod(omt: np.ndarray, omx: np.ndarray) -> np.ndarray:
    """1 - t x from 1 - t and 1 - x, accurate when both are near 1."""
    return omt + omx - omt * omx


def _kernel(parity_odd: bool, t, omt, x, omx):
    d = _one_minus_prod(omt, omx)
    return (t * x) / d if parity_odd else 1.0 / d


@lru_cache(maxsize=64)
def _tower_nodes(kind: str, l: int, p: int) -> np.ndarray:
    """Values of F_l(1, t) or G_l(1, t) at the grid nodes (flattened)."""
    g = _grid(p)
    t, omt = g.t.ravel(), g.one_minus_t.ravel()
    if l == 1:
        return np.ones_like(t)
    prev = _tower_nodes(kind, l - 1, p) * g.flat_weights
    odd = kind == "G" and l % 2 == 1
    K = _kernel(odd, t[None, :], omt[None, :], t[:, None], omt[:, None])
    return K @ prev


def _tower_at(kind: str, l: int, x: float, p: int) -> float:
    if l == 1:
        return 1.0
    g = _grid(p)
    t, omt = g.t.ravel(), g.one_minus_t.ravel()
    prev = _tower_nodes(kind, l - 1, p) * g.flat_weights
    odd = kind == "G" and l % 2 == 1
    return float(_kernel(odd, t, omt, x, 1.0 - x) @ prev)


def _two_rules(fn) -> Estimate:
    a, b = fn(16), fn(24)
    return Estimate(b, abs(a - b) + 1e-14 * abs(b))


def _check_x(x: float):
    if not 0.0 < x < 1.0:
        raise ValueError(f"x={x} must lie in (0, 1)")


def g_numeric(l: int, x: float) -> Estimate:
    """G_l(1, x) by nested quadrature."""
    if l < 2:
        raise ValueError("l must be at least 2")
    _check_x(x)
    return _two_rules(lambda p: _tower_at("G", l, x, p))


def f_direct(l: int, x: float) -> Estimate:
    """F_l(1, x) by nested quadrature of the F recursion."""
    if l < 1:
        raise ValueError("l must be at least 1")
    _check_x(x)
    return _two_rules(lambda p: _tower_at("F", l, x, p))


def tower_integral(kind: str, l: int) -> Estimate:
    """int_0^1 F_l(1, x) dx or int_0^1 G_l(1, x) dx by quadrature."""
    if kind not in ("F", "G"):
        raise ValueError("kind must be 'F' or 'G'")
    return _two_rules(lambda p: float(_tower_nodes(kind, l, p) @ _grid(p).flat_weights))


# -- closed shape of G -------------------------------------------------------------------

def _psi_value(n: int) -> Estimate:
    return psi_numeric(n, variant=PSI_VARIANT)


def h_function(m: int, x: float) -> Estimate:
    """Sum of L_i(x) over admissible words of weight m."""
    total = Estimate(0.0)
    for i in enumerate_admissible(m):
        total = total + eval_series(HyperWord(i), x)
    return total


def g_formula(l_plus_1: int, x: float) -> Estimate:
    """G_{l+1}(1, x) = (1/x)^{[l odd]} sum_m beta^{(l+1)}_m sum_{i admissible, w(i)=m} L_i(x)."""
    l = l_plus_1 - 1
    if l < 1:
        raise ValueError("l+1 must be at least 2")
    _check_x(x)
    total = Estimate(0.0)
    for m in range(l % 2 or 2, l + 1, 2):
        total = total + beta_recurrence(l_plus_1, m).evaluate(_psi_value) * h_function(m, x)
    return total / x if l % 2 else total


def integral_g(l_plus_1: int) -> tuple[PsiPoly, Estimate]:
    """int_0^1 G_{l+1}(1, x) dx in closed form.

    For l odd this is sum_{m odd} beta^{(l+1)}_m psi_{m+1}; for l even it is
    beta^{(l+2)}_1.
    """
    l = l_plus_1 - 1
    if l < 1:
        raise ValueError("l+1 must be at least 2")
    if l % 2:
        sym = PsiPoly.zero()
        for m in range(1, l + 1, 2):
            sym = sym + beta_recurrence(l_plus_1, m) * PsiPoly.psi(m + 1)
    else:
        sym = beta_recurrence(l + 2, 1)
    return sym, sym.evaluate(_psi_value)


# -- the a_{l,k} coefficients -------------------------------------------------------

class XiPoly(FormalPoly):
    """Polynomial in formal symbols xi_k."""

    __slots__ = ()

    def format(self, symbol: str = "xi", power: str = "^", times: str = "*") -> str:
        return super().format(symbol, power, times)


def _xi_sym(k: int) -> XiPoly:
    return XiPoly.one() if k <= 1 else XiPoly.symbol(k)


def _a_range(l: int) -> range:
    return range(2, l - 1, 2) if l % 2 == 0 else range(1, l - 1, 2)


@lru_cache(maxsize=None)
def a_coeff_xi(l: int, k: int) -> XiPoly:
    """a_{l,k} over the xi symbols; indices outside the defined range give 0."""
    if l < 2 or k < 1:
        raise ValueError(f"invalid index ({l}, {k})")
    if (l - k) % 2:
        raise ValueError(f"parity violation: k={k} and l={l} must agree mod 2")
    if k not in _a_range(l):
        return XiPoly.zero()
    if k >= 2:
        return a_coeff_xi(l - 1, k - 1)
    acc = _xi_sym(l - 1)
    for j in range(2, l - 2, 2):
        acc = acc - a_coeff_xi(l - 1, j) * _xi_sym(j)
    return acc


def a_coeff(l: int, k: int, basis: str = "psi"):
    """a_{l,k} as a psi polynomial (default) or over the xi symbols."""
    a = a_coeff_xi(l, k)
    if basis == "xi":
        return a
    if basis != "psi":
        raise ValueError("basis must be 'psi' or 'xi'")
    return a.substitute(xi_symbolic, PsiPoly)


def f_numeric(l: int, x: float, method: str = "decomposition") -> Estimate:
    """F_l(1, x), either directly or as sum_k a_{l,k} F_k(1, x) + G_l(1, x)."""
    if method == "direct":
        return f_direct(l, x)
    if method != "decomposition":
        raise ValueError("method must be 'direct' or 'decomposition'")
    if l == 1:
        return Estimate(1.0)
    total = g_numeric(l, x)
    for k in _a_range(l):
        total = total + a_coeff(l, k).evaluate(_psi_value) * f_direct(k, x)
    return total


def xi_closure_check(l: int) -> bool:
    """xi_{l+1} = sum_k a_{l+1,k} xi_k + int_0^1 G_{l+1}, exact over psi."""
    rhs = integral_g(l + 1)[0]
    for k in _a_range(l + 1):
        rhs = rhs + a_coeff(l + 1, k) * xi_symbolic(k)
    return xi_symbolic(l + 1) == rhs


# -- the alpha table ----------------------------------------------------------------------

class WordConstPoly(FormalPoly):
    """Polynomial in formal constants L_b(1), keyed by the word b."""

    __slots__ = ()

    def _key_str(self, k) -> str:
        return "L" + str(Word(k))


def _sign(a: Word) -> int:
    return -1 if (a.weight - a.length) % 2 else 1


class AlphaTable:
    """alpha^{(l)}_{[i]} for 2 <= l <= l_max, stored sparsely (absent = 0)."""

    def __init__(self, l_max: int):
        if l_max < 2:
            raise ValueError("l_max must be at least 2")
        self.l_max = l_max
        self.levels: dict[int, dict[Word, WordConstPoly]] = {2: {Word("1"): WordConstPoly.one()}}
        for l in range(2, l_max):
            self.levels[l + 1] = self._step(l, self.levels[l])

    @staticmethod
    def _step(l: int, prev: dict[Word, WordConstPoly]) -> dict[Word, WordConstPoly]:
        b_words = {n: [b for b in words_in_I(n) if b[0] == 0] for n in range(2, l)}
        out = {}
        for m in range(1, l + 1):
            for i in words_in_I(m):
                xs = x_set(i)
                acc = WordConstPoly.zero()
                for n in range(2, l - m + 1):
                    for b in b_words[n]:
                        inner = WordConstPoly.zero()
                        for a in xs:
                            v = prev.get(a + b)
                            if v is not None:
                                inner = inner + _sign(a) * v
                        if inner:
                            acc = acc + WordConstPoly.symbol(b) * inner
                for a in xs:
                    if a and a[-1] == 1:
                        v = prev.get(a)
                        if v is not None:
                            acc = acc + _sign(a) * v
                if acc:
                    out[i] = acc
        return out

    def get(self, l: int, i) -> WordConstPoly:
        return self.levels[l].get(Word(i), WordConstPoly.zero())

    def expected(self, l: int, i) -> WordConstPoly:
        """beta^{(l)}_{w(i)} with psi_n replaced by the sum of its word constants,
        or 0 when i is not admissible."""
        i = Word(i)
        if not is_admissible(i):
            return WordConstPoly.zero()
        return beta(l, i.weight).substitute(
            lambda n: WordConstPoly({(b,): 1 for b in psi_words(n)}), WordConstPoly)

    def collapse_report(self) -> dict:
        zero_off = const = equal = True
        entries = 0
        for l in range(2, self.l_max + 1):
            by_weight: dict[int, set] = {}
            for m in range(1, l):
                for i in words_in_I(m):
                    entries += 1
                    got = self.get(l, i)
                    if not is_admissible(i):
                        zero_off &= got.is_zero()
                        continue
                    by_weight.setdefault(m, set()).add(got)
                    equal &= got == self.expected(l, i)
            const &= all(len(v) == 1 for v in by_weight.values())
        return {
            "l_max": self.l_max,
            "entries": entries,
            "zero_off_admissible": bool(zero_off),
            "constant_on_weight_classes": bool(const),
            "equals_beta": bool(equal),
            "pass": bool(zero_off and const and equal),
        }


def alpha_recursion(l_max: int) -> AlphaTable:
    return AlphaTable(l_max)
