"""The integrals xi_l over [0,1]^l of 1 / prod (1 - x_i x_{i+1}).

Symbolically xi_l = beta^{(l+2)}_1 for even l and beta^{(l+2)}_2 for odd l,
a polynomial in the psi symbols. The even case also has the explicit gamma
form over compositions, and odd values follow from even ones through
xi_{2m+1} = sum_h xi_{2h} xi_{2m-2h}. By convention xi_0 = xi_1 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .beta import beta_recurrence, compositions, theorem_gamma
from .estimate import Estimate
from .mzv import MzvIndex, psi_index_set, psi_numeric, psi_word_index_set
from .psipoly import FormalPoly, PsiPoly


class MzvCombination(FormalPoly):
    """Rational combination of formal products of MZVs (no relations applied)."""

    __slots__ = ()

    def _key_str(self, k) -> str:
        return str(MzvIndex(k))

    def format(self, symbol: str = "", power: str = "^", times: str = "*") -> str:
        return super().format("", power, times)

    def flatten(self, tol: float | None = None) -> Estimate:
        """Numeric value with every MZV from the nested-sum evaluator."""
        from .mzv import zeta_numeric

        return self.evaluate(lambda k: zeta_numeric(k, tol))


def xi_symbolic(l: int) -> PsiPoly:
    """xi_l as a psi polynomial via the beta recurrence."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    if l < 2:
        return PsiPoly.one()
    return beta_recurrence(l + 2, 1 if l % 2 == 0 else 2)


def xi_theorem(l: int) -> PsiPoly:
    """xi_l from the gamma-weighted sum over compositions (even l) and the
    odd/even product relation (odd l)."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    if l < 2:
        return PsiPoly.one()
    if l % 2 == 0:
        terms: dict = {}
        for parts in compositions(l // 2):
            mono = tuple(sorted(2 * k for k in parts))
            terms[mono] = terms.get(mono, 0) + theorem_gamma(parts)
        return PsiPoly(terms)
    m = (l - 1) // 2
    acc = PsiPoly.zero()
    for h in range(m + 1):
        acc = acc + xi_theorem(2 * h) * xi_theorem(2 * m - 2 * h)
    return acc


def psi_to_mzv(n: int, variant: str = "words") -> MzvCombination:
    """psi_n as the formal sum of its MZVs."""
    if n == 0:
        return MzvCombination.one()
    idxs = psi_word_index_set(n) if variant == "words" else psi_index_set(n)
    return MzvCombination({(idx,): 1 for idx in idxs})


def xi_expand_mzv(l: int, variant: str = "words") -> MzvCombination:
    """Substitute each psi_n by its MZV sum, keeping products formal.

    ``variant`` selects the psi index set (see :func:`cellint.mzv.psi_numeric`);
    the two choices coincide for l <= 5.
    """
    return xi_symbolic(l).substitute(lambda n: psi_to_mzv(n, variant), MzvCombination)


def xi_numeric(l: int, tol: float | None = None, variant: str = "words") -> Estimate:
    """Numeric xi_l from the psi polynomial and nested-sum MZVs."""
    return xi_symbolic(l).evaluate(lambda n: psi_numeric(n, tol, variant))


def verify_odd_relation(m: int) -> bool:
    """xi_{2m+1} = sum_{h=0}^m xi_{2h} xi_{2m-2h} as an exact identity."""
    if m < 1:
        raise ValueError("m must be at least 1")
    rhs = PsiPoly.zero()
    for h in range(m + 1):
        rhs = rhs + xi_symbolic(2 * h) * xi_symbolic(2 * m - 2 * h)
    return xi_symbolic(2 * m + 1) == rhs


def expected_grade(l: int) -> int:
    return l if l % 2 == 0 else l - 1


@dataclass
class XiValue:
    l: int
    psi_form: PsiPoly
    mzv_form: MzvCombination
    numeric: Estimate | None = None
    oracles: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "l": self.l,
            "psi_form": str(self.psi_form),
            "psi_terms": self.psi_form.to_json(),
            "mzv_form": str(self.mzv_form),
            "numeric": self.numeric.to_dict() if self.numeric else None,
        }
        res = {}
        for name, est in self.oracles.items():
            out[name] = est.to_dict()
            if self.numeric:
                res[name] = abs(est.value - self.numeric.value)
        out["residuals"] = res
        return out


def xi_value(l: int, numeric: bool = True, variant: str = "words") -> XiValue:
    v = XiValue(l, xi_symbolic(l), xi_expand_mzv(l, variant))
    if numeric:
        v.numeric = xi_numeric(l, variant=variant)
    return v
