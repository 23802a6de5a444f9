"""Exact and numeric evaluation of the cellular integrals

    xi_l = int_{[0,1]^l} dx_1 ... dx_l / prod_{i<l} (1 - x_i x_{i+1})

as polynomials in sums of multiple zeta values, with independent oracles.
"""

from .estimate import Estimate
from .words import Word
from .mzv import MzvIndex, zeta_numeric, psi_numeric
from .psipoly import PsiPoly
from .xi import xi_symbolic, xi_theorem, xi_numeric, xi_expand_mzv

__all__ = [
    "Estimate", "Word", "MzvIndex", "PsiPoly",
    "zeta_numeric", "psi_numeric",
    "xi_symbolic", "xi_theorem", "xi_numeric", "xi_expand_mzv",
]
