"""Multiple zeta values, the word/index dictionary, and the psi sequence.

zeta(m_1, ..., m_r) = sum over 0 < k_1 < ... < k_r of prod k_j^{-m_j},
convergent iff m_r >= 2. The word 0^{n_r - 1} 1 ... 0^{n_1 - 1} 1 has
L_w(1) = zeta(n_1, ..., n_r); its leftmost block carries the last part.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .estimate import Estimate
from .words import Word, enumerate_admissible


class MzvIndex(tuple):
    """Composition (m_1, ..., m_r) of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"MZV index parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def depth(self) -> int:
        return len(self)

    def is_convergent(self) -> bool:
        return len(self) > 0 and self[-1] >= 2

    def __str__(self):
        return "z(" + ",".join(map(str, self)) + ")"

    def __repr__(self):
        return f"MzvIndex({str(self)})"

    @classmethod
    def parse(cls, s: str) -> "MzvIndex":
        s = s.strip()
        if not (s.startswith("z(") and s.endswith(")")):
            raise ValueError(f"cannot parse MZV index {s!r}")
        body = s[2:-1].strip()
        return cls(int(x) for x in body.split(",")) if body else cls()


def word_to_zeta(w: Sequence[int]) -> MzvIndex:
    """[0^{n_r-1} 1 ... 0^{n_1-1} 1] -> (n_1, ..., n_r)."""
    w = Word(w)
    if not w or w[-1] != 1:
        raise ValueError(f"word {w} must end in 1")
    blocks, run = [], 0
    for b in w:
        run += 1
        if b == 1:
            blocks.append(run)
            run = 0
    return MzvIndex(reversed(blocks))


def zeta_to_word(idx: Sequence[int]) -> Word:
    out: list[int] = []
    for n in reversed(MzvIndex(idx)):
        out += [0] * (n - 1) + [1]
    return Word(out)


# -- nested sums --------------------------------------------------------------------

def zeta_partial_sums(idx: Sequence[int], N: int) -> np.ndarray:
    """S(n) = sum over 0 < k_1 < ... < k_r <= n, for n = 1..N."""
    k = np.arange(1, N + 1, dtype=float)
    T = None
    for m in idx:
        if T is None:
            H = np.ones(N)
        else:
            H = np.concatenate(([0.0], np.cumsum(T)[:-1]))
        T = H * k ** (-float(m))
    return np.cumsum(T)


def _tail_fit(S: np.ndarray, depth: int, lo: int, hi: int, orders: int, npts: int = 48) -> float:
    """Constant term of a least-squares fit of S(n) on [lo, hi] to
    1 and log(n)^j / n^k with j < depth and 1 <= k <= orders."""
    ns = np.unique(np.round(np.geomspace(lo, hi, npts)).astype(int))
    cols = [np.ones(len(ns))]
    for kk in range(1, orders + 1):
        for j in range(depth):
            cols.append(np.log(ns) ** j / ns ** float(kk))
    A = np.array(cols).T
    sol = np.linalg.lstsq(A, S[ns - 1], rcond=None)[0]
    return float(sol[0])


def default_tol(idx: Sequence[int]) -> float:
    return 1e-8 if len(idx) <= 3 else 1e-6


@lru_cache(maxsize=4096)
def _zeta_cached(idx: MzvIndex, tol: float, n_max: int) -> Estimate:
    depth = idx.depth
    N = 1 << 16
    while True:
        S = zeta_partial_sums(idx, N)
        main = _tail_fit(S, depth, N >> 8, N, 2)
        alt1 = _tail_fit(S, depth, N >> 9, N >> 1, 2)
        alt2 = _tail_fit(S, depth, N >> 8, N, 3)
        err = max(abs(main - alt1), abs(main - alt2)) + 1e-14 * abs(main)
        # partial sums increase, so the limit is at least the last partial sum
        main = max(main, float(S[-1]))
        if err <= tol or N >= n_max:
            return Estimate(main, err)
        N *= 4


def zeta_numeric(idx: Sequence[int], tol: float | None = None, n_max: int = 1 << 22) -> Estimate:
    """zeta(idx) from the nested partial sums extrapolated in the cutoff.

    The partial sums S(n) have an expansion in log(n)^j / n^k with j below the
    depth. Fitting that expansion on two windows and with two orders gives the
    value and the spread used as the error bound. The cutoff grows by 4 until
    the bound meets ``tol``.
    """
    idx = MzvIndex(idx)
    if not idx.is_convergent():
        raise ValueError(f"{idx} is divergent (last part must be >= 2)")
    return _zeta_cached(idx, float(tol if tol is not None else default_tol(idx)), n_max)


# -- the psi sequence ---------------------------------------------------------------

def _check_grade(grade: int, allow_zero: bool):
    if grade % 2 or grade < 0 or (grade == 0 and not allow_zero):
        raise ValueError(f"psi grade must be even and {'>= 0' if allow_zero else '>= 2'}, got {grade}")


def psi_index_set(grade: int) -> list[MzvIndex]:
    """Compositions of ``grade`` with last part 2 and all other parts in {1, 2}."""
    _check_grade(grade, allow_zero=False)

    def rec(n):
        if n == 0:
            return [()]
        out = []
        for p in (1, 2):
            if p <= n:
                out += [(p,) + r for r in rec(n - p)]
        return out

    return sorted(MzvIndex(c + (2,)) for c in rec(grade - 2))


def psi_word_index_set(grade: int) -> list[MzvIndex]:
    """Indices of L_b(1) for admissible words b of weight ``grade`` with b_1 = 0.

    These are the compositions with parts in {1, 2} whose maximal runs of 1s
    all have even length. They agree with :func:`psi_index_set` up to grade 4.
    """
    _check_grade(grade, allow_zero=False)
    return sorted(word_to_zeta(b) for b in psi_words(grade))


def psi_words(grade: int) -> list[Word]:
    return [b for b in enumerate_admissible(grade) if b[0] == 0]


PSI_VARIANTS = ("compositions", "words")


def psi_numeric(grade: int, tol: float | None = None, variant: str = "compositions") -> Estimate:
    """psi_grade as a sum of zeta values; psi_0 = 1.

    ``variant="compositions"`` sums over :func:`psi_index_set`;
    ``variant="words"`` over :func:`psi_word_index_set`.
    """
    _check_grade(grade, allow_zero=True)
    if grade == 0:
        return Estimate(1.0)
    if variant == "compositions":
        idxs = psi_index_set(grade)
    elif variant == "words":
        idxs = psi_word_index_set(grade)
    else:
        raise ValueError(f"unknown psi variant {variant!r}")
    total = Estimate(0.0)
    for idx in idxs:
        total = total + zeta_numeric(idx, tol)
    return total


def psi_via_words(grade: int, tol: float = 1e-13) -> Estimate:
    """Sum of L_b(1) over admissible b of weight ``grade`` with b_1 = 0,
    evaluated as hyperlogarithms at 1."""
    from .hyperlog import eval_at_one

    _check_grade(grade, allow_zero=False)
    total = Estimate(0.0)
    for b in psi_words(grade):
        total = total + eval_at_one(b, tol)
    return total


def zeta_at_one(idx: Sequence[int]) -> Estimate:
    """zeta(idx) through the hyperlog route, independent of the nested sums."""
    from .hyperlog import eval_at_one

    idx = MzvIndex(idx)
    if not idx.is_convergent():
        raise ValueError(f"{idx} is divergent (last part must be >= 2)")
    return eval_at_one(zeta_to_word(idx))
