"""The beta recurrence over formal psi symbols and its closed forms.

beta^{(l+1)}_m is defined for 1 <= m <= l with m = l (mod 2) by

    beta^{(l+1)}_l = 1,
    beta^{(l+1)}_m = sum_{n even, 0 <= n <= l-m} psi_n beta^{(l)}_{m-1+n},

with beta^{(l)}_0 = 0 and psi_0 = 1. Entries of the wrong parity are zero.
Two closed forms are provided: a sum over padded tuples of psi indices and a
sum over compositions weighted by lattice-path counts (gamma coefficients).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .psipoly import PsiPoly


def _check(l_plus_1: int, m: int) -> int:
    l = l_plus_1 - 1
    if l < 1:
        raise ValueError(f"need l+1 >= 2, got {l_plus_1}")
    if not 1 <= m <= l:
        raise ValueError(f"m={m} outside 1..{l} for l+1={l_plus_1}")
    if (l - m) % 2:
        raise ValueError(f"parity violation: m={m} and l={l} must agree mod 2")
    return l


@lru_cache(maxsize=None)
def _level(L: int, formal: bool) -> dict[int, PsiPoly]:
    """All nonzero beta^{(L)}_m keyed by m."""
    l = L - 1
    if l == 1:
        return {1: PsiPoly.one()}
    prev = _level(L - 1, formal)
    out = {}
    for m in range(l % 2 or 2, l + 1, 2):
        if m == l:
            out[m] = PsiPoly.one()
            continue
        acc = PsiPoly.zero()
        for n in range(0, l - m + 1, 2):
            b = prev.get(m - 1 + n)
            if b is not None:
                acc = acc + PsiPoly.psi(n, formal_zero=formal) * b
        out[m] = acc
    return out


def beta_recurrence(l_plus_1: int, m: int, psi0_formal: bool = False) -> PsiPoly:
    """beta^{(l+1)}_m from the recurrence, computed bottom-up and memoised.

    With ``psi0_formal`` the symbol psi_0 is kept instead of being set to 1.
    """
    _check(l_plus_1, m)
    return _level(l_plus_1, psi0_formal)[m]


def beta(l_plus_1: int, m: int) -> PsiPoly:
    """beta^{(l+1)}_m with the zero convention outside the valid range."""
    l = l_plus_1 - 1
    if l < 1 or not 1 <= m <= l or (l - m) % 2:
        return PsiPoly.zero()
    return _level(l_plus_1, False)[m]


def beta_table(l_max_plus_1: int) -> dict[tuple[int, int], PsiPoly]:
    """All entries beta^{(L)}_m for 2 <= L <= l_max_plus_1."""
    return {(L, m): p for L in range(2, l_max_plus_1 + 1) for m, p in _level(L, False).items()}


def valid_m(l_plus_1: int) -> list[int]:
    l = l_plus_1 - 1
    return list(range(l % 2 or 2, l + 1, 2))


# -- closed form over padded tuples -----------------------------------------

def k_tuples(l_plus_1: int, m: int) -> Iterator[tuple[int, ...]]:
    """Tuples (k_1..k_s) with 2*sum(k) = l-m, k_s != 0 and every prefix
    m + sum_{i<=r} (2 k_i - 1) >= 1. The empty tuple is produced for m = l.
    """
    l = _check(l_plus_1, m)
    total = (l - m) // 2

    def rec(rem: int, idx: int, acc: tuple):
        if rem == 0:
            yield acc
            return
        for k in range(rem + 1):
            j = idx + 2 * k - 1
            if j < 1:
                continue
            if k == rem:
                yield acc + (k,)
            else:
                yield from rec(rem - k, j, acc + (k,))

    yield from rec(total, m, ())


def beta_via_k(l_plus_1: int, m: int, psi0_formal: bool = False) -> PsiPoly:
    terms: dict = {}
    for t in k_tuples(l_plus_1, m):
        mono = tuple(sorted(2 * k for k in t if k or psi0_formal))
        terms[mono] = terms.get(mono, 0) + 1
    return PsiPoly(terms)


# -- lattice-path counts --------------------------------------------------------

def _check_nondecreasing(a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise ValueError("entries must be nonnegative")
    if any(a[i] > a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"sequence {a} is not nondecreasing")
    return a


def count_N_bruteforce(a: Sequence[int]) -> int:
    """#{0 <= y_1 <= ... <= y_s : y_i <= a_i} by listing every candidate."""
    a = _check_nondecreasing(a)
    if not a:
        return 1
    return sum(
        1
        for y in itertools.combinations_with_replacement(range(a[-1] + 1), len(a))
        if all(yi <= ai for yi, ai in zip(y, a))
    )


def count_N_dp(a: Sequence[int]) -> int:
    """Same count by a running prefix-sum table (fast, used for cross-checks)."""
    a = _check_nondecreasing(a)
    if not a:
        return 1
    ways = [1] * (a[0] + 1)
    for ai in a[1:]:
        nxt, run = [], 0
        for y in range(ai + 1):
            run += ways[y] if y < len(ways) else 0
            nxt.append(run)
        ways = nxt
    return sum(ways)


def stars_and_bars(n: int, q: int) -> int:
    """N_q(n) = binom(n+q, q): nondecreasing q-sequences in [0, n]; N_0 = 1."""
    if q == 0:
        return 1
    if n < 0:
        return 0
    return comb(n + q, q)


def catalan(s: int) -> int:
    return comb(2 * s, s) // (s + 1)


@lru_cache(maxsize=None)
def _q_tuples(s: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """(q_0, (q_1..q_{s-1})) with q_0 >= 1, total s, and suffix sums
    q_{s-1} + ... + q_{s-j} <= j."""
    out = []
    for q0 in range(1, s + 1):
        for qs in itertools.product(range(s - q0 + 1), repeat=s - 1):
            if sum(qs) != s - q0:
                continue
            if all(sum(qs[s - 1 - j:]) <= j for j in range(1, s)):
                out.append((q0, qs))
    return tuple(out)


@lru_cache(maxsize=None)
def _q_tuples_symmetric(s: int) -> tuple[tuple[int, ...], ...]:
    """(q_1..q_s) with suffix sums q_s + ... + q_{s-j} <= j+1 for j < s."""
    return tuple(
        qs for qs in itertools.product(range(s + 1), repeat=s)
        if all(sum(qs[s - 1 - j:]) <= j + 1 for j in range(s))
    )


def count_N_lemma(a: Sequence[int]) -> int:
    """The binomial-sum formula over (q_0, ..., q_{s-1}), without dispatch."""
    a = _check_nondecreasing(a)
    s = len(a)
    if s == 0:
        return 1
    total = 0
    for q0, qs in _q_tuples(s):
        t = stars_and_bars(a[0], q0)
        for j in range(1, s):
            t *= stars_and_bars(a[j] - a[j - 1] - 1, qs[j - 1])
            if not t:
                break
        total += t
    return total


def count_N_symmetric(a: Sequence[int]) -> int:
    """Variant with a virtual leading a_0 = 0, valid for a_1 = 0 as well."""
    a = _check_nondecreasing(a)
    s = len(a)
    if s == 0:
        return 1
    aa = (0,) + a
    total = 0
    for qs in _q_tuples_symmetric(s):
        t = 1
        for j in range(1, s + 1):
            t *= stars_and_bars(aa[j] - aa[j - 1] - 1, qs[j - 1])
            if not t:
                break
        total += t
    return total


def count_N_formula(a: Sequence[int]) -> int:
    """N(a) by the binomial formula.

    The staircase a_i = i - 1 is delegated to brute force, a_1 = 0 goes
    through the symmetric variant, everything else through the q-sum.
    """
    a = _check_nondecreasing(a)
    if a and all(x == i for i, x in enumerate(a)):
        return count_N_bruteforce(a)
    if a and a[0] == 0:
        return count_N_symmetric(a)
    return count_N_lemma(a)


# -- gamma coefficients and the partition form ---------------------------------

def compositions(n: int) -> list[tuple[int, ...]]:
    """Ordered compositions of n into positive parts (the empty one for n = 0)."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in compositions(n - first))
    return out


def gamma_N_arguments(m: int, parts: Sequence[int]) -> tuple[int, ...]:
    """(m-1, m-2+2k_1, ..., m-s+2(k_1+...+k_{s-1}))."""
    a, acc = [], 0
    for j in range(len(parts)):
        a.append(m - 1 - j + 2 * acc)
        acc += parts[j]
    return tuple(a)


@lru_cache(maxsize=None)
def gamma_coeff(m: int, parts: tuple[int, ...]) -> int:
    """Multiplicity of psi_{2k_1}...psi_{2k_s} in beta^{(m+2|k|+1)}_m.

    Evaluated as the binomial q-sum and checked against the lattice count
    N(gamma_N_arguments(m, parts)); a mismatch raises ``ArithmeticError``.
    """
    parts = tuple(parts)
    if m < 1 or any(k < 1 for k in parts):
        raise ValueError("need m >= 1 and positive parts")
    s = len(parts)
    if s == 0:
        return 1
    total = 0
    for q0, qs in _q_tuples(s):
        t = comb(m - 1 + q0, q0)
        for j in range(1, s):
            t *= comb(2 * parts[j - 1] - 2 + qs[j - 1], qs[j - 1])
        total += t
    check = count_N_dp(gamma_N_arguments(m, parts))
    if total != check:
        raise ArithmeticError(f"gamma mismatch for m={m}, parts={parts}: {total} != {check}")
    return total


def theorem_gamma(parts: Sequence[int]) -> int:
    """Coefficient of psi_{2k_1}...psi_{2k_s} in xi_{2|k|}; the m = 1 case."""
    return gamma_coeff(1, tuple(parts))


def beta_via_partitions(l_plus_1: int, m: int) -> PsiPoly:
    l = _check(l_plus_1, m)
    terms: dict = {}
    for parts in compositions((l - m) // 2):
        mono = tuple(sorted(2 * k for k in parts))
        terms[mono] = terms.get(mono, 0) + gamma_coeff(m, parts)
    return PsiPoly(terms)


# -- product identity ---------------------------------------------------------

def product_identity_rhs(l: int, m: int, q: int, k_start: int = 0) -> PsiPoly:
    """sum_{k = q+1 (mod 2), k_start <= k <= l-m+q} beta^{(k+2)}_q beta^{(l+1-k)}_{m-q}."""
    acc = PsiPoly.zero()
    for k in range(k_start, l - m + q + 1):
        if (k - q - 1) % 2 == 0:
            acc = acc + beta(k + 2, q) * beta(l + 1 - k, m - q)
    return acc


def valid_product_triples(l_max: int) -> Iterator[tuple[int, int, int]]:
    for l in range(2, l_max + 1):
        for m in range(2, l + 1):
            if (m - l - 1) % 2 == 0:
                for q in range(1, m):
                    yield l, m, q


def verify_product_identity(l: int, m: int, q: int) -> bool:
    """beta^{(l+2)}_m = sum_k beta^{(k+2)}_q beta^{(l+1-k)}_{m-q} exactly.

    The sum runs from k = 0; the k = 0 term beta^{(2)}_1 beta^{(l+1)}_{m-1}
    is present only for q = 1 and is needed for the identity to hold.
    """
    if l < 2 or not 2 <= m <= l or (m - l - 1) % 2:
        raise ValueError(f"invalid (l, m) = ({l}, {m})")
    if not 1 <= q <= m - 1:
        raise ValueError(f"q={q} outside 1..{m - 1}")
    return beta_recurrence(l + 2, m) == product_identity_rhs(l, m, q)


# -- small closed forms ---------------------------------------------------------

def beta_closed_form(l: int, drop: int) -> PsiPoly:
    """Displayed closed forms of beta^{(l+1)}_{l-drop} for drop in {2, 4, 6}."""
    P = PsiPoly.psi
    if drop == 2:
        return (l - 2) * P(2)
    if drop == 4:
        from fractions import Fraction
        return (l - 4) * P(4) + Fraction((l - 1) * (l - 4), 2) * P(2) ** 2
    if drop == 6:
        from fractions import Fraction
        return ((l - 6) * P(6) + (l - 6) * (l - 1) * P(2) * P(4)
                + Fraction((l - 6) * (l - 2) * (l - 1), 6) * P(2) ** 3)
    raise ValueError("closed forms are available for drop in {2, 4, 6}")
