"""Words over the alphabet {0, 1} and their shuffle algebra.

A word ``i = (i_1, ..., i_m)`` is written left to right, so ``i_1`` is the
leftmost bar slot. The word ``[0, 1]`` stands for the iterated integral of
``dt/t`` (outer) and ``dt/(1-t)`` (inner).
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence


class Word(tuple):
    """Immutable word over {0, 1}.

    Accepts any iterable of bits, or a string such as ``"011"``. Ordering and
    equality are those of the underlying tuple.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] | str = ()):
        if isinstance(letters, str):
            letters = [int(c) for c in letters]
        bits = tuple(int(b) for b in letters)
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"word letters must be 0 or 1, got {b}")
        return super().__new__(cls, bits)

    @property
    def weight(self) -> int:
        return len(self)

    @property
    def length(self) -> int:
        return sum(self)

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __getitem__(self, key):
        out = tuple.__getitem__(self, key)
        return Word(out) if isinstance(key, slice) else out

    def __str__(self):
        return "".join(map(str, self))

    def __repr__(self):
        return f"Word({str(self)!r})"

    @classmethod
    def parse(cls, s: str) -> "Word":
        s = s.strip()
        if s in ("", "()", "[]", "empty"):
            return cls()
        return cls(s.replace(",", "").replace("|", "").strip("[]()"))


EMPTY = Word()


def weight(w: Sequence[int]) -> int:
    """Number of letters."""
    return len(w)


def length(w: Sequence[int]) -> int:
    """Number of letters equal to 1."""
    return sum(1 for b in w if b == 1)


def is_admissible(w: Sequence[int]) -> bool:
    """True iff every position k with k = weight(w) (mod 2) carries a 1.

    Positions are 1-based, so the last letter is always constrained.
    """
    if len(w) == 0:
        raise ValueError("admissibility is defined for nonempty words")
    m = len(w)
    return all(w[k - 1] == 1 for k in range(1, m + 1) if (k - m) % 2 == 0)


def words_in_I(m: int) -> list[Word]:
    """All words of weight m ending in 1, in lexicographic order (empty for m = 0)."""
    if m < 0:
        raise ValueError("weight must be nonnegative")
    if m == 0:
        return []
    return [Word(p + (1,)) for p in itertools.product((0, 1), repeat=m - 1)]


@lru_cache(maxsize=None)
def _admissible(m: int) -> tuple[Word, ...]:
    free = [k for k in range(1, m + 1) if (k - m) % 2 != 0]
    out = []
    for bits in itertools.product((0, 1), repeat=len(free)):
        w = [1] * m
        for k, b in zip(free, bits):
            w[k - 1] = b
        out.append(Word(w))
    return tuple(sorted(out))


def enumerate_admissible(m: int) -> list[Word]:
    """Admissible words of weight m, sorted lexicographically."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return list(_admissible(m))


def deconcatenations(i: Sequence[int]) -> list[tuple[Word, Word]]:
    """All splits ``i = a b`` ordered by the weight of ``a``."""
    i = Word(i)
    return [(i[:k], i[k:]) for k in range(len(i) + 1)]


def substitute_ones(a: Sequence[int], eps: Sequence[int]) -> Word:
    """Replace the ones of ``a`` by the bits of ``eps``.

    ``eps[0]`` replaces the rightmost 1, ``eps[1]`` the next one to its left,
    and so on. Weight is preserved.
    """
    a = Word(a)
    eps = tuple(eps)
    if len(eps) != a.length:
        raise ValueError(f"need {a.length} substitution bits, got {len(eps)}")
    out = list(a)
    ones = [k for k, b in enumerate(a) if b == 1]
    for k, e in zip(reversed(ones), eps):
        if e not in (0, 1):
            raise ValueError("substitution bits must be 0 or 1")
        out[k] = e
    return Word(out)


def x_set(i: Sequence[int]) -> list[Word]:
    """Words a of weight m-1 that dominate the first m-1 letters of i.

    Position k of ``a`` is forced to 1 where ``i_k = 1`` and free otherwise.
    """
    i = Word(i)
    if len(i) == 0 or i[-1] != 1:
        raise ValueError("x_set needs a word ending in 1")
    head = i[:-1]
    free = [k for k, b in enumerate(head) if b == 0]
    out = []
    for bits in itertools.product((0, 1), repeat=len(free)):
        a = list(head)
        for k, b in zip(free, bits):
            a[k] = b
        out.append(Word(a))
    return sorted(out)


@lru_cache(maxsize=4096)
def _shuffle(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: Counter = Counter()
    for w, c in _shuffle(u[1:], v):
        acc[Word((u[0],)) + w] += c
    for w, c in _shuffle(u, v[1:]):
        acc[Word((v[0],)) + w] += c
    return tuple(sorted(acc.items()))


def shuffle(u: Sequence[int], v: Sequence[int]) -> Counter:
    """Shuffle product as a multiset ``{word: multiplicity}``."""
    return Counter(dict(_shuffle(Word(u), Word(v))))


def shuffle_power(u: Sequence[int], n: int) -> Counter:
    """The n-fold shuffle power of ``u`` (empty word for n = 0)."""
    acc = Counter({EMPTY: 1})
    for _ in range(n):
        nxt: Counter = Counter()
        for w, c in acc.items():
            for s, d in shuffle(w, u).items():
                nxt[s] += c * d
        acc = nxt
    return acc


def shuffle_count(u: Sequence[int], v: Sequence[int]) -> int:
    """Total multiplicity of the shuffle, i.e. binom(|u|+|v|, |u|)."""
    return comb(len(u) + len(v), len(u))
