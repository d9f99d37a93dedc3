"""Permutations in one-line notation and their reduced expressions.

A reduced word ``(i_k, ..., i_1)`` is stored exactly as printed: the
rightmost letter acts first.  Reading letters right to left and swapping
the entries in positions ``i, i+1`` of the identity produces ``w``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _perms
from typing import Iterable, Iterator, Sequence

from .foundations import VIRTUAL, Composition

Permutation = tuple[int, ...]
ReducedWord = tuple[int, ...]


def parse_permutation(text: str | Iterable[int]) -> Permutation:
    """Accept ``"42153"``, ``"4,2,1,5,3"`` or any iterable of ints."""
    if isinstance(text, str):
        s = text.strip()
        if any(sep in s for sep in ", "):
            w = tuple(int(t) for t in s.replace(",", " ").split())
        else:
            w = tuple(int(ch) for ch in s)
    else:
        w = tuple(int(v) for v in text)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def format_permutation(w: Sequence[int]) -> str:
    if len(w) < 10:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def trim(w: Sequence[int]) -> Permutation:
    """Drop trailing fixed points ``n`` with ``w(n) = n``."""
    w = list(w)
    while w and w[-1] == len(w):
        w.pop()
    return tuple(w)


def inv(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def word_to_permutation(word: Sequence[int], n: int | None = None) -> Permutation:
    if n is None:
        n = max(word, default=0) + 1
    p = list(range(1, n + 1))
    for letter in reversed(word):
        if not 1 <= letter < n:
            raise ValueError(f"letter {letter} out of range for S_{n}")
        p[letter - 1], p[letter] = p[letter], p[letter - 1]
    return tuple(p)


def is_reduced(word: Sequence[int]) -> bool:
    return inv(word_to_permutation(word)) == len(word)


@lru_cache(maxsize=None)
def _reduced(w: Permutation) -> frozenset:
    if all(w[i] < w[i + 1] for i in range(len(w) - 1)):
        return frozenset({()})
    out = set()
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            v = list(w)
            v[i - 1], v[i] = v[i], v[i - 1]
            for rest in _reduced(tuple(v)):
                out.add((i,) + rest)
    return frozenset(out)


def reduced_words(w: Sequence[int]) -> list[ReducedWord]:
    """All reduced words of ``w``, sorted lexicographically."""
    return sorted(_reduced(tuple(w)))


def run_decomposition(rho: Sequence[int]) -> list[tuple[int, ...]]:
    """Maximal strictly increasing runs, leftmost run first."""
    runs: list[list[int]] = []
    for letter in rho:
        if runs and runs[-1][-1] < letter:
            runs[-1].append(letter)
        else:
            runs.append([letter])
    return [tuple(r) for r in runs]


def descent_composition(rho: Sequence[int]) -> Composition:
    """Run lengths listed from the rightmost run to the leftmost."""
    return tuple(len(r) for r in reversed(run_decomposition(rho)))


def ltr_descent_composition(rho: Sequence[int]) -> Composition:
    """Run lengths listed left to right."""
    return tuple(len(r) for r in run_decomposition(rho))


def weak_descent_rows(rho: Sequence[int]) -> list[int]:
    """Rows ``r_1, ..., r_k`` attached to the runs, rightmost run first."""
    runs = list(reversed(run_decomposition(rho)))
    rows = [0] * len(runs)
    for i in range(len(runs) - 1, -1, -1):
        first = runs[i][0]
        rows[i] = first if i == len(runs) - 1 else min(first, rows[i + 1] - 1)
    return rows


def weak_descent_word(rho: Sequence[int], length: int) -> Composition | None:
    """Weak descent composition of ``rho`` padded to ``length``; ``VIRTUAL``
    when some attached row is not positive."""
    if not rho:
        return (0,) * length
    runs = list(reversed(run_decomposition(rho)))
    rows = weak_descent_rows(rho)
    if rows[0] <= 0:
        return VIRTUAL
    if rows[-1] > length:
        raise ValueError(f"length {length} is too small for {tuple(rho)}")
    out = [0] * length
    for run, r in zip(runs, rows):
        out[r - 1] = len(run)
    return tuple(out)


def grassmannian(lam: Sequence[int], k: int) -> Permutation:
    """The permutation with unique descent at ``k`` and shape ``lam``."""
    lam = tuple(lam)
    if len(lam) > k:
        raise ValueError(f"k={k} is smaller than the length of {lam}")
    padded = lam + (0,) * (k - len(lam))
    head = [i + padded[k - i] for i in range(1, k + 1)]
    n = head[-1] if head else 0
    n = max(n, k)
    rest = [v for v in range(1, n + 1) if v not in set(head)]
    return tuple(head + rest)


def shift(w: Sequence[int], m: int) -> Permutation:
    """``1^m x w``: fix ``1..m`` and add ``m`` to every value of ``w``."""
    return tuple(range(1, m + 1)) + tuple(v + m for v in w)


def shift_word(rho: Sequence[int], m: int) -> ReducedWord:
    return tuple(letter + m for letter in rho)


def virtual_count(w: Sequence[int]) -> int:
    n = max(len(w) - 1, 1)
    return sum(1 for rho in reduced_words(w) if weak_descent_word(rho, n) is VIRTUAL)


def stabilization_shift(w: Sequence[int]) -> int:
    """Smallest ``m`` for which ``R(1^m x w)`` has no virtual element."""
    w = tuple(w)
    # each run can sit at most one row lower than the run above it
    for m in range(inv(w) + 1):
        if virtual_count(shift(w, m)) == 0:
            return m
    raise AssertionError(f"no stabilizing shift found for {w}")


def permutations(n: int) -> Iterator[Permutation]:
    return iter(_perms(range(1, n + 1)))
