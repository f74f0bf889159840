"""Exact binomial coefficients, binomial expansions (cascades), and the
Kruskal-Katona / Macaulay functions mu_i and kappa_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from math import comb
from typing import Iterator, List, Tuple

SHADOW_ORACLE_MAX_M = 10**5


def binom_int(n: int, k: int) -> int:
    """C(n, k) for integer n >= 0, k >= 0; zero when k > n."""
    if n < 0:
        raise ValueError(f"binom_int needs n >= 0, got n={n}")
    if k < 0:
        raise ValueError(f"binom_int needs k >= 0, got k={k}")
    return comb(n, k)


def _binom0(n: int, k: int) -> int:
    # cascade terms like C(a-1, k) may have a-1 < k; those vanish
    if k < 0 or n < k:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class Cascade:
    """The i-th binomial expansion m = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j).

    ``terms`` holds the pairs ``(a_k, k)`` with k decreasing by one per term.
    """

    m: int
    i: int
    terms: Tuple[Tuple[int, int], ...]

    @property
    def tops(self) -> Tuple[int, ...]:
        return tuple(a for a, _ in self.terms)

    def value(self) -> int:
        return sum(comb(a, k) for a, k in self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)


def _largest_top(rem: int, k: int) -> int:
    """Largest a with C(a, k) <= rem (rem >= 1)."""
    lo = k  # C(k, k) = 1 <= rem
    hi = k + 1
    while comb(hi, k) <= rem:
        lo = hi
        hi = 2 * hi
    # invariant: C(lo, k) <= rem < C(hi, k)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, k) <= rem:
            lo = mid
        else:
            hi = mid
    return lo


def cascade(m: int, i: int) -> Cascade:
    """Greedy i-th binomial expansion of a positive integer m."""
    if m < 1:
        raise ValueError(f"cascade needs m >= 1, got m={m}")
    if i < 1:
        raise ValueError(f"cascade needs i >= 1, got i={i}")
    terms: List[Tuple[int, int]] = []
    rem, k = m, i
    while rem > 0:
        a = _largest_top(rem, k)
        terms.append((a, k))
        rem -= comb(a, k)
        k -= 1
    return Cascade(m, i, tuple(terms))


def mu(m: int, i: int) -> int:
    """Kruskal-Katona shadow function; mu_i(0) = 0."""
    if i < 1:
        raise ValueError(f"mu needs i >= 1, got i={i}")
    if m < 0:
        raise ValueError(f"mu needs m >= 0, got m={m}")
    if m == 0:
        return 0
    return sum(comb(a, k - 1) for a, k in cascade(m, i).terms)


def kappa(m: int, i: int) -> int:
    """Macaulay function; kappa_i(0) = 0."""
    if i < 1:
        raise ValueError(f"kappa needs i >= 1, got i={i}")
    if m < 0:
        raise ValueError(f"kappa needs m >= 0, got m={m}")
    if m == 0:
        return 0
    return sum(_binom0(a - 1, k - 1) for a, k in cascade(m, i).terms)


def colex_subsets(k: int, n: int | None = None) -> Iterator[Tuple[int, ...]]:
    """k-subsets of {1, 2, ...} in colex order, as sorted tuples.

    With ``n`` given only subsets of {1..n} are produced; otherwise the
    stream is infinite (for k >= 1).
    """
    if k == 0:
        yield ()
        return
    tops = count(k) if n is None else range(k, n + 1)
    for top in tops:
        for rest in colex_subsets(k - 1, top - 1):
            yield rest + (top,)


def shadow_size_profile(m_max: int, k: int) -> List[int]:
    """Shadow sizes of the colex-initial segments of length 1..m_max.

    Entry ``m - 1`` is the number of (k-1)-subsets covered by the first m
    k-subsets in colex order. Brute force; meant as a test oracle.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if m_max > SHADOW_ORACLE_MAX_M:
        raise ValueError(
            f"shadow oracle refuses m={m_max} > {SHADOW_ORACLE_MAX_M}; it is a test oracle"
        )
    shadow = set()
    sizes = []
    gen = colex_subsets(k)
    for _ in range(m_max):
        s = next(gen)
        for drop in range(k):
            shadow.add(s[:drop] + s[drop + 1:])
        sizes.append(len(shadow))
    return sizes


def shadow_size_oracle(m: int, k: int) -> int:
    """Size of the shadow of the first m k-subsets of N in colex order."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return shadow_size_profile(m, k)[-1]
