"""Predicates and transforms on f-vectors (1, f_0, ..., f_{d-1}).

Vectors are plain integer tuples. Position ``j`` holds f_{j-1}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, List, Optional, Sequence, Tuple

from .combinatorics import kappa, mu
from .polynomials import parse_int_list

FVector = Tuple[int, ...]


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a per-index numerical condition.

    ``failures`` lists ``(i, lhs, rhs)`` for every index with lhs > rhs.
    """

    vector: FVector
    checked: Tuple[Tuple[int, int, int], ...]
    failures: Tuple[Tuple[int, int, int], ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def as_vector(f) -> FVector:
    if isinstance(f, str):
        return parse_int_list(f)
    return tuple(int(x) for x in f)


def _validate(f) -> FVector:
    v = as_vector(f)
    if not v or v[0] != 1:
        raise ValueError(f"vector must start with 1: {v}")
    if any(x < 0 for x in v):
        raise ValueError(f"vector entries must be non-negative: {v}")
    return v


def _pressure_check(f, fn: Callable[[int, int], int]) -> ConditionReport:
    v = _validate(f)
    checked = []
    # position i+1 holds f_i, position i holds f_{i-1}
    for i in range(len(v) - 1):
        lhs = fn(v[i + 1], i + 1)
        checked.append((i, lhs, v[i]))
    return ConditionReport(v, tuple(checked), tuple(c for c in checked if c[1] > c[2]))


def check_kk(f) -> ConditionReport:
    """mu_{i+1}(f_i) <= f_{i-1} for 0 <= i <= d-1 (f_{-1} = 1)."""
    return _pressure_check(f, mu)


def check_macaulay(f) -> ConditionReport:
    """kappa_{i+1}(f_i) <= f_{i-1} for 0 <= i <= d-1."""
    return _pressure_check(f, kappa)


def f_to_h(f) -> Tuple[int, ...]:
    """h-vector via (1-t)^D f(t/(1-t)) with D = len(f) - 1."""
    v = as_vector(f)
    D = len(v) - 1
    return tuple(
        sum((-1) ** (k - j) * comb(D - j, k - j) * v[j] for j in range(k + 1))
        for k in range(D + 1)
    )


def h_to_f(h) -> Tuple[int, ...]:
    """Inverse of :func:`f_to_h`."""
    v = as_vector(h)
    D = len(v) - 1
    return tuple(sum(comb(D - j, k - j) * v[j] for j in range(k + 1)) for k in range(D + 1))


def veronese_subsequence(f, k: int) -> FVector:
    """Positions 0, k, 2k, ... of the vector."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    v = list(as_vector(f)[::k])
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    return tuple(v)


def f_plus_tfprime_vector(f) -> FVector:
    """(1, 2 f_0, 3 f_1, ..., (d+1) f_{d-1})."""
    return tuple((j + 1) * x for j, x in enumerate(as_vector(f)))


def cor_fvector_failures(f) -> List[Tuple[int, int, int]]:
    """Indices 1 <= i <= d-1 with mu_{i+1}((i+2) f_i) > (i+1) f_{i-1}."""
    v = _validate(f)
    out = []
    for i in range(1, len(v) - 1):
        lhs = mu((i + 2) * v[i + 1], i + 1)
        rhs = (i + 1) * v[i]
        if lhs > rhs:
            out.append((i, lhs, rhs))
    return out


def check_cor_fvector(f) -> bool:
    return not cor_fvector_failures(f)


# -- admissible vectors ----------------------------------------------------------

def _pad(v: Sequence[int], n: int) -> Tuple[int, ...]:
    return tuple(v) + (0,) * (n - len(v))


def is_basic_admissible(alpha, f) -> bool:
    """(1, a_0, ..., a_{d-2}) must be an f-vector and f_i >= a_i for every i.

    ``alpha = (0, 1, a_0, ...)`` may be shorter than ``f``; missing entries are 0.
    """
    a = as_vector(alpha)
    v = as_vector(f)
    if len(a) > len(v):
        raise ValueError(f"admissible vector {a} is longer than f-vector {v}")
    if len(a) < 2 or a[0] != 0 or a[1] != 1:
        raise ValueError(f"admissible vector must start with (0, 1): {a}")
    if not check_kk((1,) + a[2:]):
        return False
    # alpha_i sits at position i+2, f_i at position i+1
    return all(v[i + 1] >= a[i + 2] for i in range(len(a) - 2))


@dataclass(frozen=True)
class ChainResult:
    ok: bool
    total: FVector  # f + sum of the accepted betas
    failed_at: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_admissible_chain(f, betas) -> ChainResult:
    """Add the betas one at a time, each basic admissible for the running sum.

    A successful chain certifies ``total`` as an f-vector (Murai's admissible-vector lemma).
    """
    v = as_vector(f)
    if not check_kk(v):
        return ChainResult(False, v, None, "base vector fails Kruskal-Katona")
    cur = v
    for idx, beta in enumerate(betas):
        b = as_vector(beta)
        try:
            ok = is_basic_admissible(b, cur)
        except ValueError as exc:
            return ChainResult(False, cur, idx, str(exc))
        if not ok:
            return ChainResult(False, cur, idx, f"{b} is not basic admissible for {cur}")
        b = _pad(b, len(cur))
        cur = tuple(x + y for x, y in zip(cur, b))
    return ChainResult(True, cur)
