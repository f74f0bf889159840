"""Recursive decomposition f(t) = g(t) + t h(t) obtained by lowering cascade tops."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Tuple

from .combinatorics import Cascade, cascade
from .polynomials import IntPolynomial, is_real_rooted


def _binom0(n: int, k: int) -> int:
    if k < 0 or n < k:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class Decomposition:
    f: IntPolynomial
    g: IntPolynomial
    h: IntPolynomial
    cascades: Tuple[Cascade, ...]  # cascades[i-1] is the i-th expansion of f_{i-1}

    def g_coeff(self, i: int) -> int:
        return self.g[i]

    def h_coeff(self, i: int) -> int:
        return self.h[i]

    def reconstruct(self) -> IntPolynomial:
        return self.g + self.h.shift(1)


def _validated(p) -> Tuple[int, ...]:
    cs = tuple(p.coeffs) if isinstance(p, IntPolynomial) else tuple(int(c) for c in p)
    if not cs or cs[0] != 1:
        raise ValueError(f"recursive decomposition needs constant term 1: {cs}")
    if len(cs) < 2:
        raise ValueError("recursive decomposition needs degree >= 1")
    for i, c in enumerate(cs[1:], start=1):
        if c <= 0:
            raise ValueError(f"coefficient of t^{i} must be positive, got {c}")
    return cs


def recursive_decompose(p) -> Decomposition:
    cs = _validated(p)
    d = len(cs) - 1
    g = [1] + [0] * d
    h = [0] * d
    cascades = []
    for i in range(1, d + 1):
        cas = cascade(cs[i], i)
        cascades.append(cas)
        g[i] = sum(_binom0(a - 1, k) for a, k in cas.terms)
        h[i - 1] = sum(_binom0(a - 1, k - 1) for a, k in cas.terms)
    return Decomposition(IntPolynomial(cs), IntPolynomial(g), IntPolynomial(h), tuple(cascades))


def conjecture_failures(p) -> List[Tuple[int, int, int]]:
    """Indices 1 <= i <= d-1 with h_i > g_i, as ``(i, h_i, g_i)``."""
    dec = recursive_decompose(p)
    d = len(dec.f) - 1
    return [(i, dec.h[i], dec.g[i]) for i in range(1, d) if dec.h[i] > dec.g[i]]


def check_conjecture_second(p) -> bool:
    return not conjecture_failures(p)


def check_question_second(p) -> Tuple[bool, bool]:
    """(g real-rooted, h real-rooted)."""
    dec = recursive_decompose(p)
    return is_real_rooted(dec.g), is_real_rooted(dec.h)


def lex_failures(p) -> List[int]:
    """Indices 1 <= i <= d-1 where the (i+1)-cascade tops of f_i do not
    precede-or-equal the i-cascade tops of f_{i-1} lexicographically.

    A second route to the same indices as :func:`conjecture_failures`.
    """
    cs = _validated(p)
    d = len(cs) - 1
    out = []
    for i in range(1, d):
        a = cascade(cs[i], i).tops
        b = cascade(cs[i + 1], i + 1).tops
        if not b <= a:
            out.append(i)
    return out
