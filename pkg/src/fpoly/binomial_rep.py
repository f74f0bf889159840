"""Real binomial representation f_{i-1} = C(x_i, i) with certified enclosures.

Every x_i is bracketed by a rational interval. Anything that only needs
ceil(x_i), or a comparison of x_i against a rational, is decided exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple

from .polynomials import IntPolynomial, as_poly

DEFAULT_TOL = Fraction(1, 10**9)
DEFAULT_REFINE_WIDTH = Fraction(1, 10**30)


def binom_real(x, k: int) -> Fraction:
    """x (x-1) ... (x-k+1) / k! for rational x."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    x = Fraction(x)
    num = Fraction(1)
    for j in range(k):
        num *= x - j
    return num / factorial(k)


def _ceil_solution(y: int, k: int) -> int:
    """min { m integer : C(m, k) >= y }, searched over m >= k."""
    lo, hi = k - 1, k  # C(k-1, k) = 0 < y
    while comb(hi, k) < y:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, k) >= y:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class Enclosure:
    """Rational bracket [lo, hi] around the unique x >= k-1 with C(x, k) = y."""

    y: int
    k: int
    lo: Fraction
    hi: Fraction
    ceil_x: int
    exact: bool

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refine(self, tol) -> "Enclosure":
        """Bisect until the width is at most ``tol``."""
        if self.exact:
            return self
        tol = Fraction(tol)
        lo, hi = self.lo, self.hi
        while hi - lo > tol:
            mid = (lo + hi) / 2
            v = binom_real(mid, self.k)
            if v == self.y:
                lo = hi = mid
                break
            if v < self.y:
                lo = mid
            else:
                hi = mid
        return replace(self, lo=lo, hi=hi)

    def compare_rational(self, q) -> int:
        """Sign of x - q, decided exactly (q >= k - 1 assumed outside the trivial case)."""
        q = Fraction(q)
        if q < self.k - 1:
            return 1
        v = binom_real(q, self.k)
        return (self.y > v) - (self.y < v)

    def decimal(self, digits: int = 9) -> str:
        """Midpoint and half-width, e.g. ``3.701562118 +- 4.7e-10``."""
        if self.exact:
            return str(self.ceil_x)
        mid = self.midpoint
        scaled = round(mid * 10**digits)
        sign = "-" if scaled < 0 else ""
        scaled = abs(scaled)
        whole, frac = divmod(scaled, 10**digits)
        half = float(self.width / 2)
        return f"{sign}{whole}.{frac:0{digits}d} +- {half:.1e}"


def solve_binrep(y: int, k: int, tol=DEFAULT_TOL) -> Enclosure:
    if y < 1:
        raise ValueError(f"binomial representation needs y >= 1, got {y}")
    if k < 1:
        raise ValueError(f"binomial representation needs k >= 1, got {k}")
    c = _ceil_solution(y, k)
    if comb(c, k) == y:
        return Enclosure(y, k, Fraction(c), Fraction(c), c, True)
    # C(c-1, k) < y < C(c, k) and c-1 >= k-1
    enc = Enclosure(y, k, Fraction(c - 1), Fraction(c), c, False)
    return enc.refine(tol)


@dataclass(frozen=True)
class RealBinRep:
    entries: Tuple[Enclosure, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Enclosure:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    @property
    def ceilings(self) -> Tuple[int, ...]:
        return tuple(e.ceil_x for e in self.entries)


def binrep(p, tol=DEFAULT_TOL) -> RealBinRep:
    """x_1, ..., x_d for 1 + sum f_{i-1} t^i with every f_{i-1} > 0."""
    # validate the raw sequence: a trailing zero would vanish inside IntPolynomial
    cs = tuple(p.coeffs) if isinstance(p, IntPolynomial) else tuple(int(c) for c in p)
    if not cs or cs[0] != 1:
        raise ValueError(f"binomial representation needs constant term 1: {cs}")
    for i, c in enumerate(cs[1:], start=1):
        if c <= 0:
            raise ValueError(f"coefficient of t^{i} must be positive, got {c}")
    return RealBinRep(tuple(solve_binrep(c, i, tol) for i, c in enumerate(cs[1:], start=1)))


def compare_x(a: Enclosure, b: Enclosure, width=DEFAULT_REFINE_WIDTH) -> Optional[int]:
    """Sign of x_a - x_b, or None if unresolved once both are narrower than ``width``."""
    if a.exact:
        return -b.compare_rational(a.lo)
    if b.exact:
        return a.compare_rational(b.lo)
    width = Fraction(width)
    while True:
        if a.lo > b.hi:
            return 1
        if a.hi < b.lo:
            return -1
        if a.width <= width and b.width <= width:
            return None
        a = a.refine(max(width, a.width / 2**32))
        b = b.refine(max(width, b.width / 2**32))
        if a.exact or b.exact:
            return compare_x(a, b, width)


def check_monotone(rep: RealBinRep, width=DEFAULT_REFINE_WIDTH) -> Optional[bool]:
    """x_1 >= x_2 >= ... >= x_d: True, False, or None when indeterminate."""
    undecided = False
    for a, b in zip(rep.entries, rep.entries[1:]):
        s = compare_x(a, b, width)
        if s is None:
            undecided = True
        elif s < 0:
            return False
    return None if undecided else True


def monotone_failures(rep: RealBinRep, width=DEFAULT_REFINE_WIDTH) -> List[Tuple[int, Optional[int]]]:
    """1-based indices i with x_i < x_{i+1} (sign -1) or unresolved (None)."""
    out = []
    for i, (a, b) in enumerate(zip(rep.entries, rep.entries[1:]), start=1):
        s = compare_x(a, b, width)
        if s is None or s < 0:
            out.append((i, s))
    return out


def ceiling_failures(p) -> List[Tuple[int, int, int]]:
    """Indices i (2..d) where x_{i-1} >= ceil(x_i) fails.

    Uses f_{i-2} >= C(ceil(x_i), i-1), valid since C(., i-1) increases past i-2.
    Entries are ``(i, f_{i-2}, C(ceil x_i, i-1))``.
    """
    cs = as_poly(p).coeffs
    rep = binrep(cs, tol=1)
    out = []
    for i in range(2, len(cs)):
        need = comb(rep[i - 1].ceil_x, i - 1)
        if cs[i - 1] < need:
            out.append((i, cs[i - 1], need))
    return out


def check_ceiling_condition(p) -> bool:
    return not ceiling_failures(p)


def x_values(rep: RealBinRep) -> Sequence[float]:
    """Float midpoints, for display only."""
    return [float(e.midpoint) for e in rep.entries]
