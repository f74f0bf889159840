"""Triangular arrays T_{d,k} driven by a three-term recurrence with
linear coefficients a^{(i)}_{d,k} = r_i d + s_i k + t_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Tuple

from .combinatorics import mu
from .fvectors import check_kk

Row = Tuple[int, ...]


@dataclass(frozen=True)
class TriangleSpec:
    name: str
    r: Tuple[int, int, int]
    s: Tuple[int, int, int]
    t: Tuple[int, int, int]

    def a(self, i: int, d: int, k: int) -> int:
        """Coefficient of term i (1, 2 or 3)."""
        return self.r[i - 1] * d + self.s[i - 1] * k + self.t[i - 1]

    @classmethod
    def from_ints(cls, name: str, ints) -> "TriangleSpec":
        ints = [int(x) for x in ints]
        if len(ints) != 9:
            raise ValueError(f"triangle spec {name!r} needs 9 integers, got {len(ints)}")
        r1, s1, t1, r2, s2, t2, r3, s3, t3 = ints
        return cls(name, (r1, r2, r3), (s1, s2, s3), (t1, t2, t3))

    def to_line(self) -> str:
        nums = []
        for i in range(3):
            nums += [self.r[i], self.s[i], self.t[i]]
        return " ".join(str(x) for x in nums) + f" {self.name}"


EULERIAN = TriangleSpec("eulerian", r=(0, 1, 0), s=(1, -1, 0), t=(1, 0, 0))
STIRLING = TriangleSpec("stirling", r=(0, 0, 0), s=(1, 0, 0), t=(1, 1, 0))
DERANGEMENT = TriangleSpec("derangement", r=(0, 1, 1), s=(1, -1, 0), t=(1, 0, 0))

BUILTIN: Dict[str, TriangleSpec] = {sp.name: sp for sp in (EULERIAN, STIRLING, DERANGEMENT)}


def parse_spec_file(text: str) -> List[TriangleSpec]:
    """One spec per line: ``r1 s1 t1 r2 s2 t2 r3 s3 t3 name``; ``#`` starts a comment."""
    specs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 10:
            raise ValueError(f"line {lineno}: expected 9 integers and a name, got {raw!r}")
        try:
            specs.append(TriangleSpec.from_ints(parts[9], parts[:9]))
        except ValueError:
            bad = next(p for p in parts[:9] if not p.lstrip("-").isdigit())
            raise ValueError(f"line {lineno}: not an integer: {bad!r}") from None
    return specs


def validate_spec(spec: TriangleSpec, d_max: int = 12) -> List[str]:
    """Violations of the coefficient conditions; an empty list means valid.

    Non-negativity on {d >= 2, 0 <= k <= d-1} is decided exactly: the region
    is a cone with corners (2,0), (2,1) and rays (1,0), (1,1), so the linear
    form is non-negative iff it is at both corners and grows along both rays.
    It is also checked numerically up to ``d_max``.
    """
    out = []
    if spec.r[0] != 0:
        out.append(f"r1 must be 0, got {spec.r[0]}")
    if spec.t[0] != 1:
        out.append(f"t1 must be 1, got {spec.t[0]}")
    for i in range(3):
        if spec.s[i] > spec.t[i]:
            out.append(f"s{i + 1} = {spec.s[i]} exceeds t{i + 1} = {spec.t[i]}")
    for i in (1, 2, 3):
        corners = spec.a(i, 2, 0) >= 0 and spec.a(i, 2, 1) >= 0
        rays = spec.r[i - 1] >= 0 and spec.r[i - 1] + spec.s[i - 1] >= 0
        if not (corners and rays):
            out.append(f"a{i} takes negative values on d >= 2, 0 <= k <= d-1")
            continue
        for d in range(2, d_max + 1):
            bad = [k for k in range(d) if spec.a(i, d, k) < 0]
            if bad:
                out.append(f"a{i}({d},{bad[0]}) < 0")
                break
    return out


def rows(spec: TriangleSpec, D: int, check: bool = True) -> List[Row]:
    """Rows T_1, ..., T_D, each as (T_{d,0}, ..., T_{d,d-1})."""
    if check:
        problems = validate_spec(spec, max(D, 2))
        if problems:
            raise ValueError(f"invalid triangle spec {spec.name!r}: {'; '.join(problems)}")
    if D < 1:
        return []
    table: List[Row] = [(), (1,)]  # row 0 is identically zero

    def T(d: int, k: int) -> int:
        if d < 0 or k < 0 or k > d - 1:
            return 0
        return table[d][k]

    for d in range(2, D + 1):
        table.append(tuple(
            spec.a(1, d, k) * T(d - 1, k)
            + spec.a(2, d, k) * T(d - 1, k - 1)
            + spec.a(3, d, k) * T(d - 2, k - 1)
            for k in range(d)
        ))
    return table[1:]


def _entry(rows_: List[Row], d: int, k: int) -> int:
    if d < 1 or k < 0 or k > d - 1:
        return 0
    return rows_[d - 1][k]


def row_vector(row: Row) -> Tuple[int, ...]:
    """The row as an f-vector, trailing zeros dropped."""
    v = list(row)
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    return tuple(v)


@dataclass(frozen=True)
class RowCheck:
    d: int
    row: Row
    kk: bool
    direct: bool  # mu_k(T_{d,k}) <= T_{d,k-1} for 1 <= k <= d-1
    claims: Tuple[bool, bool, bool]
    claim_failures: Tuple[Tuple[int, int, int, int], ...]  # (term, k, lhs, rhs)

    @property
    def ok(self) -> bool:
        return self.kk and self.direct and all(self.claims)


def claim_failures(spec: TriangleSpec, rows_: List[Row], d: int) -> List[Tuple[int, int, int, int]]:
    """Per-term inequalities mu_k(a^i_{d,k} T') <= a^i_{d,k-1} T'' for 1 <= k <= d-1.

    Entries are ``(term, k, lhs, rhs)`` for each failing inequality.
    """
    prev = {1: (1, 0), 2: (1, 1), 3: (2, 1)}  # (row offset, column offset) per term
    out = []
    for k in range(1, d):
        for i in (1, 2, 3):
            dr, dc = prev[i]
            lhs = mu(spec.a(i, d, k) * _entry(rows_, d - dr, k - dc), k)
            rhs = spec.a(i, d, k - 1) * _entry(rows_, d - dr, k - 1 - dc)
            if lhs > rhs:
                out.append((i, k, lhs, rhs))
    return out


def check_rows_kk(spec: TriangleSpec, D: int) -> List[RowCheck]:
    rs = rows(spec, D)
    out = []
    for d, row in enumerate(rs, start=1):
        kk = bool(check_kk(row_vector(row)))
        direct = all(mu(row[k], k) <= row[k - 1] for k in range(1, d))
        fails = claim_failures(spec, rs, d) if d >= 3 else []
        claims = tuple(not any(f[0] == i for f in fails) for i in (1, 2, 3))
        out.append(RowCheck(d, row, kk, direct, claims, tuple(fails)))
    return out


# -- brute-force oracles ---------------------------------------------------------

def descent_counts(d: int) -> Row:
    """Permutations of [d] by number of descents."""
    counts = [0] * d
    for p in permutations(range(d)):
        counts[sum(p[j] > p[j + 1] for j in range(d - 1))] += 1
    return tuple(counts)


def _set_partitions_by_blocks(d: int) -> List[int]:
    counts = [0] * (d + 1)

    def grow(pos: int, nblocks: int) -> None:
        # restricted growth strings
        if pos == d:
            counts[nblocks] += 1
            return
        for b in range(nblocks + 1):
            grow(pos + 1, max(nblocks, b + 1))

    if d == 0:
        counts[0] = 1
    else:
        grow(1, 1)
    return counts


def partition_counts(d: int) -> Row:
    """Set partitions of [d] with k+1 blocks, k = 0..d-1."""
    counts = _set_partitions_by_blocks(d)
    return tuple(counts[k + 1] for k in range(d))


def derangement_exceedance_counts(n: int) -> Row:
    """Derangements of [n] by number of exceedances, index = exceedances."""
    counts = [0] * n
    for p in permutations(range(n)):
        if any(p[j] == j for j in range(n)):
            continue
        counts[sum(p[j] > j for j in range(n))] += 1
    return tuple(counts)


def derangement_oracle_row(d: int) -> Row:
    """Row d of the derangement triangle from derangements of [d+1], shifted by one exceedance."""
    counts = derangement_exceedance_counts(d + 1)
    return tuple(counts[k + 1] for k in range(d))


ORACLES = {
    "eulerian": descent_counts,
    "stirling": partition_counts,
    "derangement": derangement_oracle_row,
}
