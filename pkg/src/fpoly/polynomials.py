"""Integer polynomials with exact real-rootedness and ultra-log-concavity tests.

Coefficients are stored in ascending order, ``coeffs[i]`` multiplying ``t**i``.
"""
from __future__ import annotations

from math import comb, gcd
from typing import Iterable, List, Optional, Sequence, Tuple


class IntPolynomial:
    """Polynomial over the integers, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[int, ...] = tuple(cs)

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        return cls(parse_int_list(text))

    @property
    def degree(self) -> int:
        # zero polynomial -> -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self.coeffs == IntPolynomial(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: "IntPolynomial") -> bool:
        return self.coeffs < other.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_product(self, other)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __str__(self) -> str:
        return format_int_list(self.coeffs) if self.coeffs else "0"

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


def parse_int_list(text: str) -> Tuple[int, ...]:
    """Parse ``"1,4,5,2"``; the error names the offending token."""
    tokens = [tok.strip() for tok in text.split(",")]
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise ValueError(f"not an integer: {tok!r} in {text!r}") from None
    return tuple(out)


def format_int_list(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)


def as_poly(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, str):
        return IntPolynomial.parse(p)
    return IntPolynomial(p)


# -- exact root counting ----------------------------------------------------

def _primitive(cs: List[int]) -> List[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return cs
    g = 0
    for c in cs:
        g = gcd(g, c)
    return [c // g for c in cs]


def _prem(a: List[int], b: List[int]) -> List[int]:
    """Pseudo-remainder lc(b)**(deg a - deg b + 1) * a mod b over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j, bc in enumerate(b):
            r[shift + j] -= lr * bc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        r = [c * lb**e for c in r]
    return r


def _exact_div(a: List[int], b: List[int]) -> List[int]:
    """Divide a by b over Q, expecting an exact quotient; returns the primitive part."""
    from fractions import Fraction

    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        coef = r[shift + len(b) - 1] / lb
        q[shift] = coef
        if coef:
            for j, bc in enumerate(b):
                r[shift + j] -= coef * bc
    if any(r):
        raise ArithmeticError("division was not exact")
    den = 1
    for c in q:
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive([int(c * den) for c in q])


def _gcd_poly(a: List[int], b: List[int]) -> List[int]:
    a, b = _primitive(list(a)), _primitive(list(b))
    while b:
        a, b = b, _primitive(_prem(a, b))
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def squarefree_part(p) -> IntPolynomial:
    """p / gcd(p, p'), made primitive with positive leading coefficient."""
    p = as_poly(p)
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    a = list(p.coeffs)
    if len(a) == 1:
        return IntPolynomial([1])
    g = _gcd_poly(a, list(p.derivative().coeffs))
    q = _exact_div(a, g) if len(g) > 1 else _primitive(a)
    if q[-1] < 0:
        q = [-c for c in q]
    return IntPolynomial(q)


def sturm_chain(p) -> List[List[int]]:
    """Sturm sequence of p with each entry scaled by a positive constant.

    Scaling by positive constants keeps every sign pattern intact.
    """
    a = list(as_poly(p).coeffs)
    da = list(IntPolynomial(a).derivative().coeffs)
    if not da:
        return [a]
    chain = [a, da]
    while len(chain[-1]) > 1:
        prev, cur = chain[-2], chain[-1]
        r = _prem(prev, cur)
        # lc(cur)^e * prev = q*cur + r, so -rem(prev, cur) has the sign of -r
        # when the multiplier is positive, otherwise of r.
        e = len(prev) - len(cur) + 1
        if cur[-1] > 0 or e % 2 == 0:
            r = [-c for c in r]
        r = _primitive(r)
        if not r:
            break
        chain.append(r)
    return chain


def _sign_changes(signs: Iterable[int]) -> int:
    changes = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            changes += 1
        last = s
    return changes


def _sturm_count(sqf: IntPolynomial) -> int:
    chain = sturm_chain(sqf)
    at_pos = [1 if q[-1] > 0 else -1 for q in chain]
    at_neg = [(1 if q[-1] > 0 else -1) * (-1) ** (len(q) - 1) for q in chain]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def count_distinct_real_roots(p) -> int:
    """Distinct real roots of p via a Sturm chain on its squarefree part."""
    return _sturm_count(squarefree_part(p))


def is_real_rooted(p) -> bool:
    """True iff every complex root of p is real (multiplicities allowed)."""
    p = as_poly(p)
    if p.is_zero():
        raise ValueError("is_real_rooted: zero polynomial")
    sqf = squarefree_part(p)
    if sqf.degree <= 1:
        return True
    return _sturm_count(sqf) == sqf.degree


# -- log-concavity -----------------------------------------------------------

def ulc_violations(p) -> List[Tuple[int, int, int]]:
    """Indices i where ultra-log-concavity fails.

    Each entry is ``(i, lhs, rhs)`` with the cross-multiplied integers
    ``lhs = a_i^2 C(d,i-1) C(d,i+1)`` and ``rhs = a_{i-1} a_{i+1} C(d,i)^2``.
    """
    p = as_poly(p)
    if any(c < 0 for c in p.coeffs):
        raise ValueError(f"ultra-log-concavity needs non-negative coefficients: {p}")
    d = p.degree
    if d < 1:
        raise ValueError("ultra-log-concavity needs degree >= 1")
    out = []
    for i in range(1, d):
        lhs = p[i] ** 2 * comb(d, i - 1) * comb(d, i + 1)
        rhs = p[i - 1] * p[i + 1] * comb(d, i) ** 2
        if lhs < rhs:
            out.append((i, lhs, rhs))
    return out


def is_ultra_log_concave(p) -> bool:
    return not ulc_violations(p)


def lc_violations(p) -> List[Tuple[int, int, int]]:
    """Ordinary log-concavity failures ``(i, a_i^2, a_{i-1} a_{i+1})``."""
    p = as_poly(p)
    return [
        (i, p[i] ** 2, p[i - 1] * p[i + 1])
        for i in range(1, p.degree)
        if p[i] ** 2 < p[i - 1] * p[i + 1]
    ]


# -- coefficient constructions -------------------------------------------------

def poly_product(p, q) -> IntPolynomial:
    p, q = as_poly(p), as_poly(q)
    if p.is_zero() or q.is_zero():
        return IntPolynomial([])
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return IntPolynomial(out)


def poly_hadamard(p, q) -> IntPolynomial:
    p, q = as_poly(p), as_poly(q)
    return IntPolynomial(a * b for a, b in zip(p.coeffs, q.coeffs))


def poly_dilate(p, c: int) -> IntPolynomial:
    """f(ct)."""
    if c < 1:
        raise ValueError(f"dilation factor must be >= 1, got {c}")
    p = as_poly(p)
    return IntPolynomial(a * c**i for i, a in enumerate(p.coeffs))


def poly_add_tderiv(p) -> IntPolynomial:
    """f(t) + t f'(t)."""
    p = as_poly(p)
    return IntPolynomial((i + 1) * a for i, a in enumerate(p.coeffs))


def product_of_linear(roots: Sequence[int]) -> IntPolynomial:
    """prod (1 + r t)."""
    out = IntPolynomial([1])
    for r in roots:
        out = poly_product(out, IntPolynomial([1, r]))
    return out


def first_ulc_witness(p) -> Optional[Tuple[int, int, int]]:
    v = ulc_violations(p)
    return v[0] if v else None
