"""Finite simplicial complexes and f-vector preserving constructions."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, FrozenSet, Hashable, Iterable, List, Sequence, Tuple

from .combinatorics import colex_subsets
from .fvectors import FVector, as_vector, check_admissible_chain, check_kk, f_plus_tfprime_vector

Face = Tuple[Hashable, ...]

RANDOM_COMPLEX_MAX_VERTICES = 14


class SimplicialComplex:
    """Downward-closed family of faces over an ordered ground set.

    Faces are tuples sorted by ground-set position; the empty face is
    always present. Instances are immutable.
    """

    __slots__ = ("ground", "faces", "_pos")

    def __init__(self, ground: Sequence[Hashable], faces: Iterable[Iterable[Hashable]], check: bool = True):
        self.ground: Tuple[Hashable, ...] = tuple(ground)
        self._pos: Dict[Hashable, int] = {v: i for i, v in enumerate(self.ground)}
        if len(self._pos) != len(self.ground):
            raise ValueError("ground set has repeated labels")
        fs = {self._sorted(face) for face in faces}
        fs.add(())
        self.faces: FrozenSet[Face] = frozenset(fs)
        if check and not self.is_closed():
            raise ValueError("family of faces is not downward closed")

    def _sorted(self, face: Iterable[Hashable]) -> Face:
        try:
            return tuple(sorted(set(face), key=self._pos.__getitem__))
        except KeyError as exc:
            raise ValueError(f"label {exc.args[0]!r} is not in the ground set") from None

    def is_closed(self) -> bool:
        for face in self.faces:
            for j in range(len(face)):
                if face[:j] + face[j + 1:] not in self.faces:
                    return False
        return True

    def __contains__(self, face) -> bool:
        try:
            return self._sorted(face) in self.faces
        except ValueError:
            return False

    def __len__(self) -> int:
        return len(self.faces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.faces == other.faces

    def __hash__(self) -> int:
        return hash(self.faces)

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    @property
    def vertices(self) -> Tuple[Hashable, ...]:
        return tuple(v for v in self.ground if (v,) in self.faces)

    def facets(self) -> List[Face]:
        by_size = sorted(self.faces, key=len, reverse=True)
        out: List[Face] = []
        for face in by_size:
            s = set(face)
            if not any(s < set(g) for g in out):
                out.append(face)
        return sorted(out, key=lambda f: (len(f), [self._pos[v] for v in f]))

    def f_vector(self) -> FVector:
        return f_vector(self)

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector()}, ground={len(self.ground)})"


def from_facets(ground: Sequence[Hashable], facets: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
    """Downward closure of ``facets``, empty face included."""
    ground = tuple(ground)
    gset = set(ground)
    faces = {()}
    for facet in facets:
        facet = tuple(facet)
        missing = [v for v in facet if v not in gset]
        if missing:
            raise ValueError(f"facet {facet} uses labels outside the ground set: {missing}")
        for r in range(1, len(facet) + 1):
            faces.update(combinations(facet, r))
    return SimplicialComplex(ground, faces, check=False)


def f_vector(cx: SimplicialComplex) -> FVector:
    """(f_{-1}, f_0, ..., f_dim)."""
    counts = [0] * (cx.dimension + 2)
    for face in cx.faces:
        counts[len(face)] += 1
    return tuple(counts)


def link(cx: SimplicialComplex, face: Iterable[Hashable]) -> SimplicialComplex:
    F = cx._sorted(face)
    if F not in cx.faces:
        raise ValueError(f"{F} is not a face")
    fset = set(F)
    faces = [
        tuple(v for v in G if v not in fset)
        for G in cx.faces
        if fset.issubset(G)
    ]
    ground = [v for v in cx.ground if v not in fset]
    return SimplicialComplex(ground, faces, check=False)


def compressed_realize(f) -> SimplicialComplex:
    """Union of colex-initial segments: the first f_i (i+1)-subsets of {1, 2, ...}."""
    v = as_vector(f)
    report = check_kk(v)
    if not report:
        raise ValueError(f"{v} fails Kruskal-Katona at {report.failures}")
    faces = {()}
    for size in range(1, len(v)):
        gen = colex_subsets(size)
        faces.update(next(gen) for _ in range(v[size]))
    n = max((max(fc) for fc in faces if fc), default=0)
    cx = SimplicialComplex(range(1, n + 1), faces, check=False)
    if not cx.is_closed():
        raise AssertionError(f"colex segments for {v} are not downward closed")
    got = f_vector(cx)
    if _trim(got) != _trim(v):
        raise AssertionError(f"compressed complex has f-vector {got}, wanted {v}")
    return cx


def _trim(v: Sequence[int]) -> Tuple[int, ...]:
    v = list(v)
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    return tuple(v)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Faces sigma u tau; labels are tagged (0, v) / (1, w) when the grounds overlap."""
    if set(a.ground) & set(b.ground):
        ta = {v: (0, v) for v in a.ground}
        tb = {w: (1, w) for w in b.ground}
    else:
        ta = {v: v for v in a.ground}
        tb = {w: w for w in b.ground}
    ground = [ta[v] for v in a.ground] + [tb[w] for w in b.ground]
    faces = [
        tuple(ta[v] for v in s) + tuple(tb[w] for w in t)
        for s in a.faces
        for t in b.faces
    ]
    return SimplicialComplex(ground, faces, check=False)


def hadamard_complex(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Ground a.ground x b.ground; faces pair equal-size faces in increasing order."""
    ground = [(v, w) for v in a.ground for w in b.ground]
    by_size: Dict[int, List[Face]] = {}
    for t in b.faces:
        by_size.setdefault(len(t), []).append(t)
    faces = [tuple(zip(s, t)) for s in a.faces for t in by_size.get(len(s), ())]
    return SimplicialComplex(ground, faces, check=False)


def dilate_complex(cx: SimplicialComplex, c: int) -> SimplicialComplex:
    """Ground ground x [c]; sigma is a face iff the projection is injective on
    sigma and lands on a face."""
    if c < 1:
        raise ValueError(f"dilation factor must be >= 1, got {c}")
    ground = [(v, j) for v in cx.ground for j in range(1, c + 1)]
    layers = range(1, c + 1)
    faces = [
        tuple(zip(face, js))
        for face in cx.faces
        for js in product(layers, repeat=len(face))
    ]
    return SimplicialComplex(ground, faces, check=False)


@dataclass(frozen=True)
class LinkSum:
    betas: Tuple[FVector, ...]
    total: FVector  # sum of the betas
    certified: FVector  # f + total, certified by the admissible chain
    ok: bool

    def __bool__(self) -> bool:
        return self.ok


def link_sum_decomposition(cx: SimplicialComplex) -> LinkSum:
    """One admissible vector (0, 1, f-vector of lk(v) without its leading 1) per vertex."""
    f = f_vector(cx)
    n = len(f)
    betas = []
    for v in cx.vertices:
        lk = f_vector(link(cx, (v,)))
        beta = (0,) + lk
        betas.append(beta + (0,) * (n - len(beta)))
    total = tuple(sum(col) for col in zip(*betas)) if betas else (0,) * n
    expected = (0,) + tuple(j * f[j] for j in range(1, n))
    chain = check_admissible_chain(f, betas)
    ok = bool(chain) and total == expected and chain.total == f_plus_tfprime_vector(f)
    return LinkSum(tuple(betas), total, chain.total, ok)


def random_complex(n: int, density, seed: int, max_vertices: int = RANDOM_COMPLEX_MAX_VERTICES) -> SimplicialComplex:
    """Closure of n random facets on [n] plus every vertex.

    Each facet keeps each vertex independently with probability ``density``,
    so density 1 gives the full simplex and density 0 gives n isolated points.
    """
    if n < 0 or n > max_vertices:
        raise ValueError(f"vertex count must be in [0, {max_vertices}], got {n}")
    p = Fraction(density)
    if not 0 <= p <= 1:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    ground = list(range(1, n + 1))
    facets = [(v,) for v in ground]
    for _ in range(n):
        # exact Bernoulli(p) through integer draws keeps this reproducible
        facet = tuple(v for v in ground if rng.randrange(p.denominator) < p.numerator)
        if facet:
            facets.append(facet)
    return from_facets(ground, facets)


def parse_facets(text: str) -> SimplicialComplex:
    """``"1 2 3; 2 3 4"``; integer-looking labels become ints, the ground is their sorted union."""
    facets = []
    for chunk in text.split(";"):
        labels = chunk.split()
        if not labels:
            continue
        facets.append(tuple(_label(tok) for tok in labels))
    ground = sorted({v for f in facets for v in f}, key=lambda v: (isinstance(v, str), v))
    return from_facets(ground, facets)


def _label(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def format_facets(cx: SimplicialComplex) -> str:
    return "; ".join(" ".join(_fmt_label(v) for v in f) for f in cx.facets() if f)


def _fmt_label(v) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(_fmt_label(x) for x in v) + ")"
    return str(v)
