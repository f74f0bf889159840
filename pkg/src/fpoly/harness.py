"""Corpus generation and counterexample campaigns over real-rooted polynomials."""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .binomial_rep import ceiling_failures, binrep, monotone_failures
from .decomposition import check_question_second, conjecture_failures, lex_failures
from .fvectors import check_kk, check_macaulay
from .polynomials import IntPolynomial, format_int_list, is_real_rooted, product_of_linear

GENERATORS = ("grid-sturm", "root-product", "both")

DEFAULT_CAPS = {
    "max_degree": 8,
    "grid_candidates": 2_000_000,
    "root_product_candidates": 1_000_000,
}

THEOREM_CAMPAIGNS = ("thm-monotone", "thm-ceiling-implies-kk", "cor-hvector")
OPEN_CAMPAIGNS = ("question-bs", "conj-second", "que-second")
CAMPAIGNS = OPEN_CAMPAIGNS + THEOREM_CAMPAIGNS


@dataclass(frozen=True)
class CorpusSpec:
    max_degree: int = 4
    max_coeff: int = 20
    generator: str = "grid-sturm"
    seed: int = 0  # only permutes work scheduling; results never depend on it

    def __post_init__(self):
        if self.max_degree < 1 or self.max_coeff < 1:
            raise ValueError("corpus bounds must be positive")
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}; choose from {', '.join(GENERATORS)}")


def _check_caps(spec: CorpusSpec, caps: Optional[dict]) -> None:
    caps = {**DEFAULT_CAPS, **(caps or {})}
    if spec.max_degree > caps["max_degree"]:
        raise ValueError(f"max_degree {spec.max_degree} exceeds cap {caps['max_degree']}")
    if spec.generator in ("grid-sturm", "both"):
        n = sum(spec.max_coeff**d for d in range(1, spec.max_degree + 1))
        if n > caps["grid_candidates"]:
            raise ValueError(f"grid corpus has {n} candidates, cap is {caps['grid_candidates']}")
    if spec.generator in ("root-product", "both"):
        from math import comb

        n = sum(comb(spec.max_coeff + d - 1, d) for d in range(1, spec.max_degree + 1))
        if n > caps["root_product_candidates"]:
            raise ValueError(f"root-product corpus has {n} candidates, cap is {caps['root_product_candidates']}")


def _grid_slice(args: Tuple[int, int, int]) -> List[Tuple[int, ...]]:
    d, first, max_coeff = args
    out = []
    for rest in product(range(1, max_coeff + 1), repeat=d - 1):
        cs = (1, first) + rest
        if is_real_rooted(cs):
            out.append(cs)
    return out


def _map(fn, tasks: Sequence, jobs: int, seed: int) -> List:
    """Apply fn to every task; the result order always matches ``tasks``."""
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    order = list(range(len(tasks)))
    random.Random(seed).shuffle(order)
    results: List = [None] * len(tasks)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for idx, res in zip(order, pool.map(fn, [tasks[i] for i in order])):
            results[idx] = res
    return results


def _grid(spec: CorpusSpec, jobs: int) -> List[Tuple[int, ...]]:
    tasks = [(d, first, spec.max_coeff) for d in range(1, spec.max_degree + 1)
             for first in range(1, spec.max_coeff + 1)]
    out: List[Tuple[int, ...]] = []
    for chunk in _map(_grid_slice, tasks, jobs, spec.seed):
        out.extend(chunk)
    return out


def _root_products(spec: CorpusSpec) -> List[Tuple[int, ...]]:
    seen = set()
    out = []
    for d in range(1, spec.max_degree + 1):
        for roots in combinations_with_replacement(range(1, spec.max_coeff + 1), d):
            cs = product_of_linear(roots).coeffs
            if cs not in seen:
                seen.add(cs)
                out.append(cs)
    return out


@lru_cache(maxsize=8)
def _corpus_cached(spec: CorpusSpec, jobs: int) -> Tuple[Tuple[int, ...], ...]:
    polys: List[Tuple[int, ...]] = []
    if spec.generator in ("grid-sturm", "both"):
        polys.extend(_grid(spec, jobs))
    if spec.generator in ("root-product", "both"):
        polys.extend(_root_products(spec))
    return tuple(sorted(set(polys), key=lambda cs: (len(cs), cs)))


def generate_corpus(spec: CorpusSpec, caps: Optional[dict] = None, jobs: int = 1) -> List[IntPolynomial]:
    """Real-rooted polynomials 1 + f_0 t + ... with positive integer coefficients.

    Sorted by degree, then coefficients; identical for every ``jobs`` value.
    """
    _check_caps(spec, caps)
    return [IntPolynomial(cs) for cs in _corpus_cached(spec, jobs)]


# -- campaigns -----------------------------------------------------------------------

@dataclass(frozen=True)
class Finding:
    campaign: str
    input: Tuple[int, ...]
    predicate: str
    detail: str
    hard: bool = False

    def to_json(self) -> str:
        return json.dumps({
            "campaign": self.campaign,
            "input": format_int_list(self.input),
            "predicate": self.predicate,
            "detail": self.detail,
            "hard": self.hard,
        })


def _fmt_failures(items, fmt) -> str:
    return "; ".join(fmt(*x) for x in items)


def _kk_detail(report) -> str:
    return _fmt_failures(report.failures, lambda i, l, r: f"i={i}: {l} > {r}")


def _question_bs(cs):
    rep = check_kk(cs)
    if not rep:
        yield "kruskal-katona", "mu_{i+1}(f_i) > f_{i-1} at " + _kk_detail(rep), False


def _conj_second(cs):
    fails = conjecture_failures(cs)
    if fails:
        yield "h_i <= g_i", _fmt_failures(fails, lambda i, h, g: f"i={i}: h={h} > g={g}"), False
    lex = lex_failures(cs)
    if [i for i, _, _ in fails] != lex:
        yield "lex-equivalence", f"h>g at {[i for i, _, _ in fails]}, lex at {lex}", True
    if not fails:
        rep = check_kk(cs)
        if not rep:
            yield "implication conj-second => question-bs", _kk_detail(rep), True


def _que_second(cs):
    g_ok, h_ok = check_question_second(cs)
    if not g_ok:
        yield "g real-rooted", "g(t) has non-real zeros", False
    if not h_ok:
        yield "h real-rooted", "h(t) has non-real zeros", False


def _thm_monotone(cs):
    fails = monotone_failures(binrep(cs, tol=1))
    if fails:
        txt = _fmt_failures(fails, lambda i, s: f"x_{i} vs x_{i + 1}: " + ("<" if s is not None else "indeterminate"))
        yield "x_1 >= ... >= x_d", txt, True


def _thm_ceiling(cs):
    if not ceiling_failures(cs):
        rep = check_kk(cs)
        if not rep:
            yield "ceiling condition => kruskal-katona", _kk_detail(rep), True


def _cor_hvector(cs):
    rep = check_macaulay(cs)
    if not rep:
        yield "macaulay", "kappa_{i+1}(f_i) > f_{i-1} at " + _kk_detail(rep), True


PREDICATES = {
    "question-bs": _question_bs,
    "conj-second": _conj_second,
    "que-second": _que_second,
    "thm-monotone": _thm_monotone,
    "thm-ceiling-implies-kk": _thm_ceiling,
    "cor-hvector": _cor_hvector,
}


def evaluate(name: str, coeffs: Sequence[int]) -> List[Finding]:
    if name not in PREDICATES:
        raise ValueError(f"unknown campaign {name!r}; choose from {', '.join(CAMPAIGNS)}")
    cs = tuple(coeffs)
    return [Finding(name, cs, pred, detail, hard) for pred, detail, hard in PREDICATES[name](cs)]


def _evaluate_chunk(args) -> List[Finding]:
    name, chunk = args
    out = []
    for cs in chunk:
        out.extend(evaluate(name, cs))
    return out


@dataclass
class CampaignReport:
    campaign: str
    tested: int
    findings: List[Finding]
    wall_time: float
    corpus: Optional[CorpusSpec] = None
    tested_by_degree: Dict[int, int] = field(default_factory=dict)

    @property
    def hard_failures(self) -> List[Finding]:
        return [f for f in self.findings if f.hard]

    def summary(self) -> dict:
        out = {"campaign": self.campaign}
        if self.corpus is not None:
            out.update(asdict(self.corpus))
        out.update({
            "tested": self.tested,
            "tested_by_degree": {str(k): v for k, v in sorted(self.tested_by_degree.items())},
            "findings": len(self.findings),
            "hard_failures": len(self.hard_failures),
            "wall_time": round(self.wall_time, 3),
        })
        return out

    def to_lines(self) -> List[str]:
        return [json.dumps(self.summary())] + [f.to_json() for f in self.findings]

    def render(self) -> str:
        return "\n".join(self.to_lines()) + "\n"


def run_campaign(
    name: str,
    corpus: Iterable,
    jobs: int = 1,
    chunk_size: int = 2000,
    seed: int = 0,
    corpus_spec: Optional[CorpusSpec] = None,
) -> CampaignReport:
    if name not in PREDICATES:
        raise ValueError(f"unknown campaign {name!r}; choose from {', '.join(CAMPAIGNS)}")
    start = time.perf_counter()
    items = [tuple(p) for p in corpus]
    by_degree: Dict[int, int] = {}
    for cs in items:
        by_degree[len(cs) - 1] = by_degree.get(len(cs) - 1, 0) + 1
    tasks = [(name, items[i:i + chunk_size]) for i in range(0, len(items), chunk_size)]
    findings: List[Finding] = []
    for chunk in _map(_evaluate_chunk, tasks, jobs, seed):
        findings.extend(chunk)
    findings.sort(key=lambda f: (f.input, f.predicate, f.detail))
    return CampaignReport(name, len(items), findings, time.perf_counter() - start, corpus_spec, by_degree)


def load_config(path: str) -> dict:
    """JSON config with optional ``caps`` and ``corpus`` objects."""
    with open(path) as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise ValueError(f"{path}: config must be a JSON object")
    unknown = set(cfg) - {"caps", "corpus"}
    if unknown:
        raise ValueError(f"{path}: unknown config keys {sorted(unknown)}")
    return cfg
