"""Command line interface.

Exit codes: 0 when every check passes (or a report has no findings),
1 when a check fails or a campaign reports findings, 2 on malformed input.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import List, Optional

from . import binomial_rep as br
from . import complexes as cx
from . import fvectors as fv
from . import harness
from . import polynomials as pl
from . import triangles as tr
from .decomposition import check_question_second, conjecture_failures, recursive_decompose


class UsageError(Exception):
    pass


def _vec(text: str):
    try:
        return pl.parse_int_list(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _poly(text: str) -> pl.IntPolynomial:
    return pl.IntPolynomial(_vec(text))


def _bool(b) -> str:
    return "true" if b else "false"


def _pressure(args, fn, label: str) -> int:
    report = fn(_vec(args.vector))
    print("PASS" if report else "FAIL")
    for i, lhs, rhs in report.checked:
        rel = "<=" if lhs <= rhs else ">"
        print(f"  i={i}: {label}_{i + 1}(f_{i})={lhs} {rel} f_{i - 1}={rhs}")
    return 0 if report else 1


def cmd_check_kk(args) -> int:
    return _pressure(args, fv.check_kk, "mu")


def cmd_check_macaulay(args) -> int:
    return _pressure(args, fv.check_macaulay, "kappa")


def cmd_sturm(args) -> int:
    p = _poly(args.poly)
    if p.is_zero():
        raise UsageError("zero polynomial")
    ok = pl.is_real_rooted(p)
    sqf = pl.squarefree_part(p)
    print(_bool(ok))
    print(f"  distinct real roots: {pl.count_distinct_real_roots(p)} of squarefree degree {sqf.degree}")
    return 0 if ok else 1


def cmd_ulc(args) -> int:
    p = _poly(args.poly)
    fails = pl.ulc_violations(p)
    print(_bool(not fails))
    for i, lhs, rhs in fails:
        print(
            f"  i={i}: a_{i}^2={p[i] ** 2} vs a_{i - 1}*a_{i + 1}={p[i - 1] * p[i + 1]}; "
            f"normalized {lhs} < {rhs}"
        )
    return 0 if not fails else 1


def cmd_binrep(args) -> int:
    p = _vec(args.poly)
    try:
        tol = Fraction(args.tol)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad tolerance: {args.tol!r}") from None
    if tol <= 0:
        raise UsageError(f"tolerance must be positive: {args.tol!r}")
    rep = br.binrep(p, tol)
    for i, e in enumerate(rep, start=1):
        tag = "exact" if e.exact else "enclosure"
        print(f"x_{i} = {e.decimal()}  ceil={e.ceil_x}  ({tag}, f_{i - 1}={e.y})")
    mono = br.check_monotone(rep)
    print(f"monotone: {'indeterminate' if mono is None else _bool(mono)}")
    fails = br.ceiling_failures(p)
    print(f"ceiling condition: {_bool(not fails)}")
    for i, have, need in fails:
        print(f"  i={i}: f_{i - 2}={have} < C({rep[i - 1].ceil_x},{i - 1})={need}")
    if args.figure:
        from .plotting import plot_binrep

        print(f"figure: {plot_binrep(p, rep, args.figure)}")
    return 0


def cmd_decompose(args) -> int:
    p = _vec(args.poly)
    dec = recursive_decompose(p)
    fails = conjecture_failures(p)
    g_ok, h_ok = check_question_second(p)
    print(f"g: {dec.g}")
    print(f"h: {dec.h}")
    print(f"h_i <= g_i: {_bool(not fails)}")
    for i, h, g in fails:
        print(f"  i={i}: h={h} > g={g}")
    print(f"g real-rooted: {_bool(g_ok)}")
    print(f"h real-rooted: {_bool(h_ok)}")
    return 0 if not fails and g_ok and h_ok else 1


def _load_triangle(arg: str) -> List[tr.TriangleSpec]:
    if arg in tr.BUILTIN:
        return [tr.BUILTIN[arg]]
    if os.path.exists(arg):
        with open(arg) as fh:
            try:
                return tr.parse_spec_file(fh.read())
            except ValueError as exc:
                raise UsageError(f"{arg}: {exc}") from None
    raise UsageError(f"unknown triangle {arg!r}: not a built-in ({', '.join(tr.BUILTIN)}) or a file")


def cmd_triangle(args) -> int:
    if args.rows < 1:
        raise UsageError(f"--rows must be >= 1, got {args.rows}")
    status = 0
    for spec in _load_triangle(args.spec):
        problems = tr.validate_spec(spec, max(args.rows, 2))
        if problems:
            print(f"{spec.name}: invalid spec: {'; '.join(problems)}")
            status = 1
            continue
        rs = tr.rows(spec, args.rows)
        print(f"# {spec.name}")
        if not args.check_kk:
            for d, row in enumerate(rs, start=1):
                print(f"d={d}: {pl.format_int_list(row)}")
        else:
            for rc in tr.check_rows_kk(spec, args.rows):
                claims = " ".join(f"claim{i + 1}={_bool(c)}" for i, c in enumerate(rc.claims))
                print(f"d={rc.d}: {pl.format_int_list(rc.row)}  kk={_bool(rc.kk)} {claims}")
                for term, k, lhs, rhs in rc.claim_failures:
                    print(f"    claim{term} k={k}: mu_{k}(...)={lhs} > {rhs}")
                if not rc.ok:
                    status = 1
        if args.figure:
            from .plotting import plot_triangle

            path = args.figure
            if len(_load_triangle(args.spec)) > 1:
                root, ext = os.path.splitext(path)
                path = f"{root}-{spec.name}{ext or '.png'}"
            print(f"figure: {plot_triangle(spec.name, rs, path)}")
    return status


def _complex(text: str) -> cx.SimplicialComplex:
    try:
        return cx.parse_facets(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def cmd_construct(args) -> int:
    kind, rest = args.kind, args.args
    need = {"join": 2, "hadamard": 2, "dilate": 2, "ftf": 1, "veronese": 2}[kind]
    if len(rest) != need:
        raise UsageError(f"construct {kind} takes {need} argument(s), got {len(rest)}")
    if kind == "veronese":
        f = _vec(rest[0])
        k = _int(rest[1], "k")
        if k < 1:
            raise UsageError(f"k must be >= 1, got {k}")
        base = fv.check_kk(f)
        out = fv.veronese_subsequence(f, k)
        ok = fv.check_kk(out)
        print(f"f-vector: {pl.format_int_list(out)}")
        print(f"input kruskal-katona: {_bool(base)}")
        print(f"kruskal-katona: {_bool(ok)}")
        return 0 if ok else 1
    a = _complex(rest[0])
    fa = cx.f_vector(a)
    if kind == "ftf":
        ls = cx.link_sum_decomposition(a)
        print(f"f-vector: {pl.format_int_list(ls.certified)}")
        print(f"link sum: {pl.format_int_list(ls.total)}")
        print(f"matches f+tf': {_bool(ls.certified == fv.f_plus_tfprime_vector(fa))}")
        print(f"admissible chain: {_bool(ls.ok)}")
        return 0 if ls.ok else 1
    if kind == "dilate":
        c = _int(rest[1], "c")
        if c < 1:
            raise UsageError(f"c must be >= 1, got {c}")
        out = cx.dilate_complex(a, c)
        expected = pl.poly_dilate(fa, c)
        label = "f(ct)"
    else:
        b = _complex(rest[1])
        fb = cx.f_vector(b)
        if kind == "join":
            out = cx.join(a, b)
            expected = pl.poly_product(fa, fb)
            label = "product"
        else:
            out = cx.hadamard_complex(a, b)
            expected = pl.poly_hadamard(fa, fb)
            label = "hadamard product"
    got = cx.f_vector(out)
    ok = pl.IntPolynomial(got) == expected
    print(f"f-vector: {pl.format_int_list(got)}")
    print(f"matches {label}: {_bool(ok)}")
    if args.facets:
        print(f"facets: {cx.format_facets(out)}")
    return 0 if ok else 1


def cmd_realize(args) -> int:
    f = _vec(args.vector)
    report = fv.check_kk(f)
    if not report:
        print("FAIL: not an f-vector")
        for i, lhs, rhs in report.failures:
            print(f"  i={i}: mu_{i + 1}(f_{i})={lhs} > f_{i - 1}={rhs}")
        return 1
    c = cx.compressed_realize(f)
    print(f"f-vector: {pl.format_int_list(cx.f_vector(c))}")
    print(f"facets: {cx.format_facets(c)}")
    return 0


def cmd_campaign(args) -> int:
    cfg = harness.load_config(args.config) if args.config else {}
    corpus_cfg = dict(cfg.get("corpus", {}))
    for key in ("max_degree", "max_coeff", "generator", "seed"):
        val = getattr(args, key)
        if val is not None:
            corpus_cfg[key] = val
    try:
        spec = harness.CorpusSpec(**corpus_cfg)
        corpus = harness.generate_corpus(spec, cfg.get("caps"), jobs=args.jobs)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    report = harness.run_campaign(args.name, corpus, jobs=args.jobs, seed=spec.seed, corpus_spec=spec)
    text = report.render()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(text.splitlines()[0])
    else:
        sys.stdout.write(text)
    if args.figure:
        from .plotting import plot_campaign

        print(f"figure: {plot_campaign(report, args.figure)}", file=sys.stderr)
    return 1 if report.findings else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fpoly", description="f-vectors of real-rooted polynomials")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-kk", help="Kruskal-Katona test of a vector like 1,4,5,2")
    p.add_argument("vector")
    p.set_defaults(func=cmd_check_kk)

    p = sub.add_parser("check-macaulay", help="Macaulay test of a vector")
    p.add_argument("vector")
    p.set_defaults(func=cmd_check_macaulay)

    p = sub.add_parser("sturm", help="exact real-rootedness of a polynomial 1,4,5,2")
    p.add_argument("poly")
    p.set_defaults(func=cmd_sturm)

    p = sub.add_parser("ulc", help="ultra-log-concavity with witnesses")
    p.add_argument("poly")
    p.set_defaults(func=cmd_ulc)

    p = sub.add_parser("binrep", help="binomial representation x_1..x_d")
    p.add_argument("poly")
    p.add_argument("--tol", default="1/1000000000", help="enclosure width (rational, default 1/10^9)")
    p.add_argument("--figure", metavar="PATH")
    p.set_defaults(func=cmd_binrep)

    p = sub.add_parser("decompose", help="recursive decomposition f = g + t h")
    p.add_argument("poly")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("triangle", help="rows of a built-in or user triangle")
    p.add_argument("spec", metavar="NAME|SPECFILE")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--check-kk", action="store_true")
    p.add_argument("--figure", metavar="PATH")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("construct", help="complex constructions; complexes as '1 2 3; 2 3 4'")
    p.add_argument("kind", choices=["join", "hadamard", "dilate", "ftf", "veronese"])
    p.add_argument("args", nargs="*")
    p.add_argument("--facets", action="store_true", help="print facets of the result")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("realize", help="compressed complex with a given f-vector")
    p.add_argument("vector")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("campaign", help="run a campaign over a generated corpus")
    p.add_argument("name", choices=harness.CAMPAIGNS)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--max-coeff", type=int)
    p.add_argument("--generator", choices=harness.GENERATORS)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--config", metavar="FILE", help="JSON with 'caps' and 'corpus' objects")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--figure", metavar="PATH")
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
