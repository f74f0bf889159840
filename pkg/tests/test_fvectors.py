from __future__ import annotations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fpoly.fvectors import (
    check_admissible_chain,
    check_cor_fvector,
    check_kk,
    check_macaulay,
    cor_fvector_failures,
    f_plus_tfprime_vector,
    f_to_h,
    h_to_f,
    is_basic_admissible,
    veronese_subsequence,
)

T = sympy.Symbol("t")

vectors = st.lists(st.integers(0, 60), min_size=1, max_size=6).map(lambda xs: (1,) + tuple(xs))


def h_by_substitution(v):
    D = len(v) - 1
    f = sum(c * T**j for j, c in enumerate(v))
    expr = sympy.expand(sympy.cancel((1 - T) ** D * f.subs(T, T / (1 - T))))
    p = sympy.Poly(expr, T)
    return tuple(int(p.coeff_monomial(T**k)) for k in range(D + 1))


class TestKK:
    @pytest.mark.parametrize("f,want", [
        ((1, 4, 5, 2), True),
        ((1, 10, 3, 1), True),
        ((1, 1, 1), False),
        ((1, 4, 6, 3), True),
    ])
    def test_examples(self, f, want):
        assert bool(check_kk(f)) is want

    def test_failure_report(self):
        assert check_kk((1, 1, 1)).failures == ((1, 2, 1),)

    def test_accepts_text(self):
        assert check_kk("1,4,5,2").ok

    @pytest.mark.parametrize("bad", [(2, 1), (1, -1, 0), ()])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            check_kk(bad)


class TestMacaulay:
    @pytest.mark.parametrize("f,want", [
        ((1, 4, 5, 2), True),
        ((1, 1, 1), True),
        ((1, 2, 4), False),
    ])
    def test_examples(self, f, want):
        assert bool(check_macaulay(f)) is want

    @given(vectors)
    def test_kk_implies_macaulay(self, v):
        if check_kk(v):
            assert check_macaulay(v)


class TestTransforms:
    @pytest.mark.parametrize("f,h", [
        ((1, 3, 3, 1), (1, 0, 0, 0)),
        ((1, 4, 5, 2), (1, 1, 0, 0)),
        ((1, 6, 12, 8), (1, 3, 3, 1)),
    ])
    def test_f_to_h(self, f, h):
        assert f_to_h(f) == h
        assert h_by_substitution(f) == h

    @given(vectors)
    def test_f_to_h_matches_substitution(self, v):
        assert f_to_h(v) == h_by_substitution(v)

    @given(vectors)
    def test_roundtrip(self, v):
        assert h_to_f(f_to_h(v)) == v

    @pytest.mark.parametrize("f,k,want", [
        ((1, 4, 6, 4, 1), 2, (1, 6, 1)),
        ((1, 4, 5, 2), 1, (1, 4, 5, 2)),
        ((1, 6, 12, 8), 3, (1, 8)),
    ])
    def test_veronese(self, f, k, want):
        assert veronese_subsequence(f, k) == want

    def test_veronese_bad_k(self):
        with pytest.raises(ValueError):
            veronese_subsequence((1, 2), 0)

    @pytest.mark.parametrize("f,want", [
        ((1, 3, 3, 1), (1, 6, 9, 4)),
        ((1, 2), (1, 4)),
        ((1, 4, 5, 2), (1, 8, 15, 8)),
    ])
    def test_ftf(self, f, want):
        assert f_plus_tfprime_vector(f) == want

    @pytest.mark.parametrize("f", [(1, 3, 3, 1), (1, 2, 1), (1, 10, 3, 1)])
    def test_cor_fvector(self, f):
        assert check_cor_fvector(f) is True

    def test_cor_fvector_numbers(self):
        from fpoly.combinatorics import mu
        assert mu(9, 2) == 5 and mu(4, 3) == 6
        assert cor_fvector_failures((1, 3, 3, 1)) == []

    @given(vectors)
    def test_cor_fvector_is_kk_of_ftf(self, v):
        # the corollary's inequalities are the KK inequalities of f + t f'
        if check_kk(v):
            assert check_cor_fvector(v) and check_kk(f_plus_tfprime_vector(v))


class TestAdmissible:
    @pytest.mark.parametrize("alpha,want", [
        ((0, 1, 2), True),
        ((0, 1, 5), False),
        ((0, 1, 1, 1), False),
    ])
    def test_basic(self, alpha, want):
        assert is_basic_admissible(alpha, (1, 4, 5, 2)) is want

    def test_basic_shape(self):
        with pytest.raises(ValueError):
            is_basic_admissible((0, 1, 1, 1, 1), (1, 2, 1))
        with pytest.raises(ValueError):
            is_basic_admissible((1, 1), (1, 2, 1))

    def test_chain_edge(self):
        res = check_admissible_chain((1, 2, 1), [(0, 1, 1), (0, 1, 1)])
        assert res.ok and res.total == (1, 4, 3)

    def test_chain_triangle(self):
        res = check_admissible_chain((1, 3, 3, 1), [(0, 1, 2, 1)] * 3)
        assert res.ok and res.total == (1, 6, 9, 4)

    def test_chain_shape_guard(self):
        res = check_admissible_chain((1, 1), [(0, 1), (0, 1, 1)])
        assert not res.ok and res.failed_at == 1

    def test_chain_base_must_be_fvector(self):
        assert not check_admissible_chain((1, 1, 1), [])
