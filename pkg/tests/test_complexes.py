from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpoly.combinatorics import mu
from fpoly.complexes import (
    SimplicialComplex,
    compressed_realize,
    dilate_complex,
    f_vector,
    format_facets,
    from_facets,
    hadamard_complex,
    join,
    link,
    link_sum_decomposition,
    parse_facets,
    random_complex,
)
from fpoly.fvectors import check_kk, f_plus_tfprime_vector
from fpoly.polynomials import poly_dilate, poly_hadamard, poly_product

DATA = Path(__file__).parent / "data"

EDGE = from_facets([1, 2], [(1, 2)])
TRIANGLE = from_facets([1, 2, 3], [(1, 2, 3)])
GLUED = from_facets([1, 2, 3, 4], [(1, 2, 3), (2, 3, 4)])
POINT = from_facets([1], [(1,)])
EMPTY = from_facets([], [])


def brute_faces(ground, facets):
    faces = set()
    for r in range(len(ground) + 1):
        for s in combinations(ground, r):
            if any(set(s) <= set(f) for f in facets) or not s:
                faces.add(s)
    return faces


complexes = st.builds(
    random_complex,
    st.integers(0, 8),
    st.sampled_from([Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4)]),
    st.integers(0, 10**6),
)


class TestBasics:
    def test_glued_triangles(self):
        # 1 empty face + 4 vertices + 5 edges + 2 triangles
        assert len(GLUED) == 12
        assert f_vector(GLUED) == (1, 4, 5, 2)

    def test_empty(self):
        assert EMPTY.faces == frozenset({()})
        assert f_vector(EMPTY) == (1,)

    def test_full_triangle(self):
        assert f_vector(TRIANGLE) == (1, 3, 3, 1)

    def test_tetrahedron_boundary_minus_triangle(self):
        cx = from_facets([1, 2, 3, 4], [(1, 2, 3), (1, 2, 4), (1, 3, 4)])
        assert f_vector(cx) == (1, 4, 6, 3)

    def test_triangle_plus_isolated(self):
        cx = from_facets(range(1, 11), [(1, 2, 3)] + [(v,) for v in range(4, 11)])
        assert f_vector(cx) == (1, 10, 3, 1)

    def test_not_closed_rejected(self):
        with pytest.raises(ValueError):
            SimplicialComplex([1, 2], [(1, 2)])

    def test_unknown_label(self):
        with pytest.raises(ValueError):
            from_facets([1, 2], [(1, 3)])

    def test_parse_format(self):
        cx = parse_facets("1 2 3; 2 3 4")
        assert cx == GLUED
        assert format_facets(cx) == "1 2 3; 2 3 4"

    @settings(max_examples=40, deadline=None)
    @given(complexes)
    def test_closure_matches_brute_force(self, cx):
        assert cx.faces == brute_faces(cx.ground, cx.facets())
        assert cx.is_closed()
        assert check_kk(f_vector(cx))


class TestLink:
    def test_vertex_of_triangle(self):
        lk = link(TRIANGLE, (1,))
        assert f_vector(lk) == (1, 2, 1)
        assert lk.facets() == [(2, 3)]

    def test_empty_face(self):
        assert link(GLUED, ()) == GLUED

    def test_shared_edge(self):
        lk = link(GLUED, (2, 3))
        assert f_vector(lk) == (1, 2)
        assert set(lk.vertices) == {1, 4}

    def test_non_face(self):
        with pytest.raises(ValueError):
            link(GLUED, (1, 4))


class TestCompressed:
    def test_glued(self):
        cx = compressed_realize((1, 4, 5, 2))
        assert f_vector(cx) == (1, 4, 5, 2) and len(cx.vertices) == 4

    def test_simplex(self):
        assert compressed_realize((1, 3, 3, 1)) == TRIANGLE

    def test_isolated_vertices(self):
        cx = compressed_realize((1, 10, 3, 1))
        assert (1, 2, 3) in cx and len(cx.vertices) == 10

    def test_kk_failure(self):
        with pytest.raises(ValueError):
            compressed_realize((1, 1, 1))

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(0, 30), min_size=1, max_size=4))
    def test_roundtrip_when_kk(self, tail):
        v = (1,) + tuple(tail)
        if check_kk(v):
            got = f_vector(compressed_realize(v))
            want = list(v)
            while len(want) > 1 and want[-1] == 0:
                want.pop()
            assert got == tuple(want)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(1, 25), min_size=1, max_size=4))
    def test_shadow_witnesses_mu(self, tail):
        v = (1,) + tuple(tail)
        if not check_kk(v):
            return
        cx = compressed_realize(v)
        for k in range(2, len(v)):
            layer = [f for f in cx.faces if len(f) == k]
            shadow = {f[:j] + f[j + 1:] for f in layer for j in range(k)}
            assert len(shadow) == mu(v[k], k) <= v[k - 1]


class TestJoin:
    def test_two_edges(self):
        e2 = from_facets([3, 4], [(3, 4)])
        assert f_vector(join(EDGE, e2)) == (1, 4, 6, 4, 1)

    def test_identity(self):
        assert f_vector(join(GLUED, EMPTY)) == f_vector(GLUED)

    def test_points(self):
        assert f_vector(join(POINT, from_facets([2], [(2,)]))) == (1, 2, 1)

    def test_overlapping_labels_are_tagged(self):
        assert f_vector(join(EDGE, EDGE)) == (1, 4, 6, 4, 1)

    @settings(max_examples=30, deadline=None)
    @given(complexes, complexes)
    def test_matches_product(self, a, b):
        assert f_vector(join(a, b)) == poly_product(f_vector(a), f_vector(b)).coeffs


class TestHadamard:
    def test_edge_triangle(self):
        assert f_vector(hadamard_complex(EDGE, TRIANGLE)) == (1, 6, 3)

    def test_point(self):
        cx = hadamard_complex(GLUED, POINT)
        assert f_vector(cx) == (1, 4)

    def test_glued_squared(self):
        assert f_vector(hadamard_complex(GLUED, GLUED)) == (1, 16, 25, 4)

    @settings(max_examples=30, deadline=None)
    @given(complexes, complexes)
    def test_matches_coefficientwise(self, a, b):
        cx = hadamard_complex(a, b)
        assert cx.is_closed()
        assert f_vector(cx) == poly_hadamard(f_vector(a), f_vector(b)).coeffs


class TestDilate:
    def test_edge(self):
        cx = dilate_complex(EDGE, 2)
        assert f_vector(cx) == (1, 4, 4)

    def test_identity(self):
        assert f_vector(dilate_complex(GLUED, 1)) == (1, 4, 5, 2)

    def test_triangle(self):
        assert f_vector(dilate_complex(TRIANGLE, 2)) == (1, 6, 12, 8)

    def test_bad_factor(self):
        with pytest.raises(ValueError):
            dilate_complex(EDGE, 0)

    @settings(max_examples=30, deadline=None)
    @given(complexes, st.integers(1, 3))
    def test_matches_substitution(self, a, c):
        cx = dilate_complex(a, c)
        assert cx.is_closed()
        assert f_vector(cx) == poly_dilate(f_vector(a), c).coeffs


class TestLinkSum:
    def test_triangle(self):
        ls = link_sum_decomposition(TRIANGLE)
        assert ls.betas == ((0, 1, 2, 1),) * 3
        assert ls.total == (0, 3, 6, 3) and ls.certified == (1, 6, 9, 4) and ls.ok

    def test_edge(self):
        ls = link_sum_decomposition(EDGE)
        assert ls.betas == ((0, 1, 1),) * 2 and ls.certified == (1, 4, 3)

    def test_point(self):
        ls = link_sum_decomposition(POINT)
        assert ls.betas == ((0, 1),) and ls.certified == (1, 2)

    @settings(max_examples=40, deadline=None)
    @given(complexes)
    def test_certifies_ftf(self, cx):
        ls = link_sum_decomposition(cx)
        assert ls.ok and ls.certified == f_plus_tfprime_vector(f_vector(cx))


class TestRandom:
    def test_density_one(self):
        assert random_complex(3, 1, 7) == TRIANGLE

    def test_density_zero(self):
        cx = random_complex(5, 0, 7)
        assert f_vector(cx) == (1, 5)

    def test_golden(self):
        want = parse_facets((DATA / "random_complex_6_half_42.txt").read_text())
        got = random_complex(6, Fraction(1, 2), 42)
        assert got == want
        assert format_facets(got) == "2 3 5 6; 1 2 3 4 6; 1 2 4 5 6"

    def test_seeded(self):
        assert random_complex(9, Fraction(1, 3), 5) == random_complex(9, Fraction(1, 3), 5)

    @pytest.mark.parametrize("n,p", [(20, 1), (-1, 1), (3, 2), (3, -1)])
    def test_rejects(self, n, p):
        with pytest.raises(ValueError):
            random_complex(n, p, 0)
