from functools import reduce
from itertools import combinations
from math import gcd, prod

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dowker_complexes.Homology import (
    HomologyProfile,
    IntegerMatrix,
    boundary_matrices,
    homology,
    rank,
    same_homology,
    smith_normal_form)
from dowker_complexes.Poset import poset_dowker_complex
from dowker_complexes.SimplicialComplex import (
    SimplicialComplex,
    Universe,
    boundary_complex,
    complex_from_facets,
    full_complex)


@st.composite
def matrices(draw, max_size=6, bound=9):
    rows = draw(st.integers(1, max_size))
    cols = draw(st.integers(1, max_size))
    entries = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=cols, max_size=cols),
                            min_size=rows, max_size=rows))
    return IntegerMatrix.from_rows(entries)


def minors_gcd(matrix, k):
    M = sympy.Matrix(matrix.tolist())
    return reduce(gcd, (abs(int(M.extract(list(r), list(c)).det()))
                        for r in combinations(range(M.rows), k)
                        for c in combinations(range(M.cols), k)), 0)


def test_point():
    point = complex_from_facets(Universe('a'), [('a',)])
    profile = homology(point)
    assert profile == HomologyProfile((1,), ((),))
    assert profile.as_dict() == {'betti': [1], 'torsion': [[]]}
    assert profile.reduced_betti == (0,)


def test_circle(boundary2):
    profile = homology(boundary2)
    assert profile.betti == (1, 1)
    assert profile.torsion == ((), ())
    assert profile.euler_characteristic == 0


def test_sphere():
    profile = homology(boundary_complex(Universe('abcd')))
    assert profile.betti == (1, 0, 1)


def test_projective_plane(rp2):
    profile = homology(rp2)
    assert profile.betti == (1, 0, 0)
    assert profile.torsion == ((), (2,), ())
    assert profile.euler_characteristic == rp2.euler_characteristic == 1


def test_empty_complex_has_empty_profile():
    assert homology(SimplicialComplex(Universe('a'))) == HomologyProfile()


def test_boundary_matrix_signs():
    d1, d2 = boundary_matrices(full_complex(Universe('abc')))
    assert (d1.rows, d1.cols) == (3, 3)
    assert [d1[i, 0] for i in range(3)] == [-1, 1, 0]
    assert d2.tolist() == [[1], [-1], [1]]
    assert (d1 @ d2).is_zero()


def test_smith_normal_form():
    assert smith_normal_form(IntegerMatrix.from_rows([[2, 4], [6, 8]])) == (2, 4)
    assert smith_normal_form(IntegerMatrix(2, 3)) == ()
    assert smith_normal_form(IntegerMatrix.from_rows([[0, 0], [0, -3]])) == (3,)
    assert rank(IntegerMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_smith_normal_form_does_not_overflow():
    big = 10 ** 30
    assert smith_normal_form(IntegerMatrix.from_rows([[big, 0], [0, 1]])) == (1, big)


def test_input_matrix_is_not_modified():
    M = IntegerMatrix.from_rows([[2, 4], [6, 8]])
    smith_normal_form(M)
    assert M.tolist() == [[2, 4], [6, 8]]


def test_normalized_profiles():
    profile = HomologyProfile((1, 0, 0), ((), (), ()))
    assert profile.normalized() == HomologyProfile((1,), ((),))
    assert HomologyProfile((1, 0), ((), (2,))).normalized().dimension == 1


def test_contractible_complexes_have_point_homology(x1):
    point = complex_from_facets(Universe('a'), [('a',)])
    assert same_homology(poset_dowker_complex(x1, False, 'k'), point)
    assert not same_homology(boundary_complex(Universe('abc')), point)


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_invariant_factors_divide_each_other(M):
    d = smith_normal_form(M)
    assert all(v > 0 for v in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert len(d) == sympy.Matrix(M.tolist()).rank()


@given(matrices(max_size=4))
@settings(max_examples=60, deadline=None)
def test_invariant_factors_are_gcds_of_minors(M):
    d = smith_normal_form(M)
    for k in range(1, min(len(d), 3) + 1):
        assert prod(d[:k]) == minors_gcd(M, k)
