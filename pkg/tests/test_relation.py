import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dowker_complexes.Homology import same_homology
from dowker_complexes.Poset import order_relation
from dowker_complexes.Relation import (
    Relation,
    RelationMorphism,
    are_equivalent,
    canonical_relation,
    compose,
    constant_morphism,
    find_morphism,
    induced_l_map,
    is_covered,
    is_morphism,
    k_complex,
    l_complex,
    membership_relation,
    nerve,
    refines,
    support_simplex,
    transpose,
    vietoris_complex)
from dowker_complexes.SimplicialComplex import (
    Simplex,
    SimplicialComplex,
    Universe,
    VertexMap,
    are_contiguous,
    boundary_complex,
    complex_from_facets,
    full_complex,
    is_subcomplex)


@st.composite
def covered_relations(draw, max_size=4):
    x_count = draw(st.integers(1, max_size))
    y_count = draw(st.integers(1, max_size))
    supports = [draw(st.sets(st.integers(0, x_count - 1), min_size=1)) for __ in range(y_count)]
    return Relation(Universe(str(i + 1) for i in range(x_count)),
                    Universe(string.ascii_lowercase[:y_count]),
                    ((x, y) for y, support in enumerate(supports) for x in support))


COVER = {'A': ['1', '2'], 'B': ['2', '3']}


def test_covered():
    assert not is_covered(Relation.from_labels(['1'], ['u', 'v'], [('1', 'u')]))
    assert is_covered(Relation.from_labels(['1'], ['u'], [('1', 'u')]))


def test_order_is_covered(x1):
    assert is_covered(order_relation(x1))


def test_transpose_swaps_pairs():
    R = Relation.from_labels(['1'], ['u'], [('1', 'u')])
    assert transpose(R).labelled_pairs() == [('u', '1')]
    assert transpose(transpose(R)) == R


def test_complexes_of_x1(x1):
    R = order_relation(x1)
    assert k_complex(R).labelled_facets() == [('1', '2', '3'), ('1', '2', '4')]
    assert l_complex(R).labelled_facets() == [('1', '3', '4'), ('2', '3', '4')]


def test_k_complex_of_hexagon(hexagon):
    K = k_complex(order_relation(hexagon))
    assert K.labelled_facets() == [('a', 'b', 'd'), ('a', 'c', 'e'), ('b', 'c', 'f')]


def test_single_pair_is_a_point():
    R = Relation.from_labels(['a'], ['u'], [('a', 'u')])
    assert k_complex(R).is_point
    assert l_complex(R).is_point


def test_empty_relation():
    with pytest.raises(Relation.EmptyRelation):
        k_complex(Relation.from_labels(['a'], ['u'], []))


def test_relation_needs_elements():
    with pytest.raises(Relation.Error):
        Relation.from_labels([], ['u'], [])


def test_support_simplex(x1):
    R = order_relation(x1)
    assert support_simplex(R, '3') == Simplex([0, 1, 2])
    with pytest.raises(Relation.UncoveredElement) as info:
        support_simplex(Relation.from_labels(['1'], ['u', 'v'], [('1', 'u')]), 'v')
    assert info.value.label == 'v'


def test_canonical_relation_of_boundary(boundary2):
    R = canonical_relation(boundary2)
    assert list(R.y_universe) == ['{a}', '{b}', '{c}', '{a,b}', '{a,c}', '{b,c}']
    assert k_complex(R) == boundary2


def test_canonical_relation_of_point():
    point = complex_from_facets(Universe('a'), [('a',)])
    R = canonical_relation(point)
    assert R.labelled_pairs() == [('a', '{a}')]


def test_canonical_relation_of_nothing():
    with pytest.raises(SimplicialComplex.EmptyComplex):
        canonical_relation(SimplicialComplex(Universe('a')))


def test_membership_relation_gives_nerve_and_vietoris():
    assert nerve(['1', '2', '3'], COVER).labelled_facets() == [('A', 'B')]
    assert vietoris_complex(['1', '2', '3'], COVER).labelled_facets() == [('1', '2'), ('2', '3')]


def test_membership_relation_from_sets():
    R = membership_relation(['1', '2'], [{'2', '1'}])
    assert list(R.y_universe) == ['{1,2}']


def test_find_morphism_follows_subcomplexes():
    edge = Relation.from_labels('abc', ['u'], [('a', 'u'), ('b', 'u')])
    full = canonical_relation(full_complex(Universe('abc')))
    assert find_morphism(edge, full) == {'u': '{a,b}'}
    assert find_morphism(full, edge) is None


def test_find_morphism_on_itself_is_identity(x1):
    R = order_relation(x1)
    assert find_morphism(R, R) == {y: y for y in '1234'}


def test_find_morphism_needs_covered_relations():
    R = Relation.from_labels(['1'], ['u', 'v'], [('1', 'u')])
    with pytest.raises(Relation.UncoveredElement):
        find_morphism(R, R)


def test_find_morphism_needs_shared_points():
    R = Relation.from_labels(['1'], ['u'], [('1', 'u')])
    R2 = Relation.from_labels(['2'], ['u'], [('2', 'u')])
    with pytest.raises(Relation.UniverseMismatch):
        find_morphism(R, R2)


def test_morphism_law(x1):
    R = order_relation(x1)
    assert is_morphism({'1': '3', '2': '3', '3': '3', '4': '4'}, R, R)
    assert not is_morphism({'1': '1', '2': '2', '3': '1', '4': '4'}, R, R)
    with pytest.raises(Relation.PartialAssignment):
        is_morphism({'1': '1'}, R, R)
    with pytest.raises(Relation.NotAMorphism) as info:
        RelationMorphism(R, R, {'1': '1', '2': '2', '3': '1', '4': '4'})
    assert info.value.label == '3'


def test_constant_morphism(x1):
    m = constant_morphism(order_relation(x1))
    assert m.assignment == {y: '*' for y in '1234'}
    L_m = induced_l_map(m)
    assert L_m.assignment == {i: 0 for i in range(4)}


def test_induced_maps_of_parallel_morphisms_are_contiguous(x1):
    R = order_relation(x1)
    f = RelationMorphism(R, R, {y: y for y in '1234'})
    g = RelationMorphism(R, R, {'1': '3', '2': '3', '3': '3', '4': '4'})
    L = l_complex(R)
    assert induced_l_map(f) == VertexMap.identity(R.y_universe)
    assert are_contiguous(induced_l_map(f), induced_l_map(g), L, L)


def test_refinement():
    points = ['1', '2', '3']
    U = membership_relation(points, COVER)
    V = membership_relation(points, {'V1': ['1'], 'V2': ['2', '3']})
    assert refines(V, U)
    assert not refines(U, V)
    finer = membership_relation(points, dict(COVER, C=['2']))
    assert are_equivalent(U, finer)


def test_compose_is_a_morphism():
    points = ['1', '2', '3']
    V = membership_relation(points, {'V1': ['1'], 'V2': ['2', '3']})
    U = membership_relation(points, COVER)
    W = membership_relation(points, {'W': points})
    f, g = find_morphism(V, U), find_morphism(U, W)
    assert is_morphism(compose(f, g), V, W)


def test_order_without_maximum_is_not_a_full_column(x1):
    R = order_relation(x1)
    column = Relation(R.x_universe, Universe(['*']), ((x, 0) for x in range(4)))
    assert find_morphism(R, column) is not None
    assert find_morphism(column, R) is None
    assert not are_equivalent(R, column)


def test_canonical_relation_recovers_boundary_of_tetrahedron():
    T = boundary_complex(Universe('abcd'))
    assert k_complex(canonical_relation(T)) == T


@given(covered_relations())
@settings(max_examples=60, deadline=None)
def test_relation_is_equivalent_to_canonical_relation_of_its_complex(R):
    K = k_complex(R)
    assert are_equivalent(R, canonical_relation(K))
    assert k_complex(canonical_relation(K)) == K


@given(covered_relations())
@settings(max_examples=60, deadline=None)
def test_k_and_l_have_the_same_homology(R):
    assert same_homology(k_complex(R), l_complex(R))


@given(covered_relations(), covered_relations())
@settings(max_examples=60, deadline=None)
def test_found_morphisms_obey_the_law(R, R2):
    R2 = Relation(R.x_universe, R2.y_universe,
                  ((x % len(R.x_universe), y) for x, y in R2.pairs))
    f = find_morphism(R, R2)
    if f is not None:
        assert is_morphism(f, R, R2)


def test_canonical_labels_of_faces_never_collide():
    T = complex_from_facets(Universe(['a', 'b', 'a,b']), [('a', 'b'), ('a,b',)])
    R = canonical_relation(T)
    assert len(R.y_universe) == 4
    assert '{a,b}' in R.y_universe
    assert '{a\\,b}' in R.y_universe
    assert k_complex(R) == T


@given(covered_relations(), covered_relations())
@settings(max_examples=60, deadline=None)
def test_morphisms_exist_exactly_between_nested_complexes(R, R2):
    R2 = Relation(R.x_universe, R2.y_universe,
                  ((x % len(R.x_universe), y) for x, y in R2.pairs))
    found = find_morphism(R, R2) is not None
    assert found == is_subcomplex(k_complex(R), k_complex(R2))
