import pytest

from dowker_complexes.ClosedRelation import (
    Certificate,
    ClosedRelation,
    FiberSide,
    Mode,
    Verdict,
    certify_contractible,
    fiber,
    is_closed,
    is_closed_by_up_set,
    preimage_facet_check,
    quillen_hypothesis,
    relation_poset,
    verify_closed_relation,
    weak_hypothesis)
from dowker_complexes.Poset import product_poset
from dowker_complexes.SimplicialComplex import (
    Universe,
    boundary_complex,
    complex_from_facets)


def test_relation_is_closed(closed_relation, x1, hexagon):
    pairs = closed_relation.labelled_pairs()
    assert len(pairs) == 10
    assert is_closed(pairs, x1, hexagon)
    assert is_closed_by_up_set(pairs, x1, hexagon)


def test_closure_is_checked(x1, hexagon):
    assert not is_closed([('1', 'a')], x1, hexagon)
    assert not is_closed_by_up_set([('1', 'a')], x1, hexagon)
    with pytest.raises(ClosedRelation.NotClosed) as e:
        ClosedRelation.from_labels(x1, hexagon, [('1', 'a')])
    assert e.value.pair == ('1', 'a')
    assert e.value.larger == ('1', 'd')


def test_fibers(closed_relation):
    assert tuple(fiber(closed_relation, '1', FiberSide.X)) == ('d',)
    assert tuple(fiber(closed_relation, '3', 'x')) == ('b', 'c', 'd', 'e', 'f')
    assert tuple(fiber(closed_relation, 'd', FiberSide.Y)) == ('1', '3', '4')
    assert tuple(fiber(closed_relation, 'a', 'y')) == ('4',)


def test_weak_hypothesis_fails_at_first_fiber_without_maximum(closed_relation):
    report = weak_hypothesis(closed_relation)
    assert not report.holds
    assert report.witness.side == FiberSide.X
    assert report.witness.element == '3'
    assert report.witness.maximal == ('d', 'e', 'f')
    assert report.witness.maximum is None
    assert len(report.fibers) == 4 + 6


def test_quillen_fibers_are_certified(closed_relation):
    report = quillen_hypothesis(closed_relation)
    assert report.holds
    assert report.witness is None
    assert all(f.order_certificate != Certificate.Unknown for f in report.fibers)
    by_element = {(f.side, f.element): f for f in report.fibers}
    assert by_element[FiberSide.X, '3'].order_certificate == Certificate.Collapsible
    assert by_element[FiberSide.X, '4'].order_certificate == Certificate.Cone


def test_certificates():
    point = complex_from_facets(Universe('a'), [('a',)])
    path = complex_from_facets(Universe('abcd'), [('a', 'b'), ('b', 'c'), ('c', 'd')])
    assert certify_contractible(point) == Certificate.Cone
    assert certify_contractible(path) == Certificate.Collapsible
    assert certify_contractible(boundary_complex(Universe('abc'))) == Certificate.Unknown


def test_preimage_of_facet_is_not_a_simplex(closed_relation):
    report = preimage_facet_check(closed_relation, FiberSide.X)
    facets = {f.facet: f for f in report.facets}
    assert set(facets) == {('1', '2', '3'), ('1', '2', '4')}
    first = facets['1', '2', '3']
    assert len(first.vertices) == 7
    assert not first.is_simplex
    assert not report.holds


def test_relation_poset(closed_relation):
    P = relation_poset(closed_relation)
    assert len(P) == 10
    assert P.leq('(1,d)', '(3,d)')
    assert not P.leq('(3,d)', '(1,d)')


def test_full_relation_is_the_product(chain2, chain3):
    pairs = [(x, y) for x in chain2 for y in chain3]
    R = ClosedRelation.from_labels(chain2, chain3, pairs)
    assert relation_poset(R) == product_poset(chain2, chain3)


def test_empty_fiber_is_an_error(chain2, chain3):
    R = ClosedRelation.from_labels(chain2, chain3, [('2', 'c')])
    with pytest.raises(ClosedRelation.EmptyFiber) as e:
        weak_hypothesis(R)
    assert (e.value.side, e.value.label) == (FiberSide.X, '1')


def test_verify_weak_mode(closed_relation):
    report = verify_closed_relation(closed_relation, Mode.Weak)
    assert report.verdict == Verdict.HypothesisNotMet
    assert report.preimages == []
    assert report.profiles['K_X'].betti == (1, 0, 0)
    assert report.profiles['K_Y'].betti == (1, 1, 0)
    assert 'K_R' not in report.profiles
    assert report.as_dict()['check'] == 'homology-level'


def test_verify_quillen_mode(closed_relation):
    report = verify_closed_relation(closed_relation, 'quillen')
    assert report.verdict == Verdict.Confirmed
    assert report.conclusion_holds
    assert report.profiles['C_X'].betti == report.profiles['C_Y'].betti == (1, 1)


def test_order_reversing_relation_confirms_weak_mode(antitone_relation):
    report = verify_closed_relation(antitone_relation, Mode.Weak)
    assert report.hypothesis.holds
    assert report.verdict == Verdict.Confirmed
    assert [p.side for p in report.preimages] == [FiberSide.X, FiberSide.Y]
    assert all(p.holds for p in report.preimages)
    assert report.profiles['K_R'].normalized() == report.profiles['K_X'].normalized()
    assert report.profiles['K_R'].normalized() == report.profiles['K_Y'].normalized()
