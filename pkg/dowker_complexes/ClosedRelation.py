#!/usr/bin/env python3
# -*- Mode: Python; coding: utf-8; indent-tabs-mode: nil; tab-width: 4 -*-
#   Dowker Complexes
#   Copyright (C) 2026 Dowker Complexes developers
#
#   This program is free software: you can redistribute it and/or modify it
#   under the terms of the GNU General Public License version 3, as published
#   by the Free Software Foundation.
#
#   This program is distributed in the hope that it will be useful, but
#   WITHOUT ANY WARRANTY; without even the implied warranties of
#   MERCHANTABILITY, SATISFACTORY QUALITY, or FITNESS FOR A PARTICULAR
#   PURPOSE.  See the GNU General Public License for more details.
#
#   You should have received a copy of the GNU General Public License along
#   with this program.  If not, see <http://www.gnu.org/licenses/>.

import logging
from dataclasses import (
    dataclass,
    field)

from dowker_complexes import helpers
from dowker_complexes.Collapse import collapses_to_point
from dowker_complexes.helpers import (
    Error,
    SimpleEnum)
from dowker_complexes.Homology import (
    HomologyProfile,
    homology)
from dowker_complexes.Poset import (
    Side,
    induced_subposet,
    is_up_set,
    maximal_elements,
    maximum,
    order_complex,
    poset_dowker_complex,
    product_poset)
from dowker_complexes.SimplicialComplex import (
    Simplex,
    cone_apex)


__all__ = [
    'Certificate',
    'certify_contractible',
    'ClosedRelation',
    'fiber',
    'FiberSide',
    'FiberStatus',
    'HypothesisReport',
    'is_closed',
    'is_closed_by_up_set',
    'Mode',
    'preimage_facet_check',
    'PreimageReport',
    'quillen_hypothesis',
    'relation_poset',
    'Verdict',
    'VerificationReport',
    'verify_closed_relation',
    'weak_hypothesis']


logger = logging.getLogger(__name__)


class Certificate(SimpleEnum):
    Cone = 'cone'
    Collapsible = 'collapsible'
    Unknown = 'unknown'


class FiberSide(SimpleEnum):
    X = 'x'
    Y = 'y'


class Mode(SimpleEnum):
    Quillen = 'quillen'
    Weak = 'weak'


class Verdict(SimpleEnum):
    Confirmed = 'confirmed'
    Violated = 'violated'
    HypothesisNotMet = 'hypothesis-not-met'


class ClosedRelation:
    '''Up-set R of the product poset X x Y, pairs kept as index pairs'''

    class Error(Error):
        pass

    class NotClosed(Error):

        def __init__(self, pair, larger):
            super().__init__('{} is related but {} is not'.format(
                helpers.pair_label(*pair), helpers.pair_label(*larger)))
            self.pair = pair
            self.larger = larger

    class EmptyFiber(Error):

        def __init__(self, side, label):
            super().__init__('the fiber of {} ({} side) is empty'.format(label, side))
            self.side = side
            self.label = label

    def __init__(self, x_poset, y_poset, pairs, name=None):
        self.x_poset = x_poset
        self.y_poset = y_poset
        self._pairs = frozenset(pairs)
        self.name = name
        witness = _closure_witness(x_poset, y_poset, self._pairs)
        if witness is not None:
            raise ClosedRelation.NotClosed(*witness)

    @classmethod
    def from_labels(cls, x_poset, y_poset, pairs, name=None):
        return cls(x_poset, y_poset,
                   ((x_poset.index(x), y_poset.index(y)) for x, y in pairs), name)

    @property
    def pairs(self):
        return self._pairs

    def labelled_pairs(self):
        return [(self.x_poset.label(x), self.y_poset.label(y)) for x, y in sorted(self._pairs)]

    def fiber_indices(self, v, side):
        if side == FiberSide.X:
            return frozenset(y for x, y in self._pairs if x == v)
        return frozenset(x for x, y in self._pairs if y == v)


def _closure_witness(P, Q, pairs):
    for x, y in sorted(pairs):
        for x2 in sorted(P.above(x)):
            for y2 in sorted(Q.above(y)):
                if (x2, y2) not in pairs:
                    return (P.label(x), Q.label(y)), (P.label(x2), Q.label(y2))
    return None


def is_closed(pairs, P, Q):
    '''(x, y) in R and (x, y) <= (x', y') imply (x', y') in R'''
    indices = {(P.index(x), Q.index(y)) for x, y in pairs}
    return _closure_witness(P, Q, indices) is None


def is_closed_by_up_set(pairs, P, Q):
    return is_up_set(product_poset(P, Q), (helpers.pair_label(x, y) for x, y in pairs))


def fiber(R, v, side):
    side = FiberSide.parse(side)
    if side == FiberSide.X:
        source, target = R.x_poset, R.y_poset
    else:
        source, target = R.y_poset, R.x_poset
    members = R.fiber_indices(source.index(v), side)
    return induced_subposet(target, (target.label(i) for i in members))


def certify_contractible(K):
    if cone_apex(K) is not None:
        return Certificate.Cone
    if collapses_to_point(K):
        return Certificate.Collapsible
    return Certificate.Unknown


@dataclass
class FiberStatus:
    side: str
    element: str
    members: tuple
    maximum: str = None
    maximal: tuple = ()
    order_certificate: str = None
    k_certificate: str = None

    def as_dict(self):
        result = {'side': self.side, 'element': self.element, 'members': list(self.members),
                  'maximum': self.maximum, 'maximal': list(self.maximal)}
        if self.order_certificate is not None:
            result['order_certificate'] = self.order_certificate
            result['k_certificate'] = self.k_certificate
        return result


@dataclass
class HypothesisReport:
    mode: str
    fibers: list = field(default_factory=list)
    holds: bool = True
    witness: FiberStatus = None

    def as_dict(self):
        return {'mode': self.mode, 'holds': self.holds,
                'witness': None if self.witness is None else
                {'side': self.witness.side, 'element': self.witness.element,
                 'maximal': list(self.witness.maximal)},
                'fibers': [f.as_dict() for f in self.fibers]}


def _fibers(R):
    for side, source in ((FiberSide.X, R.x_poset), (FiberSide.Y, R.y_poset)):
        for label in source:
            F = fiber(R, label, side)
            if not len(F):
                raise ClosedRelation.EmptyFiber(side, label)
            yield side, label, F


def weak_hypothesis(R):
    report = HypothesisReport(Mode.Weak)
    for side, label, F in _fibers(R):
        top = maximum(F)
        status = FiberStatus(side, label, tuple(F), top, maximal_elements(F))
        report.fibers.append(status)
        if top is None and report.holds:
            report.holds = False
            report.witness = status
    return report


def quillen_hypothesis(R):
    report = HypothesisReport(Mode.Quillen)
    for side, label, F in _fibers(R):
        status = FiberStatus(side, label, tuple(F), maximum(F), maximal_elements(F),
                             certify_contractible(order_complex(F)),
                             certify_contractible(poset_dowker_complex(F, False, Side.K)))
        report.fibers.append(status)
        if status.order_certificate == Certificate.Unknown and report.holds:
            report.holds = False
            report.witness = status
    return report


def _sorted_pairs(R):
    return sorted(R.pairs)


def relation_poset(R):
    labels = (helpers.pair_label(R.x_poset.label(x), R.y_poset.label(y))
              for x, y in _sorted_pairs(R))
    return induced_subposet(product_poset(R.x_poset, R.y_poset), labels)


@dataclass
class PreimageFacet:
    facet: tuple
    vertices: tuple
    is_simplex: bool

    def as_dict(self):
        return {'facet': list(self.facet), 'vertices': list(self.vertices),
                'is_simplex': self.is_simplex}


@dataclass
class PreimageReport:
    side: str
    facets: list = field(default_factory=list)

    @property
    def holds(self):
        return all(f.is_simplex for f in self.facets)

    def as_dict(self):
        return {'side': self.side, 'holds': self.holds,
                'facets': [f.as_dict() for f in self.facets]}


def preimage_facet_check(R, side):
    '''For each facet s of the K-complex of one side, is p^-1(s) a full simplex of K_R?'''
    side = FiberSide.parse(side)
    poset = R.x_poset if side == FiberSide.X else R.y_poset
    pairs = _sorted_pairs(R)
    K_R = poset_dowker_complex(relation_poset(R), False, Side.K) if pairs else None
    K = poset_dowker_complex(poset, False, Side.K)
    report = PreimageReport(side)
    for facet in K.facets:
        members = set(facet)
        vertices = [k for k, (x, y) in enumerate(pairs)
                    if (x if side == FiberSide.X else y) in members]
        is_simplex = bool(vertices) and Simplex(vertices) in K_R
        labels = tuple(helpers.pair_label(R.x_poset.label(pairs[k][0]),
                                          R.y_poset.label(pairs[k][1])) for k in vertices)
        report.facets.append(PreimageFacet(K.describe(facet), labels, is_simplex))
    return report


@dataclass
class VerificationReport:
    mode: str
    verdict: str
    hypothesis: HypothesisReport
    conclusion_holds: bool
    profiles: dict = field(default_factory=dict)
    preimages: list = field(default_factory=list)

    def as_dict(self):
        return {'mode': self.mode, 'verdict': self.verdict,
                'hypothesis': self.hypothesis.as_dict(),
                'conclusion_holds': self.conclusion_holds,
                'profiles': {k: v.as_dict() for k, v in self.profiles.items()},
                'preimages': [p.as_dict() for p in self.preimages],
                'check': 'homology-level'}


def verify_closed_relation(R, mode):
    mode = Mode.parse(mode)
    X, Y = R.x_poset, R.y_poset
    profiles = {'C_X': homology(order_complex(X)), 'C_Y': homology(order_complex(Y)),
                'K_X': homology(poset_dowker_complex(X, False, Side.K)),
                'K_Y': homology(poset_dowker_complex(Y, False, Side.K))}
    preimages = []
    if mode == Mode.Quillen:
        hypothesis = quillen_hypothesis(R)
        conclusion = _same(profiles['C_X'], profiles['C_Y'])
    else:
        hypothesis = weak_hypothesis(R)
        conclusion = _same(profiles['K_X'], profiles['K_Y'])
        if hypothesis.holds:
            # K_R, K_X and K_Y agree when both projections are equivalences
            profiles['K_R'] = homology(poset_dowker_complex(relation_poset(R), False, Side.K))
            preimages = [preimage_facet_check(R, FiberSide.X),
                         preimage_facet_check(R, FiberSide.Y)]
            conclusion = (conclusion and _same(profiles['K_R'], profiles['K_X']) and
                          all(p.holds for p in preimages))
    if not hypothesis.holds:
        verdict = Verdict.HypothesisNotMet
    elif conclusion:
        verdict = Verdict.Confirmed
    else:
        verdict = Verdict.Violated
        logger.warning('%s theorem instance violated', mode)
    return VerificationReport(mode, verdict, hypothesis, conclusion, profiles, preimages)


def _same(a, b):
    return HomologyProfile.normalized(a) == HomologyProfile.normalized(b)
