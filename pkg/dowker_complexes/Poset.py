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
from functools import cached_property
from itertools import product

import networkx as nx

from dowker_complexes import helpers
from dowker_complexes.helpers import (
    Error,
    SimpleEnum)
from dowker_complexes.Relation import (
    Relation,
    k_complex,
    l_complex)
from dowker_complexes.SimplicialComplex import (
    Simplex,
    Universe,
    complex_from_simplices)


__all__ = [
    'connected_components',
    'down_set',
    'FiniteTopology',
    'has_maximum',
    'height',
    'induced_subposet',
    'is_discrete',
    'is_down_set',
    'is_up_set',
    'lattice_condition',
    'maximal_elements',
    'maximum',
    'minimal_closed_cover',
    'minimal_elements',
    'minimal_open_cover',
    'opposite',
    'order_complex',
    'order_relation',
    'order_to_topology',
    'Poset',
    'poset_dowker_complex',
    'poset_from_pairs',
    'product_poset',
    'realize_as_poset_k_complex',
    'realize_as_poset_l_complex',
    'Side',
    'singleton_components',
    'topology_to_order',
    'up_set']


logger = logging.getLogger(__name__)


class Side(SimpleEnum):
    K = 'k'
    L = 'l'


class Poset:
    '''Finite partial order; leq holds index pairs (a, b) meaning a <= b'''

    class Error(Error):
        pass

    class EmptyPoset(Error):
        pass

    class EmptyResult(Error):
        pass

    class NotComplete(Error):
        pass

    class CycleDetected(Error):

        def __init__(self, cycle):
            super().__init__('order has a cycle: {}'.format(' <= '.join(cycle)))
            self.cycle = cycle

    class UnknownElement(Error):

        def __init__(self, label):
            super().__init__('unknown element: {}'.format(label))
            self.label = label

    class NotRealizable(Error):

        def __init__(self, facet):
            super().__init__('every vertex of the facet {{{}}} lies in another facet'.format(
                ','.join(facet)))
            self.facet = facet

    def __init__(self, universe, leq, name=None):
        self._universe = universe
        self._leq = frozenset(leq)
        self.name = name
        n = len(universe)
        below = [set() for __ in range(n)]
        above = [set() for __ in range(n)]
        for a, b in self._leq:
            below[b].add(a)
            above[a].add(b)
        self._below = tuple(frozenset(s) for s in below)
        self._above = tuple(frozenset(s) for s in above)
        self._check()

    def _check(self):
        for i in range(len(self._universe)):
            if i not in self._below[i]:
                raise Poset.Error('order is not reflexive at {}'.format(self.label(i)))
        for a, b in self._leq:
            if a != b and (b, a) in self._leq:
                raise Poset.CycleDetected([self.label(a), self.label(b), self.label(a)])
            if not self._below[a] <= self._below[b]:
                raise Poset.Error('order is not transitive at {} <= {}'.format(
                    self.label(a), self.label(b)))

    @property
    def universe(self):
        return self._universe

    @property
    def leq_pairs(self):
        return self._leq

    def label(self, i):
        return self._universe.label(i)

    def index(self, label):
        try:
            return self._universe.index(label)
        except Universe.UnknownLabel:
            raise Poset.UnknownElement(label) from None

    def below(self, i):
        '''U_x as a set of indices'''
        return self._below[i]

    def above(self, i):
        '''F_x as a set of indices'''
        return self._above[i]

    def leq(self, a, b):
        return (self.index(a), self.index(b)) in self._leq

    def strict_pairs(self):
        return sorted((a, b) for a, b in self._leq if a != b)

    @cached_property
    def comparability_graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self._universe)))
        graph.add_edges_from(self.strict_pairs())
        return graph

    @cached_property
    def strict_graph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self._universe)))
        graph.add_edges_from(self.strict_pairs())
        return graph

    def labelled_pairs(self, strict=True):
        pairs = self.strict_pairs() if strict else sorted(self._leq)
        return [(self.label(a), self.label(b)) for a, b in pairs]

    def __len__(self):
        return len(self._universe)

    def __iter__(self):
        return iter(self._universe)

    def __eq__(self, other):
        return (isinstance(other, Poset) and self._universe == other._universe and
                self._leq == other._leq)

    def __hash__(self):
        return hash((self._universe, self._leq))

    def __repr__(self):
        return 'Poset({})'.format(' '.join('{}<{}'.format(a, b)
                                           for a, b in self.labelled_pairs()))


class FiniteTopology:
    '''Finite space with every open set stored; the empty set is always open'''

    class NotATopology(Error):
        pass

    class NotT0(Error):

        def __init__(self, pair):
            super().__init__('points {} and {} have the same minimal open set'.format(*pair))
            self.pair = pair

    def __init__(self, universe, opens, name=None):
        self._universe = universe
        self._opens = frozenset(frozenset(o) for o in opens) | {frozenset()}
        self.name = name
        self._check()

    @classmethod
    def from_labels(cls, points, opens, name=None):
        universe = points if isinstance(points, Universe) else Universe(points)
        return cls(universe, ({universe.index(p) for p in o} for o in opens), name)

    def _check(self):
        whole = frozenset(range(len(self._universe)))
        if whole not in self._opens:
            raise FiniteTopology.NotATopology('the whole space must be open')
        opens = sorted(self._opens, key=sorted)
        for i, a in enumerate(opens):
            for b in opens[i + 1:]:
                if a | b not in self._opens or a & b not in self._opens:
                    raise FiniteTopology.NotATopology(
                        'opens {} and {} break closure under union and intersection'.format(
                            helpers.set_label(self.describe(a)),
                            helpers.set_label(self.describe(b))))

    @property
    def universe(self):
        return self._universe

    @property
    def opens(self):
        return self._opens

    def describe(self, indices):
        return self._universe.describe(indices)

    def minimal_open(self, i):
        result = frozenset(range(len(self._universe)))
        for o in self._opens:
            if i in o:
                result &= o
        return result

    @cached_property
    def minimal_opens(self):
        return tuple(self.minimal_open(i) for i in range(len(self._universe)))

    def t0_witness(self):
        seen = {}
        for i, u in enumerate(self.minimal_opens):
            if u in seen:
                return self._universe.label(seen[u]), self._universe.label(i)
            seen[u] = i
        return None

    @property
    def is_t0(self):
        return self.t0_witness() is None

    def labelled_opens(self):
        return sorted((self.describe(o) for o in self._opens if o),
                      key=lambda o: (len(o), [self._universe.index(p) for p in o]))

    def __eq__(self, other):
        return (isinstance(other, FiniteTopology) and self._universe == other._universe and
                self._opens == other._opens)

    def __hash__(self):
        return hash((self._universe, self._opens))


def poset_from_pairs(elements, pairs, name=None):
    '''Poset generated by pairs (a, b) meaning a <= b'''
    universe = elements if isinstance(elements, Universe) else Universe(elements)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(universe)))
    for a, b in pairs:
        for label in (a, b):
            if label not in universe:
                raise Poset.UnknownElement(label)
        if a != b:
            graph.add_edge(universe.index(a), universe.index(b))
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        pass
    else:
        labels = [universe.label(u) for u, __ in cycle]
        raise Poset.CycleDetected(labels + labels[:1])
    closure = nx.transitive_closure(graph, reflexive=False)
    leq = set(closure.edges()) | {(i, i) for i in range(len(universe))}
    return Poset(universe, leq, name)


def down_set(P, x):
    return frozenset(P.label(i) for i in P.below(P.index(x)))


def up_set(P, x):
    return frozenset(P.label(i) for i in P.above(P.index(x)))


def is_down_set(P, labels):
    indices = {P.index(label) for label in labels}
    return all(P.below(i) <= indices for i in indices)


def is_up_set(P, labels):
    indices = {P.index(label) for label in labels}
    return all(P.above(i) <= indices for i in indices)


def _down_sets(P):
    '''All unions of minimal open sets, the empty one included'''
    opens = {frozenset()}
    for i in range(len(P)):
        u = P.below(i)
        opens |= {o | u for o in opens}
    return opens


def order_to_topology(P):
    return FiniteTopology(P.universe, _down_sets(P), P.name)


def topology_to_order(T):
    witness = T.t0_witness()
    if witness is not None:
        raise FiniteTopology.NotT0(witness)
    leq = {(x, y) for y, u in enumerate(T.minimal_opens) for x in u}
    return Poset(T.universe, leq, T.name)


def opposite(P):
    return Poset(P.universe, ((b, a) for a, b in P.leq_pairs), P.name)


def is_discrete(P):
    return all(a == b for a, b in P.leq_pairs)


def order_relation(P, strict=False):
    pairs = (p for p in P.leq_pairs if not strict or p[0] != p[1])
    return Relation(P.universe, P.universe, pairs, P.name)


def order_complex(P):
    '''Nonempty chains of P, found as maximal cliques of the comparability graph'''
    if not len(P):
        raise Poset.EmptyPoset('the poset has no elements')
    chains = (Simplex(c) for c in nx.find_cliques(P.comparability_graph))
    return complex_from_simplices(P.universe, chains)


def poset_dowker_complex(P, strict, side):
    side = Side.parse(side)
    if not len(P):
        raise Poset.EmptyPoset('the poset has no elements')
    if strict and is_discrete(P):
        raise Poset.EmptyResult('the strict complexes of a discrete poset are empty')
    relation = order_relation(P, strict)
    return k_complex(relation) if side == Side.K else l_complex(relation)


def minimal_open_cover(P):
    '''x -> U_x; the nerve of this cover is the L-complex of <='''
    return {P.label(i): P.universe.describe(P.below(i)) for i in range(len(P))}


def minimal_closed_cover(P):
    '''x -> F_x; the nerve of this cover is the K-complex of <='''
    return {P.label(i): P.universe.describe(P.above(i)) for i in range(len(P))}


def maximal_elements(P):
    return tuple(P.label(i) for i in range(len(P)) if P.above(i) == {i})


def minimal_elements(P):
    return tuple(P.label(i) for i in range(len(P)) if P.below(i) == {i})


def maximum(P):
    top = maximal_elements(P)
    if len(top) == 1 and len(P.below(P.index(top[0]))) == len(P):
        return top[0]
    return None


def has_maximum(P):
    return maximum(P) is not None


def height(P):
    '''Number of elements in a longest chain'''
    if not len(P):
        return 0
    return nx.dag_longest_path_length(P.strict_graph) + 1


def lattice_condition(P):
    '''U_x & U_y is empty or some U_z, for all x, y'''
    minimal = {P.below(i) for i in range(len(P))}
    for x in range(len(P)):
        for y in range(x + 1, len(P)):
            meet = P.below(x) & P.below(y)
            if meet and meet not in minimal:
                logger.debug('U_%s & U_%s is not a minimal open set', P.label(x), P.label(y))
                return False
    return True


def realize_as_poset_k_complex(T):
    '''Length-2 poset on the universe of T whose K-complex is T'''
    universe = T.universe
    vertices = set(T.vertices)
    missing = [label for i, label in enumerate(universe) if i not in vertices]
    if missing or not vertices:
        raise Poset.NotComplete('{} is not a vertex of the complex'.format(
            missing[0] if missing else 'the universe'))
    facets = T.facets
    leq = {(i, i) for i in range(len(universe))}
    for k, facet in enumerate(facets):
        shared = set().union(*(facets[:k] + facets[k + 1:]))
        private = [v for v in facet if v not in shared]
        if not private:
            raise Poset.NotRealizable(T.describe(facet))
        top = private[0]
        leq.update((x, top) for x in facet)
    return Poset(universe, leq)


def realize_as_poset_l_complex(T):
    return opposite(realize_as_poset_k_complex(T))


def product_poset(P, Q):
    m = len(Q)
    universe = Universe(helpers.pair_label(p, q) for p, q in product(P.universe, Q.universe))
    leq = ((a * m + c, b * m + d) for (a, b), (c, d) in product(P.leq_pairs, Q.leq_pairs))
    return Poset(universe, leq)


def induced_subposet(P, labels):
    indices = sorted({P.index(label) for label in labels})
    position = {i: k for k, i in enumerate(indices)}
    leq = ((position[a], position[b]) for a, b in P.leq_pairs
           if a in position and b in position)
    return Poset(Universe(P.label(i) for i in indices), leq)


def connected_components(P):
    '''Components of the comparability graph, each in index order, by least element'''
    components = (sorted(c) for c in nx.connected_components(P.comparability_graph))
    return [tuple(P.label(i) for i in c) for c in sorted(components)]


def singleton_components(P):
    return [c[0] for c in connected_components(P) if len(c) == 1]
