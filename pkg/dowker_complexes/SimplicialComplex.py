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

from dowker_complexes import helpers
from dowker_complexes.helpers import Error


__all__ = [
    'are_contiguous',
    'apply_simplicial_map',
    'boundary_complex',
    'complex_from_facets',
    'complex_from_simplices',
    'cone_apex',
    'full_complex',
    'induced_subcomplex',
    'is_subcomplex',
    'relabel',
    'Simplex',
    'SimplicialComplex',
    'Universe',
    'VertexMap']


logger = logging.getLogger(__name__)


class Universe:
    '''Ordered set of vertex labels, interned to dense indices 0..n-1'''

    class DuplicateLabel(Error):
        exit_status = 1

    class InvalidLabel(Error):
        exit_status = 1

    class UnknownLabel(Error):

        def __init__(self, label):
            super().__init__('unknown label: {}'.format(label))
            self.label = label

    def __init__(self, labels):
        self._labels = tuple(labels)
        self._index = {}
        for i, label in enumerate(self._labels):
            if not isinstance(label, str) or label.split() != [label]:
                raise Universe.InvalidLabel('invalid label: {!r}'.format(label))
            if label in self._index:
                raise Universe.DuplicateLabel('duplicate label: {}'.format(label))
            self._index[label] = i

    @property
    def labels(self):
        return self._labels

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise Universe.UnknownLabel(label) from None

    def label(self, index):
        return self._labels[index]

    def simplex(self, labels):
        return Simplex(self.index(label) for label in labels)

    def describe(self, indices):
        '''Labels of the given indices, in index order'''
        return tuple(self._labels[i] for i in sorted(indices))

    def __len__(self):
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __contains__(self, label):
        return label in self._index

    def __eq__(self, other):
        return isinstance(other, Universe) and self._labels == other._labels

    def __hash__(self):
        return hash(self._labels)

    def __repr__(self):
        return 'Universe({})'.format(' '.join(self._labels))


class Simplex(tuple):
    '''Strictly increasing, nonempty tuple of vertex indices'''

    class Empty(Error):
        pass

    def __new__(cls, indices=()):
        vertices = tuple(sorted(set(indices)))
        if not vertices:
            raise Simplex.Empty('a simplex needs at least one vertex')
        return super().__new__(cls, vertices)

    @property
    def dimension(self):
        return len(self) - 1

    def faces(self):
        '''All nonempty faces, the simplex itself included'''
        return (tuple.__new__(Simplex, face) for face in helpers.subsets(self))

    def boundary(self):
        '''Codimension one faces, the i-th one missing the i-th vertex'''
        return [tuple.__new__(Simplex, self[:i] + self[i + 1:]) for i in range(len(self))]

    def union(self, other):
        return Simplex(set(self) | set(other))

    def with_vertex(self, v):
        return Simplex(self + (v,))

    def __repr__(self):
        return 'Simplex{}'.format(tuple(self))


class SimplicialComplex:
    '''Downward closed set of simplices over a vertex universe'''

    class Error(Error):
        pass

    class EmptyFacet(Error):
        exit_status = 1

    class VertexOutsideUniverse(Error):
        exit_status = 1

    class NotDownwardClosed(Error):
        pass

    class EmptyComplex(Error):
        pass

    class NotSimplicial(Error):

        def __init__(self, face):
            super().__init__('image of face {} is not a face of the target'.format(face))
            self.face = face

    def __init__(self, universe, faces=()):
        self._universe = universe
        try:
            self._faces = frozenset(f if isinstance(f, Simplex) else Simplex(f) for f in faces)
        except Simplex.Empty:
            raise SimplicialComplex.EmptyFacet('empty face') from None
        self._check()

    def _check(self):
        n = len(self._universe)
        for face in self._faces:
            if face[0] < 0 or face[-1] >= n:
                raise SimplicialComplex.VertexOutsideUniverse(
                    'face {} lies outside the universe'.format(face))
            if len(face) > 1:
                for sub in face.boundary():
                    if sub not in self._faces:
                        raise SimplicialComplex.NotDownwardClosed(
                            'face {} is missing its face {}'.format(
                                self.describe(face), self.describe(sub)))

    @property
    def universe(self):
        return self._universe

    @property
    def faces(self):
        return self._faces

    @cached_property
    def vertices(self):
        '''Vertex indices of the 0-faces, ascending'''
        return tuple(sorted(face[0] for face in self._faces if len(face) == 1))

    @cached_property
    def facets(self):
        '''Inclusion-maximal faces in canonical order'''
        vertices = self.vertices
        result = []
        for face in self._faces:
            members = set(face)
            if not any(tuple(sorted(members | {v})) in self._faces
                       for v in vertices if v not in members):
                result.append(face)
        return tuple(sorted(result))

    @cached_property
    def dimension(self):
        return max((len(face) for face in self._faces), default=0) - 1

    @cached_property
    def f_vector(self):
        counts = [0] * (self.dimension + 1)
        for face in self._faces:
            counts[len(face) - 1] += 1
        return tuple(counts)

    def faces_of_dimension(self, n):
        return sorted(face for face in self._faces if len(face) == n + 1)

    @property
    def euler_characteristic(self):
        return sum((-1) ** n * count for n, count in enumerate(self.f_vector))

    @property
    def is_empty(self):
        return not self._faces

    @property
    def is_point(self):
        return len(self._faces) == 1

    def describe(self, face):
        return self._universe.describe(face)

    def labelled_facets(self):
        '''Facets as label tuples, sorted lexicographically by label sequence'''
        return sorted(self.describe(face) for face in self.facets)

    def __contains__(self, face):
        return face in self._faces

    def __len__(self):
        return len(self._faces)

    def __iter__(self):
        return iter(sorted(self._faces, key=lambda f: (len(f), f)))

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex) and self._universe == other._universe and
                self._faces == other._faces)

    def __hash__(self):
        return hash((self._universe, self._faces))

    def __repr__(self):
        return 'SimplicialComplex({})'.format(
            ' '.join('{' + ','.join(f) + '}' for f in self.labelled_facets()))


class VertexMap:
    '''Vertex assignment between two universes, kept as index -> index'''

    def __init__(self, domain, codomain, assignment):
        self.domain = domain
        self.codomain = codomain
        self._assignment = dict(assignment)

    @classmethod
    def from_labels(cls, domain, codomain, mapping):
        return cls(domain, codomain,
                   {domain.index(k): codomain.index(v) for k, v in mapping.items()})

    @classmethod
    def identity(cls, universe):
        return cls(universe, universe, {i: i for i in range(len(universe))})

    @property
    def assignment(self):
        return dict(self._assignment)

    def is_total_on(self, K):
        return all(v in self._assignment for v in K.vertices)

    def __call__(self, face):
        return Simplex(self._assignment[v] for v in face)

    def __eq__(self, other):
        return (isinstance(other, VertexMap) and self.domain == other.domain and
                self.codomain == other.codomain and self._assignment == other._assignment)

    def __repr__(self):
        return 'VertexMap({})'.format(', '.join(
            '{}->{}'.format(self.domain.label(k), self.codomain.label(v))
            for k, v in sorted(self._assignment.items())))


def complex_from_simplices(universe, simplices):
    faces = set()
    for simplex in simplices:
        if simplex in faces:
            continue
        faces.update(simplex.faces())
    return SimplicialComplex(universe, faces)


def complex_from_facets(universe, facets):
    '''Downward closure of the given label sets'''
    simplices = []
    for facet in facets:
        facet = tuple(facet)
        if not facet:
            raise SimplicialComplex.EmptyFacet('empty facet')
        try:
            simplices.append(universe.simplex(facet))
        except Universe.UnknownLabel as e:
            raise SimplicialComplex.VertexOutsideUniverse(
                'vertex {} is outside the universe'.format(e.label)) from None
    return complex_from_simplices(universe, simplices)


def full_complex(universe):
    if not len(universe):
        raise SimplicialComplex.EmptyComplex('the universe is empty')
    return complex_from_simplices(universe, [Simplex(range(len(universe)))])


def boundary_complex(universe):
    '''Boundary of the full simplex on a universe with at least two elements'''
    if len(universe) < 2:
        raise SimplicialComplex.EmptyComplex('the boundary of a point is empty')
    return complex_from_simplices(universe, Simplex(range(len(universe))).boundary())


def is_subcomplex(T, K):
    if T.universe == K.universe:
        return T.faces <= K.faces
    universe = K.universe
    for face in T.faces:
        labels = T.describe(face)
        if not all(label in universe for label in labels):
            return False
        if universe.simplex(labels) not in K:
            return False
    return True


def induced_subcomplex(K, vertices):
    '''Full subcomplex of K spanned by the given vertex indices'''
    vertices = set(vertices)
    return SimplicialComplex(K.universe, (f for f in K.faces if vertices.issuperset(f)))


def relabel(K, universe, mapping):
    '''Copy of K over another universe, vertices renamed label -> label'''
    simplices = [universe.simplex(mapping[label] for label in K.describe(face))
                 for face in K.facets]
    return complex_from_simplices(universe, simplices)


def apply_simplicial_map(f, K, L):
    if not f.is_total_on(K):
        missing = next(v for v in K.vertices if v not in f.assignment)
        raise SimplicialComplex.Error(
            'vertex map is not defined on {}'.format(K.universe.label(missing)))
    image = set()
    for face in sorted(K.faces, key=lambda s: (len(s), s)):
        target = f(face)
        if target not in L:
            raise SimplicialComplex.NotSimplicial(K.describe(face))
        image.add(target)
    return SimplicialComplex(L.universe, image)


def are_contiguous(f, g, K, L):
    apply_simplicial_map(f, K, L)
    apply_simplicial_map(g, K, L)
    return all(f(face).union(g(face)) in L for face in K.faces)


def _cone_apex_index(K):
    facets = K.facets
    if not facets:
        return None
    common = set(facets[0]).intersection(*facets[1:])
    return min(common) if common else None


def cone_apex(K):
    '''Least vertex lying in every facet, or None'''
    apex = _cone_apex_index(K)
    return None if apex is None else K.universe.label(apex)
