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
from collections.abc import Mapping
from functools import cached_property

from dowker_complexes import helpers
from dowker_complexes.helpers import Error
from dowker_complexes.SimplicialComplex import (
    Simplex,
    SimplicialComplex,
    Universe,
    VertexMap,
    complex_from_simplices)


__all__ = [
    'are_equivalent',
    'canonical_relation',
    'compose',
    'constant_morphism',
    'find_morphism',
    'induced_l_map',
    'is_covered',
    'is_morphism',
    'k_complex',
    'l_complex',
    'membership_relation',
    'nerve',
    'refines',
    'Relation',
    'RelationMorphism',
    'support_simplex',
    'transpose',
    'vietoris_complex']


logger = logging.getLogger(__name__)


class Relation:
    '''Subset of X x Y, stored as pairs of interned indices'''

    class Error(Error):
        pass

    class EmptyRelation(Error):
        pass

    class UniverseMismatch(Error):
        pass

    class PartialAssignment(Error):
        pass

    class UncoveredElement(Error):

        def __init__(self, label):
            super().__init__('{} is not related to any element of X'.format(label))
            self.label = label

    class NotAMorphism(Error):

        def __init__(self, label):
            super().__init__('the assignment breaks the morphism law at {}'.format(label))
            self.label = label

    def __init__(self, x_universe, y_universe, pairs, name=None):
        if not len(x_universe) or not len(y_universe):
            raise Relation.Error('both universes of a relation must be nonempty')
        self._x = x_universe
        self._y = y_universe
        self._pairs = frozenset(pairs)
        self.name = name
        nx, ny = len(x_universe), len(y_universe)
        for x, y in self._pairs:
            if not (0 <= x < nx and 0 <= y < ny):
                raise Relation.Error('pair ({}, {}) lies outside the universes'.format(x, y))

    @classmethod
    def from_labels(cls, x_labels, y_labels, pairs, name=None):
        x_universe = x_labels if isinstance(x_labels, Universe) else Universe(x_labels)
        y_universe = y_labels if isinstance(y_labels, Universe) else Universe(y_labels)
        return cls(x_universe, y_universe,
                   ((x_universe.index(x), y_universe.index(y)) for x, y in pairs), name)

    @property
    def x_universe(self):
        return self._x

    @property
    def y_universe(self):
        return self._y

    @property
    def pairs(self):
        return self._pairs

    @cached_property
    def _supports(self):
        supports = [set() for __ in self._y]
        for x, y in self._pairs:
            supports[y].add(x)
        return tuple(frozenset(s) for s in supports)

    def support(self, y):
        '''S_y as a set of X indices'''
        return self._supports[y]

    def uncovered(self):
        return tuple(y for y, support in enumerate(self._supports) if not support)

    def labelled_pairs(self):
        return [(self._x.label(x), self._y.label(y)) for x, y in sorted(self._pairs)]

    def __contains__(self, pair):
        x, y = pair
        return (self._x.index(x), self._y.index(y)) in self._pairs

    def __eq__(self, other):
        return (isinstance(other, Relation) and self._x == other._x and self._y == other._y and
                self._pairs == other._pairs)

    def __hash__(self):
        return hash((self._x, self._y, self._pairs))

    def __repr__(self):
        return 'Relation({})'.format(' '.join('{}~{}'.format(x, y)
                                              for x, y in self.labelled_pairs()))


class RelationMorphism:
    '''Map f: Y -> Z with x R y => x R2 f(y), over a shared X'''

    def __init__(self, source, target, assignment):
        self.source = source
        self.target = target
        self._assignment = _assignment_indices(assignment, source, target)
        for y, z in self._assignment.items():
            if not source.support(y) <= target.support(z):
                raise Relation.NotAMorphism(source.y_universe.label(y))

    @property
    def assignment(self):
        return {self.source.y_universe.label(y): self.target.y_universe.label(z)
                for y, z in sorted(self._assignment.items())}

    def __call__(self, y):
        return self.target.y_universe.label(self._assignment[self.source.y_universe.index(y)])


def _require_shared(R, R2):
    if R.x_universe != R2.x_universe:
        raise Relation.UniverseMismatch('relations are defined on different sets X')


def _require_covered(R):
    uncovered = R.uncovered()
    if uncovered:
        raise Relation.UncoveredElement(R.y_universe.label(uncovered[0]))


def _assignment_indices(f, R, R2):
    _require_shared(R, R2)
    assignment = {}
    for y in R.y_universe:
        if y not in f:
            raise Relation.PartialAssignment('the assignment is undefined at {}'.format(y))
        assignment[R.y_universe.index(y)] = R2.y_universe.index(f[y])
    return assignment


def is_covered(R):
    return not R.uncovered()


def transpose(R):
    return Relation(R.y_universe, R.x_universe, ((y, x) for x, y in R.pairs), R.name)


def k_complex(R):
    '''Subsets of X with a common related y: the union of the full simplices on each S_y'''
    if not R.pairs:
        raise Relation.EmptyRelation('the relation has no pairs')
    supports = {R.support(y) for y in range(len(R.y_universe)) if R.support(y)}
    # Only inclusion-maximal supports need closing
    maximal = [s for s in supports if not any(s < t for t in supports)]
    return complex_from_simplices(R.x_universe, (Simplex(s) for s in maximal))


def l_complex(R):
    return k_complex(transpose(R))


def support_simplex(R, y):
    support = R.support(R.y_universe.index(y))
    if not support:
        raise Relation.UncoveredElement(y)
    return Simplex(support)


def canonical_relation(T):
    '''Membership relation between the vertices and the faces of T; its K-complex is T'''
    if T.is_empty:
        raise SimplicialComplex.EmptyComplex('the complex has no faces')
    faces = list(T)
    y_universe = Universe(helpers.set_label(T.describe(face)) for face in faces)
    pairs = ((x, j) for j, face in enumerate(faces) for x in face)
    return Relation(T.universe, y_universe, pairs)


def membership_relation(points, cover, name=None):
    '''x R U iff x in U, for a finite cover given as name -> members or a list of sets'''
    universe = points if isinstance(points, Universe) else Universe(points)
    if isinstance(cover, Mapping):
        items = list(cover.items())
    else:
        items = []
        for members in cover:
            members = universe.describe(universe.index(label) for label in members)
            items.append((helpers.set_label(members), members))
    y_universe = Universe(label for label, __ in items)
    pairs = ((universe.index(x), j) for j, (__, members) in enumerate(items) for x in members)
    return Relation(universe, y_universe, pairs, name)


def nerve(points, cover):
    return l_complex(membership_relation(points, cover))


def vietoris_complex(points, cover):
    return k_complex(membership_relation(points, cover))


def is_morphism(f, R, R2):
    assignment = _assignment_indices(f, R, R2)
    return all(R.support(y) <= R2.support(z) for y, z in assignment.items())


def induced_l_map(m):
    '''L_f: the assignment restricted to the vertices of L_Y'''
    source = m.source
    assignment = {y: z for y, z in m._assignment.items() if source.support(y)}
    return VertexMap(source.y_universe, m.target.y_universe, assignment)


def find_morphism(R, R2):
    '''f(y) = least z with S_y inside S'_z, or None when K(R) is not inside K(R2)'''
    _require_shared(R, R2)
    _require_covered(R)
    _require_covered(R2)
    assignment = {}
    for y in range(len(R.y_universe)):
        support = R.support(y)
        z = next((z for z in range(len(R2.y_universe)) if support <= R2.support(z)), None)
        if z is None:
            logger.debug('no target for %s: K(R) is not a subcomplex of K(R2)',
                         R.y_universe.label(y))
            return None
        assignment[R.y_universe.label(y)] = R2.y_universe.label(z)
    return assignment


def are_equivalent(R, R2):
    return find_morphism(R, R2) is not None and find_morphism(R2, R) is not None


def refines(V, U):
    '''Cover V refines cover U, both read as membership relations'''
    return find_morphism(V, U) is not None


def compose(f, g):
    '''g after f, for assignments given as label mappings'''
    return {y: g[z] for y, z in f.items()}


def constant_morphism(R):
    '''The morphism from R to the relation X x {*}'''
    target = Relation(R.x_universe, Universe(['*']), ((x, 0) for x in range(len(R.x_universe))))
    return RelationMorphism(R, target, {y: '*' for y in R.y_universe})
