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


import heapq
import logging
from dataclasses import dataclass

from dowker_complexes import helpers
from dowker_complexes.helpers import Error
from dowker_complexes.Poset import (
    Side,
    poset_dowker_complex,
    singleton_components)
from dowker_complexes.SimplicialComplex import (
    Simplex,
    SimplicialComplex)


__all__ = [
    'apply_step',
    'collapse_leq_to_strict',
    'CollapseSequence',
    'CollapseStep',
    'collapses_to_point',
    'free_coface',
    'greedy_collapse',
    'is_free',
    'verify_sequence']


logger = logging.getLogger(__name__)


class Collapse:

    class Error(Error):
        pass

    class NotAFace(Error):
        pass

    class NotFree(Error):

        def __init__(self, step, cofaces, index=None):
            where = '' if index is None else 'step {}: '.format(index)
            super().__init__('{}{} is not a free face of {} (proper cofaces: {})'.format(
                where, helpers.set_label(step[0]), helpers.set_label(step[1]),
                ' '.join(helpers.set_label(c) for c in cofaces) or 'none'))
            self.step = step
            self.cofaces = cofaces
            self.index = index

    class SingletonComponent(Error):

        def __init__(self, label):
            super().__init__('{} is a connected component with a single point'.format(label))
            self.label = label


@dataclass(frozen=True)
class CollapseStep:
    free_face: Simplex
    coface: Simplex

    def __post_init__(self):
        if len(self.coface) != len(self.free_face) + 1 or \
                not set(self.free_face) < set(self.coface):
            raise Collapse.Error('{} is not a facet of {}'.format(
                tuple(self.free_face), tuple(self.coface)))


@dataclass(frozen=True)
class CollapseSequence:
    initial: SimplicialComplex
    steps: tuple = ()

    def labelled_steps(self):
        describe = self.initial.describe
        return [(describe(step.free_face), describe(step.coface)) for step in self.steps]


def _proper_cofaces(faces, vertices, s):
    '''Faces of codimension one containing s'''
    members = set(s)
    return [Simplex(members | {v}) for v in vertices
            if v not in members and tuple(sorted(members | {v})) in faces]


def _free_coface(faces, vertices, s):
    cofaces = _proper_cofaces(faces, vertices, s)
    if len(cofaces) != 1 or _proper_cofaces(faces, vertices, cofaces[0]):
        return None
    return cofaces[0]


def free_coface(K, s):
    '''The only face properly containing s, when there is exactly one'''
    s = Simplex(s)
    if s not in K:
        raise Collapse.NotAFace('{} is not a face'.format(tuple(s)))
    return _free_coface(K.faces, K.vertices, s)


def is_free(K, s):
    return free_coface(K, s) is not None


def _all_cofaces(K, s):
    members = set(s)
    return sorted((f for f in K.faces if members < set(f)), key=lambda f: (len(f), f))


def apply_step(K, step, index=None):
    s, c = step.free_face, step.coface
    if s not in K or _free_coface(K.faces, K.vertices, s) != c:
        cofaces = _all_cofaces(K, s) if s in K else []
        raise Collapse.NotFree((K.describe(s), K.describe(c)),
                               [K.describe(f) for f in cofaces], index)
    return SimplicialComplex(K.universe, K.faces - {s, c})


def verify_sequence(seq):
    '''Replays the steps and returns the final complex'''
    K = seq.initial
    for index, step in enumerate(seq.steps):
        K = apply_step(K, step, index)
    return K


def _cone_steps(P, y, x0, side):
    '''Pairs {y} u A -> {y, x0} u A over the facet through y, highest dimension first'''
    reach = P.below(y) if side == Side.K else P.above(y)
    rest = sorted(reach - {y, x0})
    steps = []
    for size in range(len(rest), -1, -1):
        for subset in helpers.subsets(rest, size, size):
            free = Simplex((y,) + subset)
            steps.append(CollapseStep(free, free.with_vertex(x0)))
    return steps


def collapse_leq_to_strict(P, side):
    '''Verified sequence of elementary collapses from the complex of <= to the one of <'''
    side = Side.parse(side)
    lonely = singleton_components(P)
    if lonely:
        raise Collapse.SingletonComponent(lonely[0])
    K = poset_dowker_complex(P, False, side)
    steps = []
    for y in range(len(P)):
        if side == Side.K:
            extreme, others = P.above(y) == {y}, P.below(y) - {y}
        else:
            extreme, others = P.below(y) == {y}, P.above(y) - {y}
        if not extreme:
            continue
        steps += _cone_steps(P, y, min(others), side)
    seq = CollapseSequence(K, tuple(steps))
    final = verify_sequence(seq)
    if final != poset_dowker_complex(P, True, side):
        raise Collapse.Error('collapse did not end at the strict complex')
    logger.debug('%s-side collapse of %d faces in %d steps', side, len(K), len(steps))
    return seq


def greedy_collapse(K):
    '''Collapses the least free pair (highest dimension, then lexicographic) until none is left'''
    faces = set(K.faces)
    vertices = K.vertices
    heap = [(-len(s), s) for s in faces]
    heapq.heapify(heap)
    steps = []
    while heap:
        __, s = heapq.heappop(heap)
        if s not in faces:
            continue
        c = _free_coface(faces, vertices, s)
        if c is None:
            continue
        faces -= {s, c}
        steps.append(CollapseStep(s, c))
        # Only faces of s and c can have become free
        touched = c.boundary() + (s.boundary() if len(s) > 1 else [])
        for face in touched:
            if face in faces:
                heapq.heappush(heap, (-len(face), face))
    seq = CollapseSequence(K, tuple(steps))
    core = SimplicialComplex(K.universe, faces)
    return core, seq


def collapses_to_point(K):
    if K.is_empty:
        return False
    return greedy_collapse(K)[0].is_point
