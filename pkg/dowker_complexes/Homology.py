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
from dataclasses import dataclass

import numpy as np


__all__ = [
    'boundary_matrices',
    'homology',
    'HomologyProfile',
    'IntegerMatrix',
    'rank',
    'same_homology',
    'smith_normal_form']


logger = logging.getLogger(__name__)


class IntegerMatrix:

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self._array = np.zeros((rows, cols), dtype=object)
        else:
            self._array = np.array([int(v) for v in np.ravel(np.array(entries, dtype=object))],
                                   dtype=object).reshape(rows, cols)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, rows or None)

    @property
    def array(self):
        return self._array.copy()

    def tolist(self):
        return self._array.tolist()

    def is_zero(self):
        return not any(v for v in self._array.flat)

    def __getitem__(self, item):
        return self._array[item]

    def __setitem__(self, item, value):
        self._array[item] = value

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError('cannot multiply {}x{} by {}x{}'.format(
                self.rows, self.cols, other.rows, other.cols))
        product = IntegerMatrix(self.rows, other.cols)
        for i in range(self.rows):
            for j in range(other.cols):
                product[i, j] = sum(self._array[i, k] * other._array[k, j]
                                    for k in range(self.cols))
        return product

    def __eq__(self, other):
        return (isinstance(other, IntegerMatrix) and self._array.shape == other._array.shape and
                self._array.tolist() == other._array.tolist())

    def __repr__(self):
        return 'IntegerMatrix({})'.format(self._array.tolist())


@dataclass(frozen=True)
class HomologyProfile:
    '''Betti numbers and torsion coefficients indexed by dimension'''
    betti: tuple = ()
    torsion: tuple = ()

    @property
    def dimension(self):
        return len(self.betti) - 1

    @property
    def euler_characteristic(self):
        return sum((-1) ** n * b for n, b in enumerate(self.betti))

    @property
    def reduced_betti(self):
        if not self.betti:
            return ()
        return (self.betti[0] - 1,) + self.betti[1:]

    def normalized(self):
        n = len(self.betti)
        while n > 1 and not self.betti[n - 1] and not self.torsion[n - 1]:
            n -= 1
        return HomologyProfile(self.betti[:n], self.torsion[:n])

    def as_dict(self):
        return {'betti': list(self.betti), 'torsion': [list(t) for t in self.torsion]}


def boundary_matrices(K):
    '''[d_1, ..., d_dim]; d_n has a row per (n-1)-face and a column per n-face'''
    matrices = []
    previous = K.faces_of_dimension(0)
    for n in range(1, K.dimension + 1):
        current = K.faces_of_dimension(n)
        row = {face: i for i, face in enumerate(previous)}
        matrix = IntegerMatrix(len(previous), len(current))
        for j, face in enumerate(current):
            for i, sub in enumerate(face.boundary()):
                matrix[row[sub], j] = (-1) ** i
        matrices.append(matrix)
        previous = current
    return matrices


def _smallest_entry(a, t):
    best = None
    for (r, c), value in np.ndenumerate(a[t:, t:]):
        if value and (best is None or abs(value) < best[0]):
            best = (abs(value), r + t, c + t)
    return best


def smith_normal_form(matrix):
    '''Invariant factors d_1 | d_2 | ... | d_r, all positive, r = rank'''
    a = matrix.array
    rows, cols = a.shape
    diagonal = []
    t = 0
    while t < min(rows, cols):
        pivot = _smallest_entry(a, t)
        if pivot is None:
            break
        while True:
            __, i, j = pivot
            a[[t, i], :] = a[[i, t], :]
            a[:, [t, j]] = a[:, [j, t]]
            p = a[t, t]
            for r in range(t + 1, rows):
                q = a[r, t] // p
                if q:
                    a[r, t:] = a[r, t:] - q * a[t, t:]
            for c in range(t + 1, cols):
                q = a[t, c] // p
                if q:
                    a[t:, c] = a[t:, c] - q * a[t:, t]
            if any(a[t + 1:, t]) or any(a[t, t + 1:]):
                # A remainder smaller than p is left; it becomes the pivot
                pivot = _smallest_entry(a, t)
                continue
            rest = next(((r, c) for r in range(t + 1, rows) for c in range(t + 1, cols)
                         if a[r, c] % p), None)
            if rest is None:
                break
            a[t, t:] = a[t, t:] + a[rest[0], t:]
            pivot = (abs(p), t, t)
        diagonal.append(abs(a[t, t]))
        t += 1
    return tuple(diagonal)


def rank(matrix):
    return len(smith_normal_form(matrix))


def homology(K):
    if K.is_empty:
        return HomologyProfile()
    faces = K.f_vector
    invariants = [smith_normal_form(m) for m in boundary_matrices(K)]
    # ranks[n] is the rank of d_n; d_0 and d_{dim+1} vanish
    ranks = [0] + [len(d) for d in invariants] + [0]
    betti = tuple(faces[n] - ranks[n] - ranks[n + 1] for n in range(len(faces)))
    torsion = tuple(tuple(d for d in invariants[n] if d > 1) if n < len(invariants) else ()
                    for n in range(len(faces)))
    logger.debug('homology of %d faces: betti %s torsion %s', len(K), betti, torsion)
    return HomologyProfile(betti, torsion)


def same_homology(A, B):
    return homology(A).normalized() == homology(B).normalized()
