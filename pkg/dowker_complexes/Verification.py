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
import random
import string
from dataclasses import (
    dataclass,
    field)
from itertools import product

import networkx as nx
import numpy as np

from dowker_complexes import helpers
from dowker_complexes.ClosedRelation import (
    Certificate,
    ClosedRelation,
    Verdict,
    quillen_hypothesis,
    verify_closed_relation,
    weak_hypothesis)
from dowker_complexes.Collapse import (
    Collapse,
    apply_step,
    collapse_leq_to_strict,
    collapses_to_point)
from dowker_complexes.helpers import SimpleEnum
from dowker_complexes.Homology import (
    IntegerMatrix,
    boundary_matrices,
    homology,
    same_homology,
    smith_normal_form)
from dowker_complexes.Poset import (
    Poset,
    Side,
    height,
    lattice_condition,
    maximal_elements,
    minimal_elements,
    order_complex,
    order_to_topology,
    poset_dowker_complex,
    poset_from_pairs,
    product_poset,
    realize_as_poset_k_complex,
    singleton_components)
from dowker_complexes.Relation import (
    Relation,
    canonical_relation,
    find_morphism,
    is_morphism,
    k_complex,
    l_complex)
from dowker_complexes.SimplicialComplex import (
    Simplex,
    Universe,
    boundary_complex,
    complex_from_facets,
    complex_from_simplices,
    cone_apex,
    is_subcomplex)


__all__ = [
    'all_covered_relations',
    'all_posets',
    'brute_force_morphism',
    'collapse_suite',
    'dowker_suite',
    'facet_antichains',
    'galois_suite',
    'homology_suite',
    'lattice_suite',
    'PROJECTIVE_PLANE_FACETS',
    'posets_up_to_isomorphism',
    'random_complete_complex',
    'random_covered_relation',
    'random_poset',
    'realization_suite',
    'run_suite',
    'Suite',
    'SuiteResult',
    'up_sets',
    'weak_suite']


logger = logging.getLogger(__name__)


# Six-vertex triangulation of the real projective plane
PROJECTIVE_PLANE_FACETS = (
    ('1', '2', '3'), ('1', '2', '4'), ('1', '3', '5'), ('1', '4', '6'), ('1', '5', '6'),
    ('2', '3', '6'), ('2', '4', '5'), ('2', '5', '6'), ('3', '4', '5'), ('3', '4', '6'))


class Suite(SimpleEnum):
    Dowker = 'dowker'
    Galois = 'galois'
    Collapse = 'collapse'
    Realization = 'realization'
    Lattice = 'lattice'
    Weak = 'weak'
    Homology = 'homology'


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def fail(self, message):
        logger.warning('%s: %s', self.name, message)
        self.failures.append(message)

    def as_dict(self):
        return {'name': self.name, 'checked': self.checked, 'failures': list(self.failures),
                'passed': self.passed}


def _numbers(n):
    return [str(i + 1) for i in range(n)]


def _letters(n):
    return list(string.ascii_lowercase[:n])


def _order(s):
    return len(s), sorted(s)


def up_sets(P):
    whole = frozenset(range(len(P)))
    return sorted((whole - down for down in order_to_topology(P).opens), key=_order)


def all_posets(n):
    '''Every partial order on the labels 1..n, each exactly once'''
    universe = Universe(_numbers(n))

    def extend(leq, k):
        if k == n:
            yield Poset(universe, leq)
            return
        P = Poset(Universe(universe.labels[:k]), leq)
        downs = sorted(order_to_topology(P).opens, key=_order)
        ups = up_sets(P)
        # element k sits above the down-set D and below the up-set U
        for D in downs:
            for U in ups:
                if D & U or any(u not in P.above(d) for d in D for u in U):
                    continue
                yield from extend(leq | {(k, k)} | {(d, k) for d in D} | {(k, u) for u in U},
                                  k + 1)

    yield from extend(frozenset(), 0)


def posets_up_to_isomorphism(n):
    representatives = []
    for P in all_posets(n):
        graph = P.strict_graph
        if not any(graph.number_of_edges() == other.number_of_edges() and
                   nx.is_isomorphic(graph, other) for other in representatives):
            representatives.append(graph)
            yield P


def random_poset(rng, n, p=0.4):
    labels = _numbers(n)
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return poset_from_pairs(labels, pairs)


def random_covered_relation(rng, x_universe, y_count, p=0.4):
    x_count = len(x_universe)
    pairs = set()
    for y in range(y_count):
        related = {x for x in range(x_count) if rng.random() < p}
        pairs.update((x, y) for x in (related or {rng.randrange(x_count)}))
    return Relation(x_universe, Universe(_letters(y_count)), pairs)


def all_covered_relations(x_count, y_count):
    x_universe = Universe(_numbers(x_count))
    y_universe = Universe(_letters(y_count))
    supports = list(helpers.subsets(range(x_count)))
    for choice in product(supports, repeat=y_count):
        yield Relation(x_universe, y_universe,
                       ((x, y) for y, support in enumerate(choice) for x in support))


def facet_antichains(n):
    '''Every complex on 1..n having every label as a vertex'''
    universe = Universe(_numbers(n))
    candidates = sorted((frozenset(s) for s in helpers.subsets(range(n))), key=_order)
    whole = frozenset(range(n))

    def search(start, chosen):
        if chosen and frozenset().union(*chosen) == whole:
            yield complex_from_simplices(universe, [Simplex(c) for c in chosen])
        for k in range(start, len(candidates)):
            s = candidates[k]
            if any(c <= s or s <= c for c in chosen):
                continue
            yield from search(k + 1, chosen + [s])

    yield from search(0, [])


def random_complete_complex(rng, n):
    universe = Universe(_numbers(n))
    candidates = {frozenset(rng.sample(range(n), rng.randint(1, n)))
                  for __ in range(rng.randint(1, n))}
    facets = [s for s in candidates if not any(s < t for t in candidates)]
    covered = frozenset().union(*facets)
    facets += [frozenset([v]) for v in range(n) if v not in covered]
    return complex_from_simplices(universe, [Simplex(s) for s in facets])


def brute_force_morphism(R, R2):
    '''First total assignment Y -> Z obeying the morphism law, by exhaustive search'''
    ys = list(R.y_universe)
    for targets in product(list(R2.y_universe), repeat=len(ys)):
        f = dict(zip(ys, targets))
        if is_morphism(f, R, R2):
            return f
    return None


def dowker_suite(samples=500, seed=0, exhaustive_size=3, max_size=5, poset_max_size=5,
                 poset_sample_size=6):
    result = SuiteResult(Suite.Dowker)
    rng = random.Random(seed)
    relations = [R for a in range(1, exhaustive_size + 1) for b in range(1, exhaustive_size + 1)
                 for R in all_covered_relations(a, b)]
    relations += [random_covered_relation(rng, Universe(_numbers(rng.randint(1, max_size))),
                                          rng.randint(1, max_size)) for __ in range(samples)]
    for R in relations:
        result.checked += 1
        if not same_homology(k_complex(R), l_complex(R)):
            result.fail('K and L differ for {!r}'.format(R))
    posets = [P for n in range(1, poset_max_size + 1) for P in posets_up_to_isomorphism(n)]
    posets += [random_poset(rng, poset_sample_size) for __ in range(samples // 10)]
    for P in posets:
        result.checked += 1
        K = poset_dowker_complex(P, False, Side.K)
        L = poset_dowker_complex(P, False, Side.L)
        if not same_homology(K, L):
            result.fail('K and L differ for {!r}'.format(P))
        C = order_complex(P)
        if not is_subcomplex(C, K) or not is_subcomplex(C, L):
            result.fail('C_X is not a subcomplex of K and L for {!r}'.format(P))
    return result


def galois_suite(samples=200, seed=0, max_size=4):
    result = SuiteResult(Suite.Galois)
    rng = random.Random(seed)
    for n in range(1, max_size + 1):
        for T in facet_antichains(n):
            result.checked += 1
            if k_complex(canonical_relation(T)) != T:
                result.fail('canonical relation of {} does not recover it'.format(
                    T.labelled_facets()))
    for __ in range(samples):
        x_universe = Universe(_numbers(rng.randint(1, max_size)))
        R = random_covered_relation(rng, x_universe, rng.randint(1, max_size))
        R2 = random_covered_relation(rng, x_universe, rng.randint(1, max_size))
        result.checked += 1
        found = find_morphism(R, R2)
        expected = brute_force_morphism(R, R2)
        if (found is None) != (expected is None):
            result.fail('find_morphism disagrees with search for {!r} -> {!r}'.format(R, R2))
        elif (found is not None) != is_subcomplex(k_complex(R), k_complex(R2)):
            result.fail('find_morphism disagrees with K inclusion for {!r} -> {!r}'.format(R, R2))
        elif found is not None and not is_morphism(found, R, R2):
            result.fail('find_morphism returned a non-morphism for {!r} -> {!r}'.format(R, R2))
    return result


def _check_collapse(result, P, side, every_step_homology):
    K = poset_dowker_complex(P, False, side)
    extremes = maximal_elements(P) if side == Side.K else minimal_elements(P)
    indices = {P.index(label) for label in extremes}
    for v in sorted(indices):
        if sum(1 for f in K.facets if v in f) != 1:
            result.fail('{} is not in exactly one facet ({}, {})'.format(P.label(v), P, side))
    for facet in K.facets:
        if len(indices.intersection(facet)) != 1:
            result.fail('facet {} has {} extreme elements ({}, {})'.format(
                K.describe(facet), len(indices.intersection(facet)), P, side))
    try:
        seq = collapse_leq_to_strict(P, side)
    except Collapse.Error as e:
        result.fail('{} ({}, {})'.format(e, P, side))
        return
    chi = K.euler_characteristic
    initial = homology(K).normalized()
    current = K
    for index, step in enumerate(seq.steps):
        current = apply_step(current, step, index)
        if current.euler_characteristic != chi:
            result.fail('Euler characteristic changed at step {} ({}, {})'.format(
                index, P, side))
            return
        if every_step_homology and homology(current).normalized() != initial:
            result.fail('homology changed at step {} ({}, {})'.format(index, P, side))
            return
    if current != poset_dowker_complex(P, True, side):
        result.fail('collapse did not end at the strict complex ({}, {})'.format(P, side))
    elif homology(current).normalized() != initial:
        result.fail('homology changed ({}, {})'.format(P, side))


def collapse_suite(samples=200, seed=0, max_size=5, sample_sizes=(6, 7), step_homology_size=4,
                   cone_max_size=4):
    result = SuiteResult(Suite.Collapse)
    rng = random.Random(seed)
    posets = [(P, len(P) <= step_homology_size) for n in range(2, max_size + 1)
              for P in posets_up_to_isomorphism(n)]
    posets += [(random_poset(rng, rng.choice(sample_sizes), 0.5), False)
               for __ in range(samples)]
    for P, every_step in posets:
        if singleton_components(P):
            continue
        for side in Side:
            result.checked += 1
            _check_collapse(result, P, side, every_step)
    for n in range(1, cone_max_size + 1):
        for T in facet_antichains(n):
            for K in (T, _cone(T)):
                if cone_apex(K) is None:
                    continue
                result.checked += 1
                if not collapses_to_point(K):
                    result.fail('cone {} does not collapse to a point'.format(K.labelled_facets()))
    return result


def _cone(T):
    n = len(T.universe)
    return complex_from_simplices(Universe(_numbers(n + 1)),
                                  [Simplex(facet + (n,)) for facet in T.facets])


def _has_private_vertices(T):
    facets = T.facets
    for k, facet in enumerate(facets):
        shared = set().union(*(facets[:k] + facets[k + 1:]))
        if all(v in shared for v in facet):
            return False
    return True


def _check_realization(result, T):
    result.checked += 1
    try:
        P = realize_as_poset_k_complex(T)
    except Poset.NotRealizable:
        if _has_private_vertices(T):
            result.fail('{} was rejected'.format(T.labelled_facets()))
        return
    if not _has_private_vertices(T):
        result.fail('{} was realized'.format(T.labelled_facets()))
    elif height(P) > 2 or poset_dowker_complex(P, False, Side.K) != T:
        result.fail('realization of {} is wrong'.format(T.labelled_facets()))


def realization_suite(samples=200, seed=0, max_size=4, sample_sizes=(5, 6)):
    result = SuiteResult(Suite.Realization)
    rng = random.Random(seed)
    for n in (3, 4, 5):
        result.checked += 1
        try:
            realize_as_poset_k_complex(boundary_complex(Universe(_numbers(n))))
        except Poset.NotRealizable:
            pass
        else:
            result.fail('boundary of the {}-simplex was realized'.format(n - 1))
    for n in range(1, max_size + 1):
        for T in facet_antichains(n):
            _check_realization(result, T)
    for __ in range(samples):
        _check_realization(result, random_complete_complex(rng, rng.choice(sample_sizes)))
    return result


def lattice_suite(max_size=5):
    result = SuiteResult(Suite.Lattice)
    for n in range(1, max_size + 1):
        for P in posets_up_to_isomorphism(n):
            if not lattice_condition(P):
                continue
            result.checked += 1
            if not same_homology(order_complex(P), poset_dowker_complex(P, False, Side.L)):
                result.fail('C_X and L differ for {!r}'.format(P))
    return result


def weak_suite(max_size=3):
    result = SuiteResult(Suite.Weak)
    posets = [P for n in range(1, max_size + 1) for P in posets_up_to_isomorphism(n)]
    for X, Y in product(posets, repeat=2):
        m = len(Y)
        for up in up_sets(product_poset(X, Y)):
            pairs = {divmod(k, m) for k in up}
            if {x for x, __ in pairs} != set(range(len(X))) or \
                    {y for __, y in pairs} != set(range(m)):
                continue
            R = ClosedRelation(X, Y, pairs)
            if not weak_hypothesis(R).holds:
                continue
            result.checked += 1
            report = verify_closed_relation(R, 'weak')
            if report.verdict != Verdict.Confirmed:
                result.fail('{} for {} between {!r} and {!r}'.format(
                    report.verdict, R.labelled_pairs(), X, Y))
            quillen = quillen_hypothesis(R)
            if any(f.order_certificate != Certificate.Cone for f in quillen.fibers):
                result.fail('a fiber with a maximum has no cone apex: {}'.format(
                    R.labelled_pairs()))
    return result


def _random_matrix(rng, max_size=6, bound=9):
    rows, cols = rng.randint(1, max_size), rng.randint(1, max_size)
    return IntegerMatrix(rows, cols, [[rng.randint(-bound, bound) for __ in range(cols)]
                                      for __ in range(rows)])


def _elementary(rng, n):
    E = IntegerMatrix(n, n, np.identity(n, dtype=int))
    if n > 1:
        i, j = rng.sample(range(n), 2)
        E[i, j] = rng.choice((-2, -1, 1, 2))
    return E


def homology_suite(samples=1000, seed=0, max_size=4):
    result = SuiteResult(Suite.Homology)
    rng = random.Random(seed)
    corpus = [T for n in range(1, max_size + 1) for T in facet_antichains(n)]
    corpus += [boundary_complex(Universe(_numbers(n))) for n in range(2, 6)]
    projective_plane = complex_from_facets(Universe(_numbers(6)), PROJECTIVE_PLANE_FACETS)
    corpus.append(projective_plane)
    for T in corpus:
        result.checked += 1
        matrices = boundary_matrices(T)
        if any(not (a @ b).is_zero() for a, b in zip(matrices, matrices[1:])):
            result.fail('boundary of a boundary is not zero on {}'.format(T.labelled_facets()))
        if homology(T).euler_characteristic != T.euler_characteristic:
            result.fail('Euler characteristic mismatch on {}'.format(T.labelled_facets()))
    if homology(projective_plane).torsion != ((), (2,), ()):
        result.fail('projective plane torsion is {}'.format(homology(projective_plane).torsion))
    for __ in range(samples):
        M = _random_matrix(rng)
        result.checked += 1
        d = smith_normal_form(M)
        if any(v <= 0 for v in d) or any(b % a for a, b in zip(d, d[1:])):
            result.fail('{} has invariant factors {}'.format(M.tolist(), d))
        elif len(d) != np.linalg.matrix_rank(M.array.astype(float)):
            result.fail('{} has rank {}'.format(M.tolist(), len(d)))
        elif smith_normal_form(_elementary(rng, M.rows) @ M @ _elementary(rng, M.cols)) != d:
            result.fail('invariant factors of {} change under unimodular moves'.format(
                M.tolist()))
    return result


def run_suite(name, config):
    name = Suite.parse(name)
    seed = config.get_int('verify', 'seed')
    if name == Suite.Dowker:
        result = dowker_suite(config.get_int('verify', 'dowker-samples'), seed)
    elif name == Suite.Galois:
        result = galois_suite(config.get_int('verify', 'galois-samples'), seed)
    elif name == Suite.Collapse:
        result = collapse_suite(config.get_int('verify', 'collapse-samples'), seed,
                                config.get_int('verify', 'collapse-max-size'))
    elif name == Suite.Realization:
        result = realization_suite(config.get_int('verify', 'realization-samples'), seed)
    elif name == Suite.Lattice:
        result = lattice_suite(config.get_int('verify', 'lattice-max-size'))
    elif name == Suite.Weak:
        result = weak_suite()
    else:
        result = homology_suite(config.get_int('verify', 'matrix-samples'), seed)
    logger.info('%s suite: %d checked, %d failures', name, result.checked, len(result.failures))
    return result
