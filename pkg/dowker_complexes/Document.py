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

import json
import logging
import re
from dataclasses import dataclass
from functools import singledispatch

import networkx as nx

from dowker_complexes import helpers
from dowker_complexes.helpers import (
    Error,
    SimpleEnum)
from dowker_complexes.Collapse import (
    CollapseSequence,
    CollapseStep)
from dowker_complexes.Homology import HomologyProfile
from dowker_complexes.Poset import (
    FiniteTopology,
    Poset,
    poset_from_pairs)
from dowker_complexes.Relation import (
    Relation,
    membership_relation)
from dowker_complexes.SimplicialComplex import (
    SimplicialComplex,
    Universe,
    complex_from_facets)


__all__ = [
    'Document',
    'from_complex',
    'from_poset',
    'from_relation',
    'from_space',
    'Kind',
    'parse',
    'parse_steps',
    'read_document',
    'read_steps',
    'serialize',
    'to_complex',
    'to_json_value',
    'to_poset',
    'to_relation',
    'to_space',
    'write_report']


logger = logging.getLogger(__name__)


class Kind(SimpleEnum):
    Poset = 'poset'
    Relation = 'relation'
    Complex = 'complex'
    Space = 'space'


# A header line "<kind> [name]", then one record per line; "#" starts a comment
# keyword -> (minimum, maximum) number of labels; None = unbounded
GRAMMAR = {
    Kind.Poset: {'element': (1, 1), 'le': (2, 2)},
    Kind.Relation: {'xelement': (1, 1), 'yelement': (1, 1), 'pair': (2, 2)},
    Kind.Complex: {'vertex': (1, 1), 'facet': (1, None)},
    Kind.Space: {'point': (1, 1), 'open': (0, None)}}

# keyword -> the declaring keyword each argument must refer to
REFERENCES = {
    'le': ('element', 'element'),
    'pair': ('xelement', 'yelement'),
    'open': ('point',)}


@dataclass(frozen=True)
class Document:
    kind: str
    name: str = None
    records: tuple = ()

    class ParseError(Error):
        exit_status = 1

        def __init__(self, line, column, message, source=None):
            where = '' if source is None else '{}: '.format(source)
            super().__init__('{}line {}, column {}: {}'.format(where, line, column, message))
            self.source = source
            self.line = line
            self.column = column
            self.message = message

    def values(self, keyword):
        return [args for key, args in self.records if key == keyword]

    def labels(self, keyword):
        return [args[0] for args in self.values(keyword)]


def _tokens(line):
    return [(m.group(), m.start() + 1) for m in re.finditer(r'\S+', line)]


def parse(text, source=None):
    def error(line, column, message):
        return Document.ParseError(line, column, message, source)

    kind = name = None
    records = []
    declared = {}
    for number, line in enumerate(text.splitlines(), 1):
        tokens = _tokens(line)
        if not tokens or tokens[0][0].startswith('#'):
            continue
        if kind is None:
            if tokens[0][0] not in Kind:
                raise error(number, tokens[0][1],
                            'unknown document kind {!r}'.format(tokens[0][0]))
            if len(tokens) > 2:
                raise error(number, tokens[2][1], 'unexpected text after the name')
            kind = tokens[0][0]
            name = tokens[1][0] if len(tokens) == 2 else None
            continue
        (keyword, column), args = tokens[0], tokens[1:]
        grammar = GRAMMAR[kind]
        if keyword not in grammar:
            raise error(number, column,
                        'unknown keyword {!r} in a {} document'.format(keyword, kind))
        low, high = grammar[keyword]
        if len(args) < low or (high is not None and len(args) > high):
            expected = low if low == high else 'at least {}'.format(low)
            raise error(number, column,
                        '{} takes {} label(s), got {}'.format(keyword, expected, len(args)))
        if high == 1:
            seen = declared.setdefault(keyword, set())
            label, position = args[0]
            if label in seen:
                raise error(number, position, 'duplicate {} {}'.format(keyword, label))
            seen.add(label)
        references = REFERENCES.get(keyword)
        if references is not None:
            for k, (label, position) in enumerate(args):
                declaration = references[min(k, len(references) - 1)]
                if label not in declared.get(declaration, ()):
                    raise error(number, position,
                                'undeclared {} {}'.format(declaration, label))
        records.append((keyword, tuple(label for label, __ in args)))
    if kind is None:
        raise error(1, 1, 'missing document header')
    logger.debug('parsed %s document %s with %d records', kind, name or source, len(records))
    return Document(kind, name, tuple(records))


def _read_text(path):
    with open(path, 'rb') as f:
        data = f.read()
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        line_start = data.rfind(b'\n', 0, e.start) + 1
        raise Document.ParseError(data.count(b'\n', 0, e.start) + 1, e.start - line_start + 1,
                                  'invalid UTF-8', path) from None


def read_document(path):
    return parse(_read_text(path), source=path)


def parse_steps(text, K, source=None):
    '''Collapse steps from a JSON report {"steps": [[free, coface], ...]} over the complex K'''
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise Document.ParseError(e.lineno, e.colno, e.msg, source) from None
    steps = data.get('steps') if isinstance(data, dict) else None
    if not isinstance(steps, list) or not all(
            isinstance(step, list) and len(step) == 2 and
            all(isinstance(face, list) and face for face in step) for step in steps):
        raise Document.ParseError(1, 1, 'expected {"steps": [[free face, coface], ...]}', source)
    universe = K.universe
    try:
        steps = tuple(CollapseStep(universe.simplex(free), universe.simplex(coface))
                      for free, coface in steps)
    except (Universe.UnknownLabel, TypeError) as e:
        raise Document.ParseError(1, 1, 'step outside the complex: {}'.format(e), source) from None
    return CollapseSequence(K, steps)


def read_steps(path, K):
    return parse_steps(_read_text(path), K, source=path)


def serialize(document):
    header = document.kind if document.name is None else '{} {}'.format(document.kind,
                                                                         document.name)
    lines = [header] + [' '.join((keyword,) + args) for keyword, args in document.records]
    return '\n'.join(lines) + '\n'


def _require(document, *kinds):
    if document.kind not in kinds:
        raise Document.ParseError(1, 1, 'expected a {} document, got {}'.format(
            ' or '.join(kinds), document.kind))


def to_poset(document):
    _require(document, Kind.Poset)
    return poset_from_pairs(document.labels('element'), document.values('le'), document.name)


def to_space(document):
    _require(document, Kind.Space)
    return FiniteTopology.from_labels(document.labels('point'), document.values('open'),
                                      document.name)


def to_relation(document):
    _require(document, Kind.Relation, Kind.Space)
    if document.kind == Kind.Space:
        T = to_space(document)
        cover = {helpers.set_label(o): o for o in T.labelled_opens()}
        return membership_relation(T.universe, cover, document.name)
    return Relation.from_labels(document.labels('xelement'), document.labels('yelement'),
                                document.values('pair'), document.name)


def to_complex(document):
    '''Universe = declared vertices, then facet vertices by first appearance'''
    _require(document, Kind.Complex)
    labels = list(document.labels('vertex'))
    known = set(labels)
    for facet in document.values('facet'):
        for label in facet:
            if label not in known:
                known.add(label)
                labels.append(label)
    return complex_from_facets(Universe(labels), document.values('facet'))


def from_poset(P):
    hasse = nx.transitive_reduction(P.strict_graph)
    records = [('element', (label,)) for label in P.universe]
    records += [('le', (P.label(a), P.label(b))) for a, b in sorted(hasse.edges())]
    return Document(Kind.Poset, P.name, tuple(records))


def from_relation(R):
    records = [('xelement', (x,)) for x in R.x_universe]
    records += [('yelement', (y,)) for y in R.y_universe]
    records += [('pair', pair) for pair in R.labelled_pairs()]
    return Document(Kind.Relation, R.name, tuple(records))


def from_complex(K, name=None):
    facets = K.labelled_facets()
    records = [('facet', facet) for facet in facets]
    implied = []
    for facet in facets:
        implied += [label for label in facet if label not in implied]
    if implied != list(K.universe):
        records = [('vertex', (label,)) for label in K.universe] + records
    return Document(Kind.Complex, name, tuple(records))


def from_space(T):
    records = [('point', (p,)) for p in T.universe]
    records += [('open', o) for o in T.labelled_opens()]
    return Document(Kind.Space, T.name, tuple(records))


@singledispatch
def to_json_value(value):
    if hasattr(value, 'as_dict'):
        return to_json_value(value.as_dict())
    raise TypeError('cannot report a {}'.format(type(value).__name__))


@to_json_value.register(str)
@to_json_value.register(bool)
@to_json_value.register(int)
@to_json_value.register(type(None))
def _(value):
    return value


@to_json_value.register(list)
@to_json_value.register(tuple)
def _(value):
    return [to_json_value(v) for v in value]


@to_json_value.register(dict)
def _(value):
    return {str(k): to_json_value(v) for k, v in value.items()}


@to_json_value.register(HomologyProfile)
def _(value):
    return value.as_dict()


@to_json_value.register(SimplicialComplex)
def _(value):
    return {'dimension': value.dimension,
            'facets': [list(f) for f in value.labelled_facets()],
            'vertices': list(value.describe(value.vertices))}


@to_json_value.register(CollapseSequence)
def _(value):
    return {'steps': [[list(s), list(c)] for s, c in value.labelled_steps()]}


@to_json_value.register(Poset)
def _(value):
    return {'elements': list(value.universe),
            'le': [list(p) for p in value.labelled_pairs(strict=True)]}


@to_json_value.register(Relation)
def _(value):
    return {'x': list(value.x_universe), 'y': list(value.y_universe),
            'pairs': [list(p) for p in value.labelled_pairs()]}


@to_json_value.register(FiniteTopology)
def _(value):
    return {'points': list(value.universe), 'opens': [list(o) for o in value.labelled_opens()]}


def write_report(value, indent=None):
    separators = (',', ':') if indent is None else (',', ': ')
    return json.dumps(to_json_value(value), sort_keys=True, indent=indent,
                      separators=separators) + '\n'
