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

import argparse
import logging
import sys
from locale import gettext as _

from dowker_complexes import helpers
from dowker_complexes.ClosedRelation import (
    ClosedRelation,
    Mode,
    verify_closed_relation)
from dowker_complexes.Collapse import (
    collapse_leq_to_strict,
    greedy_collapse,
    verify_sequence)
from dowker_complexes.Document import (
    read_document,
    read_steps,
    to_complex,
    to_json_value,
    to_poset,
    to_relation,
    to_space)
from dowker_complexes.Homology import homology
from dowker_complexes.Poset import (
    Side,
    lattice_condition,
    order_complex,
    order_to_topology,
    poset_dowker_complex,
    realize_as_poset_k_complex,
    realize_as_poset_l_complex,
    topology_to_order)
from dowker_complexes.Relation import (
    are_equivalent,
    canonical_relation,
    find_morphism,
    k_complex,
    l_complex)
from dowker_complexes.Verification import (
    Suite,
    run_suite)


__all__ = ['ArgumentParser', 'build_parser', 'UsageError']


logger = logging.getLogger(__name__)


class UsageError(helpers.Error):
    exit_status = 1


class ArgumentParser(argparse.ArgumentParser):
    '''Usage errors exit with status 1'''

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, _('{prog}: error: {message}\n').format(prog=self.prog, message=message))


def _relation(path):
    return to_relation(read_document(path))


def _poset(path):
    return to_poset(read_document(path))


def _complex(path):
    return to_complex(read_document(path))


def _profiles(a, b):
    first, second = homology(a), homology(b)
    return {'a': first, 'b': second, 'same': first.normalized() == second.normalized()}


def dowker_k(args, config):
    return k_complex(_relation(args.relation))


def dowker_l(args, config):
    return l_complex(_relation(args.relation))


def dowker_morphism(args, config):
    f = find_morphism(_relation(args.source), _relation(args.target))
    return {'exists': f is not None, 'assignment': f}


def dowker_equivalent(args, config):
    R, R2 = _relation(args.a), _relation(args.b)
    return {'equivalent': are_equivalent(R, R2),
            'forward': find_morphism(R, R2), 'backward': find_morphism(R2, R)}


def dowker_canonical(args, config):
    return canonical_relation(_complex(args.complex))


def poset_complex(args, config):
    P = _poset(args.poset)
    if args.which == 'order-complex':
        return order_complex(P)
    side, __, strict = args.which.partition('-')
    return poset_dowker_complex(P, bool(strict), side)


def poset_realize(args, config):
    T = _complex(args.complex)
    if Side.parse(args.side) == Side.L:
        return realize_as_poset_l_complex(T)
    return realize_as_poset_k_complex(T)


def poset_lattice_check(args, config):
    P = _poset(args.poset)
    report = _profiles(order_complex(P), poset_dowker_complex(P, False, Side.L))
    report['lattice_condition'] = lattice_condition(P)
    return report


def poset_to_topology(args, config):
    return order_to_topology(_poset(args.poset))


def poset_from_topology(args, config):
    return topology_to_order(to_space(read_document(args.space)))


def collapse_leq_strict(args, config):
    seq = collapse_leq_to_strict(_poset(args.poset), args.side)
    return dict(to_json_value(seq), final=verify_sequence(seq))


def collapse_greedy(args, config):
    core, seq = greedy_collapse(_complex(args.complex))
    return dict(to_json_value(seq), core=core, collapses_to_point=core.is_point)


def collapse_verify(args, config):
    seq = read_steps(args.steps, _complex(args.complex))
    return {'valid': True, 'final': verify_sequence(seq)}


def homology_command(args, config):
    if args.same:
        if not args.a or not args.b:
            raise UsageError(_('homology same needs --a and --b'))
        return _profiles(_complex(args.a), _complex(args.b))
    if not args.complex:
        raise UsageError(_('homology needs --complex'))
    return homology(_complex(args.complex))


def closed_verify(args, config):
    X, Y = _poset(args.xposet), _poset(args.yposet)
    R = ClosedRelation.from_labels(X, Y, _relation(args.relation).labelled_pairs())
    return verify_closed_relation(R, args.mode)


def verify_dowker(args, config):
    R = _relation(args.relation)
    return _profiles(k_complex(R), l_complex(R))


def verify_suite(args, config):
    return run_suite(args.name, config)


def show_config(args, config):
    return config


def build_parser():
    parser = ArgumentParser(prog='dowker-complexes',
                            description=_('Dowker complexes of relations and finite posets'))
    parser.add_argument('--version', action='version', version=helpers.get_version())
    parser.add_argument('--config', metavar='PATH', help=_('additional configuration file'))
    parser.add_argument('--log-level', choices=('debug', 'info', 'warning', 'error'),
                        help=_('override [logging] level'))
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    dowker = commands.add_parser('dowker', help=_('K and L complexes of a relation'))
    dowker_commands = dowker.add_subparsers(dest='action', metavar='ACTION')
    dowker_commands.required = True
    for name, func in (('k', dowker_k), ('l', dowker_l)):
        sub = dowker_commands.add_parser(name)
        sub.add_argument('--relation', required=True, metavar='FILE')
        sub.set_defaults(func=func)
    sub = dowker_commands.add_parser('morphism', help=_('least morphism between relations'))
    sub.add_argument('--from', dest='source', required=True, metavar='FILE')
    sub.add_argument('--to', dest='target', required=True, metavar='FILE')
    sub.set_defaults(func=dowker_morphism)
    sub = dowker_commands.add_parser('equivalent')
    sub.add_argument('--a', required=True, metavar='FILE')
    sub.add_argument('--b', required=True, metavar='FILE')
    sub.set_defaults(func=dowker_equivalent)
    sub = dowker_commands.add_parser('canonical', help=_('canonical relation of a complex'))
    sub.add_argument('--complex', required=True, metavar='FILE')
    sub.set_defaults(func=dowker_canonical)

    poset = commands.add_parser('poset', help=_('finite posets and spaces'))
    poset_commands = poset.add_subparsers(dest='action', metavar='ACTION')
    poset_commands.required = True
    for name in ('order-complex', 'k', 'l', 'k-strict', 'l-strict'):
        sub = poset_commands.add_parser(name)
        sub.add_argument('--poset', required=True, metavar='FILE')
        sub.set_defaults(func=poset_complex, which=name)
    sub = poset_commands.add_parser('realize', help=_('length-2 poset with a given complex'))
    sub.add_argument('--complex', required=True, metavar='FILE')
    sub.add_argument('--side', choices=tuple(Side), default=Side.K)
    sub.set_defaults(func=poset_realize)
    sub = poset_commands.add_parser('lattice-check')
    sub.add_argument('--poset', required=True, metavar='FILE')
    sub.set_defaults(func=poset_lattice_check)
    sub = poset_commands.add_parser('to-topology')
    sub.add_argument('--poset', required=True, metavar='FILE')
    sub.set_defaults(func=poset_to_topology)
    sub = poset_commands.add_parser('from-topology')
    sub.add_argument('--space', required=True, metavar='FILE')
    sub.set_defaults(func=poset_from_topology)

    collapse = commands.add_parser('collapse', help=_('elementary collapses'))
    collapse_commands = collapse.add_subparsers(dest='action', metavar='ACTION')
    collapse_commands.required = True
    sub = collapse_commands.add_parser('leq-strict')
    sub.add_argument('--poset', required=True, metavar='FILE')
    sub.add_argument('--side', choices=tuple(Side), default=Side.K)
    sub.set_defaults(func=collapse_leq_strict)
    sub = collapse_commands.add_parser('greedy')
    sub.add_argument('--complex', required=True, metavar='FILE')
    sub.set_defaults(func=collapse_greedy)
    sub = collapse_commands.add_parser('verify')
    sub.add_argument('--complex', required=True, metavar='FILE')
    sub.add_argument('--steps', required=True, metavar='FILE')
    sub.set_defaults(func=collapse_verify)

    sub = commands.add_parser('homology', help=_('integer homology of complexes'))
    sub.add_argument('same', nargs='?', choices=('same',), help=_('compare two complexes'))
    sub.add_argument('--complex', metavar='FILE')
    sub.add_argument('--a', metavar='FILE')
    sub.add_argument('--b', metavar='FILE')
    sub.set_defaults(func=homology_command)

    closed = commands.add_parser('closed', help=_('closed relations between posets'))
    closed_commands = closed.add_subparsers(dest='action', metavar='ACTION')
    closed_commands.required = True
    sub = closed_commands.add_parser('verify')
    sub.add_argument('--xposet', required=True, metavar='FILE')
    sub.add_argument('--yposet', required=True, metavar='FILE')
    sub.add_argument('--relation', required=True, metavar='FILE')
    sub.add_argument('--mode', choices=tuple(Mode), required=True)
    sub.set_defaults(func=closed_verify)

    verify = commands.add_parser('verify', help=_('check theorem instances'))
    verify_commands = verify.add_subparsers(dest='action', metavar='ACTION')
    verify_commands.required = True
    sub = verify_commands.add_parser('dowker', help=_('compare homology of K and L'))
    sub.add_argument('--relation', required=True, metavar='FILE')
    sub.set_defaults(func=verify_dowker)
    sub = verify_commands.add_parser('suite', help=_('run a property suite'))
    sub.add_argument('name', choices=tuple(Suite))
    sub.set_defaults(func=verify_suite)

    sub = commands.add_parser('config', help=_('show effective settings'))
    sub.set_defaults(func=show_config)
    return parser
