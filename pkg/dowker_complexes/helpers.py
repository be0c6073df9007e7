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


import os
import re
from itertools import (
    chain,
    combinations)


__license__ = 'GPL-3'
__version__ = 'dev'
__config_path__ = 'dowker-complexes.conf'


try:
    from . installation_config import (
        __version__,
        __config_path__)
except ImportError:
    pass


__all__ = [
    'Error',
    'get_config_path',
    'get_version',
    'pair_label',
    'set_label',
    'SimpleEnum',
    'subsets']


def get_config_path():
    return os.path.abspath(__config_path__)


def get_version():
    return __version__


def subsets(items, min_size=1, max_size=None):
    '''All subsets of items as tuples, by increasing size, in input order'''
    items = tuple(items)
    if max_size is None:
        max_size = len(items)
    return chain.from_iterable(combinations(items, k) for k in range(min_size, max_size + 1))


def _escape(label):
    return re.sub(r'([\\,(){}])', r'\\\1', label)


def pair_label(x, y):
    '''Label of a pair; distinct pairs get distinct labels'''
    return '({},{})'.format(_escape(x), _escape(y))


def set_label(labels):
    return '{' + ','.join(map(_escape, labels)) + '}'


class Error(Exception):
    '''Base class for all errors raised by dowker_complexes'''

    # 1 = parse/usage error, 2 = precondition violated
    exit_status = 2


class SimpleEnumMeta(type):

    def __new__(mcs, cls, bases, classdict):
        obj = super().__new__(mcs, cls, bases, classdict)
        obj._dict = {k: v for k, v in classdict.items() if obj._accept_member_(k, v)}
        return obj

    def __contains__(self, value):
        return value in self._dict.values()

    def __iter__(self):
        return iter(self._dict.values())


class SimpleEnum(metaclass=SimpleEnumMeta):
    _dict = None

    class Invalid(Error):
        exit_status = 1

    @classmethod
    def _accept_member_(cls, name, value):
        return not name.startswith('_') and not name.endswith('_') and isinstance(value, str)

    @classmethod
    def parse(cls, value):
        if isinstance(value, str) and value.lower() in cls:
            return value.lower()
        raise SimpleEnum.Invalid('{!r} is not one of: {}'.format(value, ', '.join(cls)))
