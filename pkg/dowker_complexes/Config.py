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

import configparser
import logging
import os
from collections import OrderedDict

try:
    from gi.repository import GLib
except ImportError:
    GLib = None

from dowker_complexes import helpers


__all__ = ['Config']


logger = logging.getLogger(__name__)


class Config:

    DEFAULTS = OrderedDict([
        ('report', OrderedDict([('indent', '')])),
        ('logging', OrderedDict([('level', 'warning')])),
        ('verify', OrderedDict([
            ('seed', '0'),
            ('dowker-samples', '500'),
            ('collapse-samples', '200'),
            ('realization-samples', '200'),
            ('galois-samples', '200'),
            ('matrix-samples', '1000'),
            ('lattice-max-size', '5'),
            ('collapse-max-size', '5')]))])

    class ConfigGroup:

        def __init__(self, config):
            self._config = config
            self._items = OrderedDict()

        def __iter__(self):
            return iter(self._items)

        def __contains__(self, item):
            return item in self._items

        def __getitem__(self, item):
            values = self._items.get(item)
            return values[-1][1] if values else None

    def __init__(self, base_dir='dowker-complexes', base_name='dowker-complexes.conf',
                 extra_path=None):
        self._base_dir = base_dir
        self._base_name = base_name
        self._extra_path = extra_path
        self._groups = OrderedDict()

    def paths(self):
        '''Candidate files, lowest precedence first'''
        dirs = []
        if GLib is not None:
            dirs += reversed(GLib.get_system_config_dirs())
            dirs.append(GLib.get_user_config_dir())
        files = [os.path.join(path, self._base_dir, self._base_name) for path in dirs]
        files.append(helpers.get_config_path())
        if self._extra_path:
            files.append(os.path.abspath(self._extra_path))
        return files

    def read(self):
        self._groups.clear()
        for groupname, values in self.DEFAULTS.items():
            group = self.add_group(groupname)
            for key, value in values.items():
                group._items[key] = [(None, value)]

        for path in filter(os.path.isfile, self.paths()):
            config_file = configparser.RawConfigParser(strict=False, allow_no_value=True)
            try:
                if not config_file.read(path, encoding='utf-8'):
                    continue
            except (configparser.Error, UnicodeDecodeError) as e:
                logger.warning('%s: %s', path, e)
                continue

            for groupname, values in config_file.items():
                if groupname == 'DEFAULT':
                    continue

                group = self.add_group(groupname)
                for key, value in values.items():
                    if key.startswith('-'):
                        # Unset: fall back to the previous layer
                        layers = group._items.get(key[1:])
                        if layers and len(layers) > 1:
                            layers.pop()
                        continue
                    if value is None:
                        logger.warning('[%s] %s: Keys without values are not allowed',
                                       groupname, key)
                        continue
                    group._items.setdefault(key, []).append((path, value))
            logger.debug('read configuration from %s', path)
        return self

    def add_group(self, name):
        return self._groups.setdefault(name, Config.ConfigGroup(self))

    def source(self, group, key):
        '''File the effective value came from, None for a built-in default'''
        values = self._groups[group]._items.get(key) if group in self._groups else None
        return values[-1][0] if values else None

    def get_int(self, group, key):
        value = self[group, key]
        try:
            return int(value)
        except (TypeError, ValueError):
            fallback = self.DEFAULTS.get(group, {}).get(key)
            logger.warning('[%s] %s: %r is not an integer, using %s', group, key, value, fallback)
            return int(fallback) if fallback is not None else None

    def as_dict(self):
        return {g: {k: {'value': value, 'source': path} for k, (path, value) in
                    ((k, group._items[k][-1]) for k in group)}
                for g, group in self._groups.items()}

    def __iter__(self):
        return iter(self._groups)

    def __getitem__(self, item):
        if isinstance(item, tuple):
            group = self._groups.get(item[0])
            return group[item[1]] if group else None
        return self._groups.get(item)
