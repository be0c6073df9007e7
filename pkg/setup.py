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
import sys

from setuptools import setup
from setuptools.command.build_py import build_py


def write_config(libdir, values):
    filename = os.path.join(libdir, 'dowker_complexes/installation_config.py')
    try:
        os.makedirs(os.path.dirname(filename), exist_ok=True)
        with open(filename, 'w') as f:
            f.write('__all__ = [%s]\n' % ', '.join('"%s"' % k for k in sorted(values)))
            for k, v in sorted(values.items()):
                f.write('%s = %s\n' % (k, v))
    except OSError as e:
        print("ERROR: Can't write installation config: %s" % e)
        sys.exit(1)


class BuildWithInstallationConfig(build_py):

    user_options = build_py.user_options + \
        [('config-path=', None, 'system-wide configuration file')]

    def initialize_options(self):
        super().initialize_options()
        self.config_path = None

    def run(self):
        super().run()
        config_path = self.config_path or '/etc/dowker-complexes/dowker-complexes.conf'
        values = {'__version__': "'%s'" % self.distribution.get_version(),
                  '__config_path__': '"%s"' % config_path}
        write_config(self.build_lib, values)


setup(
    name='dowker-complexes',
    version='1.0.0',
    license='GPL-3',
    author='Dowker Complexes developers',
    description='Dowker complexes of relations and finite posets',
    long_description='Dowker K and L complexes, finite spaces, elementary collapses '
                     'and integer homology, with a command line interface',
    packages=['dowker_complexes'],
    python_requires='>=3.8',
    install_requires=['numpy', 'networkx'],
    extras_require={
        'xdg': ['PyGObject'],
        'test': ['pytest', 'hypothesis', 'sympy']},
    entry_points={'console_scripts': ['dowker-complexes = dowker_complexes:main']},
    cmdclass={'build_py': BuildWithInstallationConfig},
)
