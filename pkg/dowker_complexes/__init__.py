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


def main(argv=None):
    import locale
    import logging
    import sys
    from locale import gettext as _

    from dowker_complexes import helpers
    from dowker_complexes.Commands import build_parser
    from dowker_complexes.Config import Config
    from dowker_complexes.Document import write_report

    locale.textdomain('dowker-complexes')

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    config = Config(extra_path=args.config).read()
    level = args.log_level or config['logging', 'level'] or 'warning'
    logging.basicConfig(level=getattr(logging, level.upper(), logging.WARNING),
                        format='%(levelname)s: %(name)s: %(message)s', stream=sys.stderr)

    indent = config['report', 'indent']
    try:
        report = write_report(args.func(args, config),
                              config.get_int('report', 'indent') if indent else None)
    except helpers.Error as e:
        print(_('error: {}').format(e), file=sys.stderr)
        return e.exit_status
    except OSError as e:
        print(_('error: {}').format(e), file=sys.stderr)
        return 1

    sys.stdout.write(report)
    return 0


if __name__ == '__main__':
    import sys
    import os
    sys.path.append(os.path.join(os.path.dirname(__file__), '..'))
    sys.exit(main())
