# pyzeta - Numerical laboratory for the Riemann zeta function, its zeros and the primes
#
# Copyright (C) 2026 pyzeta developers. All rights reserved.
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# Author:
#   pyzeta developers
#

__title__ = 'pyzeta'
"""The title of the library"""

__version__ = '0.1.0.dev0'
"""The version of pyzeta"""

__url__ = "https://pyzeta.readthedocs.io/"
"""The URL for pyzeta's homepage"""

__repo__ = "https://github.com/pyzeta/pyzeta"
"""The URL for pyzeta's repository"""

__license__ = "GNU General Public License v2 or later (GPLv2+)"
"""The license governing the use and distribution of pyzeta"""

epilog = "pyzeta %(version)s - %(url)s - %(repo)s" % {"version": __version__,
                                                      "url": __url__,
                                                      "repo": __repo__}
"""Epilog to use in tools and scripts to print out version numbers"""
