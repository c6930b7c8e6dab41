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

# Standard imports
import os
import unittest
from os.path import join as join, dirname, exists
# External imports
import numpy as np
# Custom imports
from pyzeta.ZetaZeros import ZeroStore, gram_points_array


SLOW_TESTS_VARIABLE = "PYZETA_SLOW_TESTS"
"""Set to 1 to run the long computations"""

ZEROS_FILE_VARIABLE = "PYZETA_ZEROS_FILE"
"""Path of a large published zero table (at least 15000 zeros)"""


def data_filename(filename):
    return join(dirname(__file__), 'data', filename)


def slow_test(func):
    return unittest.skipUnless(os.environ.get(SLOW_TESTS_VARIABLE) == "1",
                               "set %s=1 to run" % SLOW_TESTS_VARIABLE)(func)


def zeros_dataset():
    filename = os.environ.get(ZEROS_FILE_VARIABLE)
    if filename and exists(filename):
        return filename
    return None


def dataset_test(func):
    return unittest.skipUnless(zeros_dataset(), "set %s to a zero table" % ZEROS_FILE_VARIABLE)(func)


def gram_store(first, count, digits=9):
    """Store with the Gram points g_first .. g_first+count-1 standing in for
    zeros; they follow the same smooth density."""
    points = gram_points_array(np.arange(first, first + count))
    scaled = np.round(points * 10 ** digits).astype(np.int64)
    return ZeroStore(scaled, digits, first_index=first + 1, provenance="imported")
