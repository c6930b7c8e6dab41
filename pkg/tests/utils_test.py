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
import sys
import time
import unittest
from os import unlink
from os.path import exists
# External imports
import numpy as np
# Custom imports
from pyzeta.utils import split_range, ThreadPool, format_number, write_csv, default_threads
from pyzeta.utils.fields import NumpyArrayField


class PyZetaPoolTest(unittest.TestCase):

    def test_split_range(self):
        self.assertListEqual([(0, 4), (4, 7), (7, 10)], split_range(0, 10, 3))
        self.assertListEqual([(0, 1), (1, 2)], split_range(0, 2, 5))
        self.assertListEqual([(3, 8)], split_range(3, 8, 1))
        self.assertListEqual([], split_range(5, 5, 3))

    def test_default_threads(self):
        self.assertTrue(1 <= default_threads() <= 8)

    def test_map_order(self):
        """Test that results come back in submission order"""

        def square(x):
            time.sleep(0.001 * (x % 3))
            return x * x

        for threads in (1, 4):
            pool = ThreadPool(threads)
            self.assertListEqual([x * x for x in range(50)], pool.map(square, range(50)))
            pool.close()

    def test_map_errors(self):
        """Test that the first failing task raises once all tasks ran"""
        done = []

        def task(x):
            if x in (3, 7):
                raise ValueError("task %d" % x)
            done.append(x)
            return x

        pool = ThreadPool(3)
        with self.assertRaisesRegex(ValueError, "task 3"):
            pool.map(task, range(10))
        self.assertEqual(8, len(done))
        pool.close()
        self.assertListEqual([], pool.workers)

    def test_single_thread_inline(self):
        pool = ThreadPool(1)
        self.assertListEqual([], pool.workers)
        self.assertListEqual([2, 4], pool.map(lambda x: 2 * x, [1, 2]))


class PyZetaOutputTest(unittest.TestCase):

    test_filename = "output_test.csv"

    def tearDown(self):
        if exists(self.test_filename):
            unlink(self.test_filename)

    def test_format_number(self):
        self.assertEqual("7", format_number(7))
        self.assertEqual("7", format_number(np.int64(7)))
        self.assertEqual("1", format_number(True))
        self.assertEqual("", format_number(None))
        self.assertEqual("0.500", format_number(0.5, 3))
        self.assertEqual("1234.57", format_number(1234.5678, 6))
        self.assertIn("e-7", format_number(1e-7, 3))

    def test_write_csv(self):
        write_csv(self.test_filename, ["n", "name", "value"], [(1, "a", 0.25), (2, "b", np.float64(1.5))], 4)
        with open(self.test_filename, "rb") as fd:
            self.assertEqual(b"n,name,value\n1,a,0.2500\n2,b,1.500\n", fd.read())


class PyZetaFieldsTest(unittest.TestCase):

    def test_numpy_array_field(self):
        field = NumpyArrayField("values", None, "<u8")
        self.assertEqual(b"", field.i2m(None, None))
        raw = field.i2m(None, [1, 2])
        self.assertEqual(16, len(raw))
        self.assertEqual(b"\x01" + b"\x00" * 7, raw[:8])
        self.assertListEqual([1, 2], field.m2i(None, raw).tolist())
        self.assertEqual(16, field.i2len(None, [1, 2]))
        self.assertRaises(ValueError, field.m2i, None, b"\x00" * 7)

        self.assertEqual(np.dtype("<u8"), field.any2i(None, [3]).dtype)
        self.assertListEqual([1, 2], field.any2i(None, raw).tolist())
        self.assertEqual("<<u8 array of 2>", field.i2repr(None, np.array([1, 2], dtype="<u8")))


def test_suite():
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    suite.addTest(loader.loadTestsFromTestCase(PyZetaPoolTest))
    suite.addTest(loader.loadTestsFromTestCase(PyZetaOutputTest))
    suite.addTest(loader.loadTestsFromTestCase(PyZetaFieldsTest))
    return suite


if __name__ == "__main__":
    test_runner = unittest.TextTestRunner(verbosity=2, resultclass=unittest.TextTestResult)
    result = test_runner.run(test_suite())
    sys.exit(not result.wasSuccessful())
