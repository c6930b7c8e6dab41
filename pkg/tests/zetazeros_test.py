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
import math
import unittest
from os import unlink
from os.path import exists
from unittest import mock
# External imports
import mpmath
import numpy as np
# Custom imports
from tests.utils import data_filename, slow_test, dataset_test, zeros_dataset
from pyzeta.ZetaFunctions import PrecisionContext, DomainError, hardy_z
from pyzeta.ZetaZeros import (ZeroStore, find_zeros_up_to, import_zeros, export_zeros, zero_count_riemann,
                              zero_count_report, count_residuals, first_index_below_height, gram_point,
                              gram_points_array, ZeroFormatError, NonMonotonicInputError,
                              MissedZeroSuspectedError, PROVENANCE_COMPUTED, PROVENANCE_IMPORTED)


TABLE1 = ["14.134725141735", "21.022039638772", "25.010857580146", "30.424876125860", "32.935061587739",
          "37.586178158826", "40.918719012147", "43.327073280915", "48.005150881167", "49.773832477672"]


class PyZetaZeroStoreTest(unittest.TestCase):

    def test_zero_store(self):
        """Test the basic accessors of a zero store"""
        store = ZeroStore.from_values(TABLE1)
        self.assertEqual(10, store.count)
        self.assertEqual(10, len(store))
        self.assertEqual(12, store.digits)
        self.assertEqual(PROVENANCE_COMPUTED, store.provenance)
        self.assertEqual(TABLE1[0], store.gamma_decimal(0))
        self.assertEqual(TABLE1[9], store.gamma_decimal(9))
        self.assertAlmostEqual(14.134725141735, store[0], places=12)
        self.assertAlmostEqual(49.773832477672, store.height, places=12)
        self.assertEqual(3, store.count_up_to(25.0109))
        self.assertEqual(0, store.count_up_to(14))
        with self.assertRaises(ValueError):
            store.gammas[0] = 1

    def test_zero_store_validation(self):
        """Test that malformed zero lists are rejected"""
        self.assertRaises(ValueError, ZeroStore.from_values, ["15.0", "21.0"])
        self.assertRaises(ValueError, ZeroStore.from_values, [TABLE1[1], TABLE1[0]], first_index=2)
        self.assertRaises(ValueError, ZeroStore.from_values, [TABLE1[0], TABLE1[0]])
        self.assertRaises(ValueError, ZeroStore.from_values, TABLE1[:2], provenance="guessed")
        self.assertRaises(ValueError, ZeroStore, [1, 2], error_bounds=[0.1])
        store = ZeroStore.from_values(["100.5", "101.25"], first_index=30)
        self.assertEqual(30, store.first_index)
        self.assertEqual(0, ZeroStore([]).count)

    def test_zero_store_slices(self):
        """Test the head, above and concatenate views"""
        store = ZeroStore.from_values(TABLE1)
        head = store.head(4)
        self.assertEqual(4, head.count)
        self.assertAlmostEqual(30.424876125860, head.height)
        upper = store.above(head.height)
        self.assertEqual(6, upper.count)
        self.assertEqual(5, upper.first_index)
        joined = ZeroStore.concatenate([head, upper])
        np.testing.assert_array_equal(store.scaled, joined.scaled)
        self.assertEqual(1, joined.first_index)
        self.assertRaises(ValueError, store.head, 11)

    def test_first_index_below_height(self):
        self.assertIsNone(first_index_below_height(ZeroStore.from_values(TABLE1)))
        store = ZeroStore.from_values(["19.5", "25.0"], first_index=20)
        self.assertEqual(20, first_index_below_height(store))
        store = ZeroStore.from_values(["21.5", "21.9"], first_index=21)
        self.assertEqual(22, first_index_below_height(store))

    def test_zero_store_verify(self):
        """Test the check of Hardy Z at the stored zeros"""
        ctx = PrecisionContext(25)
        store = ZeroStore.from_values(TABLE1)
        self.assertListEqual([], store.verify(ctx))
        shifted = list(TABLE1)
        shifted[3] = "30.424876"
        self.assertListEqual([3], ZeroStore.from_values(shifted).verify(ctx))


class PyZetaZeroCountTest(unittest.TestCase):

    def test_zero_count_riemann(self):
        """Test the Riemann-von Mangoldt estimate"""
        expected = 100 / (2 * math.pi) * math.log(100 / (2 * math.pi * math.e)) + 7.0 / 8
        self.assertAlmostEqual(expected, zero_count_riemann(100))
        self.assertAlmostEqual(29.0, zero_count_riemann(100), delta=0.1)
        self.assertRaises(DomainError, zero_count_riemann, 17)

    def test_zero_count_report(self):
        store = ZeroStore.from_values(TABLE1, height=50.0)
        report = zero_count_report(50, store)
        self.assertEqual(10, report.exact_count)
        self.assertAlmostEqual(report.exact_count - report.riemann_estimate, report.residual)
        self.assertLess(abs(report.residual), math.log(50))
        self.assertAlmostEqual(abs(report.residual) / math.log(50), report.constant)
        self.assertRaises(ValueError, zero_count_report, 60, store)
        reports = count_residuals(store, [20, 30, 40])
        self.assertListEqual([1, 3, 6], [r.exact_count for r in reports])

    def test_gram_points(self):
        """Test the double precision Gram points against mpmath"""
        ctx = PrecisionContext(20)
        self.assertAlmostEqual(17.8455995404, float(gram_point(0, ctx)), places=9)
        indices = [0, 1, 10, 100, 1000]
        points = gram_points_array(indices)
        for n, point in zip(indices, points):
            self.assertAlmostEqual(float(mpmath.grampoint(n)), point, places=8)


class PyZetaZeroFinderTest(unittest.TestCase):

    def test_find_zeros_table1(self):
        """Test that the first ten zeros are found up to height 50"""
        store = find_zeros_up_to(50, PrecisionContext(25), threads=2)
        self.assertEqual(10, store.count)
        self.assertEqual(PROVENANCE_COMPUTED, store.provenance)
        self.assertEqual(50.0, store.height)
        for position, expected in enumerate(TABLE1):
            self.assertAlmostEqual(float(expected), store[position], places=10)
            self.assertLess(store.error_bounds[position], 1e-11)
        self.assertEqual("14.134725141735", store.gamma_decimal(0))
        self.assertEqual("49.773832477672", store.gamma_decimal(9))

    def test_find_zeros_count(self):
        """Test the number of zeros below 100 and the count residual"""
        store = find_zeros_up_to(100, PrecisionContext(20))
        self.assertEqual(29, store.count)
        self.assertLess(abs(zero_count_report(100, store).residual), math.log(100))

    def test_find_zeros_limits(self):
        self.assertEqual(0, find_zeros_up_to(14.0, PrecisionContext(20)).count)
        self.assertRaises(ValueError, find_zeros_up_to, 2e6, PrecisionContext(20))
        self.assertRaises(ValueError, find_zeros_up_to, 50, PrecisionContext(15))

    def test_find_zeros_audit(self):
        """Test that an audit which never closes is reported"""
        with mock.patch("pyzeta.ZetaZeros._expected_count", return_value=(5, 4, 20.0)):
            self.assertRaises(MissedZeroSuspectedError, find_zeros_up_to, 30, PrecisionContext(20), 1)

    @slow_test
    def test_find_zeros_to_1000(self):
        """Test the zero count up to height 1000"""
        ctx = PrecisionContext(20)
        store = find_zeros_up_to(1000, ctx)
        self.assertEqual(649, store.count)
        self.assertListEqual([], store.verify(ctx, range(0, 649, 50)))
        for report in count_residuals(store, np.linspace(20, 1000, 100)):
            self.assertLessEqual(abs(report.residual), 2 * math.log(report.T))

    def test_zeros_above_switchover(self):
        """Test zeros above the Riemann-Siegel switchover height"""
        ctx = PrecisionContext(25)
        with mpmath.workdps(30):
            values = [mpmath.nstr(mpmath.zetazero(n).imag, 25) for n in (10143, 10144)]
        self.assertGreater(float(values[0]), ctx.riemann_siegel_height)
        store = ZeroStore.from_values(values, first_index=10143)
        self.assertListEqual([], store.verify(ctx))
        for gamma in store:
            self.assertLess(hardy_z(gamma - 0.001, ctx) * hardy_z(gamma + 0.001, ctx), 0)

    @dataset_test
    def test_dataset_count_residuals(self):
        """Test the count residual against log T on a published table"""
        store = import_zeros(zeros_dataset())
        heights = np.linspace(100, min(1e5, store.height), 100)
        for report in count_residuals(store, heights):
            self.assertLessEqual(abs(report.residual), 2 * math.log(report.T))


class PyZetaZeroFileTest(unittest.TestCase):

    test_text = "zeros_test.txt"
    test_binary = "zeros_test.zetz"

    def tearDown(self):
        for filename in [self.test_text, self.test_binary]:
            if exists(filename):
                unlink(filename)

    def write(self, content, filename=None):
        with open(filename or self.test_text, "wb") as fd:
            fd.write(content)

    def test_import_table1(self):
        """Test importing the first ten zeros from a text file"""
        store = import_zeros(data_filename("table1_zeros.txt"))
        self.assertEqual(10, store.count)
        self.assertEqual(12, store.digits)
        self.assertEqual(PROVENANCE_IMPORTED, store.provenance)
        self.assertListEqual(TABLE1, [store.gamma_decimal(i) for i in range(store.count)])

    def test_text_round_trip(self):
        """Test that exporting and importing keeps every digit"""
        store = import_zeros(data_filename("table1_zeros.txt"))
        export_zeros(store, self.test_text)
        loaded = import_zeros(self.test_text)
        np.testing.assert_array_equal(store.scaled, loaded.scaled)
        self.assertEqual(store.provenance, loaded.provenance)

    def test_binary_round_trip(self):
        """Test the binary cache with its error bounds and provenance"""
        store = ZeroStore.from_values(TABLE1, error_bounds=np.linspace(1e-13, 1e-12, 10))
        export_zeros(store, self.test_binary)
        with open(self.test_binary, "rb") as fd:
            self.assertEqual(b"ZETZ", fd.read(4))
        loaded = import_zeros(self.test_binary)
        np.testing.assert_array_equal(store.scaled, loaded.scaled)
        np.testing.assert_array_equal(store.error_bounds, loaded.error_bounds)
        self.assertEqual(PROVENANCE_COMPUTED, loaded.provenance)
        self.assertEqual(12, loaded.digits)

    def test_round_trip_keeps_height(self):
        """Test that both formats keep the height up to which a store is complete"""
        store = find_zeros_up_to(100, PrecisionContext(20))
        self.assertEqual(100.0, store.height)
        for filename in [self.test_text, self.test_binary]:
            export_zeros(store, filename)
            loaded = import_zeros(filename)
            self.assertEqual(100.0, loaded.height)
            np.testing.assert_array_equal(store.scaled, loaded.scaled)
            report = zero_count_report(100, loaded)
            self.assertEqual(29, report.exact_count)

        with open(self.test_text, "rb") as fd:
            self.assertIn(b"# height: 100.0\n", fd.read())

    def test_import_height(self):
        """Test the height comment of text files"""
        self.write(b"# height: 30\n14.134725141735\n21.022039638772\n25.010857580146\n")
        store = import_zeros(self.test_text)
        self.assertEqual(30.0, store.height)
        self.assertEqual(3, zero_count_report(30, store).exact_count)

        self.write(b"14.134725141735\n21.022039638772\n")
        self.assertAlmostEqual(21.022039638772, import_zeros(self.test_text).height, places=12)

        self.write(b"# height: 20\n14.134725141735\n21.022039638772\n")
        self.assertRaises(ZeroFormatError, import_zeros, self.test_text)

        self.write(b"# height: high\n14.134725141735\n")
        self.assertRaises(ZeroFormatError, import_zeros, self.test_text)

        self.assertRaises(ValueError, ZeroStore.from_values, TABLE1, height=49.0)

    def test_binary_corrupted(self):
        export_zeros(ZeroStore.from_values(TABLE1), self.test_binary)
        with open(self.test_binary, "rb") as fd:
            data = bytearray(fd.read())
        data[-20] ^= 0x10
        self.write(bytes(data), self.test_binary)
        self.assertRaises(ZeroFormatError, import_zeros, self.test_binary)

    def test_import_malformed(self):
        """Test the rejection of malformed text files"""
        self.write(b"")
        self.assertEqual(0, import_zeros(self.test_text).count)

        self.write(b"14.134725141735\n25.010857580146\n21.022039638772\n")
        self.assertRaises(NonMonotonicInputError, import_zeros, self.test_text)

        self.write(b"14.134725141735\nnot-a-zero\n")
        self.assertRaises(ZeroFormatError, import_zeros, self.test_text)

        self.write(b"14.134725141735\ninf\n")
        self.assertRaises(ZeroFormatError, import_zeros, self.test_text)

        self.write(b"16.5\n")
        self.assertRaises(ZeroFormatError, import_zeros, self.test_text)

    def test_import_many_digits(self):
        """Test that long decimal expansions are kept within int64"""
        self.write(b"14.134725141734693790\n21.022039638771554993\n")
        store = import_zeros(self.test_text)
        self.assertEqual(16, store.digits)
        self.assertEqual("14.1347251417346938", store.gamma_decimal(0))

    @dataset_test
    def test_dataset_index_anomaly(self):
        """Test the first zero lying below its index"""
        store = import_zeros(zeros_dataset())
        if store.count < 9137:
            self.skipTest("zero table too short")
        self.assertEqual(9137, first_index_below_height(store.head(10000)))


def test_suite():
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    suite.addTest(loader.loadTestsFromTestCase(PyZetaZeroStoreTest))
    suite.addTest(loader.loadTestsFromTestCase(PyZetaZeroCountTest))
    suite.addTest(loader.loadTestsFromTestCase(PyZetaZeroFinderTest))
    suite.addTest(loader.loadTestsFromTestCase(PyZetaZeroFileTest))
    return suite


if __name__ == "__main__":
    test_runner = unittest.TextTestRunner(verbosity=2, resultclass=unittest.TextTestResult)
    result = test_runner.run(test_suite())
    sys.exit(not result.wasSuccessful())
