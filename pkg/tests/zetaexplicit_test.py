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
import numpy as np
# Custom imports
from tests.utils import data_filename, dataset_test, slow_test, zeros_dataset
from pyzeta.ZetaFunctions import PrecisionContext, DomainError, STATISTICS_DIGITS
from pyzeta.ZetaArith import build_sieve, j_function
from pyzeta.ZetaZeros import import_zeros
from pyzeta.ZetaFractal import local_maxima
from pyzeta.utils import ThreadPool
from pyzeta.ZetaExplicit import (WaveSumConfig, InsufficientZerosError, default_cutoff, riesel_gohl_cutoff,
                                 r_gram, r_mobius, riesel_gohl, trivial_zero_term, j_explicit, pi_explicit,
                                 reconstruction_grid, mean_absolute_error, write_reconstruction_csv,
                                 spike_derivative, MODE_WAVE)


class PyZetaCutoffTest(unittest.TestCase):

    def test_default_cutoff(self):
        self.assertEqual(6, default_cutoff(100))
        self.assertEqual(1, default_cutoff(3))
        self.assertEqual(10, default_cutoff(1024))
        self.assertEqual(9, default_cutoff(1023.9))

    def test_riesel_gohl_cutoff(self):
        """Test the cutoff with partial Mertens sum -2"""
        self.assertEqual(7, riesel_gohl_cutoff(100))
        self.assertEqual(5, riesel_gohl_cutoff(32))

    def test_wave_sum_config(self):
        """Test the validation of the truncation parameters"""
        self.assertRaises(ValueError, WaveSumConfig, -1)
        self.assertRaises(ValueError, WaveSumConfig, 1.5)
        self.assertRaises(ValueError, WaveSumConfig, 10, mode="fast")
        self.assertRaises(ValueError, WaveSumConfig, 10, 0)
        self.assertRaises(ValueError, WaveSumConfig, 10, 21, MODE_WAVE)

        self.assertEqual(6, WaveSumConfig(10).cutoff(100))
        self.assertEqual(7, WaveSumConfig(10, preferred_cutoff=True).cutoff(100))
        self.assertEqual(3, WaveSumConfig(10, 3).cutoff(100))
        self.assertEqual(33, WaveSumConfig(10).cutoff(1e10))
        self.assertEqual(20, WaveSumConfig(10, mode=MODE_WAVE).cutoff(1e10))

        store = import_zeros(data_filename("table1_zeros.txt"))
        self.assertEqual(5, len(WaveSumConfig(5).zeros(store)))
        self.assertEqual(0, len(WaveSumConfig(0).zeros(store)))
        self.assertRaises(InsufficientZerosError, WaveSumConfig(11).zeros, store)


class PyZetaSmoothTermsTest(unittest.TestCase):

    def setUp(self):
        self.ctx = PrecisionContext(30)
        self.mp = self.ctx.mp

    def test_r_gram(self):
        """Test Riemann's R function"""
        self.assertAlmostEqual(25.6616332669, float(r_gram(100, self.ctx)), places=9)
        self.assertAlmostEqual(1.0, float(r_gram(1.0000001, self.ctx)), places=6)
        self.assertRaises(DomainError, r_gram, 1, self.ctx)

    def test_r_mobius(self):
        """Test the Moebius sum of Li against the Gram series"""
        x = 10 ** 6
        truncated = r_mobius(x, 19, self.ctx)
        self.assertLess(abs(truncated / r_gram(x, self.ctx) - 1), 1e-4)
        self.assertEqual(0, r_mobius(x, 0, self.ctx))
        self.assertAlmostEqual(float(self.mp.li(100)), float(r_mobius(100, 1, self.ctx)), places=12)

    def test_riesel_gohl(self):
        self.assertLess(abs(riesel_gohl(10 ** 6, 5)), 3.6e-3)
        self.assertLess(abs(riesel_gohl(1e300, 5)), 3e-3)
        self.assertRaises(DomainError, riesel_gohl, 1, 5)

    def test_trivial_zero_term(self):
        """Test the trivial zero term against direct quadrature"""
        mp = self.mp

        def integral(y):
            return mp.quad(lambda u: 1 / (u * (u * u - 1) * mp.log(u)), [y, 2 * y, mp.inf])

        expected = (integral(100) - mp.log(2)) - (integral(10) - mp.log(2)) / 2
        self.assertLess(abs(trivial_zero_term(100, 2, self.ctx) - expected), 1e-15)
        self.assertEqual(0, trivial_zero_term(100, 0, self.ctx))


class PyZetaExplicitFormulaTest(unittest.TestCase):

    def setUp(self):
        self.ctx = PrecisionContext(30)
        self.store = import_zeros(data_filename("table1_zeros.txt"))
        self.table = build_sieve(1000)

    def test_j_explicit_matches_first_term(self):
        """Test that the Moebius cutoff 1 reconstruction is the J explicit formula"""
        j = j_explicit(100.5, self.store, 10, self.ctx)
        sample = pi_explicit(100.5, self.store, WaveSumConfig(10, 1), self.ctx)
        self.assertLess(abs(j - sample.total), 1e-20)
        exact = j_function(100.5, self.table)
        self.assertLess(abs(float(j) - exact), 3)
        self.assertRaises(DomainError, j_explicit, 1, self.store, 10, self.ctx)

    def test_pi_explicit_without_zeros(self):
        """Test that K = 0 leaves the smooth and trivial parts only"""
        sample = pi_explicit(100, self.store, WaveSumConfig(0), self.ctx)
        self.assertEqual(0, sample.zero_correction)
        self.assertEqual(sample.smooth_part + sample.trivial_correction, sample.total)

        wave = pi_explicit(100, self.store, WaveSumConfig(0, mode=MODE_WAVE), self.ctx)
        self.assertEqual(0, wave.zero_correction)
        self.assertAlmostEqual(float(r_gram(100, self.ctx)), wave.total, places=12)

        trivial = pi_explicit(100, self.store, WaveSumConfig(0, mode=MODE_WAVE, include_trivial=True), self.ctx)
        self.assertAlmostEqual(wave.total + wave.trivial_correction, trivial.total, places=12)

    def test_pi_explicit_full(self):
        """Test the reconstruction of pi(100) with the first ten zeros"""
        sample = pi_explicit(100, self.store, WaveSumConfig(10), self.ctx, threads=2)
        self.assertLess(abs(sample.total - (sample.smooth_part - sample.zero_correction +
                                            sample.trivial_correction)), 1e-25)
        self.assertLess(abs(float(sample.total) - 25), 1.0)
        self.assertNotEqual(0, sample.zero_correction)

    def test_pi_explicit_precision_paths(self):
        """Test that the double precision zero sum agrees with the mpmath one"""
        fast = pi_explicit(150, self.store, WaveSumConfig(10), PrecisionContext(STATISTICS_DIGITS))
        slow = pi_explicit(150, self.store, WaveSumConfig(10), self.ctx)
        self.assertAlmostEqual(float(slow.total), float(fast.total), places=9)

    def test_pi_explicit_errors(self):
        self.assertRaises(DomainError, pi_explicit, 2, self.store, WaveSumConfig(1), self.ctx)
        self.assertRaises(InsufficientZerosError, pi_explicit, 100, self.store, WaveSumConfig(11), self.ctx)

    def test_reconstruction_grid(self):
        """Test reconstruction samples carrying the exact prime count"""
        xs = [10.5, 20.5, 30.5]
        samples = reconstruction_grid(xs, self.store, WaveSumConfig(10, mode=MODE_WAVE), self.table, self.ctx)
        self.assertListEqual([4, 8, 10], [sample.pi_exact for sample in samples])
        error = mean_absolute_error(samples)
        self.assertAlmostEqual(np.mean([abs(s.total - s.pi_exact) for s in samples]), error)

        half = reconstruction_grid([7], self.store, WaveSumConfig(3, half_jump=True), self.table, self.ctx)
        self.assertEqual(3.5, half[0].pi_exact)

        plain = reconstruction_grid(xs, self.store, WaveSumConfig(1), None, self.ctx)
        self.assertRaises(ValueError, mean_absolute_error, plain)

    def test_reconstruction_grid_pool(self):
        """Test that one pool serves every point of the grid"""
        xs = [10.5, 20.5, 30.5]
        with mock.patch("pyzeta.ZetaExplicit.ThreadPool", wraps=ThreadPool) as pool_class:
            shared = reconstruction_grid(xs, self.store, WaveSumConfig(5), None, self.ctx, threads=2)
        self.assertEqual(1, pool_class.call_count)
        single = [pi_explicit(x, self.store, WaveSumConfig(5), self.ctx) for x in xs]
        self.assertListEqual([float(sample.total) for sample in single], [float(sample.total) for sample in shared])


class PyZetaSpikeTest(unittest.TestCase):

    def setUp(self):
        self.ctx = PrecisionContext(STATISTICS_DIGITS)
        self.store = import_zeros(data_filename("table1_zeros.txt"))

    def test_spike_without_zeros(self):
        """Test that K = 0 gives the derivative of R"""
        xs = np.array([50.0, 1000.0])
        values = spike_derivative(xs, self.store, WaveSumConfig(0), self.ctx)
        ctx = PrecisionContext(30)
        h = 1e-6
        numeric = (r_gram(50 + h, ctx) - r_gram(50 - h, ctx)) / (2 * h)
        self.assertAlmostEqual(float(numeric), values[0], places=8)
        self.assertAlmostEqual(1 / math.log(1000), values[1], delta=0.01)

    def test_spike_with_zeros(self):
        xs = np.linspace(10.5, 13.5, 31)
        values = spike_derivative(xs, self.store, WaveSumConfig(10), self.ctx)
        self.assertEqual(xs.shape, values.shape)
        self.assertTrue(np.all(np.isfinite(values)))
        self.assertRaises(DomainError, spike_derivative, [2.0, 3.0], self.store, WaveSumConfig(1), self.ctx)


class PyZetaExplicitDatasetTest(unittest.TestCase):

    test_filename = "reconstruction_test.csv"

    def tearDown(self):
        if exists(self.test_filename):
            unlink(self.test_filename)

    def test_write_reconstruction_csv(self):
        store = import_zeros(data_filename("table1_zeros.txt"))
        samples = reconstruction_grid([100], store, WaveSumConfig(10, 7, MODE_WAVE), build_sieve(100),
                                      PrecisionContext(STATISTICS_DIGITS))
        write_reconstruction_csv(samples, self.test_filename, 10)
        with open(self.test_filename) as fd:
            lines = fd.read().splitlines()
        self.assertEqual("x,smooth,zero_corr,trivial_corr,total,pi_exact", lines[0])
        self.assertEqual(2, len(lines))
        self.assertTrue(lines[1].endswith(",25"))

    @dataset_test
    def test_wave_mode_pi_100(self):
        """Test pi(100) in wave mode with 10000 zeros and Moebius cutoff 7"""
        store = import_zeros(zeros_dataset())
        sample = pi_explicit(100, store, WaveSumConfig(10000, 7, MODE_WAVE), PrecisionContext(STATISTICS_DIGITS))
        self.assertAlmostEqual(25.00267, sample.total, delta=5e-4)

    @dataset_test
    def test_spike_peaks(self):
        """Test the spikes at the primes 11 and 13"""
        store = import_zeros(zeros_dataset())
        ctx = PrecisionContext(STATISTICS_DIGITS)
        cfg = WaveSumConfig(15000)
        xs = np.arange(10.5, 13.5 + 1e-9, 0.005)
        values = spike_derivative(xs, store, cfg, ctx)
        peaks = local_maxima(xs, values)
        heights = np.interp(peaks, xs, values)
        top = sorted(peaks[np.argsort(heights)[-2:]])
        self.assertAlmostEqual(11, top[0], delta=0.05)
        self.assertAlmostEqual(13, top[1], delta=0.05)

    @dataset_test
    @slow_test
    def test_convergence_with_zeros(self):
        """Test that the mean error decreases as zeros are added"""
        store = import_zeros(zeros_dataset())
        table = build_sieve(200)
        ctx = PrecisionContext(STATISTICS_DIGITS)
        xs = list(range(10, 201))
        errors = [mean_absolute_error(reconstruction_grid(xs, store, WaveSumConfig(count), table, ctx))
                  for count in (50, 500, 5000)]
        self.assertGreater(errors[0], errors[1])
        self.assertGreater(errors[1], errors[2])


def test_suite():
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    suite.addTest(loader.loadTestsFromTestCase(PyZetaCutoffTest))
    suite.addTest(loader.loadTestsFromTestCase(PyZetaSmoothTermsTest))
    suite.addTest(loader.loadTestsFromTestCase(PyZetaExplicitFormulaTest))
    suite.addTest(loader.loadTestsFromTestCase(PyZetaSpikeTest))
    suite.addTest(loader.loadTestsFromTestCase(PyZetaExplicitDatasetTest))
    return suite


if __name__ == "__main__":
    test_runner = unittest.TextTestRunner(verbosity=2, resultclass=unittest.TextTestResult)
    result = test_runner.run(test_suite())
    sys.exit(not result.wasSuccessful())
