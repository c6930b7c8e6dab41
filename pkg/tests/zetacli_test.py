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
import unittest
from io import StringIO
from os import unlink, listdir
from os.path import exists, join
from shutil import rmtree
from unittest import mock
# External imports
# Custom imports
from tests.utils import data_filename
from pyzeta.ZetaFractal import parse_pnm_header
from pyzeta.ZetaCLI import (run, parse_options, build_parser, read_config, verify_manifest, format_table,
                            RunConfig, ConfigError, EXIT_SUCCESS, EXIT_FAILURE, EXIT_USAGE, MANIFEST_NAME)


class PyZetaCLITest(unittest.TestCase):

    test_dirs = ["cli_test_a", "cli_test_b"]
    test_filename = "cli_test.conf"

    def tearDown(self):
        for directory in self.test_dirs:
            if exists(directory):
                rmtree(directory)
        if exists(self.test_filename):
            unlink(self.test_filename)

    def run_cli(self, *argv):
        with mock.patch("sys.stdout", new_callable=StringIO) as stdout, \
                mock.patch("sys.stderr", new_callable=StringIO) as stderr:
            code = run(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()

    def write_config(self, text):
        with open(self.test_filename, "w") as fd:
            fd.write(text)

    def read_manifest(self, directory):
        with open(join(directory, MANIFEST_NAME)) as fd:
            return fd.read().splitlines()

    def test_usage_errors(self):
        """Test the exit status of malformed command lines"""
        code, _, stderr = self.run_cli()
        self.assertEqual(EXIT_USAGE, code)
        self.assertIn("usage", stderr)
        self.assertEqual(EXIT_USAGE, self.run_cli("no-such-command")[0])
        self.assertEqual(EXIT_USAGE, self.run_cli("zeros-find")[0])
        self.assertEqual(EXIT_USAGE, self.run_cli("zeros-find", "--t-max", "fifty")[0])

        code, _, stderr = self.run_cli("zeros-find", "--t-max", "50", "--digits", "10",
                                       "--output-dir", self.test_dirs[0])
        self.assertEqual(EXIT_USAGE, code)
        self.assertIn("15 digits", stderr)

        code, _, stderr = self.run_cli("pi-explicit", "--zeros", data_filename("table1_zeros.txt"),
                                       "--output-dir", self.test_dirs[0])
        self.assertEqual(EXIT_USAGE, code)
        self.assertIn("--x", stderr)

    def test_config_file(self):
        """Test defaults taken from a config file"""
        self.write_config("# pi(x) run\nx = 10, 20\nhalf-jump = yes\nnum_zeros=5  # pairs\n")
        options = parse_options(["pi-explicit", "--config", self.test_filename])
        self.assertListEqual([10.0, 20.0], options.x)
        self.assertTrue(options.half_jump)
        self.assertEqual(5, options.num_zeros)

        options = parse_options(["pi-explicit", "--config", self.test_filename, "--num-zeros", "7"])
        self.assertEqual(7, options.num_zeros)

        self.write_config("t-max = 50\n")
        options = parse_options(["zeros-find", "--config", self.test_filename])
        self.assertEqual(50.0, options.t_max)

    def test_config_file_errors(self):
        self.write_config("unknown_key = 3\n")
        code, _, stderr = self.run_cli("zeros-find", "--t-max", "50", "--config", self.test_filename)
        self.assertEqual(EXIT_USAGE, code)
        self.assertIn("unknown_key", stderr)

        self.write_config("half-jump = maybe\n")
        parser = build_parser()[1]["pi-explicit"]
        self.assertRaises(ConfigError, read_config, self.test_filename, parser)
        self.write_config("num-zeros = many\n")
        self.assertRaises(ConfigError, read_config, self.test_filename, parser)
        self.assertRaises(ConfigError, read_config, "nonexistent.conf", parser)

    def test_run_config(self):
        self.assertRaises(ConfigError, RunConfig, "report", 14)
        self.assertRaises(ConfigError, RunConfig, "report", threads=0)
        config = RunConfig("zeros-find", 20, None, self.test_dirs[0], {"t_max": 50.0})
        self.assertEqual("compute", config.zero_source)
        self.assertEqual(20, config.context().digits)
        self.assertEqual(15, config.context(15).digits)
        self.assertEqual(join(self.test_dirs[0], "zeros.txt"), config.output("zeros.txt"))
        keys = [key for key, _ in config.parameters()]
        self.assertListEqual(sorted(keys), keys)
        config.prepare_output_dir()
        self.assertTrue(exists(self.test_dirs[0]))

    def test_output_dir_variable(self):
        with mock.patch.dict("os.environ", {"PYZETA_OUTPUT_DIR": self.test_dirs[1]}):
            config = RunConfig.from_options(parse_options(["zeros-find", "--t-max", "50"]))
            self.assertEqual(self.test_dirs[1], config.output_dir)
            config = RunConfig.from_options(parse_options(["zeros-find", "--t-max", "50",
                                                           "--output-dir", self.test_dirs[0]]))
            self.assertEqual(self.test_dirs[0], config.output_dir)

    def test_zeros_find(self):
        """Test a zero search run and its manifest"""
        directory = self.test_dirs[0]
        code, stdout, _ = self.run_cli("zeros-find", "--t-max", "50", "--digits", "20", "--count-samples", "5",
                                       "--output-dir", directory)
        self.assertEqual(EXIT_SUCCESS, code)
        self.assertIn("10 zeros up to height 50", stdout)
        self.assertIn("gamma_1 = 14.134725141", stdout)
        self.assertListEqual(sorted(["zeros.txt", "zero_counts.csv", MANIFEST_NAME]), sorted(listdir(directory)))

        manifest = self.read_manifest(directory)
        self.assertEqual("# pyzeta run manifest", manifest[0])
        self.assertIn("subcommand: zeros-find", manifest)
        self.assertIn("param t_max=50.0", manifest)
        self.assertIn("zeros_provenance: computed", manifest)

        entries, mismatches = verify_manifest(join(directory, MANIFEST_NAME))
        self.assertListEqual(["zeros.txt", "zero_counts.csv"], [name for name, _ in entries])
        self.assertListEqual([], mismatches)

        code, stdout, _ = self.run_cli("report", "--output-dir", directory)
        self.assertEqual(EXIT_SUCCESS, code)
        self.assertIn("zeros.txt", stdout)

        with open(join(directory, "zero_counts.csv"), "a") as fd:
            fd.write("tampered\n")
        self.assertListEqual(["zero_counts.csv"], verify_manifest(join(directory, MANIFEST_NAME))[1])
        code, _, stderr = self.run_cli("report", "--output-dir", directory)
        self.assertEqual(EXIT_FAILURE, code)
        self.assertIn("MISMATCH", self.run_cli("report", "--output-dir", directory)[1])

    def test_reproducible_manifest(self):
        """Test that identical runs differ only in the timestamp"""
        for directory in self.test_dirs:
            code = self.run_cli("pi-explicit", "--zeros", data_filename("table1_zeros.txt"), "--x", "50", "100",
                                "--mode", "wave", "--output-dir", directory)[0]
            self.assertEqual(EXIT_SUCCESS, code)
        manifests = [[line for line in self.read_manifest(directory) if not line.startswith("timestamp:")]
                     for directory in self.test_dirs]
        self.assertListEqual(manifests[0], manifests[1])
        self.assertIn("zeros_provenance: imported", manifests[0])
        self.assertTrue(any(line.startswith("input ") for line in manifests[0]))

        with open(join(self.test_dirs[0], "pi_explicit.csv")) as fd:
            lines = fd.read().splitlines()
        self.assertEqual(3, len(lines))
        self.assertTrue(lines[2].endswith(",25"))

    def test_zeros_import(self):
        code, stdout, _ = self.run_cli("zeros-import", "--zeros", data_filename("table1_zeros.txt"), "--verify", "3",
                                       "--zeros-output", "table.zetz", "--output-dir", self.test_dirs[0])
        self.assertEqual(EXIT_SUCCESS, code)
        self.assertIn("10 zeros imported", stdout)
        self.assertIn("Verified 3 zeros", stdout)
        self.assertTrue(exists(join(self.test_dirs[0], "table.zetz")))

        code, _, stderr = self.run_cli("zeros-import", "--zeros", "nonexistent.txt", "--output-dir", self.test_dirs[0])
        self.assertEqual(EXIT_FAILURE, code)

    def test_criteria_scan(self):
        directory = self.test_dirs[0]
        code, stdout, _ = self.run_cli("criteria-scan", "--n-max", "6000", "--output-dir", directory)
        self.assertEqual(EXIT_SUCCESS, code)
        for name in ("lagarias.csv", "robin.csv", "schoenfeld.csv", "mertens.csv", "criteria_summary.txt"):
            self.assertTrue(exists(join(directory, name)), name)
        self.assertIn("robin near misses", stdout)
        self.assertNotIn(" no\n", stdout)

    def test_fractal_and_profile(self):
        directory = self.test_dirs[0]
        code = self.run_cli("fractal-render", "--re-min", "-5", "--re-max", "1", "--im-min", "-2", "--im-max", "2",
                            "--width", "4", "--height", "4", "--max-iter", "10", "--output-dir", directory)[0]
        self.assertEqual(EXIT_SUCCESS, code)
        self.assertEqual(("P5", 4, 4, 255), parse_pnm_header(join(directory, "fractal.pgm")))

        code = self.run_cli("vanderpol", "--t-max", "1", "--step", "0.5", "--digits", "20",
                            "--output-dir", directory)[0]
        self.assertEqual(EXIT_SUCCESS, code)
        with open(join(directory, "vanderpol.csv")) as fd:
            self.assertEqual(4, len(fd.read().splitlines()))

        self.assertEqual(EXIT_FAILURE, self.run_cli("vanderpol", "--t-max", "150", "--output-dir", directory)[0])
        self.assertEqual(EXIT_FAILURE, self.run_cli("vanderpol", "--x-cut", "25", "--output-dir", directory)[0])

    def test_stats_moments(self):
        code, stdout, _ = self.run_cli("stats-moments", "--k", "1", "--T", "20", "--digits", "15",
                                       "--output-dir", self.test_dirs[0])
        self.assertEqual(EXIT_SUCCESS, code)
        self.assertIn("empirical", stdout)
        self.assertTrue(exists(join(self.test_dirs[0], "moments.csv")))

    def test_format_table(self):
        table = format_table(["name", "value"], [("robin", 1.5), ("mertens", 2)])
        self.assertIn("name", table)
        self.assertIn("mertens", table)
        self.assertEqual(4, len(table.splitlines()))


def test_suite():
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    suite.addTest(loader.loadTestsFromTestCase(PyZetaCLITest))
    return suite


if __name__ == "__main__":
    test_runner = unittest.TextTestRunner(verbosity=2, resultclass=unittest.TextTestResult)
    result = test_runner.run(test_suite())
    sys.exit(not result.wasSuccessful())
