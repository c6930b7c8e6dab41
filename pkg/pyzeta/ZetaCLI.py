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
import sys
import math
import logging
from datetime import datetime, timezone
from argparse import ArgumentParser
# External imports
import numpy as np
# Custom imports
import pyzeta
from pyzeta.ZetaFunctions import PrecisionContext, DEFAULT_DIGITS, DEFAULT_RIEMANN_SIEGEL_HEIGHT, STATISTICS_DIGITS
from pyzeta.ZetaArith import build_sieve
from pyzeta.ZetaZeros import (find_zeros_up_to, import_zeros, export_zeros, count_residuals,
                              first_index_below_height, zero_count_riemann)
from pyzeta.ZetaExplicit import (WaveSumConfig, reconstruction_grid, write_reconstruction_csv, spike_derivative,
                                 mean_absolute_error, MODE_FULL, MODE_WAVE)
from pyzeta.ZetaCriteria import (lagarias_scan, robin_scan, schoenfeld_gap, mertens_bound, balazard_integral,
                                 volchkov_integral, write_criterion_csv, SCHOENFELD_THRESHOLD, NEAR_MISS_RATIO)
from pyzeta.ZetaStats import (spacing_histogram, pair_correlation, moment_rows, write_histogram_csv,
                              write_correlation_csv, write_moment_csv, RULE_DENSITY, RULE_LOG,
                              NORMALIZATION_LOCAL, NORMALIZATION_MONTGOMERY, LOW_HEIGHT_CUTOFF)
from pyzeta.ZetaFractal import (GridSpec, escape_field, render_pgm, vanderpol_profile, write_profile_csv,
                                local_minima, palettes, PALETTE_GRAY, DEFAULT_X_CUT)
from pyzeta.utils import write_csv
from pyzeta.utils.crypto import sha256_file


# Create a logger for the command line layer
log_cli = logging.getLogger("pyzeta.cli")


OUTPUT_DIR_VARIABLE = "PYZETA_OUTPUT_DIR"
"""Environment variable with the default output directory"""

MANIFEST_NAME = "manifest.txt"

ZERO_SOURCE_COMPUTE = "compute"

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class ConfigError(ValueError):
    """Exception to denote an invalid run configuration"""


class RunConfig(object):
    """Parameters of a single command line run.

    :param subcommand: name of the subcommand
    :type subcommand: ``str``

    :param precision_digits: working precision, at least 15
    :type precision_digits: ``int``

    :param zero_source: zero file or "compute"
    :type zero_source: ``str``

    :param output_dir: directory receiving the artifacts
    :type output_dir: ``str``

    :param params: subcommand parameters
    :type params: ``dict``
    """

    def __init__(self, subcommand, precision_digits=DEFAULT_DIGITS, zero_source=ZERO_SOURCE_COMPUTE,
                 output_dir=".", params=None, threads=None, rs_height=DEFAULT_RIEMANN_SIEGEL_HEIGHT):
        if precision_digits < 15:
            raise ConfigError("Precision must be at least 15 digits")
        if threads is not None and threads < 1:
            raise ConfigError("Thread cap must be positive")
        self.subcommand = subcommand
        self.precision_digits = int(precision_digits)
        self.zero_source = zero_source or ZERO_SOURCE_COMPUTE
        self.output_dir = output_dir
        self.params = dict(params or {})
        self.threads = threads
        self.rs_height = rs_height

    @classmethod
    def from_options(cls, options):
        params = {key: value for key, value in vars(options).items() if key not in _global_keys}
        output_dir = options.output_dir or os.environ.get(OUTPUT_DIR_VARIABLE) or "."
        return cls(options.subcommand, options.digits, params.pop("zeros", None), output_dir, params,
                   options.threads, options.rs_height)

    def context(self, digits=None):
        return PrecisionContext(digits or self.precision_digits, riemann_siegel_height=self.rs_height)

    @property
    def csv_digits(self):
        return self.precision_digits

    def prepare_output_dir(self):
        """Creates the output directory if needed.

        :raise ConfigError: if it can't be created or written to
        """
        try:
            os.makedirs(self.output_dir, exist_ok=True)
        except OSError as e:
            raise ConfigError("Unable to create output directory %s: %s" % (self.output_dir, e))
        if not os.access(self.output_dir, os.W_OK):
            raise ConfigError("Output directory %s is not writable" % self.output_dir)

    def output(self, name):
        return os.path.join(self.output_dir, name)

    def parameters(self):
        """Full parameter set, sorted by name."""
        values = dict(self.params)
        values.update({"digits": self.precision_digits, "zeros": self.zero_source,
                       "rs_height": self.rs_height})
        return sorted(values.items())


class RunRecord(object):
    """Inputs, outputs and zero provenance of a completed run."""

    def __init__(self, config):
        self.config = config
        self.inputs = []
        self.outputs = []
        self.zero_provenance = None

    def add_input(self, filename):
        self.inputs.append(filename)

    def add_output(self, filename):
        self.outputs.append(filename)
        return filename


_global_keys = ("subcommand", "digits", "threads", "rs_height", "output_dir", "config", "verbose")


def _add_common(parser):
    parser.add_argument("-v", "--verbose", action="store_true", help="Verbose output")
    parser.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="Working precision [%(default)d]")
    parser.add_argument("--threads", type=int, help="Maximum number of workers")
    parser.add_argument("--rs-height", type=float, default=DEFAULT_RIEMANN_SIEGEL_HEIGHT,
                        help="Height above which zeta uses Riemann-Siegel [%(default)g]")
    parser.add_argument("--output-dir", help="Output directory [$%s or .]" % OUTPUT_DIR_VARIABLE)
    parser.add_argument("--config", help="File of key=value lines setting defaults")


def _add_zeros(parser, height=100.0):
    parser.add_argument("--zeros", help="Zero file to import [compute]")
    parser.add_argument("--zeros-height", type=float, default=height,
                        help="Height of the zero search when computing [%(default)g]")


def build_parser():
    """Command line grammar, with one sub parser per subcommand."""
    description = "Numerical laboratory for the Riemann zeta function, its zeros and the primes."
    usage = "%(prog)s <subcommand> [options]"
    parser = ArgumentParser(prog="pyzeta", usage=usage, description=description, epilog=pyzeta.epilog)
    subparsers = parser.add_subparsers(dest="subcommand", metavar="<subcommand>")
    commands = {}

    def add(name, help_text):
        sub = subparsers.add_parser(name, help=help_text, description=help_text, epilog=pyzeta.epilog)
        _add_common(sub)
        commands[name] = sub
        return sub

    sub = add("zeros-find", "Find the zeros up to a height and tabulate count residuals")
    sub.add_argument("--t-max", type=float, required=True, help="Height of the search")
    sub.add_argument("--zeros-output", default="zeros.txt", help="Zero file name, .zetz for binary [%(default)s]")
    sub.add_argument("--count-samples", type=int, default=100, help="Heights in the count residual CSV")

    sub = add("zeros-import", "Import, verify and convert a zero file")
    sub.add_argument("--zeros", required=True, help="Zero file to import")
    sub.add_argument("--zeros-output", help="Write the zeros again under this name")
    sub.add_argument("--verify", type=int, default=0, help="Check Hardy Z at the first N zeros")

    sub = add("pi-explicit", "Reconstruct pi(x) from the zeros")
    _add_zeros(sub)
    sub.add_argument("--x", type=float, nargs="+", help="Points of evaluation")
    sub.add_argument("--x-range", type=float, nargs=3, metavar=("MIN", "MAX", "STEP"), help="Grid of points")
    sub.add_argument("--num-zeros", type=int, default=10, help="Number of zero pairs K [%(default)d]")
    sub.add_argument("--mobius-n", type=int, help="Moebius cutoff N [floor(log2 x)]")
    sub.add_argument("--mode", choices=(MODE_FULL, MODE_WAVE), default=MODE_FULL, help="Summation mode")
    sub.add_argument("--half-jump", action="store_true", help="Compare with pi(p) - 1/2 at primes")
    sub.add_argument("--preferred-n", action="store_true", help="Moebius cutoff with partial Mertens sum -2")
    sub.add_argument("--include-trivial", action="store_true", help="Add the trivial zero term in wave mode")
    sub.add_argument("--spikes", action="store_true", help="Write the derivative curve over --x-range")
    sub.add_argument("--convergence", type=int, nargs="+", help="Mean error over --x-range for these K")

    sub = add("criteria-scan", "Scan the Lagarias, Robin, Schoenfeld and Mertens criteria")
    sub.add_argument("--n-max", type=int, default=10 ** 6, help="Scan bound [%(default)d]")
    sub.add_argument("--mertens-max", type=int, help="Mertens scan bound [n-max]")
    sub.add_argument("--schoenfeld-points", type=int, default=200, help="Points of the log grid")
    sub.add_argument("--near-miss", type=float, default=NEAR_MISS_RATIO, help="Robin near miss ratio")
    sub.add_argument("--stride", type=int, default=100, help="Keep one CSV row every STRIDE samples")
    sub.add_argument("--integrals", action="store_true", help="Also evaluate the integral criteria")
    sub.add_argument("--t-max", type=float, default=1000.0, help="Balazard truncation [%(default)g]")
    sub.add_argument("--volchkov-t-max", type=float, default=200.0, help="Volchkov truncation [%(default)g]")
    sub.add_argument("--sigma-max", type=float, default=20.0, help="Volchkov sigma bound [%(default)g]")

    sub = add("stats-spacings", "Histogram of unfolded spacings against the GUE surmise")
    _add_zeros(sub, 2000.0)
    sub.add_argument("--bin-width", type=float, default=0.05, help="Bin width [%(default)g]")
    sub.add_argument("--rule", choices=(RULE_DENSITY, RULE_LOG), default=RULE_DENSITY, help="Unfolding rule")
    sub.add_argument("--include-low", action="store_true", help="Keep zeros below height 100")

    sub = add("stats-paircorr", "Pair correlation of the zeros")
    _add_zeros(sub, 10000.0)
    sub.add_argument("--u-max", type=float, default=3.0, help="Largest unfolded difference [%(default)g]")
    sub.add_argument("--bin-width", type=float, default=0.05, help="Bin width [%(default)g]")
    sub.add_argument("--normalization", choices=(NORMALIZATION_LOCAL, NORMALIZATION_MONTGOMERY),
                     default=NORMALIZATION_LOCAL, help="Normalisation of the pair counts")
    sub.add_argument("--include-low", action="store_true", help="Keep zeros below height 100")

    sub = add("stats-moments", "Moments of zeta on the critical line")
    _add_zeros(sub)
    sub.add_argument("--k", type=int, nargs="+", default=[1, 2], help="Moment orders")
    sub.add_argument("--T", type=float, nargs="+", default=[1000.0], help="Heights")
    sub.add_argument("--prime-cutoff", type=int, default=10 ** 5, help="Euler product cutoff [%(default)d]")
    sub.add_argument("--zero-panels", action="store_true", help="Use panels between the zeros")

    sub = add("fractal-render", "Newton basin image of zeta")
    sub.add_argument("--re-min", type=float, default=-9.0)
    sub.add_argument("--re-max", type=float, default=9.0)
    sub.add_argument("--im-min", type=float, default=-25.0)
    sub.add_argument("--im-max", type=float, default=25.0)
    sub.add_argument("--width", type=int, default=400)
    sub.add_argument("--height", type=int, default=1000)
    sub.add_argument("--max-iter", type=int, default=64)
    sub.add_argument("--eps", type=float, default=1e-6)
    sub.add_argument("--palette", choices=sorted(palettes), default=PALETTE_GRAY)
    sub.add_argument("--image", default="fractal", help="Image name without extension [%(default)s]")

    sub = add("vanderpol", "Profile of the van der Pol integral")
    sub.add_argument("--t-min", type=float, default=0.0)
    sub.add_argument("--t-max", type=float, default=50.0)
    sub.add_argument("--step", type=float, default=0.05)
    sub.add_argument("--x-cut", type=float, default=DEFAULT_X_CUT)

    sub = add("report", "Verify the manifest of a run and summarise it")
    sub.add_argument("--manifest", help="Manifest to verify [<output-dir>/%s]" % MANIFEST_NAME)

    return parser, commands


def _parse_bool(value):
    value = value.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ConfigError("Invalid boolean value %s" % value)


def read_config(filename, parser):
    """Reads ``key=value`` lines into parser defaults.

    Keys use the long option names, with dashes or underscores; '#' starts a
    comment.

    :raise ConfigError: on unknown keys or invalid values
    """
    actions = {action.dest: action for action in parser._actions if action.dest not in ("help", "config")}
    defaults = {}
    try:
        with open(filename) as fd:
            lines = fd.read().splitlines()
    except OSError as e:
        raise ConfigError("Unable to read config file %s: %s" % (filename, e))
    for number, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in actions:
            raise ConfigError("Unknown config key at line %d: %s" % (number, key))
        action = actions[key]
        value = value.strip()
        try:
            if action.nargs == 0:
                defaults[key] = _parse_bool(value)
            elif action.nargs in ("+", "*") or isinstance(action.nargs, int):
                convert = action.type or str
                defaults[key] = [convert(item) for item in value.replace(",", " ").split()]
            else:
                defaults[key] = (action.type or str)(value)
        except (TypeError, ValueError) as e:
            raise ConfigError("Invalid value for %s: %s" % (key, e))
    return defaults


def parse_options(argv):
    """Parses the command line, applying config file defaults.

    :raise SystemExit: with status 2 on usage errors
    """
    parser, commands = build_parser()
    if not argv:
        parser.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)
    options = parser.parse_args(argv)
    if options.subcommand is None:
        parser.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)
    if options.config:
        command = commands[options.subcommand]
        try:
            defaults = read_config(options.config, command)
        except ConfigError as e:
            command.error(str(e))
        command.set_defaults(**defaults)
        for action in command._actions:
            if action.dest in defaults:
                action.required = False
        options = parser.parse_args(argv)
    return options


def load_zeros(config, record, ctx):
    """Zeros of the run: imported from ``config.zero_source`` or computed up
    to the ``zeros_height`` parameter."""
    if config.zero_source != ZERO_SOURCE_COMPUTE:
        store = import_zeros(config.zero_source)
        record.add_input(config.zero_source)
    else:
        search_ctx = ctx if ctx.digits >= 20 else ctx.derive(digits=20)
        store = find_zeros_up_to(config.params["zeros_height"], search_ctx, config.threads)
    record.zero_provenance = store.provenance
    log_cli.info("Using %d zeros (%s)", store.count, store.provenance)
    return store


def format_table(headers, rows):
    """Plain text table, drawn by tabulate when it is installed."""
    try:
        from tabulate import tabulate
    except ImportError:
        tabulate = None
    rows = [[str(value) for value in row] for row in rows]
    if tabulate is not None:
        return tabulate(rows, headers=headers)
    widths = [max([len(str(header))] + [len(row[i]) for row in rows]) for i, header in enumerate(headers)]
    lines = ["  ".join(str(header).ljust(width) for header, width in zip(headers, widths)),
             "  ".join("-" * width for width in widths)]
    lines.extend("  ".join(value.ljust(width) for value, width in zip(row, widths)) for row in rows)
    return "\n".join(lines)


def _number(value, digits):
    if value is None:
        return "-"
    if isinstance(value, (int, np.integer)):
        return "%d" % value
    return "%.*g" % (digits, value)


def cmd_zeros_find(config, record):
    ctx = config.context()
    t_max = config.params["t_max"]
    store = find_zeros_up_to(t_max, ctx, config.threads)
    record.zero_provenance = store.provenance
    export_zeros(store, record.add_output(config.output(config.params["zeros_output"])))

    lowest = 2 * math.pi * math.e
    samples = config.params["count_samples"]
    if t_max > lowest and samples > 0:
        heights = np.linspace(lowest + (t_max - lowest) / samples, t_max, samples)
        rows = [(report.T, report.exact_count, report.riemann_estimate, report.residual,
                 report.residual / math.log(report.T)) for report in count_residuals(store, heights)]
        write_csv(record.add_output(config.output("zero_counts.csv")),
                  ["T", "exact", "estimate", "residual", "residual_over_log"], rows, config.csv_digits)
    print("%d zeros up to height %s" % (store.count, _number(t_max, 10)))
    for position in range(min(store.count, 10)):
        print("gamma_%d = %s" % (position + 1, store.gamma_decimal(position)))


def cmd_zeros_import(config, record):
    ctx = config.context()
    store = import_zeros(config.zero_source)
    record.add_input(config.zero_source)
    record.zero_provenance = store.provenance
    print("%d zeros imported (%s), up to height %s" % (store.count, store.provenance, _number(store.height, 12)))
    if store.count and store.first_index == 1 and store.height > 2 * math.pi * math.e:
        print("Riemann-von Mangoldt estimate at the top: %s" % _number(zero_count_riemann(store.height), 10))
    anomaly = first_index_below_height(store)
    if anomaly is not None:
        print("First index with gamma_n < n: %d" % anomaly)
    if config.params["verify"]:
        failures = store.verify(ctx, range(min(config.params["verify"], store.count)))
        if failures:
            raise ArithmeticError("Hardy Z does not vanish at %d of the checked zeros" % len(failures))
        print("Verified %d zeros" % min(config.params["verify"], store.count))
    if config.params["zeros_output"]:
        export_zeros(store, record.add_output(config.output(config.params["zeros_output"])))


def _grid(params):
    if params["x"]:
        return list(params["x"])
    if params["x_range"]:
        lo, hi, step = params["x_range"]
        if step <= 0 or hi < lo:
            raise ConfigError("Invalid --x-range")
        return np.arange(lo, hi + step / 2, step).tolist()
    raise ConfigError("pi-explicit needs --x or --x-range")


def cmd_pi_explicit(config, record):
    params = config.params
    ctx = config.context()
    store = load_zeros(config, record, ctx)
    if params["mode"] == MODE_WAVE or params["spikes"] or params["convergence"]:
        work_ctx = config.context(STATISTICS_DIGITS)
    else:
        work_ctx = ctx
    cfg = WaveSumConfig(params["num_zeros"], params["mobius_n"], params["mode"], params["half_jump"],
                        params["preferred_n"], params["include_trivial"])
    xs = _grid(params)

    if params["spikes"]:
        values = spike_derivative(xs, store, cfg, work_ctx)
        write_csv(record.add_output(config.output("spikes.csv")), ["x", "derivative"], zip(xs, values),
                  config.csv_digits)
        print("Spike derivative at %d points, largest at x = %s" % (len(xs), _number(xs[int(np.argmax(values))], 8)))
        return

    table = build_sieve(max(2, int(math.floor(max(xs)))), config.threads)
    if params["convergence"]:
        rows = []
        for count in params["convergence"]:
            run_cfg = WaveSumConfig(count, params["mobius_n"], params["mode"], params["half_jump"],
                                    params["preferred_n"], params["include_trivial"])
            samples = reconstruction_grid(xs, store, run_cfg, table, work_ctx, config.threads)
            rows.append((count, mean_absolute_error(samples)))
            print("K = %d: mean |error| = %s" % (count, _number(rows[-1][1], 8)))
        write_csv(record.add_output(config.output("convergence.csv")), ["num_zeros", "mean_abs_error"], rows,
                  config.csv_digits)
        return

    samples = reconstruction_grid(xs, store, cfg, table, work_ctx, config.threads)
    write_reconstruction_csv(samples, record.add_output(config.output("pi_explicit.csv")), config.csv_digits)
    for sample in samples[:20]:
        print("pi_explicit(%s) = %s" % (_number(sample.x, 12),
                                        _number(float(sample.total), min(config.precision_digits, 15))))


def cmd_criteria_scan(config, record):
    params = config.params
    ctx = config.context()
    n_max = params["n_max"]
    mertens_max = params["mertens_max"] or n_max
    table = build_sieve(max(n_max, mertens_max, SCHOENFELD_THRESHOLD), config.threads)
    table.divisor_sums()

    reports = [lagarias_scan(n_max, table, ctx, config.threads),
               robin_scan(n_max, table, ctx, config.threads, params["near_miss"])]
    if n_max >= SCHOENFELD_THRESHOLD:
        grid = np.unique(np.floor(np.geomspace(SCHOENFELD_THRESHOLD, n_max, params["schoenfeld_points"])))
        reports.append(schoenfeld_gap(grid, table, ctx))
    reports.append(mertens_bound(mertens_max, table, config.threads))
    for report in reports:
        write_criterion_csv(report, record.add_output(config.output("%s.csv" % report.name)),
                            config.csv_digits, params["stride"])

    rows = [(report.name, "%s..%s" % report.domain_checked, _number(report.worst_margin, 10),
             _number(report.worst_location, 10), "yes" if report.passed else "no") for report in reports]
    lines = [format_table(["criterion", "domain", "worst_margin", "location", "passed"], rows)]
    robin = reports[1]
    if "near_miss_count" in robin.details:
        lines.append("robin near misses below %g: %d" % (params["near_miss"], robin.details["near_miss_count"]))

    if params["integrals"]:
        integral_ctx = config.context(STATISTICS_DIGITS)
        estimates = [("balazard", balazard_integral(params["t_max"], integral_ctx)),
                     ("volchkov", volchkov_integral(params["volchkov_t_max"], params["sigma_max"], integral_ctx))]
        rows = [(name, _number(e.value, 10), _number(e.quadrature_error, 3), _number(e.tail_bound, 3),
                 _number(e.target, 10)) for name, e in estimates]
        lines.append(format_table(["integral", "value", "quad_error", "tail_bound", "target"], rows))

    summary = "\n\n".join(lines) + "\n"
    with open(record.add_output(config.output("criteria_summary.txt")), "w", newline="\n") as fd:
        fd.write(summary)
    print(summary, end="")
    if not all(report.passed for report in reports):
        raise ArithmeticError("A criterion failed within the scanned range")


def cmd_stats_spacings(config, record):
    params = config.params
    store = load_zeros(config, record, config.context())
    min_height = None if params["include_low"] else LOW_HEIGHT_CUTOFF
    histogram, distance = spacing_histogram(store, params["bin_width"], params["rule"], min_height)
    write_histogram_csv(histogram, record.add_output(config.output("spacings.csv")), config.csv_digits)
    print("sup distance to the GUE surmise: %s" % _number(distance, 6))


def cmd_stats_paircorr(config, record):
    params = config.params
    store = load_zeros(config, record, config.context())
    min_height = None if params["include_low"] else LOW_HEIGHT_CUTOFF
    curve = pair_correlation(store, None, params["u_max"], params["bin_width"], params["normalization"],
                             min_height, config.threads)
    write_correlation_csv(curve, record.add_output(config.output("pair_correlation.csv")), config.csv_digits)
    print("sup deviation from 1 - (sin pi u / pi u)^2: %s" % _number(curve.max_deviation(u_max=params["u_max"]), 6))


def cmd_stats_moments(config, record):
    params = config.params
    ctx = config.context()
    store = load_zeros(config, record, ctx) if params["zero_panels"] else None
    rows = moment_rows(params["k"], params["T"], params["prime_cutoff"], ctx, store)
    write_moment_csv(rows, record.add_output(config.output("moments.csv")), config.csv_digits)
    print(format_table(["k", "T", "empirical", "predicted", "ratio"],
                       [(k, _number(T, 8), _number(e, 8), _number(p, 8), _number(r, 6)) for k, T, e, p, r in rows]))


def cmd_fractal_render(config, record):
    params = config.params
    spec = GridSpec(params["re_min"], params["re_max"], params["im_min"], params["im_max"],
                    params["width"], params["height"], params["max_iter"], params["eps"])
    field = escape_field(spec, config.context(STATISTICS_DIGITS), config.threads)
    extension = "pgm" if params["palette"] == PALETTE_GRAY else "ppm"
    render_pgm(field, record.add_output(config.output("%s.%s" % (params["image"], extension))), params["palette"])
    print("%d of %d pixels converged" % (field.converged_count(), spec.width * spec.height))


def cmd_vanderpol(config, record):
    params = config.params
    ts = np.arange(params["t_min"], params["t_max"] + params["step"] / 2, params["step"])
    values = vanderpol_profile(ts, params["x_cut"], config.context(), config.threads)
    write_profile_csv(ts, values, record.add_output(config.output("vanderpol.csv")), config.csv_digits)
    dips = local_minima(ts, values)
    print("Profile dips at: %s" % ", ".join(_number(t, 6) for t in dips[:29]))


def cmd_report(config, record):
    manifest = config.params["manifest"] or config.output(MANIFEST_NAME)
    entries, mismatches = verify_manifest(manifest)
    rows = [(name, digest[:16], "ok" if name not in mismatches else "MISMATCH") for name, digest in entries]
    print(format_table(["output", "sha256", "status"], rows))
    if mismatches:
        raise ArithmeticError("%d outputs do not match the manifest" % len(mismatches))


commands = {"zeros-find": cmd_zeros_find,
            "zeros-import": cmd_zeros_import,
            "pi-explicit": cmd_pi_explicit,
            "criteria-scan": cmd_criteria_scan,
            "stats-spacings": cmd_stats_spacings,
            "stats-paircorr": cmd_stats_paircorr,
            "stats-moments": cmd_stats_moments,
            "fractal-render": cmd_fractal_render,
            "vanderpol": cmd_vanderpol,
            "report": cmd_report}
"""Subcommand implementations"""


def emit_manifest(record, timestamp=None):
    """Writes the manifest of a run: tool version, parameters, inputs and
    outputs with their SHA-256 checksums, and the zero provenance.

    Only the timestamp line differs between identical runs.

    :raise IOError: if the manifest can't be written
    """
    config = record.config
    timestamp = timestamp or datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    lines = ["# pyzeta run manifest",
             "tool: %s %s" % (pyzeta.__title__, pyzeta.__version__),
             "subcommand: %s" % config.subcommand,
             "timestamp: %s" % timestamp]
    lines.extend("param %s=%s" % (key, value) for key, value in config.parameters())
    if record.zero_provenance:
        lines.append("zeros_provenance: %s" % record.zero_provenance)
    for filename in record.inputs:
        lines.append("input %s sha256=%s" % (filename, sha256_file(filename)))
    for filename in record.outputs:
        lines.append("output %s sha256=%s size=%d" % (os.path.relpath(filename, config.output_dir),
                                                       sha256_file(filename), os.path.getsize(filename)))
    manifest = config.output(MANIFEST_NAME)
    with open(manifest, "w", newline="\n") as fd:
        fd.write("\n".join(lines) + "\n")
    return manifest


def verify_manifest(filename):
    """Recomputes the checksums of the outputs listed in a manifest.

    :return: (name, expected digest) entries and the names that are missing
        or do not match
    :rtype: ``tuple``
    """
    base = os.path.dirname(os.path.abspath(filename))
    entries = []
    mismatches = []
    with open(filename) as fd:
        for line in fd:
            if not line.startswith("output "):
                continue
            name, digest = line.split()[1], line.split()[2].partition("=")[2]
            entries.append((name, digest))
            path = os.path.join(base, name)
            if not os.path.exists(path) or sha256_file(path) != digest:
                mismatches.append(name)
    return entries, mismatches


def run(argv=None):
    """Runs one subcommand and returns the exit status: 0 on success, 1 on a
    computation error, 2 on a usage error."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        options = parse_options(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if options.verbose else logging.WARNING,
                        format="%(name)s %(levelname)s: %(message)s")
    try:
        config = RunConfig.from_options(options)
        config.prepare_output_dir()
    except ConfigError as e:
        sys.stderr.write("pyzeta: error: %s\n" % e)
        return EXIT_USAGE

    record = RunRecord(config)
    try:
        commands[config.subcommand](config, record)
        if config.subcommand != "report":
            emit_manifest(record)
    except ConfigError as e:
        sys.stderr.write("pyzeta: error: %s\n" % e)
        return EXIT_USAGE
    except Exception as e:
        log_cli.debug("Run failed", exc_info=True)
        sys.stderr.write("pyzeta: %s: %s\n" % (type(e).__name__, e))
        return EXIT_FAILURE
    return EXIT_SUCCESS
