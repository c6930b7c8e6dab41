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
import math
import logging
from fractions import Fraction
# External imports
import mpmath
import numpy as np
from scipy import special as sp_special
# Custom imports
from pyzeta.ZetaFunctions import (default_context, li_real, zeta, QuadratureFailureError,
                                  DomainError, STATISTICS_DIGITS)
from pyzeta.ZetaArith import OutOfRangeError, EXACT_HARMONIC_LIMIT
from pyzeta.utils import ThreadPool, split_range, write_csv


# Create a logger for the criteria layer
log_criteria = logging.getLogger("pyzeta.criteria")


ROBIN_THRESHOLD = 5040
"""Robin's inequality is stated for n above this value"""

SCHOENFELD_THRESHOLD = 2657
"""Schoenfeld's bound is stated for x at or above this value"""

NEAR_MISS_RATIO = 0.1
"""Relative margin under which a Robin sample counts as a near miss"""

SCAN_BLOCK = 1 << 18
"""Integers per block in the parallel scans"""

MAX_NEAR_MISSES = 1000

VOLCHKOV_TARGET = math.pi * (3 - 0.5772156649015329) / 32
"""Right hand side pi (3 - gamma)/32 of Volchkov's equality"""


class CriterionReport(object):
    """Outcome of a criterion scan.

    ``worst_margin`` is the smallest signed margin over the checked domain
    (positive means satisfied) and ``passed`` is true exactly when it is
    positive. Boundary equalities excluded from the pass/fail decision are
    kept in ``boundary``.
    """

    def __init__(self, name, domain_checked, worst_margin, worst_location, samples=None,
                 boundary=None, details=None):
        self.name = name
        self.domain_checked = domain_checked
        self.worst_margin = worst_margin
        self.worst_location = worst_location
        self.passed = bool(worst_margin > 0)
        # Columns (location, lhs, rhs, margin) for CSV emission
        self.samples = samples
        self.boundary = boundary or {}
        self.details = details or {}

    def __repr__(self):
        return "CriterionReport(%s, passed=%s, worst_margin=%g at %s)" % (
            self.name, self.passed, self.worst_margin, self.worst_location)


class IntegralEstimate(object):
    """Truncated integral with its quadrature error, an estimate of the
    neglected tail and the exact value of the full integral."""

    def __init__(self, value, quadrature_error, tail_bound, target):
        self.value = value
        self.quadrature_error = quadrature_error
        self.tail_bound = tail_bound
        self.target = target

    @property
    def deviation(self):
        return abs(self.value - self.target)

    @property
    def relative_deviation(self):
        if not self.target:
            return self.deviation
        return self.deviation / abs(self.target)

    def __repr__(self):
        return "IntegralEstimate(value=%.10g, error=%.3g, tail=%.3g, target=%.10g)" % (
            self.value, self.quadrature_error, self.tail_bound, self.target)


def _check_scan_range(n_max, table):
    if n_max < 1:
        raise OutOfRangeError("Scans start at n = 1")
    if n_max > table.limit:
        raise OutOfRangeError("Scan up to %d exceeds the sieve range %d" % (n_max, table.limit))


def _scan_blocks(start, stop, func, threads):
    """Applies ``func(lo, hi)`` to consecutive blocks of [start, stop) and
    concatenates the resulting columns in order."""
    if stop <= start:
        return None
    blocks = split_range(start, stop, max(1, (stop - start) // SCAN_BLOCK + 1))
    pool = ThreadPool(min(threads or len(blocks), len(blocks)))
    parts = pool.map(lambda block: func(*block), blocks)
    return tuple(np.concatenate(column) for column in zip(*parts))


def _worst(locations, margins):
    if locations is None or not len(margins):
        return float("inf"), None
    index = int(np.argmin(margins))
    return float(margins[index]), int(locations[index])


def _lagarias_exact(h, sigma, ctx):
    mp = ctx.mp
    rhs = h + mp.exp(h) * mp.log(h)
    return rhs, rhs - sigma


def lagarias_scan(n_max, table, ctx=None, threads=None):
    """Lagarias' criterion sigma(n) <= H_n + e^(H_n) log H_n for n <= n_max.

    H_n is exact below :data:`EXACT_HARMONIC_LIMIT` and the right hand side is
    evaluated at context precision there; above it H_n = psi(n+1) + gamma in
    double precision. n = 1 is an equality and is recorded as a boundary,
    the pass/fail decision covers n >= 2.

    :raise OutOfRangeError: if n_max exceeds the table
    """
    ctx = ctx or default_context()
    _check_scan_range(n_max, table)
    sigma = table.divisor_sums()
    exact_stop = min(n_max, EXACT_HARMONIC_LIMIT)

    ns = np.arange(1, exact_stop + 1, dtype=np.int64)
    rhs = np.empty(len(ns))
    margins = np.empty(len(ns))
    boundary = {}
    mp = ctx.mp
    h_exact = Fraction(0)
    for index, n in enumerate(ns):
        h_exact += Fraction(1, int(n))
        h = mp.mpf(h_exact.numerator) / h_exact.denominator
        value, margin = _lagarias_exact(h, int(sigma[n]), ctx)
        rhs[index], margins[index] = float(value), float(margin)
        if n == 1:
            boundary[1] = margin

    def block(lo, hi):
        n = np.arange(lo, hi, dtype=np.int64)
        h = sp_special.digamma(n + 1.0) + np.euler_gamma
        right = h + np.exp(h) * np.log(h)
        return n, right, right - sigma[lo:hi]

    upper = _scan_blocks(exact_stop + 1, n_max + 1, block, threads)
    if upper is not None:
        ns = np.concatenate([ns, upper[0]])
        rhs = np.concatenate([rhs, upper[1]])
        margins = np.concatenate([margins, upper[2]])

    worst_margin, worst_location = _worst(ns[1:], margins[1:])
    relative = margins[1:] / rhs[1:]
    details = {}
    if len(relative):
        details["worst_relative_margin"] = float(relative.min())
        details["worst_relative_location"] = int(ns[1:][np.argmin(relative)])
    log_criteria.debug("Lagarias scan to %d: worst margin %g at %s", n_max, worst_margin, worst_location)
    return CriterionReport("lagarias", (2, n_max), worst_margin, worst_location,
                           (ns, sigma[1:n_max + 1].astype(np.float64), rhs, margins), boundary, details)


def robin_scan(n_max, table, ctx=None, threads=None, near_miss=NEAR_MISS_RATIO):
    """Robin's inequality sigma(n) < e^gamma n log log n for 5040 < n <= n_max.

    Besides the smallest absolute margin the report carries the smallest
    relative margin and the near misses, the n whose relative margin is below
    ``near_miss``.

    :raise OutOfRangeError: if n_max exceeds the table
    """
    _check_scan_range(n_max, table)
    sigma = table.divisor_sums()
    factor = math.exp(np.euler_gamma)

    def block(lo, hi):
        n = np.arange(lo, hi, dtype=np.int64)
        right = factor * n * np.log(np.log(n.astype(np.float64)))
        return n, sigma[lo:hi].astype(np.float64), right, right - sigma[lo:hi]

    columns = _scan_blocks(ROBIN_THRESHOLD + 1, n_max + 1, block, threads)
    if columns is None:
        return CriterionReport("robin", (ROBIN_THRESHOLD + 1, n_max), float("inf"), None)
    ns, lhs, rhs, margins = columns
    worst_margin, worst_location = _worst(ns, margins)
    relative = margins / rhs
    misses = ns[relative < near_miss]
    details = {"worst_relative_margin": float(relative.min()),
               "worst_relative_location": int(ns[np.argmin(relative)]),
               "near_miss_count": int(len(misses)),
               "near_misses": [int(n) for n in misses[:MAX_NEAR_MISSES]]}
    log_criteria.debug("Robin scan to %d: %d near misses", n_max, len(misses))
    return CriterionReport("robin", (ROBIN_THRESHOLD + 1, n_max), worst_margin, worst_location,
                           columns, details=details)


def schoenfeld_gap(x_grid, table, ctx=None):
    """Schoenfeld's bound |pi(x) - Li(x)| <= sqrt(x) log x / (8 pi) on a grid.

    Points below 2657 are reported but left out of the pass/fail decision.

    :raise OutOfRangeError: if the grid goes beyond the table
    """
    ctx = ctx or default_context()
    xs = np.asarray(sorted(x_grid), dtype=np.float64)
    if not len(xs) or xs[0] < 2:
        raise OutOfRangeError("Schoenfeld grid must be nonempty and start at x >= 2")
    table.check_range(int(math.floor(xs[-1])))
    counts = table.prime_counts()
    gaps = np.empty(len(xs))
    bounds = np.empty(len(xs))
    for index, x in enumerate(xs):
        gaps[index] = abs(float(int(counts[int(math.floor(x))]) - li_real(x, ctx)))
        bounds[index] = math.sqrt(x) * math.log(x) / (8 * math.pi)
    margins = bounds - gaps
    checked = xs >= SCHOENFELD_THRESHOLD
    if checked.any():
        index = int(np.argmin(np.where(checked, margins, np.inf)))
        worst_margin, worst_location = float(margins[index]), float(xs[index])
    else:
        worst_margin, worst_location = float("inf"), None
    ratios = gaps / bounds
    details = {"max_ratio": float(ratios[checked].max()) if checked.any() else None}
    return CriterionReport("schoenfeld", (SCHOENFELD_THRESHOLD, float(xs[-1])), worst_margin, worst_location,
                           (xs, gaps, bounds, margins), details=details)


def mertens_bound(n_max, table, threads=None):
    """Mertens' bound |M(n)| < sqrt(n).

    The comparison is made exactly as M(n)^2 < n; n = 1 is an equality and
    is recorded as a boundary. The report also carries the normalised
    trajectory M(n)/sqrt(n) and its largest modulus for n >= 2.

    :raise OutOfRangeError: if n_max exceeds the table
    """
    _check_scan_range(n_max, table)
    partial = table.mertens_series().partial

    def block(lo, hi):
        n = np.arange(lo, hi, dtype=np.int64)
        m = partial[lo:hi]
        return n, np.abs(m).astype(np.float64), np.sqrt(n), (m * m < n)

    ns, lhs, rhs, strict = _scan_blocks(1, n_max + 1, block, threads)
    margins = rhs - lhs
    boundary = {1: float(margins[0])}
    worst_margin, worst_location = _worst(ns[1:], margins[1:])
    if len(ns) > 1 and not strict[1:].all():
        worst_margin = min(worst_margin, 0.0)
    trajectory = partial[1:n_max + 1] / np.sqrt(ns)
    details = {"trajectory": trajectory}
    if len(ns) > 1:
        details["max_normalized"] = float(np.abs(trajectory[1:]).max())
        details["max_normalized_location"] = int(ns[1:][np.argmax(np.abs(trajectory[1:]))])
    return CriterionReport("mertens", (2, n_max), worst_margin, worst_location,
                           (ns, lhs, rhs, margins), boundary, details)


def _breakpoints(store, t_max):
    points = [0.0]
    if store is not None:
        points.extend(float(g) for g in store.gammas if g < t_max)
    points.append(float(t_max))
    return points


def _quad(mp, integrand, points, tol):
    """Quadrature with the error estimate of mpmath; one retry with every
    interval halved."""
    value, error = mp.quad(integrand, points, error=True)
    if error <= tol:
        return value, error
    refined = [points[0]]
    for lo, hi in zip(points[:-1], points[1:]):
        refined.extend([(lo + hi) / 2, hi])
    value, error = mp.quad(integrand, refined, error=True)
    if error > tol:
        raise QuadratureFailureError("Quadrature error %g above tolerance %g" % (error, tol))
    return value, error


def _zeros_for(store, t_max, ctx):
    if store is not None:
        if store.height < t_max:
            log_criteria.warning("Zero store complete up to %g only, singularities above are not split",
                                 store.height)
        return store
    from pyzeta.ZetaZeros import find_zeros_up_to
    return find_zeros_up_to(t_max, ctx.derive(digits=max(20, ctx.digits)))


def balazard_integral(t_max, ctx=None, store=None):
    """Truncated Balazard-Saias-Yor integral
    int_{-T}^{T} log|zeta(1/2+it)| / (1/4 + t^2) dt, whose full value is 0.

    The integrand is even, so twice the integral over [0, T] is computed, split
    at the zeros, where it has integrable logarithmic singularities. With
    ``ctx.digits`` at most 15 the double precision context of mpmath is used.

    :param store: zeros used as breakpoints, found when not given
    :type store: :class:`ZeroStore`

    :rtype: :class:`IntegralEstimate`

    :raise DomainError: if t_max < 100
    :raise QuadratureFailureError: if the quadrature error is too large
    """
    ctx = ctx or default_context()
    if t_max < 100:
        raise DomainError("Balazard integral is truncated at t_max >= 100")
    store = _zeros_for(store, t_max, ctx)
    points = _breakpoints(store, t_max)

    if ctx.digits <= STATISTICS_DIGITS:
        fp = mpmath.fp

        def integrand(t):
            return math.log(abs(fp.siegelz(t))) / (0.25 + t * t)
        value, error = _quad(fp, integrand, points, max(ctx.quadrature_abs_tol, 1e-8))
    else:
        mp = ctx.mp

        def integrand(t):
            return mp.log(abs(zeta(mp.mpc(0.5, t), ctx).value)) / (mp.mpf(0.25) + t * t)
        value, error = _quad(mp, integrand, [mp.mpf(p) for p in points], ctx.quadrature_abs_tol)
    # log|zeta(1/2+it)| <= log t + 1 on the tail, integrated against 1/t^2
    tail = 2 * (math.log(t_max) + 1) / t_max
    log_criteria.debug("Balazard integral to %g: %s +/- %s", t_max, value, error)
    return IntegralEstimate(2 * float(value), 2 * float(error), tail, 0.0)


def volchkov_integral(t_max, sigma_max, ctx=None, store=None):
    """Truncated Volchkov integral
    int_0^T int_{1/2}^{S} (1 - 12t^2)/(1 + 4t^2)^3 log|zeta(sigma+it)| dsigma dt,
    to be compared with pi (3 - gamma)/32.

    The outer integral is split at the zeros; the inner one at sigma = 1.

    :rtype: :class:`IntegralEstimate`

    :raise DomainError: if t_max < 50 or sigma_max < 10
    :raise QuadratureFailureError: if the quadrature error is too large
    """
    ctx = ctx or default_context()
    if t_max < 50 or sigma_max < 10:
        raise DomainError("Volchkov integral is truncated at t_max >= 50 and sigma_max >= 10")
    store = _zeros_for(store, t_max, ctx)
    points = _breakpoints(store, t_max)

    if ctx.digits <= STATISTICS_DIGITS:
        mp = mpmath.fp
        tol = max(ctx.quadrature_abs_tol, 1e-8)

        def log_abs_zeta(sigma, t):
            return math.log(abs(mp.zeta(complex(sigma, t))))
    else:
        mp = ctx.mp
        tol = ctx.quadrature_abs_tol
        points = [mp.mpf(p) for p in points]

        def log_abs_zeta(sigma, t):
            return mp.log(abs(zeta(mp.mpc(sigma, t), ctx).value))

    inner_points = [mp.mpf(0.5), mp.one, mp.mpf(sigma_max)]
    errors = []

    def outer(t):
        inner, error = mp.quad(lambda sigma: log_abs_zeta(sigma, t), inner_points, error=True)
        errors.append(error)
        weight = (1 - 12 * t * t) / (1 + 4 * t * t) ** 3
        return weight * inner

    value, error = _quad(mp, outer, points, tol)
    inner_error = max(errors) if errors else 0.0
    # |weight| < 3/(16 t^4) and the inner integral is below log t + sigma_max in modulus
    tail = (math.log(t_max) + sigma_max) / (16 * t_max ** 3) + 2.0 ** (-sigma_max) * 2
    log_criteria.debug("Volchkov integral to (%g, %g): %s", t_max, sigma_max, value)
    return IntegralEstimate(float(value), float(error) + float(inner_error), tail, VOLCHKOV_TARGET)


criterion_headers = {"lagarias": ["n", "sigma", "rhs", "margin"],
                     "robin": ["n", "sigma", "rhs", "margin"],
                     "schoenfeld": ["x", "gap", "bound", "margin"],
                     "mertens": ["n", "abs_mertens", "sqrt_n", "margin"]}
"""CSV columns of each criterion"""


def write_criterion_csv(report, filename, digits=15, stride=1):
    """Writes the samples of a scan, one row every ``stride`` samples plus
    the worst location."""
    if report.samples is None:
        rows = []
    else:
        columns = report.samples
        keep = np.zeros(len(columns[0]), dtype=bool)
        keep[::max(1, stride)] = True
        if report.worst_location is not None:
            keep |= columns[0] == report.worst_location
        rows = zip(*[column[keep].tolist() for column in columns])
    write_csv(filename, criterion_headers[report.name], rows, digits)
