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
import numpy as np
from scipy import special as sp_special
# Custom imports
from pyzeta.ZetaFunctions import hardy_z_array, barnes_g_integer, DomainError, QuadratureFailureError
from pyzeta.ZetaArith import small_primes
from pyzeta.utils import ThreadPool, split_range, write_csv


# Create a logger for the statistics layer
log_stats = logging.getLogger("pyzeta.stats")


RULE_LOG = "log"
"""Unfolding by log(gamma)/2pi"""

RULE_DENSITY = "density"
"""Unfolding by the zero density log(gamma/2pi)/2pi"""

NORMALIZATION_LOCAL = "local"
"""Pair differences of zeros unfolded with the smooth counting function"""

NORMALIZATION_MONTGOMERY = "montgomery"
"""Raw differences scaled by 2pi/log T and counts by T log T/2pi"""

DEFAULT_BIN_WIDTH = 0.05

LOW_HEIGHT_CUTOFF = 100.0
"""Statistics skip zeros below this height unless asked otherwise"""

MIN_HISTOGRAM_ZEROS = 10 ** 3
MIN_CORRELATION_ZEROS = 10 ** 4

MAX_MOMENT_HEIGHT = 10 ** 5
MOMENT_GAUSS_NODES = 16
MOMENT_PANEL_WIDTH = 0.25
MOMENT_CHUNK = 1 << 16
MOMENT_RTOL = 1e-4

MIN_PRIME_CUTOFF = 10 ** 3

PAIR_BLOCK = 1 << 15


class InsufficientDataError(ValueError):
    """Exception to denote a statistic asked for with too few zeros"""


class Histogram(object):
    """Histogram normalised as a probability density."""

    def __init__(self, bin_edges, counts):
        bin_edges = np.asarray(bin_edges, dtype=float)
        counts = np.asarray(counts, dtype=np.int64)
        if len(bin_edges) != len(counts) + 1 or np.any(np.diff(bin_edges) <= 0):
            raise ValueError("Bin edges must be strictly increasing, one more than counts")
        self.bin_edges = bin_edges
        self.counts = counts
        widths = np.diff(bin_edges)
        total = counts.sum()
        self.normalized_density = counts / (total * widths) if total else np.zeros(len(counts))

    @property
    def midpoints(self):
        return (self.bin_edges[:-1] + self.bin_edges[1:]) / 2

    @property
    def total_mass(self):
        return float(np.sum(self.normalized_density * np.diff(self.bin_edges)))


class CorrelationCurve(object):
    """Empirical pair correlation of unfolded zeros against
    1 - (sin pi u / pi u)^2 at the bin midpoints."""

    def __init__(self, u_grid, empirical, bin_width, normalization):
        self.u_grid = np.asarray(u_grid, dtype=float)
        self.empirical = np.asarray(empirical, dtype=float)
        self.predicted = montgomery_density(self.u_grid)
        self.bin_width = bin_width
        self.normalization = normalization

    def max_deviation(self, u_min=0.05, u_max=3.0):
        """sup |empirical - predicted| over bins with midpoints in [u_min, u_max]."""
        window = (self.u_grid >= u_min) & (self.u_grid <= u_max)
        return float(np.abs(self.empirical[window] - self.predicted[window]).max())


def _select(store, min_height):
    if min_height is None:
        return np.asarray(store.gammas)
    return np.asarray(store.gammas)[np.asarray(store.gammas) > min_height]


def unfold(store, rule=RULE_LOG, min_height=None):
    """Unfolded nearest neighbour spacings.

    With the printed rule s_n = (gamma_{n+1} - gamma_n) log(gamma_n)/2pi; with
    the density rule the logarithm is taken of gamma_n/2pi, which gives
    spacings of unit mean.

    :raise InsufficientDataError: with fewer than two zeros
    """
    gammas = _select(store, min_height)
    if len(gammas) < 2:
        raise InsufficientDataError("Unfolding needs at least two zeros")
    if rule == RULE_LOG:
        scale = np.log(gammas[:-1]) / (2 * math.pi)
    elif rule == RULE_DENSITY:
        scale = np.log(gammas[:-1] / (2 * math.pi)) / (2 * math.pi)
    else:
        raise ValueError("Unknown unfolding rule %s" % rule)
    return np.diff(gammas) * scale


def gue_surmise(s):
    """Spacing density (32/pi^2) s^2 exp(-4 s^2/pi) of the unitary ensemble.

    :raise DomainError: if s < 0
    """
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise DomainError("Spacing density is defined for s >= 0")
    value = 32 / math.pi ** 2 * s * s * np.exp(-4 * s * s / math.pi)
    return float(value) if value.ndim == 0 else value


def montgomery_density(u):
    """Pair correlation density 1 - (sin pi u / pi u)^2."""
    return 1 - np.sinc(np.asarray(u, dtype=float)) ** 2


def spacing_histogram(store, bin_width=DEFAULT_BIN_WIDTH, rule=RULE_DENSITY, min_height=LOW_HEIGHT_CUTOFF):
    """Density histogram of unfolded spacings and its sup distance to
    :func:`gue_surmise` at the bin midpoints.

    :return: histogram and distance
    :rtype: ``tuple``

    :raise InsufficientDataError: with fewer than 1000 zeros
    """
    if store.count < MIN_HISTOGRAM_ZEROS:
        raise InsufficientDataError("Spacing histogram needs at least %d zeros" % MIN_HISTOGRAM_ZEROS)
    if bin_width <= 0:
        raise ValueError("Bin width must be positive")
    spacings = unfold(store, rule, min_height)
    bins = int(math.ceil(spacings.max() / bin_width)) + 1
    edges = np.arange(bins + 1) * bin_width
    counts, _ = np.histogram(spacings, edges)
    histogram = Histogram(edges, counts)
    distance = float(np.abs(histogram.normalized_density - gue_surmise(histogram.midpoints)).max())
    log_stats.debug("Spacing histogram of %d spacings, sup distance %g", len(spacings), distance)
    return histogram, distance


def smooth_zero_count(t):
    """(t/2pi) log(t/(2 pi e)) + 7/8, the smooth part of N(t)."""
    t = np.asarray(t, dtype=float)
    return t / (2 * math.pi) * np.log(t / (2 * math.pi * math.e)) + 7.0 / 8


def _pair_counts(points, lo, hi, edges):
    """Histogram of the differences x_m - x_n, m > n, for n in [lo, hi)."""
    counts = np.zeros(len(edges) - 1, dtype=np.int64)
    top = edges[-1]
    offset = 1
    while lo + offset < len(points):
        stop = min(hi, len(points) - offset)
        diffs = points[lo + offset:stop + offset] - points[lo:stop]
        if diffs.min() > top:
            break
        counts += np.histogram(diffs, edges)[0]
        offset += 1
    return counts


def pair_correlation(store, T=None, u_max=3.0, bin_width=DEFAULT_BIN_WIDTH,
                     normalization=NORMALIZATION_LOCAL, min_height=LOW_HEIGHT_CUTOFF, threads=None):
    """Pair correlation of the zeros up to T on bins of width ``bin_width``.

    With the local normalisation each zero is unfolded to x = N_0(gamma), the
    smooth count, and the pair counts are divided by (number of zeros) times
    the bin width. The Montgomery normalisation counts raw differences in
    windows of 2 pi u / log T and divides by (T log T / 2pi) times the bin
    width.

    :rtype: :class:`CorrelationCurve`

    :raise InsufficientDataError: with fewer than 10^4 zeros
    :raise ValueError: if some stored zero lies above T
    """
    if store.count < MIN_CORRELATION_ZEROS:
        raise InsufficientDataError("Pair correlation needs at least %d zeros" % MIN_CORRELATION_ZEROS)
    T = store.height if T is None else T
    if store.count and store.gammas[-1] > T:
        raise ValueError("Stored zeros go beyond T = %g" % T)
    gammas = _select(store, min_height)
    if len(gammas) < 2:
        raise InsufficientDataError("Not enough zeros above height %g" % min_height)

    if normalization == NORMALIZATION_LOCAL:
        points = smooth_zero_count(gammas)
        scale = len(points)
    elif normalization == NORMALIZATION_MONTGOMERY:
        points = gammas * math.log(T) / (2 * math.pi)
        scale = T * math.log(T) / (2 * math.pi)
    else:
        raise ValueError("Unknown normalization %s" % normalization)

    bins = int(round(u_max / bin_width))
    edges = np.arange(bins + 1) * bin_width
    blocks = split_range(0, len(points), max(1, len(points) // PAIR_BLOCK))
    pool = ThreadPool(min(threads or len(blocks), len(blocks)))
    counts = sum(pool.map(lambda block: _pair_counts(points, block[0], block[1], edges), blocks))
    empirical = counts / (scale * bin_width)
    return CorrelationCurve((edges[:-1] + edges[1:]) / 2, empirical, bin_width, normalization)


def _panels(T, store):
    if store is not None:
        inner = np.asarray(store.gammas)[np.asarray(store.gammas) < T]
        return np.concatenate([[0.0], inner, [float(T)]])
    count = max(1, int(math.ceil(T / MOMENT_PANEL_WIDTH)))
    return np.linspace(0.0, float(T), count + 1)


def _gauss_panels(edges, nodes, power):
    x, w = np.polynomial.legendre.leggauss(nodes)
    total = 0.0
    for start in range(0, len(edges) - 1, MOMENT_CHUNK):
        lo = edges[start:start + MOMENT_CHUNK]
        hi = edges[start + 1:start + MOMENT_CHUNK + 1]
        half = (hi - lo)[:, None] / 2
        t = (lo + hi)[:, None] / 2 + half * x[None, :]
        values = np.abs(hardy_z_array(t)) ** power
        total += math.fsum((values * w[None, :] * half).sum(axis=1))
    return total


def moment_empirical(k, T, ctx=None, store=None):
    """(1/T) int_0^T |zeta(1/2 + it)|^(2k) dt.

    Gauss-Legendre panels run between consecutive zeros when a store is
    given, otherwise over panels of width :data:`MOMENT_PANEL_WIDTH`. The
    integral is recomputed with half the nodes as an error check.

    :raise DomainError: if k is not in 1..4 or T is out of (0, 10^5]
    :raise QuadratureFailureError: if both rules disagree
    """
    if int(k) != k or not 1 <= k <= 4:
        raise DomainError("Moments are computed for k = 1..4")
    if not 0 < T <= MAX_MOMENT_HEIGHT:
        raise DomainError("Moments are computed up to T = %d" % MAX_MOMENT_HEIGHT)
    edges = _panels(T, store)
    power = 2 * int(k)
    value = _gauss_panels(edges, MOMENT_GAUSS_NODES, power)
    check = _gauss_panels(edges, MOMENT_GAUSS_NODES // 2, power)
    if abs(value - check) > MOMENT_RTOL * abs(value):
        raise QuadratureFailureError("Moment quadrature rules disagree: %g vs %g" % (value, check))
    return value / T


def moment_leading_factor(k):
    """f_k = G(k+1)^2 / G(2k+1) as an exact fraction."""
    return Fraction(barnes_g_integer(k + 1) ** 2, barnes_g_integer(2 * k + 1))


def arithmetic_factor(k, prime_cutoff, tail=True):
    """a(k) = prod_p (1 - 1/p)^(k^2) 2F1(k, k; 1; 1/p) truncated at
    ``prime_cutoff``, optionally completed with the factor
    exp(-k^2 (k-1)^2 / (4 P log P)) for the primes above P."""
    primes = small_primes(int(prime_cutoff)).astype(float)
    x = 1 / primes
    logs = k * k * np.log1p(-x) + np.log(sp_special.hyp2f1(k, k, 1, x))
    value = math.fsum(logs)
    if tail:
        value -= k * k * (k - 1) ** 2 / (4 * prime_cutoff * math.log(prime_cutoff))
    return math.exp(value)


def keating_snaith_constant(k, prime_cutoff=10 ** 5, tail=True):
    """f_k a(k), the constant of the predicted 2k-th moment."""
    if prime_cutoff < MIN_PRIME_CUTOFF:
        raise DomainError("Euler product needs primes up to at least %d" % MIN_PRIME_CUTOFF)
    return float(moment_leading_factor(k)) * arithmetic_factor(k, prime_cutoff, tail)


def moment_predicted(k, T, prime_cutoff=10 ** 5, ctx=None):
    """Predicted moment f_k a(k) (log T)^(k^2).

    :raise DomainError: if k < 1 or prime_cutoff < 1000
    """
    if int(k) != k or k < 1:
        raise DomainError("Moments are indexed by k >= 1")
    return keating_snaith_constant(int(k), prime_cutoff) * math.log(T) ** (k * k)


def moment_rows(ks, heights, prime_cutoff=10 ** 5, ctx=None, store=None):
    """Rows (k, T, empirical, predicted, ratio) of the moment table."""
    rows = []
    for k in ks:
        for T in heights:
            empirical = moment_empirical(k, T, ctx, store)
            predicted = moment_predicted(k, T, prime_cutoff, ctx)
            rows.append((int(k), T, empirical, predicted, empirical / predicted))
    return rows


def write_histogram_csv(histogram, filename, digits=15):
    rows = zip(histogram.bin_edges[:-1], histogram.bin_edges[1:], histogram.counts.tolist(),
               histogram.normalized_density, gue_surmise(histogram.midpoints))
    write_csv(filename, ["s_lo", "s_hi", "count", "density", "gue"], rows, digits)


def write_correlation_csv(curve, filename, digits=15):
    write_csv(filename, ["u", "empirical", "predicted"], zip(curve.u_grid, curve.empirical, curve.predicted),
              digits)


def write_moment_csv(rows, filename, digits=15):
    write_csv(filename, ["k", "T", "empirical", "predicted", "ratio"], rows, digits)
