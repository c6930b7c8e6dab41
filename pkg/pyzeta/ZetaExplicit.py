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
# External imports
import numpy as np
from scipy import special as sp_special
# Custom imports
from pyzeta.ZetaFunctions import (default_context, li_real, li_complex_power, DomainError,
                                  PrecisionExhaustedError, STATISTICS_DIGITS)
from pyzeta.ZetaArith import mobius_value, prime_pi_exact
from pyzeta.utils import ThreadPool, write_csv


# Create a logger for the explicit formula layer
log_explicit = logging.getLogger("pyzeta.explicit")


MODE_FULL = "full"
"""Exact expansion with Li(x^rho) on the horizontal branch"""

MODE_WAVE = "wave"
"""Superposition of waves from the two-term asymptotic of Li"""

MAX_WAVE_CUTOFF = 20
"""Largest Moebius cutoff accepted in wave mode"""

ZERO_BLOCK = 1024
"""Zeros per block in the zero sums; partial sums are added in block order"""

GRAM_DERIVATIVE_TERMS = 400

reconstruction_header = ["x", "smooth", "zero_corr", "trivial_corr", "total", "pi_exact"]
"""Columns of the reconstruction CSV"""


class InsufficientZerosError(ValueError):
    """Exception to denote a zero sum asking for more zeros than available"""


def default_cutoff(x):
    """Moebius cutoff N = floor(log2 x), the last n with x^(1/n) >= 2."""
    cutoff = max(1, int(math.floor(math.log(x, 2))))
    while cutoff > 1 and 2.0 ** cutoff > x:
        cutoff -= 1
    while 2.0 ** (cutoff + 1) <= x:
        cutoff += 1
    return cutoff


def riesel_gohl_cutoff(x):
    """Smallest N >= floor(log2 x) with sum_{n <= N} mu(n) = -2."""
    cutoff = default_cutoff(x)
    partial = sum(mobius_value(n) for n in range(1, cutoff + 1))
    while partial != -2:
        cutoff += 1
        partial += mobius_value(cutoff)
    return cutoff


class WaveSumConfig(object):
    """Truncation of the explicit formula.

    :param num_zeros: K, number of zero pairs summed in ascending order
    :type num_zeros: ``int``

    :param mobius_cutoff: N, last Moebius term; per-x default floor(log2 x)
    :type mobius_cutoff: ``int``

    :param mode: :data:`MODE_FULL` or :data:`MODE_WAVE`
    :type mode: ``str``

    :param half_jump: compare against pi(p) - 1/2 at primes
    :type half_jump: ``bool``

    :param preferred_cutoff: use the Riesel-Goehl cutoff with partial
        Mertens sum -2 instead of floor(log2 x)
    :type preferred_cutoff: ``bool``

    :param include_trivial: add the trivial zero term in wave mode
    :type include_trivial: ``bool``
    """

    def __init__(self, num_zeros, mobius_cutoff=None, mode=MODE_FULL, half_jump=False,
                 preferred_cutoff=False, include_trivial=False):
        if int(num_zeros) != num_zeros or num_zeros < 0:
            raise ValueError("Number of zeros must be a nonnegative integer")
        if mode not in (MODE_FULL, MODE_WAVE):
            raise ValueError("Unknown summation mode %s" % mode)
        if mobius_cutoff is not None:
            if int(mobius_cutoff) != mobius_cutoff or mobius_cutoff < 1:
                raise ValueError("Moebius cutoff must be a positive integer")
            if mode == MODE_WAVE and mobius_cutoff > MAX_WAVE_CUTOFF:
                raise ValueError("Wave mode accepts Moebius cutoffs up to %d" % MAX_WAVE_CUTOFF)
        self.num_zeros = int(num_zeros)
        self.mobius_cutoff = mobius_cutoff
        self.mode = mode
        self.half_jump = half_jump
        self.preferred_cutoff = preferred_cutoff
        self.include_trivial = include_trivial

    def cutoff(self, x):
        if self.mobius_cutoff is not None:
            return int(self.mobius_cutoff)
        if self.preferred_cutoff:
            cutoff = riesel_gohl_cutoff(x)
        else:
            cutoff = default_cutoff(x)
        if self.mode == MODE_WAVE:
            cutoff = min(cutoff, MAX_WAVE_CUTOFF)
        return cutoff

    def zeros(self, store):
        """The first K ordinates of ``store``.

        :raise InsufficientZerosError: if the store holds fewer than K zeros
        """
        if self.num_zeros > store.count:
            raise InsufficientZerosError("%d zeros requested, %d available" % (self.num_zeros, store.count))
        return store.gammas[:self.num_zeros]

    def __repr__(self):
        return "WaveSumConfig(num_zeros=%d, mobius_cutoff=%s, mode=%s)" % (
            self.num_zeros, self.mobius_cutoff, self.mode)


class ReconstructionSample(object):
    """One point of a prime counting reconstruction.

    total = smooth_part - zero_correction + trivial_correction, except in wave
    mode without ``include_trivial``, where the trivial term is only reported.
    """

    def __init__(self, x, smooth_part, zero_correction, trivial_correction, total, pi_exact=None):
        self.x = x
        self.smooth_part = smooth_part
        self.zero_correction = zero_correction
        self.trivial_correction = trivial_correction
        self.total = total
        self.pi_exact = pi_exact

    def row(self):
        return [self.x, self.smooth_part, self.zero_correction, self.trivial_correction, self.total,
                self.pi_exact]

    def __repr__(self):
        return "ReconstructionSample(x=%s, total=%s)" % (self.x, self.total)


def r_gram(x, ctx=None):
    """Riemann's R(x) by the Gram series 1 + sum log^n x / (n n! zeta(n+1)).

    :raise DomainError: if x <= 1
    :raise PrecisionExhaustedError: if the series needs more than
        ``ctx.max_series_terms`` terms
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    x = mp.mpf(x)
    if x <= 1:
        raise DomainError("R(x) is evaluated for x > 1")
    log_x = mp.log(x)
    total = mp.one
    power = mp.one
    for n in range(1, ctx.max_series_terms + 1):
        power *= log_x / n
        term = power / (n * mp.zeta(n + 1))
        total += term
        if n > log_x and abs(term) < ctx.eps * abs(total):
            return total
    raise PrecisionExhaustedError("Gram series did not converge in %d terms" % ctx.max_series_terms)


def r_mobius(x, cutoff, ctx=None):
    """sum_{n <= cutoff} mu(n)/n Li(x^(1/n))."""
    ctx = ctx or default_context()
    mp = ctx.mp
    x = mp.mpf(x)
    total = mp.zero
    for n in range(1, cutoff + 1):
        mu = mobius_value(n)
        if mu:
            total += mp.mpf(mu) / n * li_real(mp.root(x, n), ctx)
    return total


def riesel_gohl(x, cutoff):
    """Closed form (1/(2 log x)) sum_{n <= N} mu(n) + (1/pi) arctan(pi/log x)
    for the trivial zero contribution.

    :raise DomainError: if x <= 1
    """
    if x <= 1:
        raise DomainError("Riesel-Goehl term is evaluated for x > 1")
    log_x = math.log(x)
    partial = sum(mobius_value(n) for n in range(1, int(cutoff) + 1))
    return partial / (2 * log_x) + math.atan(math.pi / log_x) / math.pi


def _trivial_integral(y, ctx):
    """int_y^inf du / (u (u^2 - 1) log u) = sum_k E1(2k log y)."""
    mp = ctx.mp
    y = mp.mpf(y)
    if y <= 1:
        raise DomainError("Trivial zero integral requires y > 1")
    log_y = mp.log(y)
    total = mp.zero
    for k in range(1, ctx.max_series_terms + 1):
        term = mp.e1(2 * k * log_y)
        total += term
        if term < ctx.eps * total:
            return total
    raise PrecisionExhaustedError("Trivial zero series did not converge for y = %s" % mp.nstr(y, 8))


def trivial_zero_term(x, cutoff, ctx=None):
    """sum_{n <= N} mu(n)/n (int_{x^(1/n)}^inf du/(u(u^2-1) log u) - log 2)."""
    ctx = ctx or default_context()
    mp = ctx.mp
    x = mp.mpf(x)
    total = mp.zero
    for n in range(1, cutoff + 1):
        mu = mobius_value(n)
        if mu:
            total += mp.mpf(mu) / n * (_trivial_integral(mp.root(x, n), ctx) - mp.log(2))
    return total


def _blocks(gammas):
    return [gammas[start:start + ZERO_BLOCK] for start in range(0, len(gammas), ZERO_BLOCK)]


def _pair_sum_block(log_y, gammas, ctx):
    """sum over the block of Li(y^rho) + Li(y^conj(rho)) = 2 Re Li(y^rho)."""
    if ctx.digits <= STATISTICS_DIGITS:
        z = (0.5 + 1j * np.asarray(gammas, dtype=float)) * float(log_y)
        return 2 * math.fsum((-sp_special.exp1(-z)).real)
    mp = ctx.mp
    y = mp.exp(log_y)
    return 2 * mp.fsum(mp.re(li_complex_power(y, mp.mpc(0.5, gamma_n), ctx).value) for gamma_n in gammas)


def zero_pair_sum(log_y, gammas, ctx=None, pool=None):
    """sum over the given zeros of Li(y^rho) + Li(y^conj(rho)).

    Blocks of :data:`ZERO_BLOCK` zeros are summed on the pool and the partial
    sums added in block order, so the result does not depend on the number
    of workers.
    """
    ctx = ctx or default_context()
    pool = pool or ThreadPool(1)
    partials = pool.map(lambda block: _pair_sum_block(log_y, block, ctx), _blocks(gammas))
    if ctx.digits <= STATISTICS_DIGITS:
        return math.fsum(partials)
    return ctx.mp.fsum(partials)


def j_explicit(x, store, num_zeros, ctx=None, threads=None):
    """Explicit formula for J(x):
    Li(x) - sum_rho Li(x^rho) - log 2 + int_x^inf du/(u(u^2-1) log u),
    with the first ``num_zeros`` pairs.

    :raise DomainError: if x <= 1
    :raise InsufficientZerosError: if the store is too short
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    if x <= 1:
        raise DomainError("J(x) explicit formula is evaluated for x > 1")
    gammas = WaveSumConfig(num_zeros).zeros(store)
    x = mp.mpf(x)
    zeros = zero_pair_sum(mp.log(x), gammas, ctx, ThreadPool(threads))
    return li_real(x, ctx) - zeros - mp.log(2) + _trivial_integral(x, ctx)


def _wave_sum(x, gammas, cutoff):
    log_x = math.log(x)
    g = np.asarray(gammas, dtype=float)
    g2 = g * g
    total = 0.0
    for n in range(1, cutoff + 1):
        mu = mobius_value(n)
        if not mu or not len(g):
            continue
        theta = g * log_x / n
        cos, sin = np.cos(theta), np.sin(theta)
        first = (cos + 2 * g * sin) / (0.25 + g2)
        second = n / log_x * ((0.25 - g2) * 2 * cos + 2 * g * sin) / (1.0 / 16 + g2 / 2 + g2 * g2)
        total += mu * x ** (1.0 / (2 * n)) / log_x * math.fsum(first + second)
    return total


def pi_explicit(x, store, cfg, ctx=None, threads=None, pool=None):
    """Reconstructs pi(x) from the zeros.

    In full mode the value is
    sum_{n <= N} mu(n)/n [Li(x^(1/n)) - sum_rho (Li(x^(rho/n)) + Li(x^(conj(rho)/n)))]
    plus the trivial zero term, with the zeros taken in ascending order and
    conjugates paired. In wave mode R(x) from the Gram series is corrected
    by the two-term asymptotic of each Li(x^(rho/n)).

    :param x: point of evaluation, x > 2
    :type x: ``float``

    :param store: zeros
    :type store: :class:`ZeroStore`

    :param cfg: truncation
    :type cfg: :class:`WaveSumConfig`

    :param pool: pool for the zero sums, a new one of ``threads`` workers when
        not given
    :type pool: :class:`ThreadPool`

    :rtype: :class:`ReconstructionSample`

    :raise DomainError: if x <= 2
    :raise InsufficientZerosError: if the store holds fewer than K zeros
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    if x <= 2:
        raise DomainError("pi(x) reconstruction is evaluated for x > 2")
    gammas = cfg.zeros(store)
    cutoff = cfg.cutoff(x)
    trivial = trivial_zero_term(x, cutoff, ctx)

    if cfg.mode == MODE_WAVE:
        smooth = float(r_gram(x, ctx))
        zeros = _wave_sum(float(x), gammas, cutoff)
        trivial = float(trivial)
        total = smooth - zeros + (trivial if cfg.include_trivial else 0.0)
        return ReconstructionSample(x, smooth, zeros, trivial, total)

    pool = pool or ThreadPool(threads)
    log_x = mp.log(mp.mpf(x))
    smooth = r_mobius(x, cutoff, ctx)
    zeros = mp.zero
    for n in range(1, cutoff + 1):
        mu = mobius_value(n)
        if mu and len(gammas):
            zeros += mp.mpf(mu) / n * zero_pair_sum(log_x / n, gammas, ctx, pool)
    total = smooth - zeros + trivial
    return ReconstructionSample(x, smooth, zeros, trivial, total)


def reconstruction_grid(xs, store, cfg, table=None, ctx=None, threads=None):
    """:func:`pi_explicit` over a grid, with pi(x) from the sieve table when
    one is given."""
    pool = ThreadPool(threads)
    samples = []
    for x in xs:
        sample = pi_explicit(x, store, cfg, ctx, pool=pool)
        if table is not None:
            sample.pi_exact = prime_pi_exact(x, table, cfg.half_jump)
        samples.append(sample)
    log_explicit.debug("Reconstructed pi(x) at %d points with %d zeros", len(samples), cfg.num_zeros)
    return samples


def mean_absolute_error(samples):
    """Mean of |total - pi_exact| over samples carrying pi_exact."""
    errors = [abs(float(sample.total) - sample.pi_exact) for sample in samples if sample.pi_exact is not None]
    if not errors:
        raise ValueError("No sample carries an exact prime count")
    return math.fsum(errors) / len(errors)


def write_reconstruction_csv(samples, filename, digits=15):
    write_csv(filename, reconstruction_header, (sample.row() for sample in samples), digits)


def _gram_derivative(x):
    """R'(x) = (1/x) sum_n log^(n-1) x / (n! zeta(n+1))."""
    log_x = np.log(x)
    total = np.zeros_like(x)
    for n in range(1, GRAM_DERIVATIVE_TERMS + 1):
        term = np.exp((n - 1) * np.log(log_x) - sp_special.gammaln(n + 1)) / sp_special.zeta(n + 1.0, 1.0)
        total += term
        if n > log_x.max() and np.all(term < 1e-17 * total):
            break
    return total / x


def spike_derivative(x_grid, store, cfg, ctx=None):
    """Derivative of R(x) minus the first wave sum of the explicit formula.

    The result approximates a sum of Dirac deltas at the primes, each smeared
    by the truncation at K zeros; with K = 0 it is R'(x), close to 1/log x.

    :param x_grid: points of evaluation, all above 2
    :type x_grid: array

    :rtype: ``numpy.ndarray``

    :raise DomainError: if some point is <= 2
    :raise InsufficientZerosError: if the store holds fewer than K zeros
    """
    x = np.asarray(x_grid, dtype=float)
    if np.any(x <= 2):
        raise DomainError("Spike derivative is evaluated for x > 2")
    gammas = cfg.zeros(store)
    log_x = np.log(x)
    result = _gram_derivative(x)
    cutoffs = np.array([cfg.cutoff(value) for value in x])

    for n in range(1, int(cutoffs.max()) + 1):
        mu = mobius_value(n)
        if not mu:
            continue
        waves = np.zeros_like(x)
        for block in _blocks(gammas):
            g = np.asarray(block, dtype=float)[None, :]
            theta = log_x[:, None] * g / n
            cos, sin = np.cos(theta), np.sin(theta)
            inv_l = 1 / log_x[:, None]
            terms = ((inv_l / (2 * n) - inv_l * inv_l) * (cos + 2 * g * sin) +
                     g * inv_l / n * (-sin + 2 * g * cos)) / (0.25 + g * g)
            waves += terms.sum(axis=1)
        waves *= x ** (1.0 / (2 * n)) / x
        result -= mu * np.where(cutoffs >= n, waves, 0.0)
    return result
