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
from threading import Lock
from fractions import Fraction
# External imports
import numpy as np
from scapy.fields import StrFixedLenField, LEShortField, LELongField, FieldLenField
# Custom imports
from pyzeta.ZetaFunctions import default_context
from pyzeta.utils import ThreadPool
from pyzeta.utils.fields import PacketNoPadded, NumpyArrayField
from pyzeta.utils.crypto import sha256_digest, digests_match, DIGEST_SIZE


# Create a logger for the arithmetic layer
log_arith = logging.getLogger("pyzeta.arith")


MAX_SIEVE_LIMIT = 10 ** 9
"""Largest sieve bound accepted"""

SEGMENT_SIZE = 1 << 22
"""Number of integers handled by each sieve segment"""

MAX_DIVISOR_SUM_LIMIT = 10 ** 8
"""Largest bound for which the full table of divisor sums is built"""

EXACT_HARMONIC_LIMIT = 10 ** 4
"""Harmonic numbers up to this index are computed as exact rationals"""

SIEVE_CACHE_MAGIC = b"ZSIV"
"""Magic string of the sieve cache file"""

SIEVE_CACHE_VERSION = 1
"""Version of the sieve cache format written"""


class CapacityExceededError(MemoryError):
    """Exception to denote a sieve bound above the supported capacity"""


class OutOfRangeError(IndexError):
    """Exception to denote a query outside the range covered by a sieve table"""


class SieveCacheFormatError(Exception):
    """Exception to denote an invalid or corrupted sieve cache file"""


def small_primes(limit):
    """Primes up to ``limit`` with a plain Eratosthenes sieve."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p::p] = False
    return np.flatnonzero(flags).astype(np.int64)


def _sieve_segment(lo, hi, base_primes):
    """Primality and Moebius values on [lo, hi).

    Every n < hi has at most one prime factor above sqrt(hi - 1), so the
    product of the small primes dividing n tells whether a large one is left.
    """
    values = np.arange(lo, hi, dtype=np.int64)
    composite = np.zeros(hi - lo, dtype=bool)
    mobius = np.ones(hi - lo, dtype=np.int8)
    radical = np.ones(hi - lo, dtype=np.int64)
    for p in base_primes:
        p = int(p)
        square = p * p
        if square >= hi:
            break
        first = -(-lo // p) * p
        mobius[first - lo::p] *= -1
        radical[first - lo::p] *= p
        mobius[-(-lo // square) * square - lo::square] = 0
        composite[max(square, first) - lo::p] = True
    large = (radical != values) & (mobius != 0)
    mobius[large] *= -1
    is_prime = ~composite
    if lo < 2:
        is_prime[:2 - lo] = False
    if lo == 0:
        mobius[0] = 0
    return is_prime, mobius


class MertensSeries(object):
    """Partial sums M(x) = sum_{n <= x} mu(n) for x up to ``limit``."""

    def __init__(self, limit, partial):
        self.limit = limit
        self.partial = partial

    def __getitem__(self, x):
        return int(self.partial[x])

    def __len__(self):
        return self.limit


class SieveTable(object):
    """Primality and Moebius values for the integers 0..limit.

    The arrays are read-only once built. Prime counts, Mertens sums and
    divisor sums are derived on first use and kept.
    """

    def __init__(self, limit, is_prime, mobius):
        if len(is_prime) != limit + 1 or len(mobius) != limit + 1:
            raise ValueError("Sieve arrays must cover 0..limit")
        self.limit = int(limit)
        self.is_prime = is_prime
        self.mobius = mobius
        self.is_prime.flags.writeable = False
        self.mobius.flags.writeable = False
        self.built = True
        self._lock = Lock()
        self._prime_counts = None
        self._mertens = None
        self._sigma = None

    def check_range(self, x):
        """Raises :class:`OutOfRangeError` if ``x`` is not in [0, limit]."""
        if x < 0 or x > self.limit:
            raise OutOfRangeError("%s outside the sieve range [0, %d]" % (x, self.limit))

    def primes(self, upto=None):
        """Primes up to ``upto`` (default the whole table) as an int64 array."""
        upto = self.limit if upto is None else min(int(upto), self.limit)
        return np.flatnonzero(self.is_prime[:upto + 1]).astype(np.int64)

    def prime_counts(self):
        """Array whose entry x is pi(x)."""
        with self._lock:
            if self._prime_counts is None:
                counts = np.cumsum(self.is_prime, dtype=np.int64)
                counts.flags.writeable = False
                self._prime_counts = counts
        return self._prime_counts

    def mertens_series(self):
        """The :class:`MertensSeries` of the table."""
        with self._lock:
            if self._mertens is None:
                partial = np.cumsum(self.mobius, dtype=np.int64)
                partial.flags.writeable = False
                self._mertens = MertensSeries(self.limit, partial)
        return self._mertens

    def divisor_sums(self):
        """Array whose entry n is sigma(n) (entry 0 is 0).

        :raise CapacityExceededError: above :data:`MAX_DIVISOR_SUM_LIMIT`
        """
        if self.limit > MAX_DIVISOR_SUM_LIMIT:
            raise CapacityExceededError("Divisor sums are tabulated up to %d" % MAX_DIVISOR_SUM_LIMIT)
        with self._lock:
            if self._sigma is None:
                log_arith.debug("Tabulating divisor sums up to %d", self.limit)
                sigma = np.zeros(self.limit + 1, dtype=np.int64)
                for d in range(1, self.limit + 1):
                    sigma[d::d] += d
                sigma.flags.writeable = False
                self._sigma = sigma
        return self._sigma

    @property
    def has_divisor_sums(self):
        return self._sigma is not None

    def squarefree_fraction(self, value=1):
        """Fraction of n <= limit with mu(n) equal to ``value``."""
        return float(np.count_nonzero(self.mobius[1:] == value)) / self.limit

    def __repr__(self):
        return "SieveTable(limit=%d)" % self.limit


def build_sieve(limit, threads=None):
    """Builds the primality and Moebius tables up to ``limit``.

    The range is processed in segments of :data:`SEGMENT_SIZE` integers
    against the primes up to sqrt(limit); segments run on a thread pool and
    are concatenated in order.

    :param limit: bound N of the table
    :type limit: ``int``

    :param threads: maximum number of workers
    :type threads: ``int``

    :return: the table
    :rtype: :class:`SieveTable`

    :raise ValueError: if limit < 2
    :raise CapacityExceededError: if limit exceeds :data:`MAX_SIEVE_LIMIT`
    """
    limit = int(limit)
    if limit < 2:
        raise ValueError("Sieve bound must be at least 2")
    if limit > MAX_SIEVE_LIMIT:
        raise CapacityExceededError("Sieve bound %d above %d" % (limit, MAX_SIEVE_LIMIT))

    base_primes = small_primes(math.isqrt(limit))
    blocks = [(lo, min(lo + SEGMENT_SIZE, limit + 1)) for lo in range(0, limit + 1, SEGMENT_SIZE)]
    log_arith.debug("Sieving up to %d in %d segments", limit, len(blocks))
    pool = ThreadPool(min(threads or len(blocks), len(blocks)))
    segments = pool.map(lambda block: _sieve_segment(block[0], block[1], base_primes), blocks)
    is_prime = np.concatenate([segment[0] for segment in segments])
    mobius = np.concatenate([segment[1] for segment in segments])
    return SieveTable(limit, is_prime, mobius)


def mertens(x, table):
    """Mertens function M(x) = sum_{n <= x} mu(n).

    :raise OutOfRangeError: if x is not in [1, table.limit]
    """
    if x < 1:
        raise OutOfRangeError("Mertens function is defined for x >= 1")
    table.check_range(x)
    return table.mertens_series()[int(x)]


def _pi_fraction(n, table, half_jump):
    count = Fraction(int(table.prime_counts()[n]))
    if half_jump and table.is_prime[n]:
        count -= Fraction(1, 2)
    return count


def prime_pi_exact(x, table, half_jump=False):
    """Number of primes up to ``x``.

    In half jump mode the value at a prime p is pi(p) - 1/2, the midpoint of
    the jump.

    :raise OutOfRangeError: if floor(x) exceeds the table
    """
    if x < 0:
        raise OutOfRangeError("Prime counting is defined for x >= 0")
    n = int(math.floor(x))
    table.check_range(n)
    count = int(table.prime_counts()[n])
    if half_jump and x == n and table.is_prime[n]:
        return count - 0.5
    return count


def factorize(n, table=None):
    """Prime factorisation of ``n`` by trial division with sieve primes.

    :return: list of (prime, exponent) pairs in ascending order
    :rtype: ``list``

    :raise OutOfRangeError: if sqrt(n) exceeds the table given
    """
    n = int(n)
    if n < 1:
        raise ValueError("Only positive integers are factorised")
    root = math.isqrt(n)
    if table is not None:
        if root > table.limit:
            raise OutOfRangeError("%d needs primes beyond the sieve range" % n)
        primes = table.primes(root)
    else:
        if root > MAX_SIEVE_LIMIT:
            raise CapacityExceededError("%d is beyond the factorisation range" % n)
        primes = small_primes(root)
    factors = []
    for p in primes:
        p = int(p)
        if p * p > n:
            break
        if n % p == 0:
            exponent = 0
            while n % p == 0:
                n //= p
                exponent += 1
            factors.append((p, exponent))
    if n > 1:
        factors.append((n, 1))
    return factors


def mobius_value(n, table=None):
    """Moebius function of a single integer, from the table when it covers n."""
    if table is not None and 1 <= n <= table.limit:
        return int(table.mobius[n])
    factors = factorize(n, table)
    if any(exponent > 1 for _, exponent in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisor_sigma(n, table=None):
    """Sum of the divisors of ``n``."""
    if table is not None and table.has_divisor_sums and 1 <= n <= table.limit:
        return int(table.divisor_sums()[n])
    result = 1
    for p, exponent in factorize(n, table):
        result *= (p ** (exponent + 1) - 1) // (p - 1)
    return result


def harmonic_exact(n):
    """H_n as an exact :class:`fractions.Fraction`."""
    if n < 1:
        raise ValueError("Harmonic numbers are indexed from 1")
    return sum((Fraction(1, j) for j in range(1, int(n) + 1)), Fraction(0))


def harmonic(n, ctx=None):
    """Harmonic number H_n at context precision, exact below
    :data:`EXACT_HARMONIC_LIMIT`."""
    ctx = ctx or default_context()
    mp = ctx.mp
    if n < 1:
        raise ValueError("Harmonic numbers are indexed from 1")
    if n <= EXACT_HARMONIC_LIMIT:
        value = harmonic_exact(n)
        return mp.mpf(value.numerator) / value.denominator
    return mp.harmonic(int(n))


def floor_root(x, k):
    """floor(x^(1/k)) computed without floating point drift for integer x."""
    if k == 1:
        return int(math.floor(x))
    if x < 1:
        return 0
    n = int(math.floor(x))
    root = int(round(n ** (1.0 / k)))
    while root ** k > n:
        root -= 1
    while (root + 1) ** k <= n:
        root += 1
    # floor(x^(1/k)) == floor(floor(x)^(1/k)) since root^k is an integer
    return root


def _j_value(x, table, half_jump):
    total = Fraction(0)
    k = 1
    while True:
        root = floor_root(x, k)
        if root < 2:
            break
        exact = x == int(x) and root ** k == int(x)
        total += _pi_fraction(root, table, half_jump and exact) / k
        k += 1
    return total


def j_function(x, table, ctx=None, half_jump=False, exact=False):
    """Riemann's prime power counting function J(x) = sum_k pi(x^(1/k))/k.

    :param exact: return a :class:`fractions.Fraction` instead of a float
    :type exact: ``bool``

    :raise OutOfRangeError: if x < 0 or floor(x) exceeds the table
    """
    if x < 0:
        raise OutOfRangeError("J(x) is defined for x >= 0")
    if x < 2:
        return Fraction(0) if exact else 0.0
    table.check_range(int(math.floor(x)))
    total = _j_value(x, table, half_jump)
    if exact:
        return total
    if ctx is not None:
        return ctx.mp.mpf(total.numerator) / total.denominator
    return float(total)


def mobius_inversion_pi(x, table):
    """pi(x) recovered from J as sum_n mu(n)/n J(x^(1/n)), as an exact rational.

    J(x^(1/n)) only needs floor(x^(1/(nk))), so the sum is exact for
    integer x.
    """
    x = int(x)
    table.check_range(x)
    total = Fraction(0)
    n = 1
    while floor_root(x, n) >= 2:
        mu = int(table.mobius[n])
        if mu:
            inner = Fraction(0)
            k = 1
            while True:
                root = floor_root(x, n * k)
                if root < 2:
                    break
                inner += Fraction(int(table.prime_counts()[root]), k)
                k += 1
            total += Fraction(mu, n) * inner
        n += 1
    return total


def mobius_reciprocal_sum(table, power=2, upto=None):
    """sum_{n <= upto} mu(n)/n^power in double precision."""
    upto = table.limit if upto is None else int(upto)
    table.check_range(upto)
    n = np.arange(1, upto + 1, dtype=np.float64)
    return float(np.sum(table.mobius[1:upto + 1] / n ** power))


class SieveCacheFormat(PacketNoPadded):
    """Sieve cache file

    Header with magic, version and bound, followed by the packed primality
    bits and the Moebius values, each preceded by its length and SHA-256
    digest.
    """
    name = "Sieve cache"

    fields_desc = [
        StrFixedLenField("magic", SIEVE_CACHE_MAGIC, 4),
        LEShortField("version", SIEVE_CACHE_VERSION),
        LELongField("limit", 0),
        FieldLenField("primality_length", None, length_of="primality", fmt="<Q"),
        StrFixedLenField("primality_digest", b"\x00" * DIGEST_SIZE, DIGEST_SIZE),
        FieldLenField("mobius_length", None, length_of="mobius", fmt="<Q"),
        StrFixedLenField("mobius_digest", b"\x00" * DIGEST_SIZE, DIGEST_SIZE),
        NumpyArrayField("primality", None, "u1", length_from=lambda pkt: pkt.primality_length),
        NumpyArrayField("mobius", None, "i1", length_from=lambda pkt: pkt.mobius_length),
    ]


def export_sieve(table, filename):
    """Writes a sieve table to a binary cache file."""
    primality = np.packbits(table.is_prime)
    mobius = np.ascontiguousarray(table.mobius, dtype=np.int8)
    cache = SieveCacheFormat(limit=table.limit,
                             primality=primality,
                             primality_digest=sha256_digest(primality.tobytes()),
                             mobius=mobius,
                             mobius_digest=sha256_digest(mobius.tobytes()))
    with open(filename, "wb") as fd:
        fd.write(bytes(cache))
    log_arith.debug("Sieve cache written to %s", filename)


def import_sieve(filename):
    """Reads a sieve table from a binary cache file.

    :raise SieveCacheFormatError: on bad magic, unknown version, truncated
        payloads or digest mismatches
    """
    with open(filename, "rb") as fd:
        data = fd.read()
    if not data.startswith(SIEVE_CACHE_MAGIC):
        raise SieveCacheFormatError("Invalid sieve cache magic")
    try:
        cache = SieveCacheFormat(data)
    except Exception as e:
        raise SieveCacheFormatError("Unable to parse sieve cache: %s" % e)
    if cache.version != SIEVE_CACHE_VERSION:
        raise SieveCacheFormatError("Unsupported sieve cache version %d" % cache.version)

    primality = cache.primality if cache.primality is not None else np.zeros(0, dtype=np.uint8)
    mobius = cache.mobius if cache.mobius is not None else np.zeros(0, dtype=np.int8)
    if not digests_match(cache.primality_digest, sha256_digest(primality.tobytes())) or \
            not digests_match(cache.mobius_digest, sha256_digest(mobius.tobytes())):
        raise SieveCacheFormatError("Sieve cache payload checksum mismatch")

    limit = int(cache.limit)
    if len(mobius) != limit + 1 or len(primality) * 8 < limit + 1:
        raise SieveCacheFormatError("Sieve cache payload does not cover its bound")
    is_prime = np.unpackbits(primality)[:limit + 1].astype(bool)
    return SieveTable(limit, is_prime, np.array(mobius, dtype=np.int8))
