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
from decimal import Decimal, InvalidOperation
# External imports
import numpy as np
from scipy import special as sp_special
from scapy.fields import StrFixedLenField, LEShortField, LELongField, ByteField, ByteEnumField
# Custom imports
from pyzeta.ZetaFunctions import hardy_z, hardy_z_array, default_context, DomainError
from pyzeta.utils import ThreadPool, split_range
from pyzeta.utils.fields import PacketNoPadded, NumpyArrayField, LEDoubleField
from pyzeta.utils.crypto import sha256_digest, digests_match, DIGEST_SIZE


# Create a logger for the zeros layer
log_zeros = logging.getLogger("pyzeta.zeros")


DEFAULT_STORE_DIGITS = 12
"""Decimal digits kept for each stored zero"""

MAX_SEARCH_HEIGHT = 10 ** 6
"""Desk-scale cap on the height of in-process zero searches"""

SCAN_START = 10.0
"""Height where scans start; Z has no sign change below 14"""

FIRST_ZERO_RANGE = (14.0, 14.2)
"""Interval that must contain the first zero of a store starting at index 1"""

MAX_MESH = 64
"""Largest subdivision of a Gram interval tried before giving up"""

REFINE_MAX_ITERATIONS = 200

PROVENANCE_COMPUTED = "computed"
PROVENANCE_IMPORTED = "imported"

zero_provenances = {0: PROVENANCE_COMPUTED, 1: PROVENANCE_IMPORTED}
"""Provenance values as stored in the binary cache"""

ZERO_CACHE_MAGIC = b"ZETZ"
"""Magic string of the binary zero cache"""

ZERO_CACHE_VERSION = 1
"""Version of the binary zero cache format written"""


class MissedZeroSuspectedError(ArithmeticError):
    """Exception to denote a zero search whose count audit does not close"""


class ZeroFormatError(Exception):
    """Exception to denote a malformed zero file"""


class NonMonotonicInputError(ZeroFormatError):
    """Exception to denote a zero file whose values are not strictly increasing"""


class ZeroStore(object):
    """Ordered table of imaginary parts gamma_n of zeros on the critical line.

    Values are kept as integers scaled by 10^digits so that exports and
    imports reproduce them exactly. The store is read-only.
    """

    def __init__(self, scaled, digits=DEFAULT_STORE_DIGITS, error_bounds=None,
                 provenance=PROVENANCE_COMPUTED, first_index=1, height=None, source=None):
        """
        :param scaled: gamma_n * 10^digits, as integers
        :type scaled: sequence of ``int``

        :param digits: decimals kept per zero
        :type digits: ``int``

        :param error_bounds: absolute error bound of each zero
        :type error_bounds: sequence of ``float``

        :param provenance: "computed" or "imported"
        :type provenance: ``str``

        :param first_index: index n of the first stored zero
        :type first_index: ``int``

        :param height: height up to which the store is complete
        :type height: ``float``

        :raise ValueError: if the values are not strictly increasing, are not
            positive, lie above the height, or the first zero is misplaced
        """
        scaled = np.array(scaled, dtype=np.int64).ravel()
        if provenance not in (PROVENANCE_COMPUTED, PROVENANCE_IMPORTED):
            raise ValueError("Unknown provenance %s" % provenance)
        if len(scaled):
            if scaled[0] <= 0:
                raise ValueError("Zero ordinates must be positive")
            if np.any(np.diff(scaled) <= 0):
                raise ValueError("Zero ordinates must be strictly increasing")
            if first_index == 1:
                first = float(scaled[0]) / 10 ** digits
                if not FIRST_ZERO_RANGE[0] < first < FIRST_ZERO_RANGE[1]:
                    raise ValueError("First zero %s outside %s" % (first, FIRST_ZERO_RANGE))
        if error_bounds is None:
            error_bounds = np.full(len(scaled), 0.5 * 10.0 ** -digits)
        error_bounds = np.array(error_bounds, dtype=np.float64).ravel()
        if len(error_bounds) != len(scaled) or np.any(error_bounds < 0):
            raise ValueError("One nonnegative error bound per zero is required")

        self.digits = int(digits)
        self.scaled = scaled
        self.error_bounds = error_bounds
        self.provenance = provenance
        self.first_index = int(first_index)
        self.source = source
        self.scaled.flags.writeable = False
        self.error_bounds.flags.writeable = False
        self.gammas = scaled / float(10 ** self.digits)
        self.gammas.flags.writeable = False
        if height is None:
            height = float(self.gammas[-1]) if len(scaled) else 0.0
        elif len(scaled) and height < self.gammas[-1]:
            raise ValueError("Height %s below the last stored zero" % height)
        self.height = float(height)

    @classmethod
    def from_values(cls, gammas, digits=DEFAULT_STORE_DIGITS, **kwargs):
        """Builds a store from decimal strings, Decimals or mpmath numbers."""
        scale = Decimal(10) ** digits
        scaled = [int((Decimal(str(g)) * scale).to_integral_value()) for g in gammas]
        return cls(scaled, digits=digits, **kwargs)

    @property
    def count(self):
        return len(self.scaled)

    def __len__(self):
        return self.count

    def __iter__(self):
        return iter(self.gammas)

    def __getitem__(self, index):
        return self.gammas[index]

    def gamma_decimal(self, position):
        """Exact stored value of the zero at ``position`` (0-based) as a
        decimal string."""
        return _format_scaled(int(self.scaled[position]), self.digits)

    def gamma_mpf(self, position, mp):
        """Exact stored value of the zero at ``position`` as an mpf."""
        return mp.mpf(int(self.scaled[position])) / mp.mpf(10) ** self.digits

    def count_up_to(self, T):
        """Number of stored zeros with gamma <= T."""
        return int(np.searchsorted(self.gammas, T, side="right"))

    def head(self, count):
        """Store with the first ``count`` zeros."""
        if count > self.count:
            raise ValueError("Store holds only %d zeros" % self.count)
        height = self.height if count == self.count else float(self.gammas[count - 1]) if count else 0.0
        return ZeroStore(self.scaled[:count], self.digits, self.error_bounds[:count],
                         self.provenance, self.first_index, height, self.source)

    def above(self, min_height):
        """Store with the zeros above ``min_height``."""
        start = int(np.searchsorted(self.gammas, min_height, side="right"))
        return ZeroStore(self.scaled[start:], self.digits, self.error_bounds[start:],
                         self.provenance, self.first_index + start, self.height, self.source)

    @classmethod
    def concatenate(cls, stores):
        """Joins consecutive chunks of zeros into a single store."""
        stores = [store for store in stores if store.count]
        if not stores:
            return cls([])
        digits = stores[0].digits
        if any(store.digits != digits for store in stores):
            raise ValueError("Chunks must share the number of digits")
        provenance = PROVENANCE_COMPUTED
        if any(store.provenance == PROVENANCE_IMPORTED for store in stores):
            provenance = PROVENANCE_IMPORTED
        return cls(np.concatenate([store.scaled for store in stores]), digits,
                   np.concatenate([store.error_bounds for store in stores]),
                   provenance, stores[0].first_index, stores[-1].height, stores[0].source)

    def verify(self, ctx=None, positions=None):
        """Checks that Hardy Z is small at the stored zeros.

        |Z(gamma_n)| must stay below 10 times the error bound times the local
        slope of Z, the slope being estimated by a central difference.

        :return: positions failing the check
        :rtype: ``list``
        """
        ctx = ctx or default_context()
        mp = ctx.mp
        if positions is None:
            positions = range(self.count)
        failures = []
        floor = 0.5 * 10.0 ** -self.digits
        for position in positions:
            gamma = self.gamma_mpf(position, mp)
            bound = max(float(self.error_bounds[position]), floor)
            step = mp.mpf(10) ** (-ctx.digits // 2)
            slope = abs(hardy_z(gamma + step, ctx) - hardy_z(gamma - step, ctx)) / (2 * step)
            if abs(hardy_z(gamma, ctx)) > 10 * bound * slope + ctx.eps:
                failures.append(position)
        return failures

    def __repr__(self):
        return "ZeroStore(count=%d, provenance=%s, digits=%d)" % (self.count, self.provenance, self.digits)


class CountReport(object):
    """Comparison of the exact number of zeros up to T with the
    Riemann-von Mangoldt formula."""

    def __init__(self, T, exact_count, riemann_estimate):
        self.T = T
        self.exact_count = exact_count
        self.riemann_estimate = riemann_estimate
        self.residual = exact_count - riemann_estimate
        # Constant C in |residual| <= C log T
        self.constant = abs(self.residual) / math.log(T)

    def __repr__(self):
        return "CountReport(T=%g, exact=%d, estimate=%.6f)" % (self.T, self.exact_count, self.riemann_estimate)


def _format_scaled(value, digits):
    sign = "-" if value < 0 else ""
    whole, fraction = divmod(abs(value), 10 ** digits)
    if digits == 0:
        return "%s%d" % (sign, whole)
    return "%s%d.%0*d" % (sign, whole, digits, fraction)


def zero_count_riemann(T):
    """Riemann-von Mangoldt estimate (T/2pi) log(T/(2 pi e)) + 7/8 of the
    number of zeros with 0 < gamma <= T.

    :raise DomainError: if T <= 2 pi e
    """
    if T <= 2 * math.pi * math.e:
        raise DomainError("The counting formula is used for T > 2 pi e")
    return T / (2 * math.pi) * math.log(T / (2 * math.pi * math.e)) + 7.0 / 8


def zero_count_report(T, store):
    """:class:`CountReport` at height T.

    :raise ValueError: if the store is not complete up to T
    """
    if T > store.height or store.first_index != 1:
        raise ValueError("Store is not complete up to height %g" % T)
    return CountReport(T, store.count_up_to(T), zero_count_riemann(T))


def first_index_below_height(store):
    """First index n with gamma_n < n, or None if the store has none."""
    indices = np.arange(store.first_index, store.first_index + store.count)
    below = np.flatnonzero(store.gammas < indices)
    if not len(below):
        return None
    return int(indices[below[0]])


def _theta_asymptotic(t):
    t = np.asarray(t, dtype=float)
    return (t / 2 * np.log(t / (2 * math.pi)) - t / 2 - math.pi / 8 +
            1 / (48 * t) + 7 / (5760 * t ** 3))


def gram_points_array(indices):
    """Gram points g_n, theta(g_n) = n pi, in double precision.

    Starts from the Lambert W solution of the leading terms and polishes with
    Newton steps on the asymptotic theta.
    """
    n = np.asarray(indices, dtype=float)
    w = sp_special.lambertw((8 * n + 1) / (8 * math.e)).real
    t = 2 * math.pi * np.exp(1 + w)
    for _ in range(8):
        t = t - (_theta_asymptotic(t) - n * math.pi) / (0.5 * np.log(t / (2 * math.pi)))
    return t


def gram_point(n, ctx=None):
    """Gram point g_n at context precision."""
    ctx = ctx or default_context()
    return ctx.mp.grampoint(n)


def _sample_grid(T, mesh):
    """Scan abscissae: the Gram points below T refined ``mesh`` times, with
    the positions of the Gram points in the grid."""
    top = int(math.floor(float(_theta_asymptotic(T)) / math.pi))
    gram = gram_points_array(np.arange(0, top + 1)) if top >= 0 else np.zeros(0)
    gram = gram[gram < T]
    knots = np.concatenate([[SCAN_START], gram, [T]])
    fractions = np.arange(mesh) / float(mesh)
    grid = (knots[:-1, None] + np.diff(knots)[:, None] * fractions[None, :]).ravel()
    grid = np.append(grid, T)
    gram_positions = mesh * np.arange(1, len(gram) + 1)
    return grid, gram, gram_positions


def _scan(T, mesh, pool):
    grid, gram, gram_positions = _sample_grid(T, mesh)
    blocks = split_range(0, len(grid), pool.num_threads * 4)
    values = np.concatenate(pool.map(lambda block: hardy_z_array(grid[block[0]:block[1]]), blocks))
    changes = np.flatnonzero(np.signbit(values[:-1]) != np.signbit(values[1:]))
    return grid, values, gram, gram_positions, changes


def _expected_count(values, gram, gram_positions, changes):
    """Zeros below the last good Gram point, counted two ways.

    At a good Gram point g_m, (-1)^m Z(g_m) > 0, and N(g_m) = m + 1 as long
    as Rosser's rule holds, which is the case at desk-scale heights.
    """
    for m in range(len(gram) - 1, -1, -1):
        sign = 1 if m % 2 == 0 else -1
        if sign * values[gram_positions[m]] > 0:
            found = int(np.count_nonzero(changes < gram_positions[m]))
            return m + 1, found, gram[m]
    return 0, int(np.count_nonzero(changes < 0)), SCAN_START


def _illinois(f, a, b, fa, fb, tol):
    """Bracketing root refinement; returns the root and the final bracket width."""
    side = 0
    c = a
    for _ in range(REFINE_MAX_ITERATIONS):
        if abs(b - a) <= tol:
            break
        c = (a * fb - b * fa) / (fb - fa)
        if not (min(a, b) < c < max(a, b)):
            c = (a + b) / 2
        fc = f(c)
        if fc == 0:
            return c, 0
        if (fc > 0) == (fb > 0):
            b, fb = c, fc
            if side == -1:
                fa /= 2
            side = -1
        else:
            a, fa = c, fc
            if side == 1:
                fb /= 2
            side = 1
        if abs(fc) <= tol * 1e-3:
            break
    return c, abs(b - a)


def _refine_bracket(bracket, ctx):
    mp = ctx.mp
    a, b = mp.mpf(bracket[0]), mp.mpf(bracket[1])

    def f(t):
        return hardy_z(t, ctx)
    fa, fb = f(a), f(b)
    if (fa > 0) == (fb > 0):
        # Double precision scan misjudged a sign, resample at full precision
        points = [a + (b - a) * k / 8 for k in range(9)]
        values = [fa] + [f(p) for p in points[1:-1]] + [fb]
        for lo, hi, flo, fhi in zip(points[:-1], points[1:], values[:-1], values[1:]):
            if (flo > 0) != (fhi > 0):
                a, b, fa, fb = lo, hi, flo, fhi
                break
        else:
            return None
    tol = mp.mpf(10) ** (-(ctx.digits - 4))
    root, width = _illinois(f, a, b, fa, fb, tol)
    step = mp.mpf(10) ** (-ctx.digits // 2)
    slope = abs(f(root + step) - f(root - step)) / (2 * step)
    residual = abs(f(root)) / slope if slope else width
    return root, max(min(width, residual), tol)


def find_zeros_up_to(T, ctx=None, threads=None, mesh=1):
    """Finds every zero 1/2 + i gamma with 0 < gamma <= T.

    Hardy Z is sampled on the Gram points refined ``mesh`` times; sign
    changes bracket zeros that are then refined at context precision. The
    count below the last good Gram point must match the Gram count and a scan
    on a twice finer mesh must find no additional sign change; otherwise the
    mesh is refined up to :data:`MAX_MESH`.

    :param T: height of the search
    :type T: ``float``

    :param ctx: precision context, at least 20 digits
    :type ctx: :class:`PrecisionContext`

    :param threads: maximum number of workers
    :type threads: ``int``

    :return: the zeros, complete up to T
    :rtype: :class:`ZeroStore`

    :raise ValueError: if T exceeds :data:`MAX_SEARCH_HEIGHT` or ctx has
        fewer than 20 digits
    :raise MissedZeroSuspectedError: if the count audit does not close
    """
    ctx = ctx or default_context()
    if T > MAX_SEARCH_HEIGHT:
        raise ValueError("Zero search is capped at height %d" % MAX_SEARCH_HEIGHT)
    if ctx.digits < 20:
        raise ValueError("Zero search requires at least 20 digits")
    if T < FIRST_ZERO_RANGE[0]:
        return ZeroStore([], height=T)

    pool = ThreadPool(threads)
    while True:
        grid, values, gram, gram_positions, changes = _scan(T, mesh, pool)
        expected, found, certified = _expected_count(values, gram, gram_positions, changes)
        log_zeros.debug("Mesh %d: %d sign changes, %d of %d expected below %g",
                        mesh, len(changes), found, expected, certified)
        if found == expected:
            audit = _scan(T, 2 * mesh, pool)[4]
            if len(audit) == len(changes):
                break
            log_zeros.warning("Audit at mesh %d found %d sign changes instead of %d",
                              2 * mesh, len(audit), len(changes))
        mesh *= 2
        if mesh > MAX_MESH:
            raise MissedZeroSuspectedError("Zero count audit did not close up to height %g" % T)

    brackets = [(grid[i], grid[i + 1]) for i in changes]
    refined = pool.map(lambda bracket: _refine_bracket(bracket, ctx), brackets)
    if any(zero is None for zero in refined):
        raise MissedZeroSuspectedError("A sign change vanished at full precision below %g" % T)

    mp = ctx.mp
    scale = mp.mpf(10) ** DEFAULT_STORE_DIGITS
    scaled = [int(mp.nint(root * scale)) for root, _ in refined]
    bounds = [float(bound) + 0.5 * 10.0 ** -DEFAULT_STORE_DIGITS for _, bound in refined]
    log_zeros.info("Found %d zeros up to height %g (certified below %g)", len(scaled), T, certified)
    height = max(float(T), scaled[-1] / float(10 ** DEFAULT_STORE_DIGITS)) if scaled else float(T)
    return ZeroStore(scaled, DEFAULT_STORE_DIGITS, bounds, PROVENANCE_COMPUTED, 1, height)


def count_residuals(store, heights):
    """:class:`CountReport` at each height, for plotting count residuals."""
    return [zero_count_report(T, store) for T in heights]


def _parse_text(lines, source):
    digits = height = None
    provenance = PROVENANCE_IMPORTED
    values = []
    for number, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            key = key.strip().lower()
            if key == "digits":
                digits = int(value)
            elif key == "height":
                try:
                    height = float(value)
                except ValueError:
                    raise ZeroFormatError("Invalid height at line %d of %s" % (number, source))
            elif key == "provenance" and value.strip() in (PROVENANCE_COMPUTED, PROVENANCE_IMPORTED):
                provenance = value.strip()
            continue
        try:
            value = Decimal(line.split()[0])
        except (InvalidOperation, IndexError):
            raise ZeroFormatError("Invalid zero at line %d of %s" % (number, source))
        if not value.is_finite():
            raise ZeroFormatError("Invalid zero at line %d of %s" % (number, source))
        values.append(value)
    if digits is None:
        exponents = [-value.as_tuple().exponent for value in values]
        digits = max([DEFAULT_STORE_DIGITS] + [e for e in exponents if e > 0])
        # Scaled values must fit int64
        if values:
            digits = min(digits, 18 - len(str(int(max(values)))))
    return values, digits, provenance, height


def import_zeros(filename):
    """Reads zeros from a text file (one decimal gamma per line, ascending,
    '#' comments) or from a binary cache.

    :raise ZeroFormatError: if the file is malformed
    :raise NonMonotonicInputError: if the values are not strictly increasing
    """
    with open(filename, "rb") as fd:
        data = fd.read()
    if data.startswith(ZERO_CACHE_MAGIC):
        return _import_binary(data, filename)

    try:
        lines = data.decode("ascii").splitlines()
    except UnicodeDecodeError:
        raise ZeroFormatError("%s is not an ASCII zero file" % filename)
    values, digits, provenance, height = _parse_text(lines, filename)
    scale = Decimal(10) ** digits
    scaled = [int((value * scale).to_integral_value()) for value in values]
    if any(value >= 2 ** 63 for value in scaled):
        raise ZeroFormatError("Zeros of %s do not fit %d decimals" % (filename, digits))
    if any(b <= a for a, b in zip(scaled[:-1], scaled[1:])):
        raise NonMonotonicInputError("Zeros of %s are not strictly increasing" % filename)
    try:
        store = ZeroStore(scaled, digits, provenance=provenance, height=height, source=filename)
    except ValueError as e:
        raise ZeroFormatError(str(e))
    log_zeros.debug("Imported %d zeros from %s", store.count, filename)
    return store


def _export_text(store, filename):
    with open(filename, "w", newline="\n") as fd:
        fd.write("# pyzeta zeros\n")
        fd.write("# provenance: %s\n" % store.provenance)
        fd.write("# digits: %d\n" % store.digits)
        fd.write("# height: %r\n" % store.height)
        for position in range(store.count):
            fd.write(store.gamma_decimal(position) + "\n")


class ZeroCacheFormat(PacketNoPadded):
    """Binary zero cache

    Header with magic, version, count, digits and the height up to which
    the store is complete, followed by the zeros as
    little-endian integers scaled by 10^digits and their error bounds as
    doubles. A SHA-256 digest covers both arrays.
    """
    name = "Zero cache"

    fields_desc = [
        StrFixedLenField("magic", ZERO_CACHE_MAGIC, 4),
        LEShortField("version", ZERO_CACHE_VERSION),
        LELongField("count", 0),
        ByteField("digits", DEFAULT_STORE_DIGITS),
        ByteEnumField("provenance", 0, {0: "computed", 1: "imported"}),
        LELongField("first_index", 1),
        LEDoubleField("height", 0.0),
        StrFixedLenField("digest", b"\x00" * DIGEST_SIZE, DIGEST_SIZE),
        NumpyArrayField("gammas", None, "<i8", length_from=lambda pkt: pkt.count * 8),
        NumpyArrayField("error_bounds", None, "<f8", length_from=lambda pkt: pkt.count * 8),
    ]


def _export_binary(store, filename):
    gammas = np.ascontiguousarray(store.scaled, dtype="<i8")
    bounds = np.ascontiguousarray(store.error_bounds, dtype="<f8")
    provenance = 1 if store.provenance == PROVENANCE_IMPORTED else 0
    cache = ZeroCacheFormat(count=store.count, digits=store.digits, provenance=provenance,
                            first_index=store.first_index, height=store.height,
                            digest=sha256_digest(gammas.tobytes(), bounds.tobytes()),
                            gammas=gammas, error_bounds=bounds)
    with open(filename, "wb") as fd:
        fd.write(bytes(cache))


def _import_binary(data, filename):
    try:
        cache = ZeroCacheFormat(data)
    except Exception as e:
        raise ZeroFormatError("Unable to parse zero cache %s: %s" % (filename, e))
    if cache.version != ZERO_CACHE_VERSION:
        raise ZeroFormatError("Unsupported zero cache version %d" % cache.version)
    gammas = cache.gammas if cache.gammas is not None else np.zeros(0, dtype="<i8")
    bounds = cache.error_bounds if cache.error_bounds is not None else np.zeros(0, dtype="<f8")
    if len(gammas) != cache.count or len(bounds) != cache.count:
        raise ZeroFormatError("Truncated zero cache %s" % filename)
    if not digests_match(cache.digest, sha256_digest(gammas.tobytes(), bounds.tobytes())):
        raise ZeroFormatError("Zero cache %s checksum mismatch" % filename)
    if np.any(np.diff(gammas) <= 0):
        raise NonMonotonicInputError("Zeros of %s are not strictly increasing" % filename)
    try:
        return ZeroStore(gammas, cache.digits, bounds, zero_provenances.get(cache.provenance, PROVENANCE_IMPORTED),
                         cache.first_index, cache.height, source=filename)
    except ValueError as e:
        raise ZeroFormatError(str(e))


def export_zeros(store, filename, binary=None):
    """Writes a store to ``filename``, as a binary cache when ``binary`` is
    set or the file name ends in ".zetz", as text otherwise."""
    if binary is None:
        binary = filename.endswith(".zetz")
    if binary:
        _export_binary(store, filename)
    else:
        _export_text(store, filename)
    log_zeros.debug("Exported %d zeros to %s", store.count, filename)
