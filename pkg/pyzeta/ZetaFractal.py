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
# Custom imports
from pyzeta.ZetaFunctions import (default_context, zeta, zeta_array, ComplexPoint, as_mpc, PoleAtOneError,
                                  DomainError)
from pyzeta.utils import ThreadPool, split_range, write_csv


# Create a logger for the fractal layer
log_fractal = logging.getLogger("pyzeta.fractal")


ESCAPE_RADIUS = 60.0
"""Iterates leaving the box |Re z|, |Im z| <= ESCAPE_RADIUS are abandoned"""

DIRECT_SUM_CHUNK = 2 ** 18
"""Terms of the van der Pol Dirichlet sum added per pool task"""

MIN_X_CUT = 8.0
MAX_X_CUT = 20.0
DEFAULT_X_CUT = 14.0
"""Cutoffs X of the van der Pol integral; the sum runs over floor(e^X) terms"""

PALETTE_GRAY = "gray"
PALETTE_HEAT = "heat"

palettes = {PALETTE_GRAY: b"P5", PALETTE_HEAT: b"P6"}
"""Palettes and the PNM format they are written in"""


class DerivativeVanishesError(ArithmeticError):
    """Exception to denote a Newton step with a vanishing derivative"""


class PoleEncounteredError(ArithmeticError):
    """Exception to denote a Newton iterate landing on the pole s = 1"""


class RenderIOError(IOError):
    """Exception to denote an image that could not be written"""


class GridSpec(object):
    """Rectangle of starting points z0 sampled at pixel centres.

    Row 0 is the top of the image (largest imaginary part).
    """

    def __init__(self, re_min, re_max, im_min, im_max, width, height, max_iter=64, eps=1e-6):
        if not re_min < re_max or not im_min < im_max:
            raise ValueError("Grid bounds must satisfy re_min < re_max and im_min < im_max")
        if width < 1 or height < 1 or max_iter < 1:
            raise ValueError("Grid size and iteration cap must be positive")
        if not eps > 0:
            raise ValueError("Convergence threshold must be positive")
        self.re_min, self.re_max = float(re_min), float(re_max)
        self.im_min, self.im_max = float(im_min), float(im_max)
        self.width, self.height = int(width), int(height)
        self.max_iter = int(max_iter)
        self.eps = float(eps)

    @property
    def sentinel(self):
        return self.max_iter + 1

    def columns(self):
        step = (self.re_max - self.re_min) / self.width
        return self.re_min + (np.arange(self.width) + 0.5) * step

    def rows(self):
        # Rows are mirrored exactly when im_min = -im_max
        step = (self.im_max - self.im_min) / self.height
        index = np.arange(self.height)
        from_top = self.im_max - (index + 0.5) * step
        from_bottom = self.im_min + (self.height - index - 0.5) * step
        return np.where(index < self.height / 2.0, from_top, from_bottom)

    def __repr__(self):
        return "GridSpec(%g..%g, %g..%g, %dx%d, max_iter=%d)" % (
            self.re_min, self.re_max, self.im_min, self.im_max, self.width, self.height, self.max_iter)


class EscapeField(object):
    """Newton iteration counts per pixel; ``grid.sentinel`` marks pixels that
    did not converge. ``roots`` holds the final iterate of converged pixels
    and NaN elsewhere."""

    def __init__(self, grid, iterations, roots):
        self.grid = grid
        self.iterations = iterations
        self.roots = roots

    @property
    def converged(self):
        return self.iterations <= self.grid.max_iter

    def converged_count(self):
        return int(np.count_nonzero(self.converged))


def _derivative_step(ctx):
    return 10.0 ** (-min(ctx.digits, 15) / 2.0)


def newton_step(z, ctx=None):
    """One Newton iterate z - zeta(z)/zeta'(z), with zeta' by a central
    difference of step 10^(-digits/2).

    :raise PoleEncounteredError: if z or a difference point is the pole
    :raise DerivativeVanishesError: if zeta'(z) vanishes within precision
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    s = as_mpc(z, mp)
    h = mp.mpf(10) ** (-ctx.digits // 2)
    try:
        value = zeta(s, ctx).value
        if value == 0:
            return ComplexPoint(mp.re(s), mp.im(s))
        slope = (zeta(s + h, ctx).value - zeta(s - h, ctx).value) / (2 * h)
    except PoleAtOneError:
        raise PoleEncounteredError("Newton iterate at the pole s = 1")
    if abs(slope) <= ctx.eps:
        raise DerivativeVanishesError("zeta' vanishes at %s" % mp.nstr(s, 10))
    following = s - value / slope
    return ComplexPoint(mp.re(following), mp.im(following))


def newton_iterate(z, ctx=None, max_iter=64, eps=1e-6):
    """Iterates :func:`newton_step` until |zeta(z)| < eps.

    :return: final iterate and number of steps, None when it did not converge
    :rtype: ``tuple``
    """
    ctx = ctx or default_context()
    point = z if isinstance(z, ComplexPoint) else ComplexPoint.from_complex(z)
    for count in range(max_iter + 1):
        if abs(zeta(point, ctx).value) < eps:
            return point, count
        if count < max_iter:
            point = newton_step(point, ctx)
    return point, None


def _escape_rows(spec, rows, columns, h):
    """Vectorised iteration on the pixels of the given rows."""
    z = columns[None, :] + 1j * rows[:, None]
    iterations = np.full(z.shape, spec.sentinel, dtype=np.int32)
    roots = np.full(z.shape, np.nan + 1j * np.nan)
    active = np.ones(z.shape, dtype=bool)
    with np.errstate(all="ignore"):
        for count in range(spec.max_iter + 1):
            if not active.any():
                break
            current = z[active]
            value = zeta_array(current)
            done = np.abs(value) < spec.eps
            positions = np.flatnonzero(active)
            finished = positions[done]
            iterations.flat[finished] = count
            roots.flat[finished] = current[done]
            if count == spec.max_iter:
                break
            slope = (zeta_array(current + h) - zeta_array(current - h)) / (2 * h)
            following = current - value / slope
            alive = (~done & np.isfinite(following) & (np.abs(slope) > 0) &
                     (np.abs(following.real) <= ESCAPE_RADIUS) & (np.abs(following.imag) <= ESCAPE_RADIUS))
            z.flat[positions[alive]] = following[alive]
            active.flat[positions] = alive
    return iterations, roots


def escape_field(spec, ctx=None, threads=None):
    """Newton basin image of zeta: per pixel, the number of iterations until
    |zeta(z_n)| < eps, or ``spec.sentinel``.

    Iterates are computed in double precision. Rows are split into tiles run
    on the pool and assembled in order; every pixel is iterated on its own,
    so the field does not depend on the tiling or the number of workers.

    :rtype: :class:`EscapeField`
    """
    ctx = ctx or default_context()
    rows = spec.rows()
    columns = spec.columns()
    h = _derivative_step(ctx)
    tiles = split_range(0, spec.height, max(1, spec.height // 8))
    pool = ThreadPool(min(threads or len(tiles), len(tiles)))
    parts = pool.map(lambda tile: _escape_rows(spec, rows[tile[0]:tile[1]], columns, h), tiles)
    iterations = np.concatenate([part[0] for part in parts])
    roots = np.concatenate([part[1] for part in parts])
    field = EscapeField(spec, iterations, roots)
    log_fractal.debug("Escape field %r: %d converged pixels", spec, field.converged_count())
    return field


def gray_levels(field):
    """Gray level per pixel: 1 + floor(254 v / max_iter) for a count v,
    0 for the sentinel."""
    iterations = field.iterations.astype(np.int64)
    levels = 1 + (254 * iterations) // field.grid.max_iter
    levels[iterations > field.grid.max_iter] = 0
    return levels.astype(np.uint8)


def heat_colors(levels):
    """RGB ramp black, red, yellow, white over the gray levels; level 0
    stays black."""
    scaled = 3 * levels.astype(np.int64)
    rgb = np.stack([np.clip(scaled, 0, 255), np.clip(scaled - 255, 0, 255), np.clip(scaled - 510, 0, 255)],
                   axis=-1)
    rgb[levels == 0] = 0
    return rgb.astype(np.uint8)


def render_pgm(field, filename, palette=PALETTE_GRAY):
    """Writes the field as a binary PGM (gray palette) or PPM (heat palette),
    row-major from the top row.

    :raise ValueError: on an unknown palette
    :raise RenderIOError: if the file can't be written
    """
    if palette not in palettes:
        raise ValueError("Unknown palette %s" % palette)
    levels = gray_levels(field)
    pixels = levels if palette == PALETTE_GRAY else heat_colors(levels)
    height, width = levels.shape
    header = b"%s\n%d %d\n255\n" % (palettes[palette], width, height)
    try:
        with open(filename, "wb") as fd:
            fd.write(header)
            fd.write(np.ascontiguousarray(pixels).tobytes())
    except OSError as e:
        raise RenderIOError("Unable to write %s: %s" % (filename, e))


def parse_pnm_header(filename):
    """Reads the header of a binary PGM/PPM file.

    :return: magic, width, height and maximum value
    :rtype: ``tuple``

    :raise ValueError: if the header is malformed
    """
    with open(filename, "rb") as fd:
        data = fd.read(512)
    tokens = []
    position = 0
    while len(tokens) < 4:
        while position < len(data) and data[position:position + 1].isspace():
            position += 1
        if data[position:position + 1] == b"#":
            while position < len(data) and data[position:position + 1] != b"\n":
                position += 1
            continue
        start = position
        while position < len(data) and not data[position:position + 1].isspace():
            position += 1
        if start == position:
            raise ValueError("Truncated PNM header in %s" % filename)
        tokens.append(data[start:position])
    if tokens[0] not in (b"P5", b"P6"):
        raise ValueError("%s is not a binary PGM/PPM file" % filename)
    return tokens[0].decode("ascii"), int(tokens[1]), int(tokens[2]), int(tokens[3])


def vanderpol_integrand(x):
    """y(x) = e^(-x/2) floor(e^x) - e^(x/2)."""
    x = np.asarray(x, dtype=float)
    return np.exp(-x / 2) * np.floor(np.exp(x)) - np.exp(x / 2)


def _dirichlet_block(t, block):
    """sum m^-(1/2+it) over the integers of the half-open block."""
    logs = np.log(np.arange(block[0], block[1], dtype=float))
    return complex(np.sum(np.exp(-0.5 * logs - 1j * t * logs)))


def _vanderpol_value(t, x_cut, ctx, pool):
    mp = ctx.mp
    size = int(math.floor(math.exp(x_cut)))
    blocks = split_range(1, size + 1, -(-size // DIRECT_SUM_CHUNK))
    partial = mp.fsum(mp.mpc(part) for part in pool.map(lambda block: _dirichlet_block(t, block), blocks))
    s = mp.mpc(0.5, t)
    x_cut = mp.mpf(x_cut)
    floor_part = (partial - size * mp.exp(-s * x_cut)) / s
    return abs(floor_part - mp.exp((1 - s) * x_cut) / (1 - s))


def vanderpol_profile(t_grid, x_cut=DEFAULT_X_CUT, ctx=None, threads=None):
    """|int_{-inf}^{X} y(x) e^(-ixt) dx| on a grid of t, which tends to
    |zeta(1/2+it)/(1/2+it)| as X grows.

    The integral is summed exactly over the intervals [log m, log(m+1)] where
    floor(e^x) is constant:
    (1/s)[sum_{m <= M} m^-s - M e^(-sX)] - e^((1-s)X)/(1-s), s = 1/2 + it,
    M = floor(e^X).

    The Dirichlet sum is added term by term in double precision, in blocks of
    DIRECT_SUM_CHUNK run on one pool shared by the whole grid. It never goes
    through zeta, so the distance to |zeta(s)/s|, about e^(-X/2)/|s|, is the
    truncation of the integral itself.

    :raise DomainError: if some t is outside [0, 100] or x_cut is outside
        [MIN_X_CUT, MAX_X_CUT]
    """
    ctx = ctx or default_context()
    ts = np.asarray(t_grid, dtype=float)
    if np.any(ts < 0) or np.any(ts > 100):
        raise DomainError("Profile is computed for t in [0, 100]")
    if not MIN_X_CUT <= x_cut <= MAX_X_CUT:
        raise DomainError("Profile needs x_cut in [%s, %s]" % (MIN_X_CUT, MAX_X_CUT))
    pool = ThreadPool(threads)
    log_fractal.debug("Van der Pol profile on %d points, %d terms each", len(ts), int(math.exp(x_cut)))
    return np.array([float(_vanderpol_value(t, x_cut, ctx, pool)) for t in ts.tolist()])


def local_minima(xs, values):
    """Abscissae of the strict interior local minima of a sampled curve."""
    values = np.asarray(values)
    inner = (values[1:-1] < values[:-2]) & (values[1:-1] < values[2:])
    return np.asarray(xs)[1:-1][inner]


def local_maxima(xs, values):
    """Abscissae of the strict interior local maxima of a sampled curve."""
    return local_minima(xs, -np.asarray(values))


def write_profile_csv(ts, values, filename, digits=15):
    write_csv(filename, ["t", "profile"], zip(ts, values), digits)
