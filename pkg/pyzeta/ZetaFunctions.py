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
import threading
# External imports
import mpmath
import numpy as np
from scipy import special as sp_special


# Create a logger for the special functions layer
log_functions = logging.getLogger("pyzeta.functions")


DEFAULT_DIGITS = 30
"""Default working precision for zero finding and explicit formula work"""

STATISTICS_DIGITS = 15
"""Working precision for statistics and fractal rendering"""

GUARD_DIGITS = 10
"""Extra digits carried by the working contexts on top of the requested ones"""

DEFAULT_MAX_SERIES_TERMS = 500
"""Default cap on the number of terms summed by a series"""

DEFAULT_RIEMANN_SIEGEL_HEIGHT = 10 ** 4
"""Height above which zeta switches from Euler-Maclaurin to Riemann-Siegel"""

DEFAULT_MAX_HEIGHT = 10 ** 7
"""Highest |Im s| accepted by the evaluators"""

EM_MIN_TERMS = 10
"""Minimum number of Dirichlet terms summed before the Euler-Maclaurin tail"""

EM_MAX_TERMS = 10 ** 7
"""Maximum number of Dirichlet terms the Euler-Maclaurin evaluator may sum"""

EM_MAX_RETRIES = 4

H_CUTOFF = 5
"""Upper limit of the H(z, lambda) quadrature; Phi(5) < 10^-300"""

H_BREAKPOINTS = (0, 0.125, 0.25, 0.5, 1, 2, H_CUTOFF)
"""Initial subdivision of [0, H_CUTOFF]; Phi decays double exponentially"""

H_MAX_REFINEMENTS = 4

ARRAY_EM_TERMS = 48
"""Dirichlet terms used by the vectorised zeta (accurate for |s| <= 90)"""

ARRAY_EM_CORRECTIONS = 12
"""Bernoulli corrections used by the vectorised zeta"""

HARDY_Z_ARRAY_HEIGHT = 200.0
"""Height above which the vectorised Hardy Z uses the Riemann-Siegel formula"""

METHOD_EULER_MACLAURIN = "euler-maclaurin"
"""Method tag of values summed with Euler-Maclaurin corrections"""

METHOD_RIEMANN_SIEGEL = "riemann-siegel"
"""Method tag of values from the Riemann-Siegel formula"""

METHOD_REFLECTION = "reflection"
"""Method tag of values obtained through the functional equation"""


class PoleAtOneError(ArithmeticError):
    """Exception to denote an evaluation of zeta at its pole s = 1"""


class PoleAtNonpositiveIntegerError(ArithmeticError):
    """Exception to denote an evaluation of gamma at a nonpositive integer"""


class PrecisionExhaustedError(ArithmeticError):
    """Exception to denote a requested accuracy unreachable under the context limits"""


class DomainError(ValueError):
    """Exception to denote an argument outside the domain of a function"""


class BranchError(ValueError):
    """Exception to denote a complex power requested with a real exponent"""


class QuadratureFailureError(ArithmeticError):
    """Exception to denote a quadrature that did not meet its tolerance"""


class PrecisionContext(object):
    """Working precision policy threaded through every analytic evaluation.

    Each thread gets its own :class:`mpmath.MPContext` set to ``digits`` plus
    :data:`GUARD_DIGITS` decimal digits, so contexts can be shared between
    workers without touching mpmath's global state.
    """

    def __init__(self, digits=DEFAULT_DIGITS, max_series_terms=DEFAULT_MAX_SERIES_TERMS,
                 quadrature_abs_tol=None, riemann_siegel_height=DEFAULT_RIEMANN_SIEGEL_HEIGHT,
                 max_height=DEFAULT_MAX_HEIGHT):
        """
        :param digits: significant decimal digits (at least 15)
        :type digits: ``int``

        :param max_series_terms: cap on series lengths (at least 50)
        :type max_series_terms: ``int``

        :param quadrature_abs_tol: absolute tolerance for quadratures, defaults
            to 10^-(digits - 10)
        :type quadrature_abs_tol: ``float``

        :param riemann_siegel_height: switchover height for zeta evaluation
        :type riemann_siegel_height: ``float``

        :param max_height: highest supported |Im s|
        :type max_height: ``float``

        :raise ValueError: if any of the limits is invalid
        """
        if int(digits) != digits or digits < 15:
            raise ValueError("Precision must be at least 15 digits")
        if max_series_terms < 50:
            raise ValueError("At least 50 series terms are required")
        if quadrature_abs_tol is None:
            quadrature_abs_tol = 10.0 ** -(digits - 10)
        if not quadrature_abs_tol > 0:
            raise ValueError("Quadrature tolerance must be positive")
        if riemann_siegel_height <= 0 or max_height <= 0:
            raise ValueError("Heights must be positive")
        self.digits = int(digits)
        self.max_series_terms = int(max_series_terms)
        self.quadrature_abs_tol = quadrature_abs_tol
        self.riemann_siegel_height = riemann_siegel_height
        self.max_height = max_height
        self._local = threading.local()

    @property
    def mp(self):
        """The mpmath context private to the calling thread"""
        mp = getattr(self._local, "mp", None)
        if mp is None:
            mp = mpmath.MPContext()
            # mpmath's Riemann-Siegel code reaches its coefficient cache through _mp
            mp._mp = mp
            mp.dps = self.digits + GUARD_DIGITS
            self._local.mp = mp
        return mp

    @property
    def eps(self):
        """Relative accuracy target, 10^-digits"""
        return self.mp.mpf(10) ** (-self.digits)

    def derive(self, **kwargs):
        """Returns a new context with some of the limits replaced."""
        params = {"digits": self.digits,
                  "max_series_terms": self.max_series_terms,
                  "quadrature_abs_tol": self.quadrature_abs_tol,
                  "riemann_siegel_height": self.riemann_siegel_height,
                  "max_height": self.max_height}
        if "digits" in kwargs and "quadrature_abs_tol" not in kwargs:
            params["quadrature_abs_tol"] = None
        params.update(kwargs)
        return PrecisionContext(**params)

    def __repr__(self):
        return "PrecisionContext(digits=%d, max_series_terms=%d, riemann_siegel_height=%g)" % (
            self.digits, self.max_series_terms, self.riemann_siegel_height)


_default_context = None


def default_context():
    """Shared context with the default limits."""
    global _default_context
    if _default_context is None:
        _default_context = PrecisionContext()
    return _default_context


def _context(ctx):
    return ctx if ctx is not None else default_context()


class ComplexPoint(object):
    """A point s = re + i im of the complex plane."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        for component in (re, im):
            if not mpmath.isfinite(mpmath.mpf(component)):
                raise ValueError("Complex point components must be finite")
        self.re = re
        self.im = im

    @classmethod
    def from_complex(cls, value):
        value = complex(value)
        return cls(value.real, value.imag)

    def conjugate(self):
        im = self.im
        if isinstance(im, str):
            # Keep decimal strings exact
            im = im[1:] if im.startswith("-") else "-" + im.lstrip("+")
        else:
            im = -im
        return ComplexPoint(self.re, im)

    def to_mpc(self, mp):
        return mp.mpc(mp.mpf(self.re), mp.mpf(self.im))

    def __complex__(self):
        return complex(float(mpmath.mpf(self.re)), float(mpmath.mpf(self.im)))

    def __eq__(self, other):
        if not isinstance(other, ComplexPoint):
            return NotImplemented
        return mpmath.mpf(self.re) == mpmath.mpf(other.re) and mpmath.mpf(self.im) == mpmath.mpf(other.im)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(complex(self))

    def __repr__(self):
        return "ComplexPoint(%s, %s)" % (self.re, self.im)


def as_mpc(s, mp):
    """Converts a :class:`ComplexPoint` or any number into an mpc of the
    given context."""
    if isinstance(s, ComplexPoint):
        return s.to_mpc(mp)
    return mp.mpc(s)


class EvalResult(object):
    """Value of an analytic evaluation together with an absolute error bound
    and, for zeta, the summation method that produced it."""

    __slots__ = ("value", "abs_error_bound", "method")

    def __init__(self, value, abs_error_bound, method=None):
        if abs_error_bound < 0 or not mpmath.isfinite(abs_error_bound):
            raise ValueError("Error bound must be finite and nonnegative")
        self.value = value
        self.abs_error_bound = abs_error_bound
        self.method = method

    @property
    def real(self):
        return mpmath.re(self.value)

    @property
    def imag(self):
        return mpmath.im(self.value)

    def __abs__(self):
        return abs(self.value)

    def __complex__(self):
        return complex(self.value)

    def __repr__(self):
        return "EvalResult(%s, +/- %s)" % (mpmath.nstr(self.value, 15), mpmath.nstr(self.abs_error_bound, 3))


def _checked(ctx, evaluate):
    """Runs ``evaluate`` at working precision and again with extra digits;
    their difference is the error estimate."""
    mp = ctx.mp
    value = evaluate()
    with mp.extradps(ctx.digits // 2 + 5):
        check = evaluate()
    bound = abs(check - value) + abs(value) * mp.mpf(10) ** (-mp.dps)
    return EvalResult(value, +bound)


def _em_corrections(digits):
    """Number of Bernoulli corrections needed for ``digits`` digits when the
    Dirichlet part is long enough to make every step shrink the terms by 4."""
    return int(math.ceil(digits * math.log(10) / math.log(4))) + 2


def _zeta_em_sum(s, size, corrections, ctx):
    mp = ctx.mp
    partial = mp.fsum(mp.power(n, -s) for n in range(1, size))
    head = mp.power(size, -s)
    value = partial + size * head / (s - 1) + head / 2
    tol = ctx.eps * abs(partial)
    sigma = mp.re(s)
    factor = s * head / size
    for k in range(1, corrections + 1):
        value += mp.bernoulli(2 * k) / mp.factorial(2 * k) * factor
        factor *= (s + 2 * k - 1) * (s + 2 * k) / (size * size)
        following = mp.bernoulli(2 * k + 2) / mp.factorial(2 * k + 2) * factor
        # Remainder bounded by the first omitted term, valid for Re s > -(2k + 1)
        bound = abs(s + 2 * k + 1) / (sigma + 2 * k + 1) * abs(following)
        if bound < tol:
            rounding = size * abs(partial) * mp.mpf(10) ** (-mp.dps)
            return value, bound + rounding
    return value, None


def _zeta_euler_maclaurin(s, ctx):
    corrections = _em_corrections(ctx.digits)
    size = max(EM_MIN_TERMS, int(math.ceil((float(abs(s)) + 2 * corrections) / math.pi)) + 1)
    for _ in range(EM_MAX_RETRIES):
        if size > EM_MAX_TERMS:
            break
        value, bound = _zeta_em_sum(s, size, corrections, ctx)
        if bound is not None:
            return EvalResult(value, bound, METHOD_EULER_MACLAURIN)
        log_functions.debug("Euler-Maclaurin did not converge at s=%s with %d terms", s, size)
        size *= 2
    raise PrecisionExhaustedError("Euler-Maclaurin summation did not reach %d digits" % ctx.digits)


def _uses_riemann_siegel(s, ctx):
    """Whether s lies in the strip 0 < Re s < 1 above the switchover height."""
    mp = ctx.mp
    return abs(mp.im(s)) > ctx.riemann_siegel_height and 0 < mp.re(s) < 1


def _zeta_riemann_siegel(s, ctx):
    """zeta by the Riemann-Siegel formula, or None when the formula can't
    reach the context precision at this height."""
    mp = ctx.mp
    try:
        value = mp.rs_zeta(s)
        with mp.extradps(GUARD_DIGITS):
            check = mp.rs_zeta(s)
    except NotImplementedError:
        # Raised by mpmath when its expansion can't meet the working precision
        return None
    bound = abs(check - value) + abs(value) * mp.mpf(10) ** (-mp.dps)
    if bound > 100 * ctx.eps * max(1, abs(value)):
        return None
    return EvalResult(value, +bound, METHOD_RIEMANN_SIEGEL)


def _zeta_right(s, ctx):
    """zeta on the half plane Re s >= 1/2."""
    if _uses_riemann_siegel(s, ctx):
        result = _zeta_riemann_siegel(s, ctx)
        if result is not None:
            return result
        log_functions.warning("Riemann-Siegel inaccurate at s=%s, using Euler-Maclaurin", ctx.mp.nstr(s, 12))
    return _zeta_euler_maclaurin(s, ctx)


def zeta(s, ctx=None):
    """Evaluates the Riemann zeta function.

    For Re s >= 1/2 the Dirichlet series is summed with Euler-Maclaurin
    corrections (below ``ctx.riemann_siegel_height``) or with the
    Riemann-Siegel formula (above it). For Re s < 1/2 the value is obtained by
    reflecting through the functional equation
    zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s).

    :param s: point of evaluation
    :type s: :class:`ComplexPoint` or number

    :param ctx: precision context
    :type ctx: :class:`PrecisionContext`

    :return: value and absolute error bound
    :rtype: :class:`EvalResult`

    :raise PoleAtOneError: if s = 1 within precision
    :raise PrecisionExhaustedError: if the accuracy can't be reached
    """
    ctx = _context(ctx)
    mp = ctx.mp
    s = as_mpc(s, mp)

    if abs(s - 1) <= ctx.eps:
        raise PoleAtOneError("zeta has a pole at s = 1")
    if abs(mp.im(s)) > ctx.max_height:
        raise PrecisionExhaustedError("Height %s beyond the supported range" % mp.nstr(mp.im(s), 10))

    if mp.im(s) == 0 and mp.re(s) <= 0 and mp.isint(mp.re(s)):
        order = int(mp.re(s))
        if order == 0:
            return EvalResult(mp.mpc(-0.5), mp.zero)
        if order % 2 == 0:
            # Trivial zero
            return EvalResult(mp.mpc(0), mp.zero)

    if mp.re(s) >= 0.5:
        return _zeta_right(s, ctx)

    mirror = _zeta_right(1 - s, ctx)
    chi = mp.power(2, s) * mp.power(mp.pi, s - 1) * mp.sin(mp.pi * s / 2) * mp.gamma(1 - s)
    value = chi * mirror.value
    bound = abs(chi) * mirror.abs_error_bound + abs(value) * mp.mpf(10) ** (-mp.dps)
    return EvalResult(value, +bound, METHOD_REFLECTION)


def gamma(z, ctx=None):
    """Evaluates Gamma(z), reflecting with Gamma(z)Gamma(1-z) = pi/sin(pi z)
    when Re z < 1/2.

    :raise PoleAtNonpositiveIntegerError: if z = 0, -1, -2, ...
    """
    ctx = _context(ctx)
    mp = ctx.mp
    z = as_mpc(z, mp)
    if mp.im(z) == 0 and mp.re(z) <= 0 and mp.isint(mp.re(z)):
        raise PoleAtNonpositiveIntegerError("Gamma has a pole at %s" % mp.nstr(mp.re(z), 5))

    def evaluate():
        if mp.re(z) < 0.5:
            return mp.pi / (mp.sin(mp.pi * z) * mp.gamma(1 - z))
        return mp.gamma(z)
    return _checked(ctx, evaluate)


def li_real(x, ctx=None):
    """Logarithmic integral Li(x) = gamma + log log x + sum (log x)^n / (n n!)
    for real x > 1.

    :raise DomainError: if x <= 1
    :raise PrecisionExhaustedError: if the series needs more terms than allowed
    """
    ctx = _context(ctx)
    mp = ctx.mp
    x = mp.mpf(x)
    if x <= 1:
        raise DomainError("Li(x) series requires x > 1")
    log_x = mp.log(x)
    total = mp.euler + mp.log(log_x)
    power = mp.one
    for n in range(1, ctx.max_series_terms + 1):
        power *= log_x / n
        term = power / n
        total += term
        if abs(term) < ctx.eps * abs(total):
            return total
    raise PrecisionExhaustedError("Li(x) series did not converge in %d terms" % ctx.max_series_terms)


def li_complex_power(x, rho, ctx=None):
    """Logarithmic integral of a complex power, Li(x^rho).

    With z = rho log x = u + iv the value is the integral of e^w/w along the
    horizontal line from -infinity + iv to u + iv, that is -E1(-z). Conjugate
    exponents give conjugate values.

    :raise DomainError: if x <= 1
    :raise BranchError: if rho is real
    """
    ctx = _context(ctx)
    mp = ctx.mp
    x = mp.mpf(x)
    if x <= 1:
        raise DomainError("Li(x^rho) requires x > 1")
    rho = as_mpc(rho, mp)
    if mp.im(rho) == 0:
        raise BranchError("Real exponents must be evaluated with li_real")
    return _checked(ctx, lambda: -mp.e1(-rho * mp.log(x)))


def _phi_series(t, mp, eps, max_terms):
    e4, e5, e9 = mp.exp(4 * t), mp.exp(5 * t), mp.exp(9 * t)
    total = mp.zero
    for n in range(1, max_terms + 1):
        n2 = n * n
        term = (2 * mp.pi ** 2 * n2 * n2 * e9 - 3 * mp.pi * n2 * e5) * mp.exp(-mp.pi * n2 * e4)
        total += term
        if abs(term) <= eps * abs(total):
            return total
    raise PrecisionExhaustedError("Phi series did not converge in %d terms" % max_terms)


def phi_kernel(t, ctx=None):
    """Kernel Phi(t) = sum (2 pi^2 n^4 e^{9t} - 3 pi n^2 e^{5t}) exp(-pi n^2 e^{4t})
    whose cosine transform is the Xi function.

    :raise DomainError: if t < 0
    """
    ctx = _context(ctx)
    mp = ctx.mp
    t = mp.mpf(t)
    if t < 0:
        raise DomainError("Phi(t) is evaluated for t >= 0")
    return _phi_series(t, mp, ctx.eps, ctx.max_series_terms)


def xi(z, ctx=None):
    """Riemann's Xi function in the variable z of the critical line,
    xi(z) = -1/2 (z^2 + 1/4) pi^(-1/4 - iz/2) Gamma(1/4 + iz/2) zeta(1/2 + iz).

    It is real for real z and vanishes exactly at z = gamma_n.

    :return: value and propagated error bound
    :rtype: :class:`EvalResult`
    """
    ctx = _context(ctx)
    mp = ctx.mp
    z = as_mpc(z, mp)
    s = mp.mpf(0.5) + mp.j * z
    if s == 1 or s == 0:
        return EvalResult(mp.mpc(0.5), mp.zero)
    zr = zeta(s, ctx)
    gr = gamma(s / 2, ctx)
    prefactor = -(z * z + mp.mpf(0.25)) / 2 * mp.power(mp.pi, -s / 2)
    value = prefactor * gr.value * zr.value
    bound = abs(prefactor) * (abs(gr.value) * zr.abs_error_bound + abs(zr.value) * gr.abs_error_bound +
                              gr.abs_error_bound * zr.abs_error_bound)
    return EvalResult(value, +bound)


def _bisect_points(points):
    refined = [points[0]]
    for lo, hi in zip(points[:-1], points[1:]):
        refined.extend([(lo + hi) / 2, hi])
    return refined


def h_family(z, lam, ctx=None):
    """de Bruijn-Newman deformation H(z, lambda) = int_0^inf Phi(t) e^{lambda t^2} cos(zt) dt.

    The integral is truncated at :data:`H_CUTOFF` and evaluated by tanh-sinh
    quadrature over a subdivision refined until ``ctx.quadrature_abs_tol``
    is met. H(z, 0) = xi(z/2)/8.

    :raise DomainError: if lambda > 1
    :raise QuadratureFailureError: if the tolerance is not reached
    """
    ctx = _context(ctx)
    mp = ctx.mp
    lam = mp.mpf(lam)
    if lam > 1:
        raise DomainError("H(z, lambda) truncation assumes lambda <= 1")
    z = as_mpc(z, mp)
    eps = mp.mpf(10) ** (-mp.dps)

    def integrand(t):
        return _phi_series(t, mp, eps, ctx.max_series_terms) * mp.exp(lam * t * t) * mp.cos(z * t)

    tail = _phi_series(mp.mpf(H_CUTOFF), mp, eps, ctx.max_series_terms) * mp.exp(lam * H_CUTOFF ** 2)
    points = [mp.mpf(p) for p in H_BREAKPOINTS]
    error = None
    for _ in range(H_MAX_REFINEMENTS):
        value, error = mp.quad(integrand, points, error=True)
        if error <= ctx.quadrature_abs_tol:
            return EvalResult(value, error + tail)
        log_functions.debug("H(z, lambda) refinement, error %s", mp.nstr(error, 3))
        points = _bisect_points(points)
    raise QuadratureFailureError("H(z, lambda) quadrature error %s above tolerance" % mp.nstr(error, 3))


def riemann_siegel_theta(t, ctx=None):
    """Riemann-Siegel theta, theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi."""
    ctx = _context(ctx)
    return ctx.mp.siegeltheta(ctx.mp.mpf(t))


def hardy_z(t, ctx=None):
    """Hardy's function Z(t) = e^{i theta(t)} zeta(1/2 + it).

    Z is real for real t, |Z(t)| = |zeta(1/2 + it)|, and its sign changes are
    the zeros on the critical line.

    :raise DomainError: if t < 0
    :raise PrecisionExhaustedError: if t exceeds ``ctx.max_height``
    """
    ctx = _context(ctx)
    mp = ctx.mp
    t = mp.mpf(t)
    if t < 0:
        raise DomainError("Hardy Z is evaluated for t >= 0")
    if t > ctx.max_height:
        raise PrecisionExhaustedError("Height %s beyond the supported range" % mp.nstr(t, 10))
    rotation = mp.expj(mp.siegeltheta(t))
    return mp.re(rotation * zeta(mp.mpc(0.5, t), ctx).value)


def barnes_g_integer(n):
    """Barnes G at a positive integer, G(n) = 1! 2! ... (n-2)!.

    :raise DomainError: if n < 1
    """
    if int(n) != n or n < 1:
        raise DomainError("Barnes G is evaluated at positive integers")
    value = 1
    factorial = 1
    for k in range(1, int(n) - 1):
        factorial *= k
        value *= factorial
    return value


def functional_equation_residual(s, ctx=None):
    """|pi^{-s/2} Gamma(s/2) zeta(s) - pi^{-(1-s)/2} Gamma((1-s)/2) zeta(1-s)|"""
    ctx = _context(ctx)
    mp = ctx.mp
    s = as_mpc(s, mp)

    def completed(w):
        return mp.power(mp.pi, -w / 2) * gamma(w / 2, ctx).value * zeta(w, ctx).value
    return abs(completed(s) - completed(1 - s))


def euler_product(s, primes, ctx=None):
    """Truncated Euler product prod_p (1 - p^-s)^-1 over the primes given."""
    ctx = _context(ctx)
    mp = ctx.mp
    s = as_mpc(s, mp)
    return mp.exp(-mp.fsum(mp.log(1 - mp.power(int(p), -s)) for p in primes))


def hadamard_zeta(s, gammas, ctx=None):
    """zeta(s) rebuilt from the product of xi over the zeros 1/2 +- i gamma given,
    xi(s) = 1/2 prod (1 - s/rho)(1 - s/conj(rho)), paired in ascending order."""
    ctx = _context(ctx)
    mp = ctx.mp
    s = as_mpc(s, mp)
    shift = (mp.mpf(0.5) - s) ** 2
    product = mp.one
    for gamma_n in gammas:
        g2 = mp.mpf(gamma_n) ** 2
        product *= (shift + g2) / (mp.mpf(0.25) + g2)
    xi_value = product / 2
    return xi_value / (s * (s - 1) / 2 * mp.power(mp.pi, -s / 2) * mp.gamma(s / 2))


def _zeta_array_right(s):
    """Vectorised Euler-Maclaurin zeta for Re s >= 1/2."""
    size = ARRAY_EM_TERMS
    total = np.zeros_like(s)
    for n in range(1, size):
        total += np.exp(-s * math.log(n))
    head = np.exp(-s * math.log(size))
    total += size * head / (s - 1) + head / 2
    bernoulli = sp_special.bernoulli(2 * ARRAY_EM_CORRECTIONS)
    factor = s * head / size
    for k in range(1, ARRAY_EM_CORRECTIONS + 1):
        total += bernoulli[2 * k] / math.factorial(2 * k) * factor
        factor = factor * (s + 2 * k - 1) * (s + 2 * k) / (size * size)
    return total


def zeta_array(s):
    """Double precision zeta over an array of complex points.

    Accurate to about 1e-12 for |s| <= 90; s = 1 yields a non finite value.
    """
    s = np.asarray(s, dtype=complex)
    shape = s.shape
    s = s.ravel()
    out = np.empty_like(s)
    right = s.real >= 0.5
    with np.errstate(all="ignore"):
        if right.any():
            out[right] = _zeta_array_right(s[right])
        left = ~right
        if left.any():
            w = s[left]
            chi = (np.exp(w * math.log(2)) * np.exp((w - 1) * math.log(math.pi)) *
                   np.sin(math.pi * w / 2) * sp_special.gamma(1 - w))
            out[left] = chi * _zeta_array_right(1 - w)
            out[left & (s == 0)] = -0.5
    return out.reshape(shape)


def _riemann_siegel_c0(p):
    denominator = np.cos(2 * math.pi * p)
    value = np.cos(2 * math.pi * (p * p - p - 1.0 / 16)) / np.where(denominator == 0, 1, denominator)
    # Removable singularities at p = 1/4 and p = 3/4
    near = np.abs(denominator) < 1e-6
    if near.any():
        q = p[near]
        shifted = [np.cos(2 * math.pi * (v * v - v - 1.0 / 16)) / np.cos(2 * math.pi * v)
                   for v in (q - 1e-4, q + 1e-4)]
        value[near] = (shifted[0] + shifted[1]) / 2
    return value


def _hardy_z_riemann_siegel(t):
    tau = np.sqrt(t / (2 * math.pi))
    m = np.floor(tau).astype(np.int64)
    p = tau - m
    theta = (t / 2 * np.log(t / (2 * math.pi)) - t / 2 - math.pi / 8 +
             1 / (48 * t) + 7 / (5760 * t ** 3))
    total = np.zeros_like(t)
    for n in range(1, int(m.max()) + 1):
        active = m >= n
        total += np.where(active, np.cos(theta - t * math.log(n)) / math.sqrt(n), 0.0)
    sign = np.where(m % 2 == 1, 1.0, -1.0)
    return 2 * total + sign * (2 * math.pi / t) ** 0.25 * _riemann_siegel_c0(p)


def hardy_z_array(t):
    """Double precision Hardy Z over an array of heights.

    Below :data:`HARDY_Z_ARRAY_HEIGHT` each value comes from mpmath; above it
    the Riemann-Siegel main sum with its first correction term is used, with
    an absolute error of order t^(-3/4).
    """
    t = np.asarray(t, dtype=float)
    shape = t.shape
    t = t.ravel()
    out = np.empty_like(t)
    low = t < HARDY_Z_ARRAY_HEIGHT
    if low.any():
        out[low] = [float(mpmath.fp.siegelz(v)) for v in t[low]]
    high = ~low
    if high.any():
        out[high] = _hardy_z_riemann_siegel(t[high])
    return out.reshape(shape)
