# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Special functions needed by the closed-form exposure and coverage metrics.

Only the cases the metrics actually produce are covered: incomplete gamma
functions of positive integer order with complex argument, complete elliptic
integrals with nonpositive parameter, the Gauss hypergeometric function on
the imaginary axis and principal-branch complex powers. All functions accept
scalars or numpy arrays and are vectorized over their array arguments.
"""

from __future__ import absolute_import, division, print_function
from .errors import ConvergenceError, DomainError, UnsupportedOrderError
from scipy import special
import math
import numbers
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Modulus below which hypergeometric series are summed directly.
SERIES_RADIUS = 0.9

#: Maximum number of terms of a hypergeometric series.
MAX_SERIES_TERMS = 4000

#: Offset used to evaluate degenerate 1/z transformations as a limit.
DEGENERATE_OFFSET = 1e-6


def _order(m):
    """
    Validates an order parameter and returns it as ``int``.
    """
    if isinstance(m, bool) or not isinstance(m, numbers.Real):
        raise UnsupportedOrderError(m)
    if m < 1 or not float(m).is_integer():
        raise UnsupportedOrderError(m)
    return int(m)


def _scalar_or_array(value, like):
    """
    Returns a numpy scalar if the caller passed a scalar.
    """
    if np.ndim(like) == 0:
        return value[()]
    return value


def _exp_taylor(m, z):
    """
    Truncated exponential series sum_{k<m} z^k / k!, by Horner's scheme.
    """
    poly = np.ones_like(z)
    for k in range(m - 1, 0, -1):
        poly = 1.0 + poly * z / k
    return poly


def upper_incomplete_gamma(m, z):
    """
    Upper incomplete gamma function Γ(m, z) for a positive integer order.

    Uses the finite closed form (m-1)!·e^(-z)·Σ_{k<m} z^k/k!, which is exact
    for every complex ``z``. ``z = +inf`` yields 0.

    :param int m: Order, positive integer.
    :param z: Complex argument (scalar or array).
    :return: Γ(m, z) with the shape of ``z``.
    :rtype: complex or numpy.ndarray
    :raise ~emf_coverage.errors.UnsupportedOrderError:
        If ``m`` is not a positive integer.
    """
    m = _order(m)
    zz = np.asarray(z, dtype=complex)
    out = np.zeros(zz.shape, dtype=complex)
    finite = np.isfinite(zz)
    with np.errstate(over='ignore', invalid='ignore'):
        zf = zz[finite]
        out[finite] = math.factorial(m - 1) * np.exp(-zf) * \
            _exp_taylor(m, zf)
    infinite = ~finite & (zz.real > 0)
    out[infinite] = 0.0
    if np.any(~finite & ~infinite):
        raise DomainError("z", z, "finite or +inf")
    return _scalar_or_array(out, z)


def _lower_gamma_series(m, z):
    """
    z^m e^(-z) Σ_k z^k / (m (m+1) ... (m+k)), convergent for every z and
    free of cancellation for |z| <= m.
    """
    term = np.full(z.shape, 1.0 / m, dtype=complex)
    total = term.copy()
    for k in range(1, MAX_SERIES_TERMS):
        term = term * z / (m + k)
        total = total + term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            break
    else:
        raise ConvergenceError(total, np.max(np.abs(term)),
                               "incomplete gamma series")
    return z ** m * np.exp(-z) * total


def lower_incomplete_gamma(m, z):
    """
    Lower incomplete gamma function γ(m, z) for a positive integer order and
    complex argument.

    The closed form γ(m,z) = (m-1)!·(1 - e^(-z)·Σ_{k<m} z^k/k!) is used where
    it is free of cancellation (|z| > m); a power series covers the disk
    |z| <= m.

    :param int m: Order, positive integer.
    :param z: Complex argument (scalar or array).
    :return: γ(m, z) with the shape of ``z``.
    :rtype: complex or numpy.ndarray
    :raise ~emf_coverage.errors.UnsupportedOrderError:
        If ``m`` is not a positive integer.
    """
    m = _order(m)
    zz = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(zz)):
        raise DomainError("z", z, "finite complex argument")
    out = np.empty(zz.shape, dtype=complex)
    near = np.abs(zz) <= m
    if np.any(near):
        out[near] = _lower_gamma_series(m, zz[near])
    far = ~near
    if np.any(far):
        zf = zz[far]
        with np.errstate(over='ignore', invalid='ignore'):
            out[far] = math.factorial(m - 1) * \
                (1.0 - np.exp(-zf) * _exp_taylor(m, zf))
    return _scalar_or_array(out, z)


def generalized_incomplete_gamma(m, a, b):
    """
    Generalized incomplete gamma function Γ(m; a, b) = ∫_a^b t^(m-1)e^(-t)dt.

    The integrand is entire, so the value does not depend on the path.
    ``b`` may be ``+inf``. Differences of upper functions are used when both
    arguments lie far to the right (the lower functions are then both close
    to (m-1)!).

    :param int m: Order, positive integer.
    :param a: Lower complex limit.
    :param b: Upper complex limit, or ``numpy.inf``.
    :return: Γ(m; a, b), broadcast over ``a`` and ``b``.
    :rtype: complex or numpy.ndarray
    """
    m = _order(m)
    aa, bb = np.broadcast_arrays(np.asarray(a, dtype=complex),
                                 np.asarray(b, dtype=complex))
    right = (aa.real > m) & (np.isinf(bb.real) | (bb.real > m))
    out = np.empty(aa.shape, dtype=complex)
    if np.any(right):
        out[right] = upper_incomplete_gamma(m, aa[right]) - \
            upper_incomplete_gamma(m, bb[right])
    left = ~right
    if np.any(left):
        b_left = bb[left]
        infinite = np.isinf(b_left.real)
        upper = np.where(infinite, math.factorial(m - 1) + 0j, 0j)
        if np.any(~infinite):
            upper[~infinite] = lower_incomplete_gamma(m, b_left[~infinite])
        out[left] = upper - lower_incomplete_gamma(m, aa[left])
    return out[()] if out.ndim == 0 else out


def nakagami_power_cdf(x, m):
    """
    CDF of the Nakagami-m power gain |h|² ~ Gamma(m, 1/m), i.e.
    γ(m, m·x)/Γ(m). Negative arguments give 0.

    :param x: Real argument(s).
    :param int m: Nakagami shape, positive integer.
    :rtype: float or numpy.ndarray
    """
    m = _order(m)
    xx = np.maximum(np.asarray(x, dtype=float), 0.0)
    return _scalar_or_array(np.asarray(special.gammainc(m, m * xx)), x)


def elliptic_ke_complementary(kprime):
    """
    Complete elliptic integrals K and E of the standard parameter
    1 - kprime².

    K comes from :py:func:`scipy.special.ellipkm1` of kprime², so that the
    logarithmic singularity of K (kprime -> 0) keeps full precision.

    :param kprime: Complementary modulus in [0, 1] (scalar or array).
    :return: Tuple ``(K, E)``; K is ``inf`` for kprime = 0.
    :rtype: tuple
    """
    kp = np.asarray(kprime, dtype=float)
    if np.any((kp < 0) | (kp > 1)) or np.any(np.isnan(kp)):
        raise DomainError("kprime", kprime, "0 <= kprime <= 1")
    p = kp * kp
    k = special.ellipkm1(p)
    e = special.ellipe(1.0 - p)
    return _scalar_or_array(k, kprime), _scalar_or_array(e, kprime)


def _negative_parameter(k_param):
    k = np.asarray(k_param, dtype=float)
    if np.any(np.isnan(k)) or np.any(k > 0):
        raise DomainError("k_param", k_param, "k_param <= 0")
    # imaginary-modulus transformation: parameter k -> k/(k-1) in [0, 1)
    return 1.0 / np.sqrt(1.0 - k)


def elliptic_k(k_param):
    """
    Complete elliptic integral of the first kind
    K(k) = ∫_0^{π/2} (1 - k sin²φ)^(-1/2) dφ for a nonpositive parameter.

    :param k_param: Parameter k <= 0, arbitrarily large in magnitude.
    :rtype: float or numpy.ndarray
    :raise ~emf_coverage.errors.DomainError: If ``k_param > 0``.
    """
    kprime = _negative_parameter(k_param)
    k_std, _ = elliptic_ke_complementary(kprime)
    return _scalar_or_array(np.asarray(k_std * kprime), k_param)


def elliptic_e(k_param):
    """
    Complete elliptic integral of the second kind
    E(k) = ∫_0^{π/2} (1 - k sin²φ)^(1/2) dφ for a nonpositive parameter.

    :param k_param: Parameter k <= 0, arbitrarily large in magnitude.
    :rtype: float or numpy.ndarray
    :raise ~emf_coverage.errors.DomainError: If ``k_param > 0``.
    """
    kprime = _negative_parameter(k_param)
    _, e_std = elliptic_ke_complementary(kprime)
    return _scalar_or_array(np.asarray(e_std / kprime), k_param)


def bessel_i0_scaled(x):
    """
    Exponentially scaled modified Bessel function e^(-x)·I₀(x).

    Callers combine every other exponential factor with the scaling before
    calling, so that no intermediate value overflows.

    :param x: Nonnegative real argument(s).
    :rtype: float or numpy.ndarray
    :raise ~emf_coverage.errors.DomainError: If ``x < 0``.
    """
    xx = np.asarray(x, dtype=float)
    if np.any(xx < 0) or np.any(np.isnan(xx)):
        raise DomainError("x", x, "x >= 0")
    return _scalar_or_array(np.asarray(special.i0e(xx)), x)


def complex_pow_principal(base, exponent):
    """
    Principal-branch power exp(exponent·Log(base)), the imaginary part of
    Log lying in (-π, π].

    :param base: Complex base(s).
    :param float exponent: Real exponent.
    :rtype: complex or numpy.ndarray
    :raise ~emf_coverage.errors.DomainError:
        If a base is zero and ``exponent <= 0``.
    """
    zz = np.asarray(base, dtype=complex)
    # +0.0 turns negative zeros into positive ones, keeping the cut on top
    zz = zz + (0.0 + 0.0j)
    zero = zz == 0
    if np.any(zero) and exponent <= 0:
        raise DomainError("base", base, "base != 0 for exponent <= 0")
    out = np.zeros(zz.shape, dtype=complex)
    nz = ~zero
    out[nz] = np.exp(exponent * np.log(zz[nz]))
    return _scalar_or_array(out, base)


def _hyp2f1_series(a, b, c, w):
    """
    Direct power series of ₂F₁(a, b; c; w), intended for |w| < 1.
    """
    term = np.ones(w.shape, dtype=complex)
    total = term.copy()
    small_before = False
    for k in range(MAX_SERIES_TERMS):
        term = term * ((a + k) * (b + k) / ((c + k) * (k + 1.0))) * w
        total = total + term
        small = bool(np.all(np.abs(term) <= 1e-17 * np.abs(total)))
        # two consecutive negligible terms, a single one may be a dip
        if small and small_before:
            break
        small_before = small
    else:
        raise ConvergenceError(total, np.max(np.abs(term)),
                               "hypergeometric series")
    return total


def _is_integer(value, tol=1e-12):
    return abs(value - round(value)) <= tol


def _hyp2f1_inverse(a, b, c, z):
    """
    ₂F₁ through the z -> 1/z connection formula, valid off the cut.
    """
    if _is_integer(a - b):
        # a - b integer: the connection coefficients have poles that cancel
        # in the limit, evaluated symmetrically around b
        return 0.5 * (_hyp2f1_inverse(a, b + DEGENERATE_OFFSET, c, z) +
                      _hyp2f1_inverse(a, b - DEGENERATE_OFFSET, c, z))
    w = 1.0 / z
    gc = special.gamma(c)
    coef_a = gc * special.gamma(b - a) * special.rgamma(b) * \
        special.rgamma(c - a)
    coef_b = gc * special.gamma(a - b) * special.rgamma(a) * \
        special.rgamma(c - b)
    out = np.zeros(z.shape, dtype=complex)
    if coef_a != 0:
        out = out + coef_a * complex_pow_principal(-z, -a) * \
            _hyp2f1_series(a, a - c + 1.0, a - b + 1.0, w)
    if coef_b != 0:
        out = out + coef_b * complex_pow_principal(-z, -b) * \
            _hyp2f1_series(b, b - c + 1.0, b - a + 1.0, w)
    return out


def gauss_2f1_imag(a, b, c, z):
    """
    Gauss hypergeometric function ₂F₁(a, b; c; z) on the imaginary axis.

    For |z| < 0.9 the power series is summed. Otherwise the argument is
    moved inside the disk by the Pfaff transformation z -> z/(z-1) or by the
    z -> 1/z connection formula, whichever gives the smaller modulus. Both
    are principal-branch continuations; the imaginary axis never touches the
    cut [1, inf).

    :param float a: First numerator parameter.
    :param float b: Second numerator parameter.
    :param float c: Denominator parameter, not a nonpositive integer.
    :param z: Purely imaginary argument(s).
    :rtype: complex or numpy.ndarray
    :raise ~emf_coverage.errors.DomainError:
        If ``c`` is a nonpositive integer or ``z`` has a real part.
    :raise ~emf_coverage.errors.ConvergenceError:
        If a series does not converge within
        :py:data:`~emf_coverage.specfun.MAX_SERIES_TERMS` terms.
    """
    a, b, c = float(a), float(b), float(c)
    if c <= 0 and _is_integer(c):
        raise DomainError("c", c, "c not a nonpositive integer")
    zz = np.asarray(z, dtype=complex)
    modulus = np.abs(zz)
    if np.any(np.abs(zz.real) > 1e-14 * np.maximum(modulus, 1.0)):
        raise DomainError("z", z, "re(z) = 0")
    zz = 1j * zz.imag
    out = np.empty(zz.shape, dtype=complex)

    direct = modulus < SERIES_RADIUS
    if np.any(direct):
        out[direct] = _hyp2f1_series(a, b, c, zz[direct])
    with np.errstate(divide='ignore'):
        pfaff = ~direct & (modulus / np.sqrt(1.0 + modulus ** 2) <=
                           1.0 / modulus)
    if np.any(pfaff):
        zp = zz[pfaff]
        out[pfaff] = complex_pow_principal(1.0 - zp, -a) * \
            _hyp2f1_series(a, c - b, c, zp / (zp - 1.0))
    inverse = ~direct & ~pfaff
    if np.any(inverse):
        out[inverse] = _hyp2f1_inverse(a, b, c, zz[inverse])
    return _scalar_or_array(out, z)
