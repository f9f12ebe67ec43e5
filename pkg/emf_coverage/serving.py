# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Distributions conditioned on the serving base station, averaged over its
position.

Both topologies reduce every distribution metric to the same structure: a
finite mixture over quadrature nodes of the serving position, where each node
carries its probability weight, the mean received power P̄ of the serving
link and the characteristic function of the interference conditioned on that
position. :py:class:`ServingMixture` holds that structure and turns it into
CDF/CCDF values with a single Gil-Pelaez inversion of the mixture, so that
the oscillatory integral is computed once per threshold instead of once per
node.
"""

from __future__ import absolute_import, division, print_function
from .errors import DomainError
from .inversion import CharacteristicFunction, InversionResult, \
    gil_pelaez_ccdf, gil_pelaez_cdf, gil_pelaez_integral
from .specfun import generalized_incomplete_gamma, lower_incomplete_gamma, \
    nakagami_power_cdf
from scipy import optimize
import math
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Factor by which the root brackets of quantile searches are widened.
BRACKET_FACTOR = 4.0

#: Maximum number of bracket widenings.
MAX_BRACKET_STEPS = 60


def signal_cf(q, power, m):
    """
    Characteristic function (1 - jqP̄/m)^(-m) of the serving power P̄·|h|²
    with Nakagami-m fading.

    :param q: Frequencies, broadcast against ``power``.
    :param power: Mean received power(s) P̄ [W].
    :param int m: Nakagami shape.
    :rtype: numpy.ndarray
    """
    return (1.0 - 1j * np.asarray(q) * np.asarray(power) / m) ** (-m)


def zeta(q, t, t_prime, power, sigma2, m):
    """
    Signal-side factor of the joint exposure/SINR CDF:

        ζ(q) = E[e^(-jq(S/t - σ²)); S <= T″] + E[e^(-jq(T' - S)); T″ < S <= T']

    for S = P̄·|h|² with Nakagami-m fading and T″ = t(T' + σ²)/(1 + t), the
    signal level at which the exposure and SINR constraints swap. Both terms
    have closed forms in incomplete gamma functions; ζ(0) = F_|h|²(T'/P̄).

    :param q: Frequencies, broadcast against ``power``.
    :param float t: SINR threshold (linear, > 0).
    :param float t_prime: Exposure threshold [W], > 0.
    :param power: Mean received power(s) P̄ [W], > 0.
    :param float sigma2: Noise power [W].
    :param int m: Nakagami shape.
    :rtype: numpy.ndarray
    """
    q = np.asarray(q, dtype=float)
    power = np.asarray(power, dtype=float)
    t_second = t * (t_prime + sigma2) / (1.0 + t)
    if t_second <= t_prime:
        upper = t_second
        upper_over_t = (t_prime + sigma2) / (1.0 + t)
    else:
        upper = t_prime
        upper_over_t = t_prime / t
    x_upper = upper / power
    x_prime = t_prime / power
    coefficient = m ** m / math.factorial(m - 1)
    below = lower_incomplete_gamma(m, m * x_upper + 1j * q * upper_over_t) / \
        (m + 1j * q * power / t) ** m * np.exp(1j * q * sigma2)
    rate = m - 1j * q * power
    between = generalized_incomplete_gamma(m, rate * x_upper,
                                           rate * x_prime) / rate ** m * \
        np.exp(-1j * q * t_prime)
    return coefficient * (below + between)


class ServingMixture(object):
    """
    Mixture over serving-position nodes.

    The mixture is described by, for every node n, the mean serving power
    P̄_n, the probability weight w_n (the weights sum to one) and the
    weighted interference characteristic function
    q -> w_n·φ_I(q | node n), supplied as one vectorized callable.
    """

    def __init__(self, power, weights, weighted_cf, m, interference_mean,
                 distances=None):
        """
        :param power: Mean serving power at every node [W], shape (n,).
        :param weights: Node probabilities, shape (n,).
        :param callable weighted_cf:
            Maps frequencies of shape (k,) to the (k, n) array of
            w_n·φ_I(q | node n).
        :param int m: Nakagami shape.
        :param interference_mean: Mean interference at every node [W].
        :param distances: Serving distance at every node [m], optional.
        """
        super(ServingMixture, self).__init__()
        self._power = np.asarray(power, dtype=float)
        self._weights = np.asarray(weights, dtype=float)
        self._weighted_cf = weighted_cf
        self._m = int(m)
        self._interference_mean = np.asarray(interference_mean, dtype=float)
        self._distances = None if distances is None \
            else np.asarray(distances, dtype=float)
        if self._power.shape != self._weights.shape:
            raise DomainError("weights", self._weights.shape,
                              "same shape as power {}".format(
                                  self._power.shape))

    @property
    def power(self):
        """
        Mean serving power per node [W].

        :type: numpy.ndarray
        """
        return self._power

    @property
    def weights(self):
        """
        Node probabilities.

        :type: numpy.ndarray
        """
        return self._weights

    @property
    def mass(self):
        """
        Total weight (one up to quadrature and truncation errors).

        :type: float
        """
        return float(np.sum(self._weights))

    @property
    def mean_signal(self):
        """
        E[S₀] [W].

        :type: float
        """
        return float(np.dot(self._weights, self._power))

    @property
    def mean_interference(self):
        """
        E[I₀] [W].

        :type: float
        """
        return float(np.dot(self._weights, self._interference_mean))

    @property
    def mean_exposure(self):
        """
        E[S₀ + I₀] [W].

        :type: float
        """
        return self.mean_signal + self.mean_interference

    @property
    def is_silent(self):
        """
        ``True`` if no base station radiates (all powers zero).

        :type: bool
        """
        return not np.any(self._power > 0)

    def mean_serving_distance(self):
        """
        E[R₀] [m].

        :rtype: float
        """
        if self._distances is None:
            raise DomainError("distances", None, "mixture built with "
                              "serving distances")
        return float(np.dot(self._weights, self._distances))

    def interference_cf(self, q):
        """
        Weighted interference characteristic functions, shape (k, n).
        """
        q = np.atleast_1d(np.asarray(q, dtype=float))
        return self._weighted_cf(q)

    def exposure_cf(self, q):
        """
        Characteristic function E[e^(jq𝒫)] of the exposure.

        :param q: Frequencies, shape (k,).
        :rtype: numpy.ndarray
        """
        q = np.atleast_1d(np.asarray(q, dtype=float))
        return np.sum(self._weighted_cf(q) *
                      signal_cf(q[:, None], self._power[None, :], self._m),
                      axis=1)

    def _scale(self):
        return max(self.mean_exposure, 1e-300)

    def cdf_exposure(self, t_prime, quad=None, full_output=False):
        """
        P[𝒫 <= T'].

        :param float t_prime: Exposure threshold [W], > 0.
        :param ~emf_coverage.inversion.QuadratureConfig quad:
            Accuracy settings.
        :param bool full_output: Return an InversionResult if ``True``.
        :rtype: float
        """
        if not t_prime > 0:
            raise DomainError("t_prime", t_prime, "t_prime > 0")
        if self.is_silent or math.isinf(t_prime):
            return InversionResult(1.0, 0.0, 0) if full_output else 1.0
        cf = CharacteristicFunction(self.exposure_cf, self._scale(),
                                    decay_order=self._m)
        return gil_pelaez_cdf(cf, t_prime, quad, full_output)

    def ccdf_sinr(self, t, sigma2, quad=None, full_output=False):
        """
        P[S₀/(I₀ + σ²) > t].

        :param float t: SINR threshold (linear, > 0).
        :param float sigma2: Noise power [W].
        :param ~emf_coverage.inversion.QuadratureConfig quad:
            Accuracy settings.
        :param bool full_output: Return an InversionResult if ``True``.
        :rtype: float
        """
        if not t > 0:
            raise DomainError("t", t, "t > 0")
        if self.is_silent:
            return InversionResult(0.0, 0.0, 0) if full_output else 0.0
        t = float(t)
        sigma2 = float(sigma2)
        power = self._power[None, :]

        def difference(q):
            q = np.atleast_1d(q)
            mixed = np.conj(self._weighted_cf(t * q)) * \
                signal_cf(q[:, None], power, self._m)
            return np.sum(mixed, axis=1) * np.exp(-1j * t * q * sigma2)

        scale = self.mean_signal + t * (self.mean_interference + sigma2)
        cf = CharacteristicFunction(difference, max(scale, 1e-300),
                                    decay_order=self._m)
        return gil_pelaez_ccdf(cf, 0.0, quad, full_output)

    def joint_cdf(self, t, t_prime, sigma2, quad=None, full_output=False):
        """
        P[SINR > t, 𝒫 <= T'].

        :param float t: SINR threshold (linear, > 0).
        :param float t_prime: Exposure threshold [W], > 0; ``inf`` gives the
            SINR CCDF.
        :param float sigma2: Noise power [W].
        :param ~emf_coverage.inversion.QuadratureConfig quad:
            Accuracy settings.
        :param bool full_output: Return an InversionResult if ``True``.
        :rtype: float
        """
        if not t > 0:
            raise DomainError("t", t, "t > 0")
        if not t_prime > 0:
            raise DomainError("t_prime", t_prime, "t_prime > 0")
        if math.isinf(t_prime):
            return self.ccdf_sinr(t, sigma2, quad, full_output)
        if self.is_silent:
            return InversionResult(0.0, 0.0, 0) if full_output else 0.0
        t = float(t)
        t_prime = float(t_prime)
        sigma2 = float(sigma2)
        power = self._power[None, :]
        head = 0.5 * float(np.dot(
            self._weights, nakagami_power_cdf(t_prime / self._power,
                                              self._m)))

        def g(q):
            q = np.atleast_1d(q)
            factor = zeta(q[:, None], t, t_prime, power, sigma2, self._m)
            return np.sum(self._weighted_cf(q) * factor, axis=1)

        integral = gil_pelaez_integral(g, t_prime, quad)
        value = min(max(head - integral.value / math.pi, 0.0), 1.0)
        log.debug("ServingMixture.joint_cdf evaluated: " +
                  "t={} ".format(t) +
                  "t_prime={} ".format(t_prime) +
                  "head={} ".format(head) +
                  "value={} ".format(value) +
                  "panels={}".format(integral.panels))
        if full_output:
            return InversionResult(value, integral.error_estimate / math.pi,
                                   integral.panels)
        return value


def frechet_bounds(f_cov, f_emf):
    """
    Fréchet bounds of a joint probability from its two margins.

    :param float f_cov: P[SINR > T].
    :param float f_emf: P[𝒫 <= T'].
    :return: Tuple ``(lower, upper)`` = (max(0, f_cov + f_emf - 1),
        min(f_cov, f_emf)).
    :rtype: tuple
    :raise ~emf_coverage.errors.DomainError: If a margin is not in [0, 1].
    """
    for name, value in (("f_cov", f_cov), ("f_emf", f_emf)):
        if not 0.0 <= value <= 1.0:
            raise DomainError(name, value, "0 <= {} <= 1".format(name))
    return max(0.0, f_cov + f_emf - 1.0), min(f_cov, f_emf)


def _bracket_log(function, target, start):
    """
    Brackets the root of the nondecreasing ``function(x) - target`` on a
    logarithmic scale starting at ``start``; ``None`` if out of reach.
    """
    lower = upper = math.log(start)
    step = math.log(BRACKET_FACTOR)
    for _ in range(MAX_BRACKET_STEPS):
        if function(math.exp(lower)) <= target:
            break
        lower -= step
    else:
        return None
    for _ in range(MAX_BRACKET_STEPS):
        if function(math.exp(upper)) >= target:
            break
        upper += step
    else:
        return None
    return lower, upper


def _solve_log(function, target, start, xtol=1e-7):
    bracket = _bracket_log(function, target, start)
    if bracket is None:
        return float("nan")
    lower, upper = bracket
    if lower == upper:
        return math.exp(lower)
    root = optimize.brentq(lambda x: function(math.exp(x)) - target,
                           lower, upper, xtol=xtol)
    return math.exp(root)


def exposure_quantile(mixture, p, quad=None):
    """
    Exposure threshold T' with P[𝒫 <= T'] = p, found by a bracketing root
    search on log T'.

    :param ~emf_coverage.serving.ServingMixture mixture: Serving mixture.
    :param float p: Probability in (0, 1).
    :param ~emf_coverage.inversion.QuadratureConfig quad: Accuracy settings.
    :return: The quantile [W], ``nan`` if it cannot be bracketed.
    :rtype: float
    """
    if not 0.0 < p < 1.0:
        raise DomainError("p", p, "0 < p < 1")
    if mixture.is_silent:
        return 0.0
    value = _solve_log(lambda x: mixture.cdf_exposure(x, quad), p,
                       mixture.mean_exposure)
    log.debug("exposure_quantile solved: " +
              "p={} ".format(p) +
              "t_prime={}".format(value))
    return value


def joint_isocurve(mixture, p, t_grid, sigma2, quad=None):
    """
    Isocurve of the joint CDF: for each SINR threshold t of ``t_grid`` the
    exposure threshold T' with P[SINR > t, 𝒫 <= T'] = p.

    :param ~emf_coverage.serving.ServingMixture mixture: Serving mixture.
    :param float p: Probability in (0, 1).
    :param t_grid: SINR thresholds (linear).
    :param float sigma2: Noise power [W].
    :param ~emf_coverage.inversion.QuadratureConfig quad: Accuracy settings.
    :return: T' per threshold [W]; ``nan`` where the coverage probability
        itself stays below ``p``.
    :rtype: numpy.ndarray
    """
    if not 0.0 < p < 1.0:
        raise DomainError("p", p, "0 < p < 1")
    out = []
    for t in np.atleast_1d(np.asarray(t_grid, dtype=float)):
        if mixture.is_silent or mixture.ccdf_sinr(t, sigma2, quad) <= p:
            out.append(float("nan"))
            continue
        out.append(_solve_log(
            lambda x: mixture.joint_cdf(t, x, sigma2, quad), p,
            mixture.mean_exposure))
    return np.array(out)
