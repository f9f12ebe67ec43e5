# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Empirical laws of simulated samples and their distances to other laws.
"""

from __future__ import absolute_import, division, print_function
from .errors import DomainError, InsufficientDataError
from scipy import stats
import math
import numpy as np

import logging
log = logging.getLogger(__name__)


class EmpiricalDistribution(object):
    """
    Sorted samples of a random variable, optionally with a paired value per
    sample (the SINR paired with the exposure of the same realization), so
    that joint probabilities can be queried.
    """

    def __init__(self, samples, pairs=None):
        """
        :param samples: Sample values, at least one, no NaN.
        :param pairs: Paired values of the same length, optional.
        :raise ~emf_coverage.errors.InsufficientDataError: If empty.
        """
        super(EmpiricalDistribution, self).__init__()
        samples = np.asarray(samples, dtype=float).ravel()
        if samples.size == 0:
            raise InsufficientDataError(0, 1)
        if np.any(np.isnan(samples)):
            raise DomainError("samples", "nan", "no NaN samples")
        order = np.argsort(samples, kind="stable")
        self._samples = samples[order]
        self._samples.setflags(write=False)
        self._pairs = None
        if pairs is not None:
            pairs = np.asarray(pairs, dtype=float).ravel()
            if pairs.shape != samples.shape:
                raise DomainError("pairs", pairs.shape,
                                  "shape {}".format(samples.shape))
            self._pairs = pairs[order]
            self._pairs.setflags(write=False)

    @property
    def samples(self):
        """
        Samples in ascending order.

        :type: numpy.ndarray
        """
        return self._samples

    @property
    def pairs(self):
        """
        Paired values aligned with :py:attr:`samples`, or ``None``.

        :type: numpy.ndarray
        """
        return self._pairs

    @property
    def count(self):
        """
        :type: int
        """
        return self._samples.size

    @property
    def mean(self):
        """
        :type: float
        """
        return float(np.mean(self._samples))

    @property
    def second_moment(self):
        """
        :type: float
        """
        return float(np.mean(self._samples ** 2))

    @property
    def variance(self):
        """
        Unbiased sample variance (zero for a single sample).

        :type: float
        """
        if self.count < 2:
            return 0.0
        return float(np.var(self._samples, ddof=1))

    @property
    def standard_error(self):
        """
        Standard error of :py:attr:`mean`.

        :type: float
        """
        return math.sqrt(self.variance / self.count)

    def cdf(self, x):
        """
        P[X <= x].

        :param x: Threshold(s).
        :rtype: float or numpy.ndarray
        """
        x = np.asarray(x, dtype=float)
        return (np.searchsorted(self._samples, x, side="right") /
                self.count)[()]

    def ccdf(self, x):
        """
        P[X > x].

        :rtype: float or numpy.ndarray
        """
        return (1.0 - np.asarray(self.cdf(x)))[()]

    def quantile(self, p):
        """
        Smallest sample value whose empirical CDF reaches ``p``.

        :param p: Probability (or probabilities) in [0, 1].
        :rtype: float or numpy.ndarray
        """
        p = np.asarray(p, dtype=float)
        if np.any((p < 0) | (p > 1)):
            raise DomainError("p", p, "0 <= p <= 1")
        return np.quantile(self._samples, p, method="inverted_cdf")[()]

    def joint_cdf(self, t, t_prime):
        """
        P[pair > t, X <= t_prime], e.g. P[SINR > t, 𝒫 <= T'] for exposure
        samples paired with SINR values.

        :rtype: float
        """
        if self._pairs is None:
            raise DomainError("pairs", None, "paired samples")
        selected = self._pairs[:np.searchsorted(self._samples, t_prime,
                                                side="right")]
        return float(np.count_nonzero(selected > t)) / self.count

    def characteristic_function(self, q):
        """
        Empirical characteristic function mean(e^(jqX)).

        :param q: Frequencies.
        :rtype: complex or numpy.ndarray
        """
        q = np.asarray(q, dtype=float)
        values = np.exp(1j * q.reshape(-1, 1) * self._samples[None, :])
        return np.mean(values, axis=1).reshape(q.shape)[()]

    def dkw_band(self, confidence=0.95):
        """
        Half-width ε of the Dvoretzky-Kiefer-Wolfowitz band: the true CDF
        lies within ε of :py:meth:`cdf` everywhere with the given
        confidence.

        :rtype: float
        """
        return math.sqrt(math.log(2.0 / (1.0 - confidence)) /
                         (2.0 * self.count))

    def __len__(self):
        return self.count

    def __repr__(self):
        return "EmpiricalDistribution(count={}, mean={!r})".format(
            self.count, self.mean)


def ks_distance(a, b):
    """
    Kolmogorov-Smirnov distance sup_x |F_a(x) - F_b(x)|.

    :param ~emf_coverage.empirical.EmpiricalDistribution a: Sample law.
    :param b: Another :py:class:`EmpiricalDistribution` (distance over the
        pooled support) or a vectorized CDF callable.
    :rtype: float
    """
    if isinstance(b, EmpiricalDistribution):
        return float(stats.ks_2samp(a.samples, b.samples).statistic)
    if callable(b):
        return float(stats.kstest(a.samples, b).statistic)
    raise DomainError("b", b, "EmpiricalDistribution or CDF callable")


def sup_distance(values_a, values_b):
    """
    Largest absolute difference of two curves tabulated on the same grid,
    e.g. the KS distance of two analytic CDFs.

    :rtype: float
    """
    values_a = np.asarray(values_a, dtype=float)
    values_b = np.asarray(values_b, dtype=float)
    if values_a.shape != values_b.shape or values_a.size == 0:
        raise DomainError("values_b", values_b.shape,
                          "nonempty, shape {}".format(values_a.shape))
    return float(np.max(np.abs(values_a - values_b)))


def grid_distance(distribution, grid, values, complement=False):
    """
    Largest gap between the empirical CDF (or CCDF) of ``distribution`` and
    analytic values tabulated on ``grid``.

    :param ~emf_coverage.empirical.EmpiricalDistribution distribution:
        Sample law.
    :param grid: Thresholds.
    :param values: Analytic CDF (or CCDF) at ``grid``.
    :param bool complement: Compare against the CCDF.
    :rtype: float
    """
    grid = np.asarray(grid, dtype=float)
    empirical = distribution.ccdf(grid) if complement \
        else distribution.cdf(grid)
    return sup_distance(np.atleast_1d(empirical), np.atleast_1d(values))
