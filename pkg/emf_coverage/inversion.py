# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Gil-Pelaez inversion of characteristic functions.

A CDF is recovered from a characteristic function φ through

    F(x) = 1/2 - (1/π) ∫_0^∞ Im[φ(q)·e^(-jqx)] / q dq.

The semi-infinite integral is split into panels of half an oscillation
period, each panel integrated by adaptive Gauss-Legendre quadrature, and the
sequence of partial sums is accelerated with Wynn's epsilon algorithm.
"""

from __future__ import absolute_import, division, print_function
from .errors import ConvergenceError, DomainError
from .quadrature import gauss_legendre
import math
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Number of partial sums handed to the epsilon algorithm.
WYNN_WINDOW = 13

#: Trailing panels that must alternate in sign before acceleration is
#: trusted; also the window of the envelope maximum.
ALTERNATION = 4


class QuadratureConfig(object):
    """
    Accuracy settings of the Gil-Pelaez integration.
    """

    def __init__(self, abs_tol=1e-6, rel_tol=1e-6, q_max=None,
                 max_panels=4000, order=16, min_panels=4, max_depth=40):
        """
        :param float abs_tol: Absolute tolerance on the integral.
        :param float rel_tol: Relative tolerance on the integral.
        :param float q_max:
            Optional truncation of the normalized frequency (in units of the
            oscillation scale); ``None`` integrates until convergence.
        :param int max_panels: Panel budget.
        :param int order: Gauss-Legendre nodes of the fine panel rule.
        :param int min_panels: Panels integrated before testing convergence.
        :param int max_depth: Bisection depth of a single panel.
        :raise ~emf_coverage.errors.DomainError: On invalid settings.
        """
        super(QuadratureConfig, self).__init__()
        if not abs_tol > 0:
            raise DomainError("abs_tol", abs_tol, "abs_tol > 0")
        if not rel_tol > 0:
            raise DomainError("rel_tol", rel_tol, "rel_tol > 0")
        if q_max is not None and not q_max > 0:
            raise DomainError("q_max", q_max, "q_max > 0")
        if int(max_panels) < 1:
            raise DomainError("max_panels", max_panels, "max_panels >= 1")
        if int(order) < 2 or int(order) % 2:
            raise DomainError("order", order, "even order >= 2")
        self._abs_tol = float(abs_tol)
        self._rel_tol = float(rel_tol)
        self._q_max = None if q_max is None else float(q_max)
        self._max_panels = int(max_panels)
        self._order = int(order)
        self._min_panels = max(int(min_panels), 1)
        self._max_depth = int(max_depth)

    @property
    def abs_tol(self):
        """
        Absolute tolerance.

        :type: float
        """
        return self._abs_tol

    @property
    def rel_tol(self):
        """
        Relative tolerance.

        :type: float
        """
        return self._rel_tol

    @property
    def q_max(self):
        """
        Normalized truncation frequency, or ``None``.

        :type: float
        """
        return self._q_max

    @property
    def max_panels(self):
        """
        Panel budget.

        :type: int
        """
        return self._max_panels

    @property
    def order(self):
        return self._order

    @property
    def min_panels(self):
        return self._min_panels

    @property
    def max_depth(self):
        return self._max_depth

    def scaled(self, factor):
        """
        Returns a copy with both tolerances multiplied by ``factor``.

        :rtype: ~emf_coverage.inversion.QuadratureConfig
        """
        return QuadratureConfig(
            abs_tol=self._abs_tol * factor, rel_tol=self._rel_tol * factor,
            q_max=self._q_max, max_panels=self._max_panels,
            order=self._order, min_panels=self._min_panels,
            max_depth=self._max_depth)

    def __repr__(self):
        return "QuadratureConfig(abs_tol={!r}, rel_tol={!r}, q_max={!r}, " \
            "max_panels={!r})".format(self._abs_tol, self._rel_tol,
                                      self._q_max, self._max_panels)


class CharacteristicFunction(object):
    """
    Characteristic function of a nonnegative random variable.

    Wraps a vectorized evaluator ``q -> φ(q)`` together with the typical
    magnitude of the variable (used to place the integration panels when no
    threshold is available) and an optional algebraic decay order of |φ|.
    """

    def __init__(self, evaluator, scale, decay_order=None):
        """
        :param callable evaluator:
            Maps a real array of frequencies to complex values of the same
            shape.
        :param float scale: Typical magnitude of the variable (> 0).
        :param float decay_order:
            Order p of the envelope |φ(q)| ~ q^(-p), if known.
        """
        super(CharacteristicFunction, self).__init__()
        if not scale > 0:
            raise DomainError("scale", scale, "scale > 0")
        self._evaluator = evaluator
        self._scale = float(scale)
        self._decay_order = decay_order

    @property
    def scale(self):
        """
        Typical magnitude of the variable.

        :type: float
        """
        return self._scale

    @property
    def decay_order(self):
        """
        Algebraic decay order of |φ|, or ``None``.

        :type: float
        """
        return self._decay_order

    def __call__(self, q):
        q = np.asarray(q, dtype=float)
        return np.asarray(self._evaluator(q), dtype=complex)


class InversionResult(object):
    """
    Value of an inversion together with its error estimate.
    """

    def __init__(self, value, error_estimate, panels):
        super(InversionResult, self).__init__()
        self._value = value
        self._error_estimate = error_estimate
        self._panels = panels

    @property
    def value(self):
        """
        Probability or integral value.

        :type: float
        """
        return self._value

    @property
    def error_estimate(self):
        """
        Estimated absolute error.

        :type: float
        """
        return self._error_estimate

    @property
    def panels(self):
        """
        Number of half-period panels integrated.

        :type: int
        """
        return self._panels

    def __float__(self):
        return float(self._value)

    def __repr__(self):
        return "InversionResult(value={!r}, error_estimate={!r}, " \
            "panels={!r})".format(self._value, self._error_estimate,
                                  self._panels)


def wynn_epsilon(partial_sums):
    """
    Limit estimate of a sequence by Wynn's epsilon algorithm.

    :param partial_sums: Sequence of partial sums (at least one).
    :return: The estimate from the highest even column reached.
    :rtype: float
    """
    current = [float(s) for s in partial_sums]
    best = current[-1]
    previous = [0.0] * (len(current) + 1)
    column = 0
    while len(current) > 1:
        column += 1
        following = []
        for k in range(len(current) - 1):
            difference = current[k + 1] - current[k]
            if difference == 0.0:
                return best
            following.append(previous[k + 1] + 1.0 / difference)
        if not all(math.isfinite(v) for v in following):
            return best
        previous, current = current, following
        if column % 2 == 0:
            best = current[-1]
    return best


def _panel_integral(integrand, a, b, order, tol, depth, max_depth):
    """
    Adaptive Gauss-Legendre integral over one panel. The rule of ``order``
    nodes is compared with the rule of ``order // 2`` nodes; the panel is
    bisected until they agree.

    :return: Tuple ``(value, error_estimate)``.
    """
    x_fine, w_fine = gauss_legendre(order)
    x_coarse, w_coarse = gauss_legendre(order // 2)
    half = 0.5 * (b - a)
    middle = 0.5 * (a + b)
    nodes = middle + half * np.concatenate([x_fine, x_coarse])
    values = integrand(nodes)
    fine = half * np.dot(w_fine, values[:order])
    coarse = half * np.dot(w_coarse, values[order:])
    error = abs(fine - coarse)
    if error <= tol or depth >= max_depth:
        return fine, error
    left, left_error = _panel_integral(integrand, a, middle, order, 0.5 * tol,
                                       depth + 1, max_depth)
    right, right_error = _panel_integral(integrand, middle, b, order,
                                         0.5 * tol, depth + 1, max_depth)
    return left + right, left_error + right_error


def _alternating(values):
    return all(a * b < 0.0 for a, b in zip(values[:-1], values[1:]))


def gil_pelaez_integral(g, scale, quad=None, decay_order=None):
    """
    Semi-infinite oscillatory integral ∫_0^∞ Im[g(q)] / q dq.

    ``g`` must satisfy Im[g(0)] = 0 so that the integrand is finite at the
    origin. Panels have the width π/scale in q, i.e. half a period of
    e^(-jq·scale).

    Two exits are accepted. If the envelope |g(q)| ~ q^(-p) bounds the
    remaining tail ∫_Q^∞ |g(q)|/q dq <= max|g(Q)|/p below the tolerance,
    the plain partial sum is returned. Otherwise the Wynn estimate is
    returned once it has settled on a tail whose panels alternate in sign
    and it lies within the last panel of the plain partial sum, where the
    limit is bracketed.

    :param callable g: Vectorized complex function of the frequency.
    :param float scale: Oscillation scale of ``g`` (> 0).
    :param ~emf_coverage.inversion.QuadratureConfig quad: Accuracy settings.
    :param float decay_order:
        Order p of the envelope of |g|; ``None`` assumes p = 1.
    :return: The integral with its error estimate.
    :rtype: ~emf_coverage.inversion.InversionResult
    :raise ~emf_coverage.errors.ConvergenceError:
        If the panel budget is exhausted before the tolerance is met.
    """
    quad = quad or QuadratureConfig()
    if not scale > 0 or not math.isfinite(scale):
        raise DomainError("scale", scale, "0 < scale < inf")
    width = math.pi / scale
    decay = float(decay_order) if decay_order else 1.0

    def integrand(q):
        return np.imag(g(q)) / q

    panel_tol = 0.05 * quad.abs_tol
    sums = []
    values = []
    envelope = []
    total = 0.0
    estimate = 0.0
    error = np.inf
    settled = 0
    panel = 0
    while panel < quad.max_panels:
        a = panel * width
        if quad.q_max is not None and a * scale >= quad.q_max:
            error = abs(sums[-1] - sums[-2]) if len(sums) > 1 else 0.0
            break
        value, panel_error = _panel_integral(
            integrand, a, a + width, quad.order, panel_tol, 0, quad.max_depth)
        total += value
        sums.append(total)
        values.append(value)
        envelope.append(float(np.abs(g(np.array([a + width])))[0]))
        panel += 1
        if panel < quad.min_panels:
            continue
        tol = max(quad.abs_tol, quad.rel_tol * abs(total))
        tail = max(envelope[-ALTERNATION:]) / decay
        if tail + panel_error <= tol:
            log.debug("gil_pelaez_integral converged: " +
                      "panels={} ".format(panel) +
                      "partial={} ".format(total) +
                      "tail={}".format(tail))
            return InversionResult(total, tail + panel_error, panel)
        new_estimate = wynn_epsilon(sums[-WYNN_WINDOW:])
        error = abs(new_estimate - estimate) + panel_error
        estimate = new_estimate
        tol = max(quad.abs_tol, quad.rel_tol * abs(estimate))
        bracketed = abs(estimate - total) <= abs(value) + tol
        if error <= tol and bracketed and \
                _alternating(values[-ALTERNATION:]):
            settled += 1
        else:
            settled = 0
        if settled >= 2:
            log.debug("gil_pelaez_integral converged: " +
                      "panels={} ".format(panel) +
                      "partial={} ".format(total) +
                      "accelerated={} ".format(estimate) +
                      "error={}".format(error))
            return InversionResult(estimate, error, panel)
    else:
        raise ConvergenceError(estimate if sums else 0.0, error,
                               "Gil-Pelaez panel budget of {} exhausted"
                               .format(quad.max_panels))
    return InversionResult(sums[-1] if sums else 0.0, error, panel)


def _clamp(probability):
    return min(max(probability, 0.0), 1.0)


def gil_pelaez_cdf(cf, x, quad=None, full_output=False):
    """
    CDF P[X <= x] from the characteristic function of X.

    For x > 0 the integration variable is normalized by x, i.e. the CDF is
    computed as P[X/x < 1]; for x <= 0 the raw form e^(-jqx) is integrated
    with the panel width taken from the scale of ``cf``.

    :param ~emf_coverage.inversion.CharacteristicFunction cf: φ_X.
    :param float x: Threshold.
    :param ~emf_coverage.inversion.QuadratureConfig quad: Accuracy settings.
    :param bool full_output:
        If ``True``, return an
        :py:class:`~emf_coverage.inversion.InversionResult`.
    :return: Probability clamped to [0, 1].
    :rtype: float
    """
    x = float(x)
    scale = x if x > 0 else cf.scale

    def g(q):
        return cf(q) * np.exp(-1j * q * x)

    integral = gil_pelaez_integral(g, scale, quad, cf.decay_order)
    value = _clamp(0.5 - integral.value / math.pi)
    if full_output:
        return InversionResult(value, integral.error_estimate / math.pi,
                               integral.panels)
    return value


def gil_pelaez_ccdf(cf, x, quad=None, full_output=False):
    """
    Complementary CDF P[X > x] from the characteristic function of X (which
    may take negative values).

    :param ~emf_coverage.inversion.CharacteristicFunction cf: φ_X.
    :param float x: Threshold.
    :param ~emf_coverage.inversion.QuadratureConfig quad: Accuracy settings.
    :param bool full_output: Return an InversionResult if ``True``.
    :rtype: float
    """
    x = float(x)
    scale = cf.scale + abs(x)

    def g(q):
        return cf(q) * np.exp(-1j * q * x)

    integral = gil_pelaez_integral(g, scale, quad, cf.decay_order)
    value = _clamp(0.5 + integral.value / math.pi)
    if full_output:
        return InversionResult(value, integral.error_estimate / math.pi,
                               integral.panels)
    return value


def gil_pelaez_ccdf_shifted(cf_pair, t, sigma2, quad=None, full_output=False):
    """
    P[S > t·(I + σ²)] for independent S and I, given their characteristic
    functions: the CCDF of the SINR S/(I + σ²) at ``t``.

    The characteristic function of S - t·I - t·σ² is
    φ_S(q)·φ_I(-tq)·e^(-jtqσ²) with φ_I(-tq) = conj(φ_I(tq)).

    :param tuple cf_pair:
        ``(cf_signal, cf_interference)``, both
        :py:class:`~emf_coverage.inversion.CharacteristicFunction`.
    :param float t: SINR threshold (linear, > 0).
    :param float sigma2: Noise power [W].
    :param ~emf_coverage.inversion.QuadratureConfig quad: Accuracy settings.
    :param bool full_output: Return an InversionResult if ``True``.
    :rtype: float
    """
    if not t > 0:
        raise DomainError("t", t, "t > 0")
    cf_signal, cf_interference = cf_pair
    t = float(t)
    sigma2 = float(sigma2)

    def difference(q):
        return cf_signal(q) * np.conj(cf_interference(t * q)) * \
            np.exp(-1j * t * q * sigma2)

    scale = cf_signal.scale + t * (cf_interference.scale + sigma2)
    decay = cf_signal.decay_order
    if decay and cf_interference.decay_order:
        decay += cf_interference.decay_order
    cf = CharacteristicFunction(difference, scale, decay_order=decay)
    return gil_pelaez_ccdf(cf, 0.0, quad, full_output)
