# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Motion-invariant metrics of a β-GPP network.

The serving base station is the nearest retained point. With the squared
distances Y_i ~ Gamma(i, c/β) of density f_i, index i serves at squared
distance u with density β·f_i(u)·Υ_i(u), where

    Υ_i(u) = Π_{j≠i} (1 - β·P[r_e² <= Y_j < u])

is the probability that no other point of index j <= N is retained inside
the annulus closer to the user. Retained points beyond τ or within r_e are
not part of the network and never block the serving one. Indices whose
squared distance is almost surely beyond τ² are dropped, see
:py:func:`~emf_coverage.ginibre.index_cutoff`.

Every metric is an integral over u of a quantity conditioned on (i, u);
:py:class:`BgppKernel` tabulates f_i and Υ_i once on the quadrature nodes
of u and turns them into a
:py:class:`~emf_coverage.serving.ServingMixture` for a radio configuration.

β = 0 selects the H-PPP reduction, where the serving squared distance is
exponential with rate c and the interference is a Poisson functional.
"""

from __future__ import absolute_import, division, print_function
from .errors import DomainError, EmptyRegionError
from .ginibre import bgpp_distance_pdf, index_cutoff
from .model import mean_received_power_squared, received_power_integral
from .quadrature import DEFAULT_ORDER, PanelRule, geometric_edges, \
    merge_edges
from .serving import ServingMixture, frechet_bounds, signal_cf  # noqa: F401
from .serving import exposure_quantile as _mixture_quantile
from .serving import joint_isocurve as _mixture_isocurve
from .specfun import bessel_i0_scaled
from scipy import special, stats
import math
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Probability that Y_N lies beyond the end of the serving-distance rule.
SERVING_TAIL = 1e-13

#: Largest acceptable probability (1-β)^N of no retained point among the
#: first N.
TRUNCATION_WARNING = 1e-3

#: Width of the first panel, relative to the correlation length √(β/c).
FIRST_PANEL_FRACTION = 1.0 / 16.0

#: Largest panel width, relative to the correlation length.
MAX_PANEL_FRACTION = 0.5

#: Number of exponential lengths c·(u - r_e²) covered by the dense part of
#: the H-PPP serving rule.
POISSON_SPAN = 36.0

#: Rows per block of the pair-correlation double integral.
BLOCK_ROWS = 256


def exclusive_products(factors, axis=0):
    """
    Products Π_{k≠i} factors[k] along ``axis``, computed with prefix and
    suffix products (factors may be zero).

    :rtype: numpy.ndarray
    """
    factors = np.moveaxis(np.asarray(factors), axis, 0)
    ones = np.ones_like(factors[:1])
    prefix = np.concatenate([ones, np.cumprod(factors[:-1], axis=0)], axis=0)
    suffix = np.concatenate([np.cumprod(factors[:0:-1], axis=0)[::-1], ones],
                            axis=0)
    return np.moveaxis(prefix * suffix, 0, axis)


class BgppKernel(object):
    """
    Precomputed tables of a β-GPP topology in a study annulus.

    Two composite Gauss-Legendre rules in the horizontal distance r are
    built: the serving rule, which covers the distances where one of the
    first N points can serve, and the moment rule, which covers the whole
    annulus with panels narrow enough to resolve the pair correlation
    (length √(β/c)). The densities f_i and the products Υ_i are tabulated on
    both. The kernel depends on the topology only; radio and beamforming
    configurations are passed to :py:meth:`mixture` and the moment
    functions.
    """

    def __init__(self, model, geom, order=DEFAULT_ORDER, resolution=None):
        """
        :param ~emf_coverage.ginibre.BetaGppModel model: Topology.
        :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
        :param int order: Gauss-Legendre nodes per panel.
        :param float resolution:
            Width of the first panel at r_e [m]; defaults to 1/16 of the
            correlation length. Reduce it for antenna heights far below the
            correlation length.
        :raise ~emf_coverage.errors.EmptyRegionError:
            If no point can serve inside the annulus.
        """
        super(BgppKernel, self).__init__()
        self._model = model
        self._geom = geom
        self._order = int(order)
        self._count = model.n_trunc if model.is_poisson else \
            min(model.n_trunc, index_cutoff(model, geom.tau))
        if not model.is_poisson and self._count == model.n_trunc and \
                model.truncated_mass > TRUNCATION_WARNING:
            log.warning("BgppKernel truncation N={} leaves probability {:.2e} "
                        "of no retained point for beta={}; increase N".format(
                            model.n_trunc, model.truncated_mass, model.beta))
        length = 1.0 / math.sqrt(model.rate)
        self._first_width = FIRST_PANEL_FRACTION * length \
            if resolution is None else float(resolution)
        self._max_width = MAX_PANEL_FRACTION * length
        r_e, tau = geom.r_e, geom.tau
        if model.is_poisson:
            reach = math.sqrt(r_e ** 2 + POISSON_SPAN / model.c)
        else:
            reach = math.sqrt(stats.gamma.isf(SERVING_TAIL, self._count,
                                              scale=1.0 / model.rate))
        reach = min(reach, tau)
        if reach <= r_e:
            reach = tau
        self._reach = reach
        edges = geometric_edges(r_e, reach, self._first_width,
                                self._max_width)
        if model.is_poisson and reach < tau:
            # the interference of the H-PPP extends to τ
            edges = merge_edges(edges, geometric_edges(
                reach, tau, self._max_width, max(self._max_width, tau / 8.0)))
        self._serving_rule = PanelRule(edges, self._order)
        self._moment_rule = None
        self._moment_tables = None
        self._serving_tables = self._tables(self._serving_rule)
        self._mass = self._serving_mass()
        log.debug("BgppKernel built: " +
                  "model={!r} ".format(model) +
                  "reach={} ".format(reach) +
                  "count={} ".format(self._count) +
                  "serving_nodes={} ".format(self._serving_rule.size) +
                  "mass={}".format(self._mass))

    @property
    def model(self):
        """
        Topology.

        :type: ~emf_coverage.ginibre.BetaGppModel
        """
        return self._model

    @property
    def geom(self):
        """
        Study annulus.

        :type: ~emf_coverage.model.GeometryConfig
        """
        return self._geom

    @property
    def count(self):
        """
        Number of indices tabulated: N, or fewer when the squared distances
        of the higher indices are almost surely beyond τ².

        :type: int
        """
        return self._count

    @property
    def reach(self):
        """
        Largest serving distance resolved by the serving rule [m].

        :type: float
        """
        return self._reach

    @property
    def mass(self):
        """
        Probability that a point of index <= N serves inside the annulus
        (one for the H-PPP, which is normalized exactly).

        :type: float
        """
        return self._mass

    @property
    def serving_rule(self):
        """
        :type: ~emf_coverage.quadrature.PanelRule
        """
        return self._serving_rule

    @property
    def moment_rule(self):
        """
        Rule over the whole annulus used by the exposure moments, built on
        first use.

        :type: ~emf_coverage.quadrature.PanelRule
        """
        if self._moment_rule is None:
            geom = self._geom
            self._moment_rule = PanelRule(
                geometric_edges(geom.r_e, geom.tau, self._first_width,
                                self._max_width), self._order)
            self._moment_tables = self._tables(self._moment_rule)
            log.debug("BgppKernel moment rule built: " +
                      "nodes={}".format(self._moment_rule.size))
        return self._moment_rule

    def rule_beyond(self, start):
        """
        Rule from the distance ``start`` to the end of the region where
        interferers matter (τ for the H-PPP, :py:attr:`reach` otherwise);
        ``None`` if that region is empty.

        :param float start: Lower end [m].
        :rtype: ~emf_coverage.quadrature.PanelRule
        """
        upper = self._geom.tau if self._model.is_poisson else self._reach
        if start >= upper:
            return None
        return PanelRule(geometric_edges(start, upper, self._first_width,
                                         self._max_width), self._order)

    def serving_factors(self, u):
        """
        Factors 1 - β·P[r_e² <= Y_j < u] for j = 1..:py:attr:`count`, stacked
        along a new first axis.

        :param u: Squared distance(s) [m²].
        :rtype: numpy.ndarray
        """
        model = self._model
        u = np.asarray(u, dtype=float)
        index = np.arange(1, self._count + 1, dtype=float).reshape(
            (-1,) + (1,) * u.ndim)
        closer = special.gammainc(index, model.rate * u) - \
            special.gammainc(index, model.rate * self._geom.r_e ** 2)
        return 1.0 - model.beta * np.clip(closer, 0.0, 1.0)

    def _tables(self, rule):
        if self._model.is_poisson:
            return None
        u = rule.nodes ** 2
        index = np.arange(1, self._count + 1)
        pdf = bgpp_distance_pdf(index[:, None], u[None, :], self._model)
        factors = self.serving_factors(u)
        return pdf, factors, exclusive_products(factors, axis=0)

    def _serving_mass(self):
        rule = self._serving_rule
        if self._model.is_poisson:
            return 1.0
        pdf, _, upsilon = self._serving_tables
        mass = self._model.beta * float(rule.integrate(
            np.sum(pdf * upsilon, axis=0) * 2.0 * rule.nodes))
        if not mass > 1e-12:
            raise EmptyRegionError(self._geom.r_e, self._geom.tau)
        return mass

    def tables(self, moments=False):
        """
        Tables ``(pdf, factors, upsilon)`` of shape (N, nodes) on the serving
        rule (or the moment rule); ``None`` for the H-PPP.

        :rtype: tuple
        """
        if moments:
            self.moment_rule
            return self._moment_tables
        return self._serving_tables

    def serving_density(self):
        """
        Probability weight of every serving-rule node, normalized to one,
        and per serving index for the β-GPP.

        :return: Tuple ``(weights, per_index)``; ``per_index`` has shape
            (N, nodes) and is ``None`` for the H-PPP.
        :rtype: tuple
        """
        rule = self._serving_rule
        r = rule.nodes
        model = self._model
        if model.is_poisson:
            r_e2 = self._geom.r_e ** 2
            span = self._geom.tau ** 2 - r_e2
            density = model.c * np.exp(-model.c * (r * r - r_e2)) / \
                -math.expm1(-model.c * span)
            return rule.weights * 2.0 * r * density, None
        pdf, _, upsilon = self._serving_tables
        per_index = model.beta * pdf * upsilon * \
            (rule.weights * 2.0 * r)[None, :] / self._mass
        return np.sum(per_index, axis=0), per_index

    def mixture(self, radio, bf):
        """
        Serving mixture of the network for a radio configuration.

        :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
        :param ~emf_coverage.model.BeamformingConfig bf: Antenna model.
        :rtype: ~emf_coverage.serving.ServingMixture
        """
        rule = self._serving_rule
        model = self._model
        r = rule.nodes
        u = r * r
        two_r = 2.0 * r
        power = mean_received_power_squared(u, radio)
        m = radio.m
        p_g = bf.p_g
        tau2 = self._geom.tau ** 2
        weights, per_index = self.serving_density()
        if model.is_poisson:
            interference = p_g * model.c * \
                received_power_integral(u, tau2, radio)

            def weighted_cf(q):
                load = signal_cf(q[:, None], power[None, :], m) - 1.0
                exponent = p_g * model.c * rule.tail(load * two_r, axis=1)
                return weights[None, :] * np.exp(exponent)

            return ServingMixture(power, weights, weighted_cf, m,
                                  interference, distances=r)
        beta = model.beta
        pdf, factors, _ = self._serving_tables
        own = beta * rule.tail(pdf * (power * two_r)[None, :], axis=1)
        per_index_mean = p_g * (model.c * received_power_integral(
            u, tau2, radio)[None, :] - own)
        with np.errstate(divide='ignore', invalid='ignore'):
            interference = np.where(
                weights > 0, np.sum(per_index * per_index_mean, axis=0) /
                weights, 0.0)
        scale = beta * rule.weights * two_r / self._mass
        weighted_pdf = pdf * two_r[None, :]

        def weighted_cf(q):
            load = signal_cf(q[:, None, None], power[None, None, :], m) - 1.0
            tails = rule.tail(weighted_pdf[None] * load, axis=-1)
            numerators = factors[None] + beta * p_g * tails
            others = exclusive_products(numerators, axis=1)
            return scale[None, :] * np.sum(pdf[None] * others, axis=1)

        return ServingMixture(power, weights, weighted_cf, m, interference,
                              distances=r)

    def repulsion(self, radio):
        """
        Pair-correlation integral

            K(u) = ∬_{[u, τ²]²} e^(-c(v+w)/β)·I₀(2c√(vw)/β)·P̄(v)·P̄(w) dv dw

        at every moment-rule node, and K(r_e²). Computed as
        2·∫_u P̄(v)·J(v) dv with J(v) = ∫_v^{τ²} of the kernel, blockwise so
        that memory stays linear in the node count.

        :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
        :return: Tuple ``(k_nodes, k_total)``.
        :rtype: tuple
        """
        rule = self.moment_rule
        r = rule.nodes
        rate = self._model.rate
        weighted = mean_received_power_squared(r * r, radio) * 2.0 * r
        inner = np.empty(r.size)
        for start in range(0, r.size, BLOCK_ROWS):
            stop = min(start + BLOCK_ROWS, r.size)
            rows = r[start:stop, None]
            block = bessel_i0_scaled(2.0 * rate * rows * r[None, :]) * \
                np.exp(-rate * (rows - r[None, :]) ** 2) * weighted[None, :]
            tails = rule.tail(block, axis=1)
            local = np.arange(stop - start)
            inner[start:stop] = tails[local, start + local]
        outer = inner * weighted
        return 2.0 * rule.tail(outer), 2.0 * float(rule.integrate(outer))

    def __repr__(self):
        return "BgppKernel(model={!r}, geom={!r})".format(self._model,
                                                          self._geom)


def upsilon(i, u, kernel):
    """
    Probability Υ_i(u) that no point of index j != i is retained inside the
    annulus closer than √u.

    :param int i: Serving index, 1 <= i <= kernel.count.
    :param u: Squared distance(s) [m²] in [r_e², τ²].
    :param ~emf_coverage.bgpp_analytics.BgppKernel kernel: Tables.
    :rtype: float or numpy.ndarray
    """
    _check_index(i, kernel)
    u = _check_squared(u, kernel.geom)
    if kernel.model.is_poisson:
        return np.ones(u.shape)[()]
    return exclusive_products(kernel.serving_factors(u), axis=0)[i - 1][()]


def omega_kernels(u, v, w, kernel):
    """
    Kernels Ω(u) = Σ f_i(u)·Υ_i(u), Ω*(u, v) = Σ f_i(u)·f_i(v)·Υ_i(u) and
    Ω**(u, v, w) = Σ f_i(u)·f_i(v)·f_i(w)·Υ_i(u), truncated at i <= N.

    :param u: Serving squared distance(s) [m²].
    :param v: Second squared distance(s) [m²].
    :param w: Third squared distance(s) [m²].
    :param ~emf_coverage.bgpp_analytics.BgppKernel kernel: Tables.
    :return: Tuple ``(omega, omega_star, omega_star2)``.
    :rtype: tuple
    """
    model = kernel.model
    if model.is_poisson:
        raise DomainError("beta", model.beta, "beta > 0")
    u, v, w = np.broadcast_arrays(_check_squared(u, kernel.geom),
                                  _check_squared(v, kernel.geom),
                                  _check_squared(w, kernel.geom))
    index = np.arange(1, kernel.count + 1).reshape((-1,) + (1,) * u.ndim)
    f_u = bgpp_distance_pdf(index, u, model)
    f_v = bgpp_distance_pdf(index, v, model)
    f_w = bgpp_distance_pdf(index, w, model)
    weighted = f_u * exclusive_products(kernel.serving_factors(u), axis=0)
    return (np.sum(weighted, axis=0)[()],
            np.sum(weighted * f_v, axis=0)[()],
            np.sum(weighted * f_v * f_w, axis=0)[()])


def _check_index(i, kernel):
    if isinstance(i, bool) or not 1 <= int(i) <= kernel.count or \
            int(i) != i:
        raise DomainError("i", i, "integer 1 <= i <= {}".format(
            kernel.count))


def _check_squared(u, geom):
    u = np.asarray(u, dtype=float)
    tol = 1e-12 * geom.tau ** 2
    if np.any(u < geom.r_e ** 2 - tol) or np.any(u > geom.tau ** 2 + tol):
        raise DomainError("u", u, "r_e^2 <= u <= tau^2")
    return u


def _exposure_moments(kernel, radio, bf, second):
    """
    Mean and (optionally) second moment of the exposure with beamforming.
    Realizations without a base station in the annulus contribute zero.
    """
    model = kernel.model
    geom = kernel.geom
    p_g = bf.p_g
    fade = (radio.m + 1.0) / radio.m
    tau2 = geom.tau ** 2
    c = model.c
    if model.is_poisson:
        rule = kernel.serving_rule
        r = rule.nodes
        u = r * r
        density = rule.weights * 2.0 * r * c * \
            np.exp(-c * (u - geom.r_e ** 2))
        power = mean_received_power_squared(u, radio)
        interference = p_g * c * received_power_integral(u, tau2, radio)
        mean = float(np.sum(density * (power + interference)))
        if not second:
            return mean, None
        squared = p_g * fade * c * received_power_integral(u, tau2, radio, 2)
        inner = fade * power ** 2 + 2.0 * power * interference + squared + \
            interference ** 2
        return mean, float(np.sum(density * inner))
    rule = kernel.moment_rule
    pdf, _, upsilon_table = kernel.tables(moments=True)
    r = rule.nodes
    u = r * r
    two_r = 2.0 * r
    beta = model.beta
    power = mean_received_power_squared(u, radio)
    density = beta * pdf * upsilon_table * two_r[None, :]
    closed = c * received_power_integral(u, tau2, radio)
    own = beta * rule.tail(pdf * (power * two_r)[None, :], axis=1)
    interference = p_g * (closed[None, :] - own)
    mean = float(rule.integrate(np.sum(density * (power + interference),
                                       axis=0)))
    if not second:
        return mean, None
    own_squared = beta * rule.tail(pdf * (power ** 2 * two_r)[None, :],
                                   axis=1)
    squared = p_g * fade * (c * received_power_integral(u, tau2, radio, 2)
                            [None, :] - own_squared)
    repulsion = kernel.repulsion(radio)[0]
    inner = fade * power ** 2 + 2.0 * power * interference + squared + \
        interference ** 2 - (p_g * c) ** 2 * repulsion + (p_g * own) ** 2
    second_moment = float(rule.integrate(np.sum(density * inner, axis=0)))
    log.debug("BGPP exposure moments: " +
              "beta={} ".format(beta) +
              "p_g={} ".format(p_g) +
              "mean={} ".format(mean) +
              "second={}".format(second_moment))
    return mean, second_moment


def mean_exposure(kernel, radio, bf):
    """
    Mean exposure E[𝒫] = E[S₀ + I₀] [W] with dynamic beamforming.

    :param ~emf_coverage.bgpp_analytics.BgppKernel kernel: Tables.
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :param ~emf_coverage.model.BeamformingConfig bf: Antenna model.
    :rtype: float
    """
    return _exposure_moments(kernel, radio, bf, second=False)[0]


def second_moment_exposure(kernel, radio, bf):
    """
    Second moment E[𝒫²] [W²] with dynamic beamforming. The pair correlation
    of the retained points enters through :py:meth:`BgppKernel.repulsion`.

    :param ~emf_coverage.bgpp_analytics.BgppKernel kernel: Tables.
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :param ~emf_coverage.model.BeamformingConfig bf: Antenna model.
    :rtype: float
    """
    return _exposure_moments(kernel, radio, bf, second=True)[1]


def variance_exposure(kernel, radio, bf):
    """
    Variance of the exposure [W²].

    :rtype: float
    """
    mean, second = _exposure_moments(kernel, radio, bf, second=True)
    return second - mean ** 2


def mean_exposure_nobf(model, geom, radio):
    """
    Mean exposure without beamforming, c·∫ P̄ over the annulus; independent
    of β.

    :param ~emf_coverage.ginibre.BetaGppModel model: Topology.
    :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :rtype: float
    """
    return model.c * float(received_power_integral(
        geom.r_e ** 2, geom.tau ** 2, radio))


def second_moment_nobf(model, geom, radio, kernel=None):
    """
    Second moment without beamforming:
    (m+1)/m·c·∫P̄² + (c·∫P̄)² - c²·K(r_e²).

    :param ~emf_coverage.ginibre.BetaGppModel model: Topology.
    :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :param ~emf_coverage.bgpp_analytics.BgppKernel kernel:
        Tables of the same topology, built if omitted.
    :rtype: float
    """
    bounds = (geom.r_e ** 2, geom.tau ** 2)
    fade = (radio.m + 1.0) / radio.m
    first = fade * model.c * float(received_power_integral(
        bounds[0], bounds[1], radio, 2))
    mean = mean_exposure_nobf(model, geom, radio)
    if model.is_poisson:
        return first + mean ** 2
    kernel = kernel or BgppKernel(model, geom)
    return first + mean ** 2 - model.c ** 2 * kernel.repulsion(radio)[1]


def cf_interference(i, u, q, kernel, radio, bf):
    """
    Characteristic function of the interference given that index ``i``
    serves at squared distance ``u``:

        Π_{k≠i} [1 - β + β·∫_u^{τ²} f_k·(p_g·L + 1 - p_g) dv] / Υ_i(u),

    L(v) = (1 - jqP̄(v)/m)^(-m). The H-PPP reduction ignores ``i``.

    :param int i: Serving index.
    :param float u: Serving squared distance [m²].
    :param q: Frequencies [1/W].
    :param ~emf_coverage.bgpp_analytics.BgppKernel kernel: Tables.
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :param ~emf_coverage.model.BeamformingConfig bf: Antenna model.
    :rtype: numpy.ndarray
    """
    model = kernel.model
    _check_index(i, kernel)
    u = float(_check_squared(u, kernel.geom))
    q = np.atleast_1d(np.asarray(q, dtype=float))
    rule = kernel.rule_beyond(math.sqrt(u))
    if rule is None:
        return np.ones(q.shape, dtype=complex)
    r = rule.nodes
    power = mean_received_power_squared(r * r, radio)
    load = (signal_cf(q[:, None], power[None, :], radio.m) - 1.0) * \
        (2.0 * r)[None, :]
    if model.is_poisson:
        return np.exp(bf.p_g * model.c * rule.integrate(load, axis=1))
    index = np.arange(1, kernel.count + 1)
    pdf = bgpp_distance_pdf(index[:, None], (r * r)[None, :], model)
    factors = kernel.serving_factors(u)
    numerators = factors[None, :] + model.beta * bf.p_g * \
        rule.integrate(pdf[None, :, :] * load[:, None, :], axis=2)
    serving = float(np.prod(np.delete(factors, i - 1)))
    if not serving > 0:
        raise DomainError("u", u, "index {} can serve at u".format(i))
    return np.prod(np.delete(numerators, i - 1, axis=1), axis=1) / serving


def _noise(radio, sigma2):
    return radio.noise_power if sigma2 is None else float(sigma2)


def cdf_exposure(t_prime, kernel, radio, bf, quad=None, full_output=False):
    """
    CDF P[𝒫 <= T'] of the exposure, conditioned on a serving base station
    in the annulus.

    :param float t_prime: Exposure threshold [W].
    :param ~emf_coverage.bgpp_analytics.BgppKernel kernel: Tables.
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :param ~emf_coverage.model.BeamformingConfig bf: Antenna model.
    :param ~emf_coverage.inversion.QuadratureConfig quad: Accuracy settings.
    :param bool full_output: Return an InversionResult if ``True``.
    :rtype: float
    """
    return kernel.mixture(radio, bf).cdf_exposure(t_prime, quad, full_output)


def ccdf_sinr(t, kernel, radio, bf, sigma2=None, quad=None,
              full_output=False):
    """
    Coverage probability P[SINR > t].

    :param float t: SINR threshold (linear).
    :param float sigma2: Noise power [W]; defaults to the radio's thermal
        noise.
    :rtype: float
    """
    return kernel.mixture(radio, bf).ccdf_sinr(t, _noise(radio, sigma2), quad,
                                               full_output)


def joint_cdf(t, t_prime, kernel, radio, bf, sigma2=None, quad=None,
              full_output=False):
    """
    Joint probability P[SINR > t, 𝒫 <= T'].

    :param float t: SINR threshold (linear).
    :param float t_prime: Exposure threshold [W].
    :param float sigma2: Noise power [W]; defaults to the radio's thermal
        noise.
    :rtype: float
    """
    return kernel.mixture(radio, bf).joint_cdf(
        t, t_prime, _noise(radio, sigma2), quad, full_output)


def exposure_quantile(p, kernel, radio, bf, quad=None):
    """
    Exposure level [W] not exceeded with probability ``p``.

    :rtype: float
    """
    return _mixture_quantile(kernel.mixture(radio, bf), p, quad)


def joint_isocurve(p, t_grid, kernel, radio, bf, sigma2=None, quad=None):
    """
    Exposure thresholds T' with P[SINR > t, 𝒫 <= T'] = p for every t of
    ``t_grid``.

    :rtype: numpy.ndarray
    """
    return _mixture_isocurve(kernel.mixture(radio, bf), p, t_grid,
                             _noise(radio, sigma2), quad)


def mean_serving_distance(kernel):
    """
    Mean distance E[R₀] to the serving base station [m].

    :param ~emf_coverage.bgpp_analytics.BgppKernel kernel: Tables.
    :rtype: float
    """
    weights, _ = kernel.serving_density()
    return float(np.dot(weights, kernel.serving_rule.nodes))
