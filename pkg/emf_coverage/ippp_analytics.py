# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Motion-variant metrics of a radial I-PPP network, seen from the user at the
origin of the (recentered) density model.

Conditioned on the nearest base station at distance r₀, the interferers form
a Poisson process on (r₀, τ] with intensity derivative Λ', so the
interference characteristic function is

    φ_I(q | r₀) = exp(p_g·∫_{r₀}^{τ} Λ'(r)·(L(q, r) - 1) dr),

L(q, r) = (1 - jqP̄(r)/m)^(-m). The b̃ and d̃ terms of Λ' have closed-form
antiderivatives against L in terms of ₂F₁; the ã and c̃ terms carry complete
elliptic integrals and are integrated numerically on panels graded toward
their logarithmic singularity at r = ρ̃.
"""

from __future__ import absolute_import, division, print_function
from .errors import DomainError, EmptyRegionError, NormalizationError
from .ginibre import BetaGppModel
from .inversion import CharacteristicFunction, InversionResult, \
    gil_pelaez_cdf
from .model import kappa, mean_received_power
from .quadrature import DEFAULT_ORDER, PanelRule, geometric_edges, \
    graded_edges, merge_edges, tanh_sinh
from .radial_density import elliptic_part_derivative, intensity_derivative, \
    intensity_measure, validate_density
from .serving import ServingMixture, frechet_bounds, signal_cf  # noqa: F401
from .serving import exposure_quantile as _mixture_quantile
from .serving import joint_isocurve as _mixture_isocurve
from .specfun import gauss_2f1_imag
import math
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Methods of the interference CF exponent.
METHODS = ("hypergeometric", "quadrature")

#: Radius of the disk averaged by the local H-PPP approximation [m].
DEFAULT_LOCAL_RADIUS = 150.0

#: Drift of ∫f_R₀ from one that is logged.
NORMALIZATION_WARNING = 1e-8

#: Drift of ∫f_R₀ from one that is an error.
NORMALIZATION_ERROR = 1e-4

#: Width of the panels touching ρ̃, relative to τ.
GRADED_FRACTION = 1e-4

#: Density samples used to size the panels.
PROFILE_SAMPLES = 257


def _max_panel_width(model, geom, radio):
    lower = max(abs(model.rho_t - geom.tau), radio.z)
    upper = model.rho_t + geom.tau
    profile = np.abs(model.profile(np.linspace(lower, max(upper, lower),
                                               PROFILE_SAMPLES)))
    peak = float(np.max(profile))
    width = geom.tau / 16.0
    if peak > 0:
        width = min(width, 0.5 / math.sqrt(peak))
    return width


def radial_rule(start, model, geom, radio, order=DEFAULT_ORDER):
    """
    Panel rule on [start, τ] graded toward ρ̃ and toward ``start`` (the
    path gain varies on the scale of the antenna height there).

    :param float start: Lower end [m], below τ.
    :rtype: ~emf_coverage.quadrature.PanelRule
    """
    tau = geom.tau
    width = _max_panel_width(model, geom, radio)
    edges = merge_edges(
        graded_edges(start, tau, model.rho_t, GRADED_FRACTION * tau, width),
        geometric_edges(start, tau, 0.25 * radio.z, width))
    return PanelRule(edges, order)


def _closed_antiderivative(q, s, model, radio):
    """
    π·[(B - d̃z²)·(G₀(s) - s) + d̃·(G₁(s) - s²/2)], the antiderivative in
    s = r² + z² of the b̃/d̃ terms of Λ' times (L - 1), with B = b̃ + d̃ρ̃² and
    G_p(s) = s^(p+1)/(p+1)·₂F₁(m, μ; μ+1; jqP̄(s)/m), μ = -2(p+1)/α.

    :param q: Frequencies, shape (k,).
    :param s: Points, shape (n,).
    :return: Array of shape (k, n).
    """
    alpha = radio.alpha
    m = radio.m
    amplitude = radio.pt_gmax / kappa(radio)
    argument = 1j * q[:, None] * amplitude * s[None, :] ** (-0.5 * alpha) / m
    coefficient = model.b_t + model.d_t * (model.rho_t ** 2 - radio.z ** 2)
    out = np.zeros(argument.shape, dtype=complex)
    if coefficient != 0:
        mu = -2.0 / alpha
        out = out + coefficient * s[None, :] * \
            (gauss_2f1_imag(m, mu, mu + 1.0, argument) - 1.0)
    if model.d_t != 0:
        mu = -4.0 / alpha
        out = out + model.d_t * 0.5 * s[None, :] ** 2 * \
            (gauss_2f1_imag(m, mu, mu + 1.0, argument) - 1.0)
    return math.pi * out


class MvStudy(object):
    """
    Motion-variant study: a density model seen from the evaluated user, the
    study annulus and the radio configuration.

    Construction tabulates the nearest base station density f_R₀ on a panel
    rule over [r_e, τ] and checks its normalization. Density-constraint
    violations are logged and kept on :py:attr:`violations`; they do not
    prevent the evaluation.
    """

    def __init__(self, model, geom, radio, bf, quad=None,
                 method="hypergeometric", order=DEFAULT_ORDER):
        """
        :param ~emf_coverage.radial_density.IpppModel model:
            Density model, already recentered to the user.
        :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
        :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
        :param ~emf_coverage.model.BeamformingConfig bf: Antenna model.
        :param ~emf_coverage.inversion.QuadratureConfig quad:
            Default accuracy of the inversions.
        :param str method:
            ``"hypergeometric"`` evaluates the b̃/d̃ part of the CF exponent
            through ₂F₁, ``"quadrature"`` integrates all of Λ' numerically
            (faster, used for maps).
        :raise ~emf_coverage.errors.EmptyRegionError:
            If the annulus holds no base station on average.
        :raise ~emf_coverage.errors.NormalizationError:
            If f_R₀ does not integrate to one within 1e-4.
        """
        super(MvStudy, self).__init__()
        if method not in METHODS:
            raise DomainError("method", method, "one of {}".format(METHODS))
        if method == "hypergeometric" and model.d_t != 0 and \
                abs(1.0 - 4.0 / radio.alpha) < 1e-9:
            # the d̃ antiderivative degenerates to a logarithm at alpha = 4
            log.debug("MvStudy falls back to quadrature at alpha=4")
            method = "quadrature"
        self._model = model
        self._geom = geom
        self._radio = radio
        self._bf = bf
        self._quad = quad
        self._method = method
        self._violations = validate_density(model, geom.tau, geom.r_e)
        for violation in self._violations:
            log.warning("MvStudy density violates the {} constraint for "
                        "delta in [{:.1f}, {:.1f}] m".format(
                            violation.kind, violation.delta_min,
                            violation.delta_max))
        self._rule = radial_rule(geom.r_e, model, geom, radio, order)
        r = self._rule.nodes
        self._derivative = intensity_derivative(r, model)
        self._measure = self._rule.head(self._derivative)
        self._mass = float(intensity_measure(geom.tau, model) -
                           intensity_measure(geom.r_e, model))
        if not self._mass > 1e-12:
            raise EmptyRegionError(geom.r_e, geom.tau)
        self._pdf = self._derivative * np.exp(-self._measure) / \
            -math.expm1(-self._mass)
        total = float(self._rule.integrate(self._pdf))
        drift = abs(total - 1.0)
        if drift > NORMALIZATION_ERROR:
            raise NormalizationError(total, NORMALIZATION_ERROR)
        if drift > NORMALIZATION_WARNING:
            log.warning("MvStudy nearest-BS density integrates to {!r}"
                        .format(total))
        self._power = mean_received_power(r, radio)
        self._mixture = None
        log.debug("MvStudy built: " +
                  "model={!r} ".format(model) +
                  "nodes={} ".format(r.size) +
                  "mass={} ".format(self._mass) +
                  "normalization={}".format(total))

    @property
    def model(self):
        """
        :type: ~emf_coverage.radial_density.IpppModel
        """
        return self._model

    @property
    def geom(self):
        """
        :type: ~emf_coverage.model.GeometryConfig
        """
        return self._geom

    @property
    def radio(self):
        """
        :type: ~emf_coverage.model.RadioConfig
        """
        return self._radio

    @property
    def bf(self):
        """
        :type: ~emf_coverage.model.BeamformingConfig
        """
        return self._bf

    @property
    def quad(self):
        """
        Default accuracy settings of the inversions (``None`` for the
        library default).

        :type: ~emf_coverage.inversion.QuadratureConfig
        """
        return self._quad

    @property
    def method(self):
        """
        Evaluation method of the CF exponent.

        :type: str
        """
        return self._method

    @property
    def violations(self):
        """
        Density-constraint violations found at construction.

        :type: list
        """
        return self._violations

    @property
    def mass(self):
        """
        Expected number of base stations Λ(τ) - Λ(r_e) in the annulus.

        :type: float
        """
        return self._mass

    @property
    def rule(self):
        """
        :type: ~emf_coverage.quadrature.PanelRule
        """
        return self._rule

    @property
    def serving_pdf(self):
        """
        f_R₀ at the rule nodes.

        :type: numpy.ndarray
        """
        return self._pdf

    def replace(self, **changes):
        """
        Returns a study with some of ``model``, ``geom``, ``radio``, ``bf``,
        ``quad`` and ``method`` replaced.

        :rtype: ~emf_coverage.ippp_analytics.MvStudy
        """
        fields = dict(model=self._model, geom=self._geom, radio=self._radio,
                      bf=self._bf, quad=self._quad, method=self._method)
        fields.update(changes)
        return MvStudy(**fields)

    def _quad_or_default(self, quad):
        return self._quad if quad is None else quad

    def cf_exponent(self, q, p_g=None):
        """
        ∫_{r}^{τ} Λ'·(L - 1) for every rule node r, times p_g.

        :param q: Frequencies, shape (k,).
        :param float p_g: Illumination probability; defaults to the
            study's.
        :return: Array of shape (k, nodes).
        """
        q = np.atleast_1d(np.asarray(q, dtype=float))
        p_g = self._bf.p_g if p_g is None else p_g
        rule = self._rule
        load = signal_cf(q[:, None], self._power[None, :], self._radio.m) - \
            1.0
        if self._method == "quadrature":
            return p_g * rule.tail(self._derivative[None, :] * load, axis=1)
        elliptic = elliptic_part_derivative(rule.nodes, self._model)
        z2 = self._radio.z ** 2
        s_nodes = rule.nodes ** 2 + z2
        s_end = np.array([self._geom.tau ** 2 + z2])
        closed = _closed_antiderivative(q, s_end, self._model, self._radio) - \
            _closed_antiderivative(q, s_nodes, self._model, self._radio)
        return p_g * (rule.tail(elliptic[None, :] * load, axis=1) + closed)

    def total_exponent(self, q, p_g=None):
        """
        ∫_{r_e}^{τ} Λ'·(L - 1), times p_g: the exponent of the
        characteristic function of the total exposure without conditioning.

        :param q: Frequencies, shape (k,).
        :rtype: numpy.ndarray
        """
        q = np.atleast_1d(np.asarray(q, dtype=float))
        p_g = self._bf.p_g if p_g is None else p_g
        rule = self._rule
        load = signal_cf(q[:, None], self._power[None, :], self._radio.m) - \
            1.0
        if self._method == "quadrature":
            return p_g * rule.integrate(self._derivative[None, :] * load,
                                        axis=1)
        elliptic = elliptic_part_derivative(rule.nodes, self._model)
        z2 = self._radio.z ** 2
        bounds = np.array([self._geom.r_e ** 2 + z2,
                           self._geom.tau ** 2 + z2])
        closed = _closed_antiderivative(q, bounds, self._model, self._radio)
        return p_g * (rule.integrate(elliptic[None, :] * load, axis=1) +
                      closed[:, 1] - closed[:, 0])

    def mixture(self):
        """
        Serving mixture over the rule nodes, built on first use.

        :rtype: ~emf_coverage.serving.ServingMixture
        """
        if self._mixture is None:
            rule = self._rule
            weights = rule.weights * self._pdf
            interference = self._bf.p_g * rule.tail(self._power *
                                                    self._derivative)

            def weighted_cf(q):
                return weights[None, :] * np.exp(self.cf_exponent(q))

            self._mixture = ServingMixture(self._power, weights, weighted_cf,
                                           self._radio.m, interference,
                                           distances=rule.nodes)
        return self._mixture

    def __repr__(self):
        return "MvStudy(model={!r}, geom={!r}, method={!r})".format(
            self._model, self._geom, self._method)


def _check_distance(r0, geom):
    r0 = np.asarray(r0, dtype=float)
    if np.any(r0 < geom.r_e) or np.any(r0 > geom.tau):
        raise DomainError("r0", r0, "r_e <= r0 <= tau")
    return r0


def _closed_mean(s_lower, s_upper, model, radio):
    """
    ∫ of the b̃/d̃ terms of Λ' times P̄ between s_lower and s_upper.
    """
    alpha = radio.alpha
    amplitude = radio.pt_gmax / kappa(radio)
    coefficient = model.b_t + model.d_t * (model.rho_t ** 2 - radio.z ** 2)

    def bracket(exponent):
        if abs(exponent) < 1e-12:
            return math.log(s_upper / s_lower)
        return (s_upper ** exponent - s_lower ** exponent) / exponent

    return math.pi * amplitude * (coefficient * bracket(1.0 - 0.5 * alpha) +
                                  model.d_t * bracket(2.0 - 0.5 * alpha))


def mean_interference_power(r0, study):
    """
    Mean interference P̄_I(r₀) = p_g·∫_{r₀}^{τ} P̄·Λ' dr given the nearest
    base station at ``r0``: closed form for the b̃ and d̃ terms, tanh-sinh
    quadrature for the ã and c̃ terms, split at ρ̃.

    :param r0: Serving distance(s) [m] in [r_e, τ].
    :param ~emf_coverage.ippp_analytics.MvStudy study: Study.
    :rtype: float or numpy.ndarray
    """
    r0 = _check_distance(r0, study.geom)
    model, radio, tau = study.model, study.radio, study.geom.tau
    z2 = radio.z ** 2
    out = np.empty(r0.shape)
    flat = out.reshape(-1)
    for index, start in enumerate(r0.reshape(-1)):
        start = float(start)
        if start >= tau:
            flat[index] = 0.0
            continue
        value = _closed_mean(start ** 2 + z2, tau ** 2 + z2, model, radio)
        if model.a_t != 0 or model.c_t != 0:
            def integrand(r):
                return mean_received_power(r, radio) * \
                    elliptic_part_derivative(r, model)

            tol = 1e-12 * float(mean_received_power(start, radio))
            pieces = [start, tau]
            if start < model.rho_t < tau:
                pieces.insert(1, model.rho_t)
            for lower, upper in zip(pieces[:-1], pieces[1:]):
                value += tanh_sinh(integrand, lower, upper, abs_tol=tol,
                                   rel_tol=1e-10)[0]
        flat[index] = study.bf.p_g * value
    return out[()]


def _moments(study, second):
    rule = study.rule
    weights = rule.weights * study.serving_pdf
    power = mean_received_power(rule.nodes, study.radio)
    derivative = intensity_derivative(rule.nodes, study.model)
    p_g = study.bf.p_g
    interference = p_g * rule.tail(power * derivative)
    mean = float(np.dot(weights, power + interference))
    if not second:
        return mean, None
    fade = (study.radio.m + 1.0) / study.radio.m
    interference_squared = p_g * fade * rule.tail(power ** 2 * derivative) + \
        interference ** 2
    second_moment = float(np.dot(weights, fade * power ** 2 +
                                 2.0 * power * interference +
                                 interference_squared))
    log.debug("MV exposure moments: " +
              "mean={} ".format(mean) +
              "second={}".format(second_moment))
    return mean, second_moment


def mean_exposure(study):
    """
    Mean exposure ∫ (P̄(r₀) + P̄_I(r₀))·f_R₀(r₀) dr₀ [W], conditioned on at
    least one base station in the annulus.

    :param ~emf_coverage.ippp_analytics.MvStudy study: Study.
    :rtype: float
    """
    return _moments(study, second=False)[0]


def second_moment_exposure(study):
    """
    Second moment of the exposure [W²], with the conditional interference
    second moment p_g·(m+1)/m·∫P̄²Λ' + P̄_I².

    :param ~emf_coverage.ippp_analytics.MvStudy study: Study.
    :rtype: float
    """
    return _moments(study, second=True)[1]


def variance_exposure(study):
    """
    Variance of the exposure [W²].

    :rtype: float
    """
    mean, second = _moments(study, second=True)
    return second - mean ** 2


def cf_interference(q, r0, study):
    """
    Characteristic function of the interference given the nearest base
    station at ``r0``, at the frequencies ``q``.

    :param q: Frequencies [1/W].
    :param float r0: Serving distance [m] in [r_e, τ].
    :param ~emf_coverage.ippp_analytics.MvStudy study: Study.
    :rtype: numpy.ndarray
    """
    r0 = float(_check_distance(r0, study.geom))
    q = np.atleast_1d(np.asarray(q, dtype=float))
    model, radio, geom = study.model, study.radio, study.geom
    if r0 >= geom.tau:
        return np.ones(q.shape, dtype=complex)
    rule = radial_rule(r0, model, geom, radio)
    power = mean_received_power(rule.nodes, radio)
    load = signal_cf(q[:, None], power[None, :], radio.m) - 1.0
    if study.method == "quadrature":
        derivative = intensity_derivative(rule.nodes, model)
        exponent = rule.integrate(derivative[None, :] * load, axis=1)
    else:
        elliptic = elliptic_part_derivative(rule.nodes, model)
        z2 = radio.z ** 2
        bounds = np.array([r0 ** 2 + z2, geom.tau ** 2 + z2])
        closed = _closed_antiderivative(q, bounds, model, radio)
        exponent = rule.integrate(elliptic[None, :] * load, axis=1) + \
            closed[:, 1] - closed[:, 0]
    return np.exp(study.bf.p_g * exponent)


def cdf_exposure(t_prime, study, quad=None, full_output=False):
    """
    CDF P[𝒫 <= T'] of the exposure, averaged over the nearest base station
    distance.

    :param float t_prime: Exposure threshold [W].
    :param ~emf_coverage.ippp_analytics.MvStudy study: Study.
    :param ~emf_coverage.inversion.QuadratureConfig quad: Accuracy settings.
    :param bool full_output: Return an InversionResult if ``True``.
    :rtype: float
    """
    return study.mixture().cdf_exposure(
        t_prime, study._quad_or_default(quad), full_output)


def cdf_exposure_nobf(t_prime, study, quad=None, full_output=False):
    """
    CDF of the exposure without beamforming (every base station radiates
    toward the user), from the characteristic function of the whole
    exposure

        ψ(q) = exp(∫_{r_e}^{τ} Λ'·(L - 1) dr),

    conditioned on at least one base station: (ψ - e^(-ΔΛ))/(1 - e^(-ΔΛ)).

    :param float t_prime: Exposure threshold [W].
    :param ~emf_coverage.ippp_analytics.MvStudy study: Study.
    :rtype: float
    """
    if not t_prime > 0:
        raise DomainError("t_prime", t_prime, "t_prime > 0")
    if math.isinf(t_prime) or study.radio.pt_gmax == 0:
        return InversionResult(1.0, 0.0, 0) if full_output else 1.0
    empty = math.exp(-study.mass)
    present = -math.expm1(-study.mass)

    def conditioned(q):
        return (np.exp(study.total_exponent(q, p_g=1.0)) - empty) / present

    rule = study.rule
    power = mean_received_power(rule.nodes, study.radio)
    derivative = intensity_derivative(rule.nodes, study.model)
    scale = float(rule.integrate(power * derivative)) / present
    cf = CharacteristicFunction(conditioned, max(scale, 1e-300))
    return gil_pelaez_cdf(cf, t_prime, study._quad_or_default(quad),
                          full_output)


def _noise(study, sigma2):
    return study.radio.noise_power if sigma2 is None else float(sigma2)


def ccdf_sinr(t, study, sigma2=None, quad=None, full_output=False):
    """
    Coverage probability P[SINR > t].

    :param float t: SINR threshold (linear).
    :param ~emf_coverage.ippp_analytics.MvStudy study: Study.
    :param float sigma2: Noise power [W]; defaults to the radio's thermal
        noise.
    :rtype: float
    """
    return study.mixture().ccdf_sinr(t, _noise(study, sigma2),
                                     study._quad_or_default(quad),
                                     full_output)


def joint_cdf(t, t_prime, study, sigma2=None, quad=None, full_output=False):
    """
    Joint probability P[SINR > t, 𝒫 <= T'].

    :param float t: SINR threshold (linear).
    :param float t_prime: Exposure threshold [W].
    :param ~emf_coverage.ippp_analytics.MvStudy study: Study.
    :rtype: float
    """
    return study.mixture().joint_cdf(t, t_prime, _noise(study, sigma2),
                                     study._quad_or_default(quad),
                                     full_output)


def exposure_quantile(p, study, quad=None):
    """
    Exposure level [W] not exceeded with probability ``p``.

    :rtype: float
    """
    return _mixture_quantile(study.mixture(), p, study._quad_or_default(quad))


def joint_isocurve(p, t_grid, study, sigma2=None, quad=None):
    """
    Exposure thresholds T' with P[SINR > t, 𝒫 <= T'] = p for every t of
    ``t_grid``.

    :rtype: numpy.ndarray
    """
    return _mixture_isocurve(study.mixture(), p, t_grid,
                             _noise(study, sigma2),
                             study._quad_or_default(quad))


def mean_serving_distance(study):
    """
    Mean distance E[R₀] to the nearest base station [m].

    :rtype: float
    """
    return study.mixture().mean_serving_distance()


def local_hppp_approximation(study, radius=DEFAULT_LOCAL_RADIUS):
    """
    Homogeneous model whose density is the mean of the radial density over
    the disk of radius ``radius`` around the user, Λ(radius)/(π·radius²).
    A radius equal to τ averages over the whole study disk.

    :param ~emf_coverage.ippp_analytics.MvStudy study: Study.
    :param float radius: Averaging radius [m], > 0.
    :return: H-PPP topology (β = 0).
    :rtype: ~emf_coverage.ginibre.BetaGppModel
    """
    if not radius > 0:
        raise DomainError("radius", radius, "radius > 0")
    lam = float(intensity_measure(radius, study.model)) / \
        (math.pi * radius ** 2)
    log.debug("local_hppp_approximation averaged: " +
              "radius={} ".format(radius) +
              "lam={}".format(lam))
    return BetaGppModel(lam=lam, beta=0.0)
