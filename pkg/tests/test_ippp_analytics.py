# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from emf_coverage import bgpp_analytics, ippp_analytics as mv
from emf_coverage.errors import DomainError, EmptyRegionError
from emf_coverage.ginibre import BetaGppModel
from emf_coverage.model import BeamformingConfig, GeometryConfig, \
    mean_received_power, received_power_integral
from emf_coverage.montecarlo import SimulationPlan, simulate
from emf_coverage.radial_density import IpppModel, intensity_derivative, \
    intensity_measure
import math
import numpy as np
import pytest

LAM = 6.17e-6


@pytest.fixture
def study(ippp_model, small_geom, radio, bf):
    return mv.MvStudy(ippp_model, small_geom, radio, bf)


@pytest.fixture
def flat_study(small_geom, radio, bf):
    return mv.MvStudy(IpppModel(0.0, LAM, 0.0, 0.0), small_geom, radio, bf)


def test_study(study, ippp_model, small_geom):
    assert study.method == "hypergeometric"
    assert study.violations == []
    assert study.mass == pytest.approx(
        intensity_measure(small_geom.tau, ippp_model), rel=1e-12)
    assert study.rule.integrate(study.serving_pdf) == \
        pytest.approx(1.0, abs=1e-6)
    assert study.replace(method="quadrature").method == "quadrature"


def test_study_domain(ippp_model, small_geom, radio, bf):
    with pytest.raises(DomainError):
        mv.MvStudy(ippp_model, small_geom, radio, bf, method="simpson")
    with pytest.raises(EmptyRegionError):
        mv.MvStudy(IpppModel(0.0, 0.0, 0.0, 0.0), small_geom, radio, bf)


def test_alpha_four_uses_quadrature(ippp_model, small_geom, radio, bf):
    study = mv.MvStudy(ippp_model, small_geom, radio.replace(alpha=4.0), bf)
    assert study.method == "quadrature"


def test_violations_are_kept(ippp_model, radio, bf):
    geom = GeometryConfig.from_km(0.0, 12.0)
    study = mv.MvStudy(ippp_model, geom, radio, bf)
    assert [v.kind for v in study.violations] == ["increasing"]


@pytest.mark.parametrize("scale", [0.1, 1.0, 10.0])
def test_methods_agree(study, scale):
    mean = mv.mean_exposure(study)
    q = np.array([scale / mean, -scale / mean])
    numeric = study.replace(method="quadrature")
    np.testing.assert_allclose(study.cf_exponent(q), numeric.cf_exponent(q),
                               rtol=1e-6, atol=1e-9)
    np.testing.assert_allclose(study.total_exponent(q),
                               numeric.total_exponent(q),
                               rtol=1e-6, atol=1e-9)


def test_mean_interference_flat(flat_study, small_geom, radio, bf):
    r0 = np.array([100.0, 700.0, 1900.0])
    expected = bf.p_g * math.pi * LAM * received_power_integral(
        r0 ** 2, small_geom.tau ** 2, radio)
    np.testing.assert_allclose(mv.mean_interference_power(r0, flat_study),
                               expected, rtol=1e-10)
    assert mv.mean_interference_power(small_geom.tau, flat_study) == 0.0


def test_mean_interference_matches_rule(study):
    rule = study.rule
    tail = study.bf.p_g * rule.tail(
        mean_received_power(rule.nodes, study.radio) *
        intensity_derivative(rule.nodes, study.model))
    for k in (0, rule.size // 3, 2 * rule.size // 3):
        assert mv.mean_interference_power(rule.nodes[k], study) == \
            pytest.approx(tail[k], rel=1e-5)


def test_mean_interference_domain(study):
    with pytest.raises(DomainError):
        mv.mean_interference_power(2500.0, study)


@pytest.mark.parametrize("method", mv.METHODS)
def test_cf_interference_mean(study, method):
    study = study.replace(method=method)
    r0 = 300.0
    mean = mv.mean_interference_power(r0, study)
    assert mv.cf_interference(0.0, r0, study)[0] == pytest.approx(1.0)
    step = 1e-5 / mean
    values = mv.cf_interference([step, -step], r0, study)
    derivative = (values[0] - values[1]) / (2j * step)
    assert derivative.real == pytest.approx(mean, rel=1e-5)


def test_cf_interference_at_disk_edge(study, small_geom):
    np.testing.assert_array_equal(
        mv.cf_interference([1.0, 2.0], small_geom.tau, study), [1.0, 1.0])


def test_flat_density_matches_poisson(flat_study, small_geom, radio, bf):
    kernel = bgpp_analytics.BgppKernel(BetaGppModel(lam=LAM, beta=0.0),
                                       small_geom)
    mean = mv.mean_exposure(flat_study)
    assert mean == pytest.approx(
        bgpp_analytics.mean_exposure(kernel, radio, bf), rel=1e-5)
    assert mv.second_moment_exposure(flat_study) == pytest.approx(
        bgpp_analytics.second_moment_exposure(kernel, radio, bf), rel=1e-5)
    assert mv.cdf_exposure(mean, flat_study) == pytest.approx(
        bgpp_analytics.cdf_exposure(mean, kernel, radio, bf), abs=1e-5)
    assert mv.ccdf_sinr(1.0, flat_study) == pytest.approx(
        bgpp_analytics.ccdf_sinr(1.0, kernel, radio, bf), abs=1e-5)
    assert mv.mean_serving_distance(flat_study) == \
        pytest.approx(0.5 / math.sqrt(LAM), rel=1e-6)


def test_nobf_matches_disabled_beamforming(study):
    disabled = study.replace(bf=BeamformingConfig.disabled())
    mean = mv.mean_exposure(disabled)
    for t_prime in (0.5 * mean, mean, 2.0 * mean):
        assert mv.cdf_exposure_nobf(t_prime, study) == pytest.approx(
            mv.cdf_exposure(t_prime, disabled), abs=1e-5)


def test_nobf_domain(study):
    with pytest.raises(DomainError):
        mv.cdf_exposure_nobf(0.0, study)
    assert mv.cdf_exposure_nobf(float("inf"), study) == 1.0


def test_moments(study):
    mean = mv.mean_exposure(study)
    variance = mv.variance_exposure(study)
    assert mean > 0
    assert variance > 0
    assert mv.second_moment_exposure(study) == \
        pytest.approx(variance + mean ** 2)


def test_distribution_shapes(study):
    mean = mv.mean_exposure(study)
    cdf = [mv.cdf_exposure(f * mean, study) for f in (0.3, 1.0, 3.0)]
    assert 0.0 <= cdf[0] <= cdf[1] <= cdf[2] <= 1.0
    coverage = [mv.ccdf_sinr(t, study) for t in (0.1, 1.0, 10.0)]
    assert coverage[0] >= coverage[1] >= coverage[2]
    joint = mv.joint_cdf(1.0, mean, study)
    lower, upper = mv.frechet_bounds(coverage[1], cdf[1])
    assert lower - 1e-5 <= joint <= upper + 1e-5


def test_quantile_and_isocurve(study):
    threshold = mv.exposure_quantile(0.9, study)
    assert mv.cdf_exposure(threshold, study) == pytest.approx(0.9, abs=1e-4)
    curve = mv.joint_isocurve(0.2, [1.0], study)
    assert mv.joint_cdf(1.0, curve[0], study) == pytest.approx(0.2, abs=1e-4)


def test_local_hppp_approximation(flat_study, study):
    local = mv.local_hppp_approximation(flat_study)
    assert local.is_poisson
    assert local.lam == pytest.approx(LAM, rel=1e-12)
    wide = mv.local_hppp_approximation(study, radius=study.geom.tau)
    assert wide.lam * study.geom.area == pytest.approx(study.mass, rel=1e-10)
    with pytest.raises(DomainError):
        mv.local_hppp_approximation(study, radius=0.0)


def test_agrees_with_simulation(study, ippp_model, small_geom, radio, bf):
    result = simulate(SimulationPlan("ippp", ippp_model, radio, small_geom,
                                     bf, 20000, seed=23))
    exposure = result.exposure()
    for p in (0.2, 0.5, 0.8):
        threshold = exposure.quantile(p)
        assert mv.cdf_exposure(threshold, study) == \
            pytest.approx(exposure.cdf(threshold), abs=0.02)
    sinr = result.sinr()
    for t in (1.0, 10.0):
        assert mv.ccdf_sinr(t, study) == pytest.approx(sinr.ccdf(t),
                                                       abs=0.02)
    assert mv.mean_exposure(study) == pytest.approx(
        exposure.mean, abs=4.0 * exposure.standard_error)
