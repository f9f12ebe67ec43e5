# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

"""
Reproduction of published reference results with the full-size presets.
Deselected by default; run with ``pytest -m slow``.
"""

from __future__ import absolute_import, division, print_function
from emf_coverage import bgpp_analytics as bg
from emf_coverage import cli
from emf_coverage import ippp_analytics as mv
from emf_coverage.empirical import sup_distance
from emf_coverage.model import db_to_linear, dbm_to_watt, watt_to_dbm
from emf_coverage.scenario import load_scenario
from emf_coverage.serving import frechet_bounds
import math
import numpy as np
import pytest

pytestmark = pytest.mark.slow

EXPOSURE_GRID_DBM = np.arange(-70.0, 0.5, 0.5)
SINR_GRID_DB = np.arange(-15.0, 40.5, 0.5)


def field_strength(ipd):
    return math.sqrt(120.0 * math.pi * ipd)


def paris_mixture(**changes):
    scenario = load_scenario("paris-5gnr2100").override(**changes)
    kernel = bg.BgppKernel(scenario.density_model(),
                           scenario.geometry_config())
    return scenario, kernel, kernel.mixture(scenario.radio_config(),
                                            scenario.beamforming_config())


def curves(scenario, mixture):
    quad = scenario.quadrature_config()
    cdf = [mixture.cdf_exposure(t, quad)
           for t in dbm_to_watt(EXPOSURE_GRID_DBM)]
    ccdf = [mixture.ccdf_sinr(t, scenario.sigma2, quad)
            for t in db_to_linear(SINR_GRID_DB)]
    return np.array(cdf), np.array(ccdf)


def test_paris_exposure_moments():
    scenario, kernel, _ = paris_mixture()
    radio = scenario.radio_config()
    bf = scenario.beamforming_config()
    ipd = radio.kappa / (4.0 * math.pi)
    mean = bg.mean_exposure(kernel, radio, bf) * ipd
    variance = bg.variance_exposure(kernel, radio, bf) * ipd ** 2
    # published 1.38e-4; both round to 0.23 V/m
    assert mean == pytest.approx(1.38e-4, rel=0.025)
    assert field_strength(mean) == pytest.approx(0.23, abs=0.005)
    assert variance == pytest.approx(3.92e-7, rel=0.03)


def test_paris_truncation_convergence():
    scenario, _, coarse = paris_mixture(**{"topology.truncation_n": 10})
    _, _, fine = paris_mixture(**{"topology.truncation_n": 50})
    cdf_coarse, ccdf_coarse = curves(scenario, coarse)
    cdf_fine, ccdf_fine = curves(scenario, fine)
    assert sup_distance(cdf_coarse, cdf_fine) <= 0.005
    assert sup_distance(ccdf_coarse, ccdf_fine) <= 0.003


def test_paris_topology_gap():
    scenario, _, poisson = paris_mixture(**{"topology.beta": 0.0})
    _, _, repulsive = paris_mixture(**{"topology.beta": 0.75})
    cdf_poisson, ccdf_poisson = curves(scenario, poisson)
    cdf_repulsive, ccdf_repulsive = curves(scenario, repulsive)
    assert sup_distance(cdf_poisson, cdf_repulsive) == \
        pytest.approx(0.073, abs=0.01)
    assert sup_distance(ccdf_poisson, ccdf_repulsive) == \
        pytest.approx(0.061, abs=0.01)


@pytest.mark.parametrize("user_km,published_dbm,expected_dbm", [
    ((0.0, 0.0), -34.77, -33.69),
    ((-3.0, -3.0), -39.34, -37.98),
])
def test_brussels_quantiles(user_km, published_dbm, expected_dbm):
    scenario = load_scenario("brussels-lte1800")
    study = mv.MvStudy(scenario.density_model(user_km=user_km),
                       scenario.geometry_config(), scenario.radio_config(),
                       scenario.beamforming_config(),
                       quad=scenario.quadrature_config())
    quantile = mv.exposure_quantile(0.95, study)
    assert watt_to_dbm(quantile) == pytest.approx(expected_dbm, abs=0.2)
    # recorded offset from the published quantile, see DESIGN.md
    assert 0.8 <= watt_to_dbm(quantile) - published_dbm <= 1.6


def frechet_grid(scenario):
    sinr = scenario.sinr_thresholds()
    exposure = scenario.exposure_thresholds()
    pick = np.linspace(0, sinr.size - 1, 10).astype(int)
    sinr = sinr[pick]
    pick = np.linspace(0, exposure.size - 1, 10).astype(int)
    return sinr, exposure[pick]


def check_frechet(mixture, scenario):
    quad = scenario.quadrature_config()
    sigma2 = scenario.sigma2
    sinr, exposure = frechet_grid(scenario)
    f_cov = [mixture.ccdf_sinr(t, sigma2, quad) for t in sinr]
    f_emf = [mixture.cdf_exposure(t, quad) for t in exposure]
    for t, cov in zip(sinr, f_cov):
        for t_prime, emf in zip(exposure, f_emf):
            lower, upper = frechet_bounds(cov, emf)
            value = mixture.joint_cdf(t, t_prime, sigma2, quad)
            assert lower - 1e-3 <= value <= upper + 1e-3
        assert mixture.joint_cdf(t, float("inf"), sigma2, quad) == \
            pytest.approx(cov, abs=1e-3)
    # an almost free SINR constraint leaves the exposure margin
    for t_prime, emf in zip(exposure, f_emf):
        assert mixture.joint_cdf(1e-9, t_prime, sigma2, quad) == \
            pytest.approx(emf, abs=1e-3)


def test_paris_frechet_sandwich():
    scenario, _, mixture = paris_mixture()
    check_frechet(mixture, scenario)


def test_brussels_frechet_sandwich():
    scenario = load_scenario("brussels-lte1800")
    study = mv.MvStudy(scenario.density_model(), scenario.geometry_config(),
                       scenario.radio_config(), scenario.beamforming_config(),
                       quad=scenario.quadrature_config())
    check_frechet(study.mixture(), scenario)


@pytest.mark.parametrize("name", ["paris-5gnr2100", "brussels-lte1800"])
def test_monte_carlo_agreement(name):
    scenario = load_scenario(name)
    assert scenario.monte_carlo.realizations == 1000000
    report, passed = cli.cmd_validate(scenario)
    failed = [row["check"] for row in report.rows if not row["passed"]]
    assert passed, failed


def test_brussels_map_average():
    scenario = load_scenario("brussels-lte1800")
    assert tuple(scenario.map.shape) == (50, 50)
    table, average, failures = cli.cmd_map(scenario)
    assert failures == 0
    values = table.column("mean-exposure")
    assert len(values) == 2500
    assert average == pytest.approx(np.mean(values), rel=1e-9)
    first = table.rows[0]
    x_km, y_km, value = first["x_km"], first["y_km"], first["mean-exposure"]
    study = mv.MvStudy(scenario.density_model(user_km=(x_km, y_km)),
                       scenario.geometry_config(), scenario.radio_config(),
                       scenario.beamforming_config(),
                       quad=scenario.quadrature_config())
    ipd = scenario.radio_config().kappa / (4.0 * math.pi)
    assert value == pytest.approx(mv.mean_exposure(study) * ipd, rel=1e-3)
    # published 3.50e-5 over an unstated extent, see DESIGN.md
    assert average == pytest.approx(3.50e-5, rel=0.5)
