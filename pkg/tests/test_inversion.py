# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from emf_coverage.errors import ConvergenceError, DomainError
from emf_coverage.inversion import CharacteristicFunction, \
    InversionResult, QuadratureConfig, gil_pelaez_ccdf, \
    gil_pelaez_ccdf_shifted, gil_pelaez_cdf, gil_pelaez_integral, \
    wynn_epsilon
from scipy import stats
import math
import numpy as np
import pytest


def exponential_cf(mean):
    return CharacteristicFunction(lambda q: 1.0 / (1.0 - 1j * mean * q),
                                  mean, decay_order=1)


@pytest.mark.parametrize("x", [0.1, 1.0, 3.0, 12.0])
def test_cdf_exponential(x):
    value = gil_pelaez_cdf(exponential_cf(2.0), x)
    assert value == pytest.approx(1.0 - math.exp(-x / 2.0), abs=1e-5)


@pytest.mark.parametrize("x", [0.2, 1.2, 4.0])
def test_cdf_gamma(x):
    cf = CharacteristicFunction(lambda q: (1.0 - 0.5j * q) ** -3, 1.5,
                                decay_order=3)
    expected = stats.gamma.cdf(x, 3, scale=0.5)
    assert gil_pelaez_cdf(cf, x) == pytest.approx(expected, abs=1e-5)


def test_cdf_below_support():
    assert gil_pelaez_cdf(exponential_cf(1.0), -1.0) == \
        pytest.approx(0.0, abs=1e-5)


def test_cdf_full_output():
    result = gil_pelaez_cdf(exponential_cf(1.0), 1.0, full_output=True)
    assert isinstance(result, InversionResult)
    assert float(result) == pytest.approx(1.0 - math.exp(-1.0), abs=1e-5)
    assert result.panels >= 4
    assert 0 <= result.error_estimate < 1e-4


def test_ccdf_signed_variable():
    # E - 1 with E ~ Exp(1)
    cf = CharacteristicFunction(
        lambda q: np.exp(-1j * q) / (1.0 - 1j * q), 1.0)
    assert gil_pelaez_ccdf(cf, 0.0) == pytest.approx(math.exp(-1.0),
                                                     abs=1e-5)


@pytest.mark.parametrize("t", [0.5, 1.0, 4.0])
def test_ccdf_shifted(t):
    # P[S > t (I + sigma2)], S ~ Exp(1), I ~ Exp(mean 0.5)
    sigma2 = 0.1
    expected = math.exp(-t * sigma2) / (1.0 + 0.5 * t)
    value = gil_pelaez_ccdf_shifted((exponential_cf(1.0),
                                     exponential_cf(0.5)), t, sigma2)
    assert value == pytest.approx(expected, abs=1e-5)


@pytest.mark.parametrize("t", [0.5, 4.0])
def test_ccdf_shifted_slowly_oscillating_tail(t):
    # the noise phase e^(-jtqσ²) turns over far slower than the panels, so
    # the tail is one-signed over many panels
    sigma2 = 0.1
    expected = math.exp(-t * sigma2) / (1.0 + 0.5 * t)
    result = gil_pelaez_ccdf_shifted((exponential_cf(1.0),
                                      exponential_cf(0.5)), t, sigma2,
                                     full_output=True)
    assert float(result) == pytest.approx(expected, abs=2e-6)
    assert abs(float(result) - expected) <= result.error_estimate + 1e-6


def test_integral_monotone_tail_uses_envelope():
    # ∫ Im[(1 - jq)^-2]/q dq = ∫ 2/(1 + q²)² dq = π/2
    result = gil_pelaez_integral(lambda q: (1.0 - 1j * q) ** -2, 1.0,
                                 decay_order=2)
    assert result.value == pytest.approx(0.5 * math.pi, abs=1e-5)
    assert result.panels > 100


def test_integral_monotone_tail_is_not_accelerated():
    # the tail of ∫ q/(1 + q²)/q dq only decays like 1/Q
    quad = QuadratureConfig(max_panels=500)
    with pytest.raises(ConvergenceError, match="budget"):
        gil_pelaez_integral(lambda q: 1.0 / (1.0 - 1j * q), 1.0, quad,
                            decay_order=1)


def test_ccdf_shifted_rejects_nonpositive_threshold():
    with pytest.raises(DomainError, match="t > 0"):
        gil_pelaez_ccdf_shifted((exponential_cf(1.0), exponential_cf(1.0)),
                                0.0, 0.1)


def test_wynn_epsilon_alternating_series():
    sums = np.cumsum([(-1.0) ** k / (k + 1.0) for k in range(12)])
    assert wynn_epsilon(sums) == pytest.approx(math.log(2.0), abs=1e-7)
    assert abs(sums[-1] - math.log(2.0)) > 1e-2


def test_wynn_epsilon_constant_sequence():
    assert wynn_epsilon([0.5, 0.5, 0.5]) == 0.5
    assert wynn_epsilon([3.0]) == 3.0


def test_panel_budget_exhausted():
    quad = QuadratureConfig(max_panels=1)
    with pytest.raises(ConvergenceError, match="budget") as info:
        gil_pelaez_integral(lambda q: np.exp(1j * q), 1.0, quad)
    assert math.isfinite(info.value.partial_value)


def test_frequency_truncation():
    quad = QuadratureConfig(q_max=50.0)
    result = gil_pelaez_integral(lambda q: np.exp(1j * q) / (1.0 + q), 1.0,
                                 quad)
    assert result.panels <= 17


def test_integral_sine():
    # ∫ sin(q)/q dq = π/2
    result = gil_pelaez_integral(lambda q: np.exp(1j * q), 1.0)
    assert result.value == pytest.approx(0.5 * math.pi, abs=1e-5)


@pytest.mark.parametrize("settings", [
    dict(abs_tol=0.0),
    dict(rel_tol=-1.0),
    dict(q_max=0.0),
    dict(max_panels=0),
    dict(order=15),
])
def test_quadrature_config_domain(settings):
    with pytest.raises(DomainError):
        QuadratureConfig(**settings)


def test_quadrature_config_scaled():
    quad = QuadratureConfig(abs_tol=1e-6, rel_tol=1e-5, max_panels=10)
    scaled = quad.scaled(10.0)
    assert scaled.abs_tol == pytest.approx(1e-5)
    assert scaled.rel_tol == pytest.approx(1e-4)
    assert scaled.max_panels == 10


def test_characteristic_function_scale():
    with pytest.raises(DomainError):
        CharacteristicFunction(lambda q: q, 0.0)
    cf = exponential_cf(1.0)
    assert cf(0.0) == 1.0
    assert cf.decay_order == 1
