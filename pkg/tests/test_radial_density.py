# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from emf_coverage.deployment import random_stream
from emf_coverage.errors import DomainError, EmptyRegionError, \
    SingularityError
from emf_coverage.model import GeometryConfig
from emf_coverage.quadrature import tanh_sinh
from emf_coverage.radial_density import IpppModel, draw_ippp, \
    intensity_derivative, intensity_measure, nearest_bs_pdf, recenter, \
    sample_ippp, validate_density
from scipy import integrate
import math
import numpy as np
import pytest


def measure_around_center(model, r):
    """
    Λ(r) integrated in polar coordinates around the maximum-density point,
    where the 1/Δ term becomes smooth.
    """
    rho = model.rho_t

    def antiderivative(delta):
        return (model.a_t * delta + model.b_t * delta ** 2 / 2.0 +
                model.c_t * delta ** 3 / 3.0 + model.d_t * delta ** 4 / 4.0)

    def chord(phi):
        root = math.sqrt(max(r ** 2 - (rho * math.sin(phi)) ** 2, 0.0))
        return -rho * math.cos(phi) - root, -rho * math.cos(phi) + root

    if r > rho:
        value, _ = integrate.quad(lambda phi: antiderivative(chord(phi)[1]),
                                  0.0, 2.0 * math.pi, epsabs=0,
                                  epsrel=1e-12, limit=200)
        return value
    half = math.asin(r / rho)

    def slab(phi):
        lower, upper = chord(phi)
        return antiderivative(upper) - antiderivative(max(lower, 0.0))

    value, _ = integrate.quad(slab, math.pi - half, math.pi + half,
                              epsabs=0, epsrel=1e-12, limit=200)
    return value


def test_model_units(ippp_model):
    assert ippp_model.a_t == pytest.approx(0.05e-3)
    assert ippp_model.b_t == pytest.approx(5.241e-6)
    assert ippp_model.c_t == pytest.approx(-0.973e-9)
    assert ippp_model.d_t == pytest.approx(0.048e-12)
    assert ippp_model.rho_t == pytest.approx(500.0)
    assert ippp_model.theta_t == pytest.approx(0.0)
    np.testing.assert_allclose(ippp_model.center, [500.0, 0.0], atol=1e-12)
    assert not ippp_model.is_homogeneous


def test_model_domain():
    with pytest.raises(DomainError):
        IpppModel(0.0, 1e-6, 0.0, 0.0, rho_t=-1.0)
    with pytest.raises(DomainError):
        IpppModel(float("nan"), 1e-6, 0.0, 0.0)


def test_angle_is_wrapped():
    model = IpppModel(0.0, 1e-6, 0.0, 0.0, rho_t=10.0, theta_t=3 * math.pi)
    assert abs(model.theta_t) == pytest.approx(math.pi)


def test_scaled(ippp_model):
    scaled = ippp_model.scaled(2.0)
    assert scaled.b_t == pytest.approx(2.0 * ippp_model.b_t)
    assert scaled.a_t == pytest.approx(2.0 * ippp_model.a_t)
    assert scaled.rho_t == ippp_model.rho_t


def test_profile(ippp_model):
    delta = np.array([100.0, 1000.0])
    expected = 0.05e-3 / delta + 5.241e-6 - 0.973e-9 * delta + \
        0.048e-12 * delta ** 2
    np.testing.assert_allclose(ippp_model.profile(delta), expected)
    assert ippp_model.density([[600.0, 0.0]]) == \
        pytest.approx(ippp_model.profile(100.0))
    assert math.isinf(ippp_model.profile(0.0))


def test_profile_slope(ippp_model):
    delta = 700.0
    step = 1e-3
    numeric = (ippp_model.profile(delta + step) -
               ippp_model.profile(delta - step)) / (2 * step)
    assert ippp_model.profile_slope(delta) == pytest.approx(numeric,
                                                            rel=1e-5)


@pytest.mark.parametrize("r", [0.0, 200.0, 499.0, 501.0, 1500.0, 6000.0])
def test_intensity_measure(ippp_model, r):
    if r == 0.0:
        assert intensity_measure(r, ippp_model) == 0.0
        return
    assert intensity_measure(r, ippp_model) == \
        pytest.approx(measure_around_center(ippp_model, r), rel=1e-8)


def test_intensity_measure_centered():
    model = IpppModel.from_km(0.05, 5.241, -0.973, 0.048)
    r = 3000.0
    expected = 2 * math.pi * (model.a_t * r + model.b_t * r ** 2 / 2 +
                              model.c_t * r ** 3 / 3 + model.d_t * r ** 4 / 4)
    assert intensity_measure(r, model) == pytest.approx(expected, rel=1e-12)


def test_intensity_measure_vectorized(ippp_model):
    values = intensity_measure(np.array([100.0, 1000.0]), ippp_model)
    assert values.shape == (2,)
    assert values[0] < values[1]
    with pytest.raises(DomainError):
        intensity_measure(-1.0, ippp_model)


@pytest.mark.parametrize("r", [250.0, 800.0, 3000.0])
def test_intensity_derivative(ippp_model, r):
    step = 0.01
    numeric = (intensity_measure(r + step, ippp_model) -
               intensity_measure(r - step, ippp_model)) / (2 * step)
    assert intensity_derivative(r, ippp_model) == \
        pytest.approx(numeric, rel=1e-6)


def test_intensity_derivative_singularity(ippp_model):
    with pytest.raises(SingularityError):
        intensity_derivative(500.0, ippp_model)
    # without the 1/Δ term the point is regular
    assert math.isfinite(intensity_derivative(500.0,
                                              ippp_model.replace(a_t=0.0)))


def test_nearest_bs_pdf_normalized(ippp_model, small_geom):
    geom = GeometryConfig(50.0, small_geom.tau)

    def pdf(r):
        return nearest_bs_pdf(r, ippp_model, geom)

    total = tanh_sinh(pdf, 50.0, 500.0, abs_tol=1e-10)[0] + \
        tanh_sinh(pdf, 500.0, geom.tau, abs_tol=1e-10)[0]
    assert total == pytest.approx(1.0, abs=1e-7)
    np.testing.assert_array_equal(pdf(np.array([10.0, 2500.0])), [0, 0])


def test_nearest_bs_pdf_empty(small_geom):
    model = IpppModel(0.0, 0.0, 0.0, 0.0)
    with pytest.raises(EmptyRegionError):
        nearest_bs_pdf(100.0, model, small_geom)


def test_recenter(ippp_model):
    moved = recenter(ippp_model, [500.0, 0.0])
    assert moved.rho_t == pytest.approx(0.0, abs=1e-9)
    moved = recenter(ippp_model, [500.0, -300.0])
    assert moved.rho_t == pytest.approx(300.0)
    assert moved.theta_t == pytest.approx(0.5 * math.pi)
    assert moved.b_t == ippp_model.b_t


def test_validate_density(ippp_model):
    assert validate_density(ippp_model, 7000.0) == []
    violations = validate_density(ippp_model, 15000.0)
    assert [v.kind for v in violations] == ["increasing"]
    # -ã/Δ² + c̃ + 2d̃Δ changes sign at Δ ≈ 10140.5 m
    assert violations[0].delta_min == pytest.approx(10140.5, abs=1.0)
    assert violations[0].delta_min == pytest.approx(10135.0, rel=1e-3)
    assert violations[0].delta_max == pytest.approx(15500.0)


def test_validate_negative_density():
    model = IpppModel.from_km(0.0, 1.0, -1.0, 0.0)
    kinds = [v.kind for v in validate_density(model, 3000.0)]
    assert kinds == ["negative"]


def test_draw_ippp_mean_count(ippp_model, small_geom):
    owner, points = draw_ippp(ippp_model, small_geom, random_stream(9), 2000)
    assert points.shape == (owner.size, 2)
    assert np.all(np.sum(points ** 2, axis=1) <= small_geom.tau ** 2)
    counts = np.bincount(owner, minlength=2000)
    expected = intensity_measure(small_geom.tau, ippp_model)
    assert counts.mean() == pytest.approx(expected, abs=1.0)


def test_draw_ippp_radial_law(ippp_model, small_geom):
    _, points = draw_ippp(ippp_model, small_geom, random_stream(10), 2000)
    inside = np.mean(np.hypot(points[:, 0], points[:, 1]) <= 1000.0)
    expected = intensity_measure(1000.0, ippp_model) / \
        intensity_measure(small_geom.tau, ippp_model)
    assert inside == pytest.approx(expected, abs=0.01)


def test_draw_ippp_rejects_negative_density(small_geom):
    model = IpppModel.from_km(0.0, 1.0, -1.0, 0.0)
    with pytest.raises(DomainError, match="lambda >= 0"):
        draw_ippp(model, small_geom, random_stream(1), 1)


def test_sample_ippp_is_reproducible(ippp_model, small_geom):
    first = sample_ippp(ippp_model, small_geom, seed=4)
    second = sample_ippp(ippp_model, small_geom, seed=4)
    np.testing.assert_array_equal(first.points, second.points)
    assert first.count > 0
