# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from emf_coverage.density_fit import bin_design, fit_radial_density, \
    read_bs_dataset
from emf_coverage.deployment import random_stream
from emf_coverage.errors import InsufficientDataError, ScenarioError
from emf_coverage.model import GeometryConfig
from emf_coverage.radial_density import draw_ippp
import math
import numpy as np
import pytest


def test_read_km_dataset(tmp_path):
    path = tmp_path / "sites.txt"
    path.write_text(u"# unit=km\n"
                    u"0.5, 1.0\n"
                    u"\n"
                    u"# a comment\n"
                    u"-2 3.25  # trailing comment\n")
    points = read_bs_dataset(str(path))
    np.testing.assert_allclose(points, [[500.0, 1000.0], [-2000.0, 3250.0]])


def test_read_m_dataset(tmp_path):
    path = tmp_path / "sites.csv"
    path.write_text(u"unit=m\n10,20\n")
    np.testing.assert_allclose(read_bs_dataset(str(path)), [[10.0, 20.0]])


@pytest.mark.parametrize("content,message", [
    (u"0.5, 1.0\n", "unit=km or unit=m"),
    (u"unit=mi\n1 2\n", "unknown unit"),
    (u"unit=km\n1 2 3\n", "expected two coordinates"),
    (u"unit=km\n1 abc\n", "expected two coordinates"),
    (u"\n\n", "empty dataset"),
])
def test_read_malformed_dataset(tmp_path, content, message):
    path = tmp_path / "sites.txt"
    path.write_text(content)
    with pytest.raises(ScenarioError, match=message):
        read_bs_dataset(str(path))


@pytest.mark.parametrize("offset", [0.0, 300.0, 1500.0])
def test_bin_design_covers_disk(offset):
    tau = 2000.0
    edges = np.linspace(0.0, tau + offset, 21)
    design = bin_design(edges, offset, tau)
    assert design.shape == (20, 4)
    # ∫ φ(Δ)·Δ dΔ is the disk area
    assert design[:, 1].sum() == pytest.approx(math.pi * tau ** 2, rel=1e-4)


def test_fit_recovers_density(ippp_model):
    geom = GeometryConfig(0.0, 2000.0)
    realizations = 400
    _, points = draw_ippp(ippp_model, geom, random_stream(21), realizations)
    fit = fit_radial_density(points, ippp_model.center, geom.tau)
    assert fit.counts.sum() == points.shape[0]
    assert fit.expected.sum() == pytest.approx(fit.counts.sum(), rel=0.02)
    assert fit.model.rho_t == pytest.approx(500.0)
    for delta in (800.0, 1500.0):
        fitted = fit.model.profile(delta) / realizations
        assert fitted == pytest.approx(ippp_model.profile(delta), rel=0.1)
    assert fit.residual < 5.0
    assert fit.edges.size == 21


def test_fit_needs_points():
    with pytest.raises(InsufficientDataError):
        fit_radial_density([[0.0, 0.0], [10.0, 0.0], [0.0, 10.0]],
                           (0.0, 0.0), 100.0)


def test_fit_ignores_points_outside_disk():
    rng = np.random.default_rng(3)
    radii = 1000.0 * np.sqrt(rng.random(2000))
    angles = rng.uniform(-math.pi, math.pi, 2000)
    points = np.column_stack([radii * np.cos(angles), radii * np.sin(angles)])
    far = np.array([[5000.0, 0.0], [0.0, -7000.0]])
    fit = fit_radial_density(np.vstack([points, far]), (0.0, 0.0), 1000.0,
                             n_bins=10)
    assert fit.counts.sum() == 2000
    # uniform points: the fitted density is nearly flat
    assert fit.model.profile(500.0) == pytest.approx(
        2000.0 / (math.pi * 1000.0 ** 2), rel=0.15)
