# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from emf_coverage.errors import DomainError, EmptyRegionError
from emf_coverage.ippp_analytics import MvStudy, ccdf_sinr, mean_exposure
from emf_coverage.radial_density import recenter
from emf_coverage.spatial_map import MapGrid, MapResult, evaluate_cell, \
    evaluate_map, exposure_cdf_map_average
import emf_coverage
import inspect
import math
import mock
import numpy as np
import pytest


def test_grid_from_km():
    grid = MapGrid.from_km((-2.0, 2.0), (-1.0, 1.0), shape=(3, 5))
    assert grid.shape == (3, 5)
    assert grid.size == 15
    np.testing.assert_allclose(grid.x, [-2000.0, -1000.0, 0.0, 1000.0,
                                        2000.0])
    np.testing.assert_allclose(grid.y, [-1000.0, 0.0, 1000.0])
    # row-major, x varies fastest
    np.testing.assert_allclose(grid.points[:2], [[-2000.0, -1000.0],
                                                 [-1000.0, -1000.0]])


@pytest.mark.parametrize("make", [
    lambda: MapGrid([], [1.0]),
    lambda: MapGrid([[1.0, 2.0]], [1.0]),
    lambda: MapGrid.from_extent((0.0, 1.0), (0.0, 1.0), shape=(0, 3)),
])
def test_grid_domain(make):
    with pytest.raises(DomainError):
        make()


def test_result_values():
    grid = MapGrid([0.0, 1.0], [0.0])
    failure = EmptyRegionError(0.0, 10.0)
    result = MapResult(grid, "mean-exposure", None, [2.0, failure])
    assert result.failures == {1: failure}
    np.testing.assert_array_equal(result.values, [[2.0, np.nan]])
    assert result.average == 2.0
    rows = list(result.rows())
    assert rows[0] == (0.0, 0.0, 2.0, "")
    assert rows[1][3] == "EmptyRegionError"
    assert math.isnan(rows[1][2])


def test_result_threshold_array():
    grid = MapGrid([0.0, 1.0], [0.0])
    result = MapResult(grid, "exposure-cdf", np.array([1.0, 2.0]),
                       [np.array([0.2, 0.4]), np.array([0.4, 0.8])])
    assert result.values.shape == (1, 2, 2)
    np.testing.assert_allclose(result.average, [0.3, 0.6])


def test_result_all_failed():
    grid = MapGrid([0.0], [0.0])
    result = MapResult(grid, "mean-exposure", None,
                       [EmptyRegionError(0.0, 1.0)])
    assert math.isnan(result.average)


def test_evaluate_cell(ippp_model, small_geom, radio, bf):
    point = (200.0, -100.0)
    study = MvStudy(recenter(ippp_model, point), small_geom, radio, bf,
                    method="quadrature")
    assert evaluate_cell("mean-exposure", point, ippp_model, small_geom,
                         radio, bf) == pytest.approx(mean_exposure(study))


def test_map_is_symmetric(ippp_model, small_geom, radio, bf):
    # the density is symmetric about the x axis
    grid = MapGrid([0.0], [-300.0, 300.0])
    result = evaluate_map("mean-exposure", grid, ippp_model, small_geom,
                          radio, bf)
    assert result.values.shape == (2, 1)
    assert result.values[0, 0] == pytest.approx(result.values[1, 0],
                                                rel=1e-8)
    assert result.failures == {}


def test_map_keeps_going(ippp_model, small_geom, radio, bf):
    def fake(metric, point, *args):
        if point[0] > 0:
            raise EmptyRegionError(0.0, 1.0)
        return 1.0

    grid = MapGrid([-1.0, 1.0], [0.0])
    with mock.patch("emf_coverage.spatial_map.evaluate_cell",
                    side_effect=fake):
        result = evaluate_map("mean-exposure", grid, ippp_model, small_geom,
                              radio, bf)
    assert list(result.failures) == [1]
    assert result.average == 1.0


def test_map_domain(ippp_model, small_geom, radio, bf):
    grid = MapGrid([0.0], [0.0])
    with pytest.raises(DomainError):
        evaluate_map("median", grid, ippp_model, small_geom, radio, bf)
    with pytest.raises(DomainError):
        evaluate_map("sinr-ccdf", grid, ippp_model, small_geom, radio, bf)


def test_exposure_cdf_map_average(ippp_model, small_geom, radio, bf):
    grid = MapGrid([-200.0, 400.0], [0.0])
    thresholds = [1e-8, 1e-7]
    average, result = exposure_cdf_map_average(thresholds, grid, ippp_model,
                                               small_geom, radio, bf)
    assert average.shape == (2,)
    np.testing.assert_allclose(average, np.mean(result.values[0], axis=0))
    assert np.all(np.diff(result.values, axis=-1) >= 0)
    assert np.all((average >= 0) & (average <= 1))


def test_package_keeps_map_module():
    assert inspect.ismodule(emf_coverage.spatial_map)
    assert emf_coverage.evaluate_map is evaluate_map
    assert emf_coverage.spatial_map.evaluate_cell is evaluate_cell


def test_sinr_cell_uses_given_noise(ippp_model, small_geom, radio, bf):
    point = (200.0, -100.0)
    study = MvStudy(recenter(ippp_model, point), small_geom, radio, bf,
                    method="quadrature")
    loud = 1e5 * radio.noise_power
    quiet = evaluate_cell("sinr-ccdf", point, ippp_model, small_geom, radio,
                          bf, threshold=1.0)
    noisy = evaluate_cell("sinr-ccdf", point, ippp_model, small_geom, radio,
                          bf, threshold=1.0, sigma2=loud)
    assert noisy == pytest.approx(ccdf_sinr(1.0, study, sigma2=loud),
                                  abs=1e-9)
    assert quiet == pytest.approx(ccdf_sinr(1.0, study), abs=1e-9)
    assert noisy < quiet


def test_map_forwards_noise(ippp_model, small_geom, radio, bf):
    grid = MapGrid([0.0, 1.0], [0.0])
    with mock.patch("emf_coverage.spatial_map.evaluate_cell",
                    return_value=0.5) as patched:
        evaluate_map("sinr-ccdf", grid, ippp_model, small_geom, radio, bf,
                     threshold=1.0, sigma2=2e-12)
    assert [call[0][-1] for call in patched.call_args_list] == [2e-12, 2e-12]
