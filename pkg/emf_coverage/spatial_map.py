# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Maps of motion-variant metrics over a grid of user locations.

Every cell recenters the density model to its location and evaluates the
selected metric for a user at that location. Cells are independent; a cell
that fails keeps its exception in place of the value and the map goes on.
"""

from __future__ import absolute_import, division, print_function
from .errors import DomainError, EmfCoverageError
from .ippp_analytics import MvStudy, cdf_exposure, ccdf_sinr, mean_exposure
from .radial_density import recenter
import multiprocessing
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Metrics a map can hold.
METRICS = ("mean-exposure", "exposure-cdf", "sinr-ccdf")

#: Default grid shape (rows, columns).
DEFAULT_SHAPE = (50, 50)


class MapGrid(object):
    """
    Rectangular grid of user locations, row-major with y varying over the
    rows.
    """

    def __init__(self, x, y):
        """
        :param x: Column coordinates [m], nonempty.
        :param y: Row coordinates [m], nonempty.
        """
        super(MapGrid, self).__init__()
        x = np.atleast_1d(np.asarray(x, dtype=float))
        y = np.atleast_1d(np.asarray(y, dtype=float))
        if x.ndim != 1 or y.ndim != 1 or x.size == 0 or y.size == 0:
            raise DomainError("grid", (x, y), "nonempty 1-d coordinates")
        self._x = x
        self._y = y

    @classmethod
    def from_extent(cls, x_range, y_range, shape=DEFAULT_SHAPE):
        """
        Regular grid with cell centers spanning the given ranges [m].

        :param tuple x_range: (x_min, x_max).
        :param tuple y_range: (y_min, y_max).
        :param tuple shape: (rows, columns).
        :rtype: ~emf_coverage.spatial_map.MapGrid
        """
        rows, columns = (int(v) for v in shape)
        if rows < 1 or columns < 1:
            raise DomainError("shape", shape, "rows, columns >= 1")
        return cls(np.linspace(x_range[0], x_range[1], columns),
                   np.linspace(y_range[0], y_range[1], rows))

    @classmethod
    def from_km(cls, x_range_km, y_range_km, shape=DEFAULT_SHAPE):
        """
        :py:meth:`from_extent` with ranges in km.

        :rtype: ~emf_coverage.spatial_map.MapGrid
        """
        return cls.from_extent([1e3 * v for v in x_range_km],
                               [1e3 * v for v in y_range_km], shape)

    @property
    def x(self):
        """
        :type: numpy.ndarray
        """
        return self._x

    @property
    def y(self):
        """
        :type: numpy.ndarray
        """
        return self._y

    @property
    def shape(self):
        """
        (rows, columns).

        :type: tuple
        """
        return self._y.size, self._x.size

    @property
    def size(self):
        """
        Number of cells.

        :type: int
        """
        return self._x.size * self._y.size

    @property
    def points(self):
        """
        Cell locations [m], shape (size, 2), row-major.

        :type: numpy.ndarray
        """
        xx, yy = np.meshgrid(self._x, self._y)
        return np.column_stack([xx.ravel(), yy.ravel()])

    def __repr__(self):
        return "MapGrid(shape={})".format(self.shape)


class MapResult(object):
    """
    Values of one metric over a :py:class:`MapGrid`.
    """

    def __init__(self, grid, metric, threshold, cells):
        """
        :param ~emf_coverage.spatial_map.MapGrid grid: Locations.
        :param str metric: Evaluated metric.
        :param threshold: Threshold(s) of the metric, ``None`` for the mean.
        :param list cells: Per cell (row-major) a value or an exception.
        """
        super(MapResult, self).__init__()
        self._grid = grid
        self._metric = metric
        self._threshold = threshold
        self._cells = list(cells)

    @property
    def grid(self):
        """
        :type: ~emf_coverage.spatial_map.MapGrid
        """
        return self._grid

    @property
    def metric(self):
        """
        :type: str
        """
        return self._metric

    @property
    def threshold(self):
        """
        Threshold(s) the metric was evaluated at; ``None`` for the mean.

        :type: float or numpy.ndarray
        """
        return self._threshold

    @property
    def cells(self):
        """
        Per cell the value, or the exception the cell raised.

        :type: list
        """
        return self._cells

    @property
    def failures(self):
        """
        Failed cells as ``{index: exception}``.

        :type: dict
        """
        return {index: cell for index, cell in enumerate(self._cells)
                if isinstance(cell, Exception)}

    @property
    def values(self):
        """
        Values reshaped to the grid (trailing axis for threshold arrays);
        ``nan`` in failed cells.

        :type: numpy.ndarray
        """
        width = np.size(self._threshold) if self._threshold is not None \
            else 1
        rows = [np.full(width, np.nan) if isinstance(cell, Exception)
                else np.atleast_1d(np.asarray(cell, dtype=float))
                for cell in self._cells]
        out = np.array(rows).reshape(self._grid.shape + (width,))
        if self._threshold is None or np.ndim(self._threshold) == 0:
            out = out[..., 0]
        return out

    @property
    def average(self):
        """
        Mean over the cells that succeeded (over the grid axes only).

        :rtype: float or numpy.ndarray
        """
        values = self.values.reshape((self._grid.size, -1))
        valid = ~np.any(np.isnan(values), axis=1)
        if not np.any(valid):
            return np.nan
        mean = np.mean(values[valid], axis=0)
        return float(mean[0]) if mean.size == 1 and \
            np.ndim(self._threshold) == 0 else mean

    def rows(self):
        """
        Yields ``(x, y, value, error)`` per cell; ``error`` is the exception
        name or an empty string.
        """
        for (x, y), cell in zip(self._grid.points, self._cells):
            if isinstance(cell, Exception):
                yield x, y, np.nan, type(cell).__name__
            else:
                yield x, y, cell, ""

    def __repr__(self):
        return "MapResult(metric={!r}, shape={}, failures={})".format(
            self._metric, self._grid.shape, len(self.failures))


def evaluate_cell(metric, point, model, geom, radio, bf, threshold=None,
                  quad=None, method="quadrature", sigma2=None):
    """
    Value of ``metric`` for a user at ``point``.

    :param str metric: One of :py:data:`METRICS`.
    :param point: User location (x, y) [m], same frame as ``model``.
    :param ~emf_coverage.radial_density.IpppModel model:
        Density model seen from the origin.
    :param threshold: T' [W] for ``exposure-cdf`` (scalar or array), t
        (linear) for ``sinr-ccdf``.
    :param float sigma2: Noise power [W] of ``sinr-ccdf``; defaults to the
        radio's thermal noise.
    :return: The value (an array for a threshold array).
    """
    study = MvStudy(recenter(model, point), geom, radio, bf, quad=quad,
                    method=method)
    if metric == "mean-exposure":
        return mean_exposure(study)
    if metric == "exposure-cdf":
        values = [cdf_exposure(t, study)
                  for t in np.atleast_1d(np.asarray(threshold, dtype=float))]
        return values[0] if np.ndim(threshold) == 0 else np.array(values)
    return ccdf_sinr(threshold, study, sigma2=sigma2)


def _cell_task(task):
    try:
        return evaluate_cell(*task)
    except EmfCoverageError as e:
        return e


def evaluate_map(metric, grid, model, geom, radio, bf, threshold=None,
                 quad=None, method="quadrature", workers=1, sigma2=None):
    """
    Evaluates ``metric`` at every location of ``grid``.

    :param str metric: One of :py:data:`METRICS`.
    :param ~emf_coverage.spatial_map.MapGrid grid: User locations.
    :param ~emf_coverage.radial_density.IpppModel model:
        Density model seen from the origin of the grid frame.
    :param ~emf_coverage.model.GeometryConfig geom: Study annulus per cell.
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :param ~emf_coverage.model.BeamformingConfig bf: Antenna model.
    :param threshold: Threshold of the CDF/CCDF metrics.
    :param ~emf_coverage.inversion.QuadratureConfig quad: Accuracy settings.
    :param str method: CF exponent method of the per-cell studies.
    :param int workers: Worker processes; 1 evaluates in-process.
    :param float sigma2: Noise power [W] of ``sinr-ccdf``; defaults to the
        radio's thermal noise.
    :rtype: ~emf_coverage.spatial_map.MapResult
    """
    if metric not in METRICS:
        raise DomainError("metric", metric, "one of {}".format(METRICS))
    if metric != "mean-exposure" and threshold is None:
        raise DomainError("threshold", threshold,
                          "a threshold for {}".format(metric))
    tasks = [(metric, point, model, geom, radio, bf, threshold, quad, method,
              sigma2) for point in grid.points]
    if workers > 1:
        pool = multiprocessing.Pool(int(workers))
        try:
            cells = pool.map(_cell_task, tasks)
        finally:
            pool.close()
            pool.join()
    else:
        cells = [_cell_task(task) for task in tasks]
    result = MapResult(grid, metric, threshold, cells)
    for index, failure in sorted(result.failures.items()):
        log.warning("evaluate_map cell {} at {} failed: {}".format(
            index, tuple(grid.points[index]), failure))
    log.debug("evaluate_map evaluated: " +
              "metric={} ".format(metric) +
              "cells={} ".format(grid.size) +
              "failures={} ".format(len(result.failures)) +
              "workers={}".format(workers))
    return result


def exposure_cdf_map_average(thresholds, grid, model, geom, radio, bf,
                             quad=None, method="quadrature", workers=1):
    """
    Exposure CDF averaged over the locations of ``grid``: the law of the
    exposure of a user placed uniformly on the grid.

    :param thresholds: Exposure thresholds T' [W].
    :return: Tuple ``(average, result)`` with the averaged CDF per threshold
        and the per-cell :py:class:`MapResult`.
    :rtype: tuple
    """
    thresholds = np.atleast_1d(np.asarray(thresholds, dtype=float))
    result = evaluate_map("exposure-cdf", grid, model, geom, radio, bf,
                          threshold=thresholds, quad=quad, method=method,
                          workers=workers)
    return np.atleast_1d(result.average), result
