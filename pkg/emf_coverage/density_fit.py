# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Least-squares fit of the radial density λ(Δ) = ã/Δ + b̃ + c̃Δ + d̃Δ² to a base
station dataset, and the dataset reader.
"""

from __future__ import absolute_import, division, print_function
from .errors import InsufficientDataError, ScenarioError
from .quadrature import gauss_legendre
from .radial_density import IpppModel, validate_density
import io
import math
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Default number of Δ bins.
DEFAULT_BINS = 20

#: Number of coefficients of the density model.
COEFFICIENTS = 4

#: Conversion factors of the dataset units to m.
UNITS = {"m": 1.0, "km": 1e3}


class FitResult(object):
    """
    Outcome of :py:func:`fit_radial_density`.
    """

    def __init__(self, model, residual, edges, counts, expected, violations):
        super(FitResult, self).__init__()
        self._model = model
        self._residual = residual
        self._edges = edges
        self._counts = counts
        self._expected = expected
        self._violations = violations

    @property
    def model(self):
        """
        Fitted (unconstrained) density model.

        :type: ~emf_coverage.radial_density.IpppModel
        """
        return self._model

    @property
    def residual(self):
        """
        Weighted sum of squared residuals per degree of freedom.

        :type: float
        """
        return self._residual

    @property
    def edges(self):
        """
        Δ bin edges [m].

        :type: numpy.ndarray
        """
        return self._edges

    @property
    def counts(self):
        """
        Observed base station count per bin.

        :type: numpy.ndarray
        """
        return self._counts

    @property
    def expected(self):
        """
        Count per bin predicted by the fitted model.

        :type: numpy.ndarray
        """
        return self._expected

    @property
    def violations(self):
        """
        Density constraint violations of the fitted model.

        :type: list
        """
        return self._violations

    def __repr__(self):
        return "FitResult(model={!r}, residual={!r}, violations={})".format(
            self._model, self._residual, len(self._violations))


def read_bs_dataset(path):
    """
    Reads a base station dataset: a header line ``unit=km`` or ``unit=m``
    (optionally behind ``#``) followed by one ``x, y`` pair per line,
    separated by commas or whitespace. Empty lines and ``#`` comments are
    skipped.

    :param str path: Dataset file.
    :return: Coordinates [m], shape (n, 2).
    :rtype: numpy.ndarray
    :raise ~emf_coverage.errors.ScenarioError:
        If the header or a data line is malformed.
    """
    with io.open(path, "r", encoding="utf-8") as stream:
        lines = stream.read().splitlines()
    scale = None
    rows = []
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if scale is None:
            if not line:
                continue
            header = line.lstrip("#").strip().replace(" ", "")
            if not header.startswith("unit="):
                raise ScenarioError(
                    "{}: first line must declare unit=km or unit=m".format(
                        path))
            unit = header[len("unit="):]
            if unit not in UNITS:
                raise ScenarioError("{}: unknown unit {!r}".format(path,
                                                                   unit))
            scale = UNITS[unit]
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.replace(",", " ").split()
        try:
            x, y = (float(v) for v in fields)
        except ValueError:
            raise ScenarioError("{}:{}: expected two coordinates, got {!r}"
                                .format(path, number, raw))
        rows.append((x, y))
    if scale is None:
        raise ScenarioError("{}: empty dataset".format(path))
    points = scale * np.array(rows, dtype=float).reshape(-1, 2)
    log.debug("read_bs_dataset loaded: " +
              "path={} ".format(path) +
              "points={} ".format(points.shape[0]) +
              "scale={}".format(scale))
    return points


def _arc_fraction(delta, offset, tau):
    """
    Angle [rad] of the circle of radius Δ around a point at distance
    ``offset`` from the origin that lies inside the disk of radius ``tau``.
    """
    delta = np.asarray(delta, dtype=float)
    if offset == 0:
        return np.where(delta <= tau, 2.0 * math.pi, 0.0)
    with np.errstate(divide='ignore', invalid='ignore'):
        cosine = (delta ** 2 + offset ** 2 - tau ** 2) / (2.0 * delta *
                                                           offset)
    angle = 2.0 * np.arccos(np.clip(np.nan_to_num(cosine, nan=1.0),
                                    -1.0, 1.0))
    angle = np.where(delta + offset <= tau, 2.0 * math.pi, angle)
    return np.where(delta >= tau + offset, 0.0, angle)


def bin_design(edges, offset, tau, order=16):
    """
    Design matrix of the expected bin counts: entry (k, p) is
    ∫ Δ^p·φ(Δ) dΔ over bin k for p = 0..3, φ(Δ) being the angle of the
    Δ-circle inside the study disk. The count of bin k is then
    ã·A[k,0] + b̃·A[k,1] + c̃·A[k,2] + d̃·A[k,3].

    :param edges: Δ bin edges [m].
    :param float offset: Distance of the maximum-density point to the disk
        center [m].
    :param float tau: Disk radius [m].
    :rtype: numpy.ndarray
    """
    x_ref, w_ref = gauss_legendre(order)
    edges = np.asarray(edges, dtype=float)
    half = 0.5 * np.diff(edges)
    middle = 0.5 * (edges[1:] + edges[:-1])
    # the arc angle has kinks at |tau - offset|; refine by splitting bins there
    nodes = middle[:, None] + half[:, None] * x_ref
    weights = half[:, None] * w_ref
    kink = abs(tau - offset)
    design = np.zeros((edges.size - 1, COEFFICIENTS))
    for k in range(edges.size - 1):
        if edges[k] < kink < edges[k + 1]:
            pieces = [(edges[k], kink), (kink, edges[k + 1])]
            sub_nodes = np.concatenate([0.5 * (a + b) + 0.5 * (b - a) * x_ref
                                        for a, b in pieces])
            sub_weights = np.concatenate([0.5 * (b - a) * w_ref
                                          for a, b in pieces])
        else:
            sub_nodes, sub_weights = nodes[k], weights[k]
        angle = _arc_fraction(sub_nodes, offset, tau)
        for power in range(COEFFICIENTS):
            design[k, power] = np.sum(sub_weights * angle *
                                      sub_nodes ** power)
    return design


def fit_radial_density(points, center, tau, n_bins=DEFAULT_BINS):
    """
    Fits ã, b̃, c̃, d̃ to the base stations inside the disk of radius ``tau``
    around the origin.

    The points are binned by their distance Δ to ``center``; the expected
    count of each bin is linear in the coefficients (see
    :py:func:`bin_design`), and the coefficients solve the weighted linear
    least-squares problem with Poisson weights 1/max(n_k, 1). The fit is
    unconstrained; constraint violations are reported on the result.

    :param points: Base station coordinates [m], shape (n, 2).
    :param center: Assumed maximum-density point (x, y) [m].
    :param float tau: Dataset disk radius [m].
    :param int n_bins: Number of Δ bins.
    :rtype: ~emf_coverage.density_fit.FitResult
    :raise ~emf_coverage.errors.InsufficientDataError:
        With fewer points or non-empty bins than coefficients.
    """
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    center = np.asarray(center, dtype=float)
    inside = np.sum(points ** 2, axis=1) <= tau ** 2
    points = points[inside]
    if points.shape[0] < COEFFICIENTS:
        raise InsufficientDataError(points.shape[0], COEFFICIENTS)
    if points.shape[0] < COEFFICIENTS * n_bins:
        log.warning("fit_radial_density has {} points for {} bins, at least "
                    "{} are recommended".format(points.shape[0], n_bins,
                                                COEFFICIENTS * n_bins))
    offset = float(np.hypot(center[0], center[1]))
    delta = np.linalg.norm(points - center, axis=1)
    edges = np.linspace(0.0, tau + offset, n_bins + 1)
    counts = np.histogram(delta, bins=edges)[0].astype(float)
    design = bin_design(edges, offset, tau)
    usable = design[:, 0] > 0
    if np.count_nonzero(counts[usable] > 0) < COEFFICIENTS:
        raise InsufficientDataError(int(np.count_nonzero(counts > 0)),
                                    COEFFICIENTS)
    weights = np.sqrt(1.0 / np.maximum(counts[usable], 1.0))
    matrix = design[usable] * weights[:, None]
    norms = np.linalg.norm(matrix, axis=0)
    norms[norms == 0] = 1.0
    solution = np.linalg.lstsq(matrix / norms, counts[usable] * weights,
                               rcond=None)[0] / norms
    expected = np.dot(design, solution)
    dof = max(int(np.count_nonzero(usable)) - COEFFICIENTS, 1)
    residual = float(np.sum(((counts - expected)[usable] * weights) ** 2) /
                     dof)
    model = IpppModel(a_t=solution[0], b_t=solution[1], c_t=solution[2],
                      d_t=solution[3], rho_t=offset,
                      theta_t=math.atan2(center[1], center[0]))
    violations = validate_density(model, tau)
    for violation in violations:
        log.warning("fit_radial_density fitted model violates the {} "
                    "constraint for delta in [{:.1f}, {:.1f}] m".format(
                        violation.kind, violation.delta_min,
                        violation.delta_max))
    log.debug("fit_radial_density solved: " +
              "points={} ".format(points.shape[0]) +
              "bins={} ".format(n_bins) +
              "coefficients={} ".format(solution) +
              "residual={}".format(residual))
    return FitResult(model, residual, edges, counts, expected, violations)
