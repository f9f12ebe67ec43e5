# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Quadrature rules shared by the analytic metrics.

:py:class:`PanelRule` is a composite Gauss-Legendre rule which, besides the
plain integral, evaluates running integrals from every node to either end of
the interval. The running integrals are needed by all conditional metrics,
which integrate over the positions beyond the serving base station.
:py:func:`tanh_sinh` handles integrands with endpoint singularities.
"""

from __future__ import absolute_import, division, print_function
from .errors import DomainError, QuadratureError
from numpy.polynomial import legendre
import functools
import math
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Default number of Gauss-Legendre nodes per panel.
DEFAULT_ORDER = 16

#: Largest |t| of the tanh-sinh abscissae (weights below ~1e-40 beyond).
TANH_SINH_T_MAX = 3.5


@functools.lru_cache(maxsize=None)
def gauss_legendre(order):
    """
    Gauss-Legendre nodes and weights on [-1, 1].

    :param int order: Number of nodes.
    :return: Tuple ``(nodes, weights)`` of read-only arrays.
    :rtype: tuple
    """
    if order < 1:
        raise DomainError("order", order, "order >= 1")
    nodes, weights = legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


@functools.lru_cache(maxsize=None)
def _reference_tail_matrix(order):
    """
    Matrix S with S[i, j] = ∫_{x_i}^{1} ℓ_j(x) dx, ℓ_j being the Lagrange
    polynomials of the Gauss-Legendre nodes x_j.

    The Lagrange polynomials are expanded in Legendre polynomials through
    the discrete orthogonality of the Gauss nodes, and ∫_x^1 P_k uses
    (2k+1)·∫_x^1 P_k = P_{k-1}(x) - P_{k+1}(x).
    """
    x, w = gauss_legendre(order)
    vander = legendre.legvander(x, order)
    k = np.arange(order)
    integrals = np.empty((order, order))
    integrals[:, 0] = 1.0 - x
    integrals[:, 1:] = (vander[:, :order - 1] - vander[:, 2:order + 1]) / \
        (2.0 * k[1:] + 1.0)
    coefficients = vander[:, :order] * (2.0 * k + 1.0) / 2.0
    matrix = np.dot(integrals, coefficients.T) * w[None, :]
    matrix.setflags(write=False)
    return matrix


class PanelRule(object):
    """
    Composite Gauss-Legendre rule on consecutive panels.
    """

    def __init__(self, edges, order=DEFAULT_ORDER):
        """
        Creates the rule.

        :param edges: Strictly increasing panel edges (at least two).
        :param int order: Nodes per panel.
        :raise ~emf_coverage.errors.DomainError:
            If the edges are not strictly increasing.
        """
        super(PanelRule, self).__init__()
        edges = np.asarray(edges, dtype=float)
        if edges.ndim != 1 or edges.size < 2 or np.any(np.diff(edges) <= 0):
            raise DomainError("edges", edges, "strictly increasing, size >= 2")
        x_ref, w_ref = gauss_legendre(order)
        self._edges = edges
        self._order = int(order)
        self._half = 0.5 * np.diff(edges)
        middle = 0.5 * (edges[1:] + edges[:-1])
        self._nodes = (middle[:, None] + self._half[:, None] * x_ref).ravel()
        self._weights = (self._half[:, None] * w_ref).ravel()

    @property
    def edges(self):
        """
        Panel edges.

        :type: numpy.ndarray
        """
        return self._edges

    @property
    def order(self):
        """
        Nodes per panel.

        :type: int
        """
        return self._order

    @property
    def nodes(self):
        """
        All nodes, panel by panel, ascending.

        :type: numpy.ndarray
        """
        return self._nodes

    @property
    def weights(self):
        """
        Quadrature weights belonging to :py:attr:`nodes`.

        :type: numpy.ndarray
        """
        return self._weights

    @property
    def size(self):
        """
        Total number of nodes.

        :type: int
        """
        return self._nodes.size

    @property
    def lower(self):
        return self._edges[0]

    @property
    def upper(self):
        return self._edges[-1]

    def integrate(self, values, axis=0):
        """
        Integral over the whole interval.

        :param values: Integrand values at :py:attr:`nodes` along ``axis``.
        :param int axis: Node axis of ``values``.
        :return: The integral, with ``axis`` removed.
        """
        values = np.moveaxis(np.asarray(values), axis, 0)
        return np.tensordot(self._weights, values, axes=(0, 0))

    def tail(self, values, axis=0):
        """
        Running integrals ∫_{x_i}^{upper} from every node x_i to the upper
        end of the interval.

        :param values: Integrand values at :py:attr:`nodes` along ``axis``.
        :param int axis: Node axis of ``values``.
        :return: Array of the same shape as ``values``.
        """
        values = np.moveaxis(np.asarray(values), axis, 0)
        panels = self._edges.size - 1
        rest = values.shape[1:]
        blocks = values.reshape((panels, self._order) + rest)
        scale = self._half.reshape((panels,) + (1,) * len(rest))
        _, w_ref = gauss_legendre(self._order)
        totals = np.tensordot(w_ref, blocks, axes=(0, 1)) * scale
        inside = np.einsum('ij,pj...->pi...',
                           _reference_tail_matrix(self._order), blocks)
        inside = inside * scale[:, None]
        after = np.cumsum(totals[::-1], axis=0)[::-1] - totals
        out = (inside + after[:, None]).reshape(values.shape)
        return np.moveaxis(out, 0, axis)

    def head(self, values, axis=0):
        """
        Running integrals ∫_{lower}^{x_i} from the lower end of the interval
        to every node x_i.

        :param values: Integrand values at :py:attr:`nodes` along ``axis``.
        :param int axis: Node axis of ``values``.
        :return: Array of the same shape as ``values``.
        """
        total = np.expand_dims(self.integrate(values, axis=axis), axis)
        return total - self.tail(values, axis=axis)

    def tail_matrix(self):
        """
        Explicit matrix M with (M·v)_i = ∫_{x_i}^{upper} of the interpolant of
        the node values v.

        :rtype: numpy.ndarray
        """
        n = self.size
        matrix = np.zeros((n, n))
        _, w_ref = gauss_legendre(self._order)
        reference = _reference_tail_matrix(self._order)
        for panel, half in enumerate(self._half):
            rows = slice(panel * self._order, (panel + 1) * self._order)
            matrix[rows, rows] = half * reference
            if panel + 1 < self._half.size:
                later = self._weights[(panel + 1) * self._order:]
                matrix[rows, (panel + 1) * self._order:] = later[None, :]
        return matrix

    def __repr__(self):
        return "PanelRule(panels={}, order={}, interval=[{!r}, {!r}])".format(
            self._edges.size - 1, self._order, self.lower, self.upper)


def geometric_edges(start, stop, first_width, max_width, growth=1.6):
    """
    Panel edges on [start, stop] whose widths grow geometrically from
    ``first_width`` up to ``max_width``.

    :param float start: Lower end.
    :param float stop: Upper end, > start.
    :param float first_width: Width of the first panel.
    :param float max_width: Largest panel width.
    :param float growth: Ratio of consecutive widths.
    :rtype: numpy.ndarray
    """
    if not stop > start:
        raise DomainError("stop", stop, "stop > start")
    width = min(first_width, max_width)
    edges = [float(start)]
    while edges[-1] + width < stop:
        edges.append(edges[-1] + width)
        width = min(width * growth, max_width)
    if len(edges) > 1 and stop - edges[-1] < 0.25 * width:
        edges[-1] = float(stop)
    else:
        edges.append(float(stop))
    return np.array(edges)


def graded_edges(start, stop, focus, smallest, max_width, growth=2.0):
    """
    Panel edges on [start, stop] refined geometrically toward ``focus`` from
    both sides, for integrands with a (weak) singularity at ``focus``.

    :param float start: Lower end.
    :param float stop: Upper end.
    :param float focus: Refinement point; ignored if outside (start, stop).
    :param float smallest: Width of the panels touching ``focus``.
    :param float max_width: Largest panel width.
    :param float growth: Ratio of consecutive widths.
    :rtype: numpy.ndarray
    """
    if not start < focus < stop:
        return geometric_edges(start, stop, max_width, max_width)
    right = geometric_edges(focus, stop, smallest, max_width, growth)
    left = focus - geometric_edges(0.0, focus - start, smallest, max_width,
                                   growth)[::-1]
    left[0] = start
    return np.concatenate([left[:-1], right])


def merge_edges(*edge_arrays, **kwargs):
    """
    Union of several edge arrays, dropping edges closer than ``min_gap``
    (relative to the total length) to their predecessor.

    :rtype: numpy.ndarray
    """
    min_gap = kwargs.get("min_gap", 1e-12)
    merged = np.unique(np.concatenate([np.asarray(e, dtype=float)
                                       for e in edge_arrays]))
    gap = min_gap * (merged[-1] - merged[0])
    keep = np.concatenate([[True], np.diff(merged) > gap])
    keep[-1] = True
    out = merged[keep]
    if out.size > 2 and out[-1] - out[-2] <= gap:
        out = np.delete(out, -2)
    return out


def _tanh_sinh_level(a, b, level):
    """
    Nodes and weights (without the mesh factor h) added at a refinement
    level of the tanh-sinh rule on [a, b].
    """
    h = 2.0 ** -level
    count = int(math.floor(TANH_SINH_T_MAX / h))
    k = np.arange(-count, count + 1)
    if level > 0:
        k = k[k % 2 != 0]
    t = k * h
    y = 0.5 * math.pi * np.sinh(t)
    decay = np.exp(-2.0 * np.abs(y))
    # distance to the nearest endpoint, relative to b - a
    fraction = decay / (1.0 + decay)
    x = np.where(t >= 0, b - (b - a) * fraction, a + (b - a) * fraction)
    w = 0.5 * (b - a) * 0.5 * math.pi * np.cosh(t) * 4.0 * decay / \
        (1.0 + decay) ** 2
    inside = (x > a) & (x < b) & (w > 0)
    return x[inside], w[inside]


def tanh_sinh(function, a, b, abs_tol=1e-12, rel_tol=1e-10, max_level=9):
    """
    Double-exponential (tanh-sinh) quadrature of ``function`` over [a, b].

    The rule never evaluates the endpoints, so integrable endpoint
    singularities (logarithmic, algebraic) are allowed. The mesh is halved
    until two consecutive estimates agree.

    :param callable function: Vectorized integrand.
    :param float a: Lower end.
    :param float b: Upper end.
    :param float abs_tol: Absolute tolerance.
    :param float rel_tol: Relative tolerance.
    :param int max_level: Maximum number of mesh halvings.
    :return: Tuple ``(value, error_estimate)``.
    :rtype: tuple
    :raise ~emf_coverage.errors.QuadratureError:
        If the tolerance is not met at ``max_level``.
    """
    if a == b:
        return 0.0, 0.0
    if a > b:
        value, error = tanh_sinh(function, b, a, abs_tol, rel_tol, max_level)
        return -value, error
    total = 0.0
    previous = None
    error = np.inf
    for level in range(max_level + 1):
        x, w = _tanh_sinh_level(a, b, level)
        if x.size:
            total = total + np.sum(w * np.asarray(function(x)))
        value = total * 2.0 ** -level
        if previous is not None:
            error = abs(value - previous)
            if level >= 3 and error <= max(abs_tol, rel_tol * abs(value)):
                log.debug("tanh_sinh converged: " +
                          "interval=[{}, {}] ".format(a, b) +
                          "level={} ".format(level) +
                          "error={}".format(error))
                return value, error
        previous = value
    raise QuadratureError(value, error, (a, b))
