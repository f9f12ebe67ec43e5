# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from emf_coverage.errors import DomainError, QuadratureError
from emf_coverage.quadrature import PanelRule, gauss_legendre, \
    geometric_edges, graded_edges, merge_edges, tanh_sinh
import math
import numpy as np
import pytest


@pytest.fixture
def rule():
    return PanelRule(geometric_edges(0.0, 3.0, 0.1, 0.8), order=12)


def test_gauss_legendre_is_cached_and_read_only():
    nodes, weights = gauss_legendre(8)
    assert gauss_legendre(8)[0] is nodes
    assert weights.sum() == pytest.approx(2.0)
    with pytest.raises(ValueError):
        nodes[0] = 0.0
    with pytest.raises(DomainError):
        gauss_legendre(0)


def test_panel_rule_integrate(rule):
    assert rule.integrate(np.cos(rule.nodes)) == pytest.approx(math.sin(3.0),
                                                               rel=1e-13)
    assert rule.size == rule.nodes.size
    assert rule.lower == 0.0
    assert rule.upper == 3.0


def test_panel_rule_running_integrals(rule):
    x = rule.nodes
    np.testing.assert_allclose(rule.tail(np.cos(x)),
                               math.sin(3.0) - np.sin(x), atol=1e-12)
    np.testing.assert_allclose(rule.head(np.cos(x)), np.sin(x), atol=1e-12)


def test_panel_rule_tail_along_axis(rule):
    x = rule.nodes
    values = np.stack([np.cos(x), 2.0 * x])
    tails = rule.tail(values, axis=1)
    assert tails.shape == values.shape
    np.testing.assert_allclose(tails[1], 9.0 - x ** 2, atol=1e-11)


def test_panel_rule_tail_matrix(rule):
    values = np.exp(-rule.nodes)
    np.testing.assert_allclose(np.dot(rule.tail_matrix(), values),
                               rule.tail(values), atol=1e-13)


def test_panel_rule_rejects_bad_edges():
    with pytest.raises(DomainError, match="strictly increasing"):
        PanelRule([0.0, 1.0, 1.0])
    with pytest.raises(DomainError):
        PanelRule([1.0])


def test_geometric_edges():
    edges = geometric_edges(0.0, 10.0, 0.1, 2.0)
    widths = np.diff(edges)
    assert edges[0] == 0.0
    assert edges[-1] == 10.0
    assert widths[0] == pytest.approx(0.1)
    assert np.all(widths > 0)
    assert widths.max() <= 2.5
    with pytest.raises(DomainError):
        geometric_edges(1.0, 1.0, 0.1, 1.0)


def test_graded_edges():
    edges = graded_edges(0.0, 10.0, 3.0, 1e-3, 1.0)
    assert edges[0] == 0.0
    assert edges[-1] == 10.0
    assert 3.0 in edges
    assert np.all(np.diff(edges) > 0)
    index = int(np.flatnonzero(edges == 3.0)[0])
    assert edges[index + 1] - 3.0 == pytest.approx(1e-3)
    assert 3.0 - edges[index - 1] == pytest.approx(1e-3)


def test_graded_edges_focus_outside():
    edges = graded_edges(0.0, 2.0, 5.0, 1e-3, 0.5)
    np.testing.assert_allclose(edges, [0.0, 0.5, 1.0, 1.5, 2.0])


def test_merge_edges():
    merged = merge_edges([0.0, 1.0, 2.0], [0.5, 1.0 + 1e-15, 2.0])
    np.testing.assert_allclose(merged, [0.0, 0.5, 1.0, 2.0])


@pytest.mark.parametrize("function,a,b,expected", [
    (np.log, 0.0, 1.0, -1.0),
    (lambda x: x ** -0.5, 0.0, 1.0, 2.0),
    (lambda x: np.log(np.abs(x - 1.0)), 1.0, 3.0, 2.0 * math.log(2.0) - 2.0),
    (np.exp, 1.0, 0.0, 1.0 - math.e),
])
def test_tanh_sinh(function, a, b, expected):
    value, error = tanh_sinh(function, a, b)
    assert value == pytest.approx(expected, rel=1e-9)
    assert error <= 1e-8


def test_tanh_sinh_empty_interval():
    assert tanh_sinh(np.exp, 2.0, 2.0) == (0.0, 0.0)


def test_tanh_sinh_failure():
    with pytest.raises(QuadratureError) as info:
        tanh_sinh(lambda x: np.sign(np.sin(1000.0 * x)), 0.0, 1.0,
                  max_level=4)
    assert info.value.interval == (0.0, 1.0)
