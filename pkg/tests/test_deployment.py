# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from emf_coverage.deployment import Deployment, as_generator, random_stream
from emf_coverage.errors import DomainError
import math
import numpy as np
import pytest


def test_random_stream_is_reproducible():
    first = random_stream(42, replication=3, dimension=1).random(5)
    second = random_stream(42, replication=3, dimension=1).random(5)
    np.testing.assert_array_equal(first, second)


@pytest.mark.parametrize("other", [(43, 3, 1), (42, 4, 1), (42, 3, 2)])
def test_random_streams_are_distinct(other):
    reference = random_stream(42, 3, 1).random(5)
    assert not np.array_equal(random_stream(*other).random(5), reference)


def test_as_generator():
    rng = np.random.default_rng(1)
    assert as_generator(rng) is rng
    assert isinstance(as_generator(7), np.random.Generator)


def test_deployment_geometry():
    deployment = Deployment([[3.0, 4.0], [-1.0, 0.0], [0.0, -10.0]])
    assert len(deployment) == 3
    np.testing.assert_allclose(deployment.squared_distances, [25, 1, 100])
    np.testing.assert_allclose(deployment.distances, [5, 1, 10])
    assert deployment.nearest_index == 1
    assert deployment.serving_distance == 1.0
    assert deployment.angles[1] == pytest.approx(math.pi)


def test_deployment_is_read_only():
    deployment = Deployment(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        deployment.points[0, 0] = 1.0


def test_empty_deployment():
    deployment = Deployment(np.empty((0, 2)))
    assert deployment.count == 0
    assert deployment.nearest_index is None
    assert math.isnan(deployment.serving_distance)


def test_from_polar():
    deployment = Deployment.from_polar([2.0, 1.0], [0.0, 0.5 * math.pi])
    np.testing.assert_allclose(deployment.points, [[2, 0], [0, 1]],
                               atol=1e-15)


def test_clip():
    deployment = Deployment.from_polar([0.5, 1.0, 5.0, 10.0, 11.0],
                                       np.zeros(5))
    clipped = deployment.clip(1.0, 10.0)
    np.testing.assert_allclose(clipped.distances, [1.0, 5.0, 10.0])
    with pytest.raises(DomainError):
        deployment.clip(10.0, 10.0)


def test_shifted():
    deployment = Deployment([[1.0, 1.0]]).shifted([1.0, -1.0])
    np.testing.assert_allclose(deployment.points, [[0.0, 2.0]])
