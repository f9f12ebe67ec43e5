# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Base station deployments seen from the evaluated user, and the random
streams all samplers draw from.
"""

from __future__ import absolute_import, division, print_function
from .errors import DomainError
import numpy as np

import logging
log = logging.getLogger(__name__)


def random_stream(seed, replication=0, dimension=0):
    """
    Independent random generator for one (replication, dimension) pair.

    The stream is derived from the master seed with
    :py:class:`numpy.random.SeedSequence` (spawn key ``(replication,
    dimension)``) and drives a counter-based Philox bit generator, so any
    batch can be regenerated alone and in any order.

    :param int seed: Master seed; ``None`` draws fresh OS entropy.
    :param int replication: Replication (batch) index.
    :param int dimension: Dimension index within a replication.
    :rtype: numpy.random.Generator
    """
    sequence = np.random.SeedSequence(
        entropy=seed, spawn_key=(int(replication), int(dimension)))
    return np.random.Generator(np.random.Philox(sequence))


def as_generator(seed):
    """
    Accepts a generator, or a seed for :py:func:`random_stream`.

    :rtype: numpy.random.Generator
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return random_stream(seed)


class Deployment(object):
    """
    Planar base station positions relative to the evaluated user, which sits
    at the origin.
    """

    def __init__(self, points):
        """
        :param points: Array of shape (n, 2) with coordinates in m.
        """
        super(Deployment, self).__init__()
        points = np.asarray(points, dtype=float).reshape(-1, 2)
        self._points = points
        self._points.setflags(write=False)

    @classmethod
    def from_polar(cls, radii, angles):
        """
        Creates a deployment from polar coordinates.

        :param radii: Horizontal distances [m].
        :param angles: Angles [rad].
        :rtype: ~emf_coverage.deployment.Deployment
        """
        radii = np.asarray(radii, dtype=float)
        angles = np.asarray(angles, dtype=float)
        return cls(np.column_stack([radii * np.cos(angles),
                                    radii * np.sin(angles)]))

    @property
    def points(self):
        """
        Base station coordinates [m], shape (n, 2).

        :type: numpy.ndarray
        """
        return self._points

    @property
    def count(self):
        """
        Number of base stations.

        :type: int
        """
        return self._points.shape[0]

    @property
    def squared_distances(self):
        """
        Squared horizontal distances u = r² [m²].

        :type: numpy.ndarray
        """
        return np.sum(self._points ** 2, axis=1)

    @property
    def distances(self):
        """
        Horizontal distances r [m].

        :type: numpy.ndarray
        """
        return np.sqrt(self.squared_distances)

    @property
    def angles(self):
        """
        Polar angles in (-π, π].

        :type: numpy.ndarray
        """
        return np.arctan2(self._points[:, 1], self._points[:, 0])

    @property
    def nearest_index(self):
        """
        Index of the nearest base station (the serving one), ``None`` if the
        deployment is empty.

        :type: int
        """
        if self.count == 0:
            return None
        return int(np.argmin(self.squared_distances))

    @property
    def serving_distance(self):
        """
        Distance R₀ to the serving base station, ``nan`` if empty.

        :type: float
        """
        index = self.nearest_index
        return np.nan if index is None else float(self.distances[index])

    def clip(self, r_e, tau):
        """
        Keeps the base stations inside the annulus r_e <= r <= τ.

        :param float r_e: Exclusion radius [m].
        :param float tau: Study-disk radius [m].
        :rtype: ~emf_coverage.deployment.Deployment
        """
        if not 0 <= r_e < tau:
            raise DomainError("tau", tau, "0 <= r_e < tau")
        u = self.squared_distances
        inside = (u >= r_e ** 2) & (u <= tau ** 2)
        return Deployment(self._points[inside])

    def shifted(self, offset):
        """
        Coordinates seen from a user placed at ``offset`` instead of the
        origin.

        :param offset: Planar point (x, y) [m].
        :rtype: ~emf_coverage.deployment.Deployment
        """
        return Deployment(self._points - np.asarray(offset, dtype=float))

    def __len__(self):
        return self.count

    def __repr__(self):
        return "Deployment(count={})".format(self.count)
