# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
β-Ginibre point process (β-GPP) seen from the typical user.

The squared distances Y_1, Y_2, ... of the Ginibre process with intensity
λ/β are independent with Y_i ~ Gamma(i, c/β), c = πλ. Independent thinning
with retention probability β yields the β-GPP of intensity λ; β -> 0 tends
to the homogeneous Poisson point process (H-PPP).
"""

from __future__ import absolute_import, division, print_function
from .deployment import Deployment, as_generator
from .errors import DomainError
from scipy import special
import math
import numbers
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Default truncation order N of the infinite sums and products.
DEFAULT_TRUNCATION = 50

#: Largest probability that the last sampled index still falls in the disk.
INDEX_TAIL = 1e-6


class BetaGppModel(object):
    """
    β-GPP topology: density λ, repulsion β and truncation order N.
    """

    def __init__(self, lam, beta, n_trunc=DEFAULT_TRUNCATION):
        """
        :param float lam: Base station density [1/m²], > 0.
        :param float beta:
            Repulsion in [0, 1]; 0 selects the H-PPP reduction.
        :param int n_trunc: Truncation order N >= 1.
        :raise ~emf_coverage.errors.DomainError:
            If a parameter is out of range.
        """
        super(BetaGppModel, self).__init__()
        lam = float(lam)
        beta = float(beta)
        if not lam > 0 or not math.isfinite(lam):
            raise DomainError("lam", lam, "lam > 0")
        if not 0.0 <= beta <= 1.0:
            raise DomainError("beta", beta, "0 <= beta <= 1")
        if isinstance(n_trunc, bool) or \
                not isinstance(n_trunc, numbers.Integral) or n_trunc < 1:
            raise DomainError("n_trunc", n_trunc, "integer n_trunc >= 1")
        self._lam = lam
        self._beta = beta
        self._n_trunc = int(n_trunc)

    @classmethod
    def from_km(cls, lambda_per_km2, beta, n_trunc=DEFAULT_TRUNCATION):
        """
        Creates a model from a density in BS/km².

        :rtype: ~emf_coverage.ginibre.BetaGppModel
        """
        return cls(lam=lambda_per_km2 * 1e-6, beta=beta, n_trunc=n_trunc)

    def replace(self, **changes):
        """
        Returns a copy with some fields replaced.

        :rtype: ~emf_coverage.ginibre.BetaGppModel
        """
        fields = dict(lam=self._lam, beta=self._beta, n_trunc=self._n_trunc)
        fields.update(changes)
        return BetaGppModel(**fields)

    @property
    def lam(self):
        """
        Base station density λ [1/m²].

        :type: float
        """
        return self._lam

    @property
    def beta(self):
        """
        Repulsion parameter β.

        :type: float
        """
        return self._beta

    @property
    def n_trunc(self):
        """
        Truncation order N.

        :type: int
        """
        return self._n_trunc

    @property
    def c(self):
        """
        c = πλ [1/m²].

        :type: float
        """
        return math.pi * self._lam

    @property
    def is_poisson(self):
        """
        ``True`` for the H-PPP reduction (β = 0).

        :type: bool
        """
        return self._beta == 0.0

    @property
    def rate(self):
        """
        Rate c/β of the Gamma laws of the squared distances; for β = 0 the
        rate c of the H-PPP ordered distances.

        :type: float
        """
        return self.c if self.is_poisson else self.c / self._beta

    @property
    def truncated_mass(self):
        """
        Probability (1-β)^N that none of the first N points is retained.

        :type: float
        """
        return (1.0 - self._beta) ** self._n_trunc

    def __repr__(self):
        return "BetaGppModel(lam={!r}, beta={!r}, n_trunc={!r})".format(
            self._lam, self._beta, self._n_trunc)


def bgpp_distance_pdf(i, u, model):
    """
    Density of the squared distance Y_i of the i-th point,
    u^(i-1)·e^(-cu/β)·(c/β)^i/(i-1)!, computed in log space.

    For β = 0 the density of the i-th nearest squared distance of the H-PPP
    (Gamma(i, c)) is returned.

    :param int i: Index >= 1.
    :param u: Squared distance(s) [m²], >= 0.
    :param ~emf_coverage.ginibre.BetaGppModel model: Topology.
    :rtype: float or numpy.ndarray
    """
    i = np.asarray(i)
    if np.any(i < 1):
        raise DomainError("i", i, "i >= 1")
    uu = np.asarray(u, dtype=float)
    if np.any(uu < 0):
        raise DomainError("u", u, "u >= 0")
    rate = model.rate
    log_pdf = special.xlogy(i - 1.0, uu) - rate * uu + i * math.log(rate) - \
        special.gammaln(i)
    return np.exp(log_pdf)[()]


def index_cutoff(model, tau, tail=INDEX_TAIL):
    """
    Smallest index M whose squared distance Y_M falls inside the τ-disk with
    probability below ``tail``.

    :param ~emf_coverage.ginibre.BetaGppModel model: Topology (β > 0).
    :param float tau: Study-disk radius [m].
    :rtype: int
    """
    x = model.rate * tau ** 2
    count = max(int(math.ceil(x)), 1)
    step = max(int(math.sqrt(x)), 1)
    while special.gammainc(count, x) >= tail:
        count += step
    # back off to the smallest index fulfilling the criterion
    while count > 1 and special.gammainc(count - 1, x) < tail:
        count -= 1
    return count


def draw_bgpp(model, geom, rng, size):
    """
    Draws ``size`` independent realizations at once.

    :param ~emf_coverage.ginibre.BetaGppModel model: Topology (β > 0).
    :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
    :param numpy.random.Generator rng: Random stream.
    :param int size: Number of realizations.
    :return:
        Tuple ``(squared_distances, present)`` of (size, M) arrays; entry
        (k, i) holds Y_(i+1) of realization k and whether that point is
        retained inside the annulus.
    :rtype: tuple
    """
    count = index_cutoff(model, geom.tau)
    shape = np.arange(1, count + 1, dtype=float)
    squared = rng.gamma(shape[None, :], 1.0 / model.rate,
                        size=(size, count))
    retained = rng.random((size, count)) < model.beta
    present = retained & (squared >= geom.r_e ** 2) & \
        (squared <= geom.tau ** 2)
    return squared, present


def sample_hppp(lam, geom, seed=None):
    """
    Homogeneous Poisson deployment of density ``lam`` in the study annulus.

    :param float lam: Density [1/m²].
    :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
    :param seed: Seed or :py:class:`numpy.random.Generator`.
    :rtype: ~emf_coverage.deployment.Deployment
    """
    rng = as_generator(seed)
    count = rng.poisson(lam * geom.area)
    squared = rng.uniform(geom.r_e ** 2, geom.tau ** 2, size=count)
    angles = rng.uniform(-math.pi, math.pi, size=count)
    return Deployment.from_polar(np.sqrt(squared), angles)


def sample_bgpp(model, geom, seed=None):
    """
    One β-GPP deployment in the study annulus: squared radii drawn as
    independent Gamma(i, c/β) for i = 1..M, uniform angles, independent
    retention with probability β, then clipping to [r_e, τ]. β = 0 draws an
    H-PPP.

    :param ~emf_coverage.ginibre.BetaGppModel model: Topology.
    :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
    :param seed: Seed or :py:class:`numpy.random.Generator`.
    :rtype: ~emf_coverage.deployment.Deployment
    """
    rng = as_generator(seed)
    if model.is_poisson:
        return sample_hppp(model.lam, geom, rng)
    squared, present = draw_bgpp(model, geom, rng, 1)
    squared = squared[present]
    angles = rng.uniform(-math.pi, math.pi, size=squared.size)
    return Deployment.from_polar(np.sqrt(squared), angles)
