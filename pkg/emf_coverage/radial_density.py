# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Radial inhomogeneous Poisson point process (I-PPP).

The base station density decreases with the distance Δ to a point of
maximum density:

    λ(Δ) = ã/Δ + b̃ + c̃·Δ + d̃·Δ²,

with the maximum-density point at polar position (ρ̃, θ̃) relative to the
evaluated user. Seen from the user, the intensity measure Λ(r) of the disk
of radius r only depends on r; its derivative is

    Λ'(r) = r·[4ã·K(m')/(r+ρ̃) + 2πb̃ + 4c̃·(r+ρ̃)·E(m') + 2πd̃·(r²+ρ̃²)]

with m' = 4rρ̃/(r+ρ̃)² and complementary modulus |r-ρ̃|/(r+ρ̃). The K term
has a logarithmic singularity at r = ρ̃.
"""

from __future__ import absolute_import, division, print_function
from .deployment import Deployment, as_generator
from .errors import DomainError, EmptyRegionError, SingularityError
from .quadrature import tanh_sinh
from .specfun import elliptic_ke_complementary
from scipy import optimize
import collections
import math
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Smallest distance to the maximum-density point used by samplers [m].
MIN_DELTA = 1.0

#: Safety factor applied to the dominating density of the thinning.
DOMINATING_FACTOR = 1.001

#: Size of the Δ grids used for bounds and constraint checks.
GRID_SIZE = 4097

#: A density-constraint violation over a range of Δ.
DensityViolation = collections.namedtuple(
    "DensityViolation", ["kind", "delta_min", "delta_max", "extreme"])


class IpppModel(object):
    """
    Radial density model, coefficients in SI units (1/m, 1/m², 1/m³, 1/m⁴).
    """

    def __init__(self, a_t, b_t, c_t, d_t, rho_t=0.0, theta_t=0.0):
        """
        :param float a_t: ã [1/m].
        :param float b_t: b̃ [1/m²].
        :param float c_t: c̃ [1/m³].
        :param float d_t: d̃ [1/m⁴].
        :param float rho_t: Distance ρ̃ from the user to the maximum-density
            point [m], >= 0.
        :param float theta_t: Angle θ̃ of the maximum-density point [rad].
        """
        super(IpppModel, self).__init__()
        values = [float(v) for v in (a_t, b_t, c_t, d_t, rho_t, theta_t)]
        for name, value in zip(("a_t", "b_t", "c_t", "d_t", "rho_t",
                                "theta_t"), values):
            if not math.isfinite(value):
                raise DomainError(name, value, "finite value")
        if values[4] < 0:
            raise DomainError("rho_t", values[4], "rho_t >= 0")
        self._a_t, self._b_t, self._c_t, self._d_t = values[:4]
        self._rho_t = values[4]
        self._theta_t = math.atan2(math.sin(values[5]), math.cos(values[5]))

    @classmethod
    def from_km(cls, a_per_km, b_per_km2, c_per_km3, d_per_km4,
                center_km=(0.0, 0.0)):
        """
        Creates a model from the coefficients in km units and the planar
        position of the maximum-density point relative to the user.

        :param float a_per_km: ã [1/km].
        :param float b_per_km2: b̃ [1/km²].
        :param float c_per_km3: c̃ [1/km³].
        :param float d_per_km4: d̃ [1/km⁴].
        :param center_km: (x, y) of the maximum-density point [km].
        :rtype: ~emf_coverage.radial_density.IpppModel
        """
        x, y = (1e3 * float(v) for v in center_km)
        return cls(a_t=a_per_km * 1e-3, b_t=b_per_km2 * 1e-6,
                   c_t=c_per_km3 * 1e-9, d_t=d_per_km4 * 1e-12,
                   rho_t=math.hypot(x, y), theta_t=math.atan2(y, x))

    def replace(self, **changes):
        """
        Returns a copy with some fields replaced.

        :rtype: ~emf_coverage.radial_density.IpppModel
        """
        fields = dict(a_t=self._a_t, b_t=self._b_t, c_t=self._c_t,
                      d_t=self._d_t, rho_t=self._rho_t,
                      theta_t=self._theta_t)
        fields.update(changes)
        return IpppModel(**fields)

    def scaled(self, factor):
        """
        Model with all density coefficients multiplied by ``factor``.

        :rtype: ~emf_coverage.radial_density.IpppModel
        """
        return self.replace(a_t=self._a_t * factor, b_t=self._b_t * factor,
                            c_t=self._c_t * factor, d_t=self._d_t * factor)

    @property
    def a_t(self):
        """
        ã [1/m].

        :type: float
        """
        return self._a_t

    @property
    def b_t(self):
        """
        b̃ [1/m²].

        :type: float
        """
        return self._b_t

    @property
    def c_t(self):
        """
        c̃ [1/m³].

        :type: float
        """
        return self._c_t

    @property
    def d_t(self):
        """
        d̃ [1/m⁴].

        :type: float
        """
        return self._d_t

    @property
    def rho_t(self):
        """
        Distance ρ̃ from the user to the maximum-density point [m].

        :type: float
        """
        return self._rho_t

    @property
    def theta_t(self):
        """
        Angle θ̃ of the maximum-density point [rad].

        :type: float
        """
        return self._theta_t

    @property
    def center(self):
        """
        Planar position of the maximum-density point [m].

        :type: numpy.ndarray
        """
        return self._rho_t * np.array([math.cos(self._theta_t),
                                       math.sin(self._theta_t)])

    @property
    def is_homogeneous(self):
        """
        ``True`` if only b̃ is nonzero.

        :type: bool
        """
        return self._a_t == 0 and self._c_t == 0 and self._d_t == 0

    def profile(self, delta):
        """
        Density λ(Δ) [1/m²] at distance(s) Δ from the maximum-density point.
        """
        delta = np.asarray(delta, dtype=float)
        with np.errstate(divide='ignore'):
            inverse = np.where(delta > 0, self._a_t / delta,
                               np.copysign(np.inf, self._a_t))
        if self._a_t == 0:
            inverse = np.zeros_like(delta)
        return (inverse + self._b_t + self._c_t * delta +
                self._d_t * delta ** 2)[()]

    def profile_slope(self, delta):
        """
        Derivative ∂λ/∂Δ = -ã/Δ² + c̃ + 2d̃Δ.
        """
        delta = np.asarray(delta, dtype=float)
        with np.errstate(divide='ignore'):
            slope = self._c_t + 2.0 * self._d_t * delta
            if self._a_t != 0:
                slope = slope - self._a_t / delta ** 2
        return slope[()]

    def density(self, points):
        """
        Density λ at planar point(s) relative to the user.

        :param points: Array of shape (..., 2) [m].
        :rtype: numpy.ndarray
        """
        points = np.asarray(points, dtype=float)
        delta = np.linalg.norm(points - self.center, axis=-1)
        return self.profile(delta)

    def __repr__(self):
        return "IpppModel(a_t={!r}, b_t={!r}, c_t={!r}, d_t={!r}, " \
            "rho_t={!r}, theta_t={!r})".format(
                self._a_t, self._b_t, self._c_t, self._d_t, self._rho_t,
                self._theta_t)


def angular_integrals(r, rho):
    """
    ∫_0^{2π} Δ^(-1) dθ and ∫_0^{2π} Δ dθ on the circle of radius ``r``
    around the user, Δ being the distance to a point at distance ``rho``.

    :return: Tuple ``(inverse, linear)``; ``inverse`` is ``inf`` at r = rho.
    :rtype: tuple
    """
    r = np.asarray(r, dtype=float)
    total = r + rho
    with np.errstate(divide='ignore', invalid='ignore'):
        kprime = np.where(total > 0, np.abs(r - rho) / total, 1.0)
        k_std, e_std = elliptic_ke_complementary(np.clip(kprime, 0.0, 1.0))
        inverse = np.where(total > 0, 4.0 * k_std / total, np.inf)
    linear = 4.0 * total * e_std
    return inverse, linear


def intensity_derivative(r, model):
    """
    Derivative Λ'(r) of the intensity measure.

    :param r: Distance(s) [m], >= 0.
    :param ~emf_coverage.radial_density.IpppModel model: Density model.
    :rtype: float or numpy.ndarray
    :raise ~emf_coverage.errors.SingularityError:
        If ``r`` equals ρ̃ > 0 while ã is nonzero.
    """
    rr = np.asarray(r, dtype=float)
    if np.any(rr < 0):
        raise DomainError("r", r, "r >= 0")
    rho = model.rho_t
    if model.a_t != 0 and rho > 0 and np.any(rr == rho):
        raise SingularityError(rho)
    out = 2.0 * math.pi * rr * (model.b_t +
                                model.d_t * (rr ** 2 + rho ** 2))
    if rho == 0:
        out = out + 2.0 * math.pi * (model.a_t + model.c_t * rr ** 2)
        return out[()]
    inverse, linear = angular_integrals(rr, rho)
    if model.a_t != 0:
        out = out + model.a_t * rr * inverse
    if model.c_t != 0:
        out = out + model.c_t * rr * linear
    return out[()]


def elliptic_part_derivative(r, model):
    """
    ã and c̃ terms of Λ'(r) (the terms without closed-form antiderivative).
    """
    rr = np.asarray(r, dtype=float)
    rho = model.rho_t
    if rho == 0:
        return (2.0 * math.pi * (model.a_t + model.c_t * rr ** 2))[()]
    inverse, linear = angular_integrals(rr, rho)
    out = np.zeros_like(rr)
    if model.a_t != 0:
        out = out + model.a_t * rr * inverse
    if model.c_t != 0:
        out = out + model.c_t * rr * linear
    return out[()]


def closed_form_measure(r, model):
    """
    b̃ and d̃ terms of Λ(r): πb̃r² + πd̃(r⁴/2 + ρ̃²r²).
    """
    r = np.asarray(r, dtype=float)
    return (math.pi * model.b_t * r ** 2 +
            math.pi * model.d_t * (0.5 * r ** 4 + model.rho_t ** 2 * r ** 2)
            )[()]


def _elliptic_measure(r, model):
    """
    ∫_0^r of the ã and c̃ terms, split at the singular point ρ̃.
    """
    if r == 0 or (model.a_t == 0 and model.c_t == 0):
        return 0.0
    rho = model.rho_t
    if rho == 0:
        return 2.0 * math.pi * (model.a_t * r + model.c_t * r ** 3 / 3.0)
    magnitude = 2.0 * math.pi * (abs(model.a_t) * r +
                                 abs(model.c_t) * (r + rho) ** 3)
    tol = 1e-13 * magnitude + 1e-300

    def integrand(s):
        return elliptic_part_derivative(s, model)

    pieces = [(0.0, min(r, rho))]
    if r > rho:
        pieces.append((rho, r))
    value = 0.0
    for lower, upper in pieces:
        if upper > lower:
            value += tanh_sinh(integrand, lower, upper, abs_tol=tol,
                               rel_tol=1e-12)[0]
    return value


def intensity_measure(r, model):
    """
    Intensity measure Λ(r): expected number of base stations within
    distance ``r`` of the user. The b̃ and d̃ terms are closed-form, the ã and
    c̃ terms are integrated numerically by tanh-sinh quadrature on each side
    of ρ̃.

    :param r: Distance(s) [m], >= 0.
    :param ~emf_coverage.radial_density.IpppModel model: Density model.
    :rtype: float or numpy.ndarray
    :raise ~emf_coverage.errors.QuadratureError:
        If the numerical part does not converge.
    """
    rr = np.asarray(r, dtype=float)
    if np.any(rr < 0):
        raise DomainError("r", r, "r >= 0")
    numeric = np.array([_elliptic_measure(float(v), model)
                        for v in rr.ravel()]).reshape(rr.shape)
    return (closed_form_measure(rr, model) + numeric)[()]


def nearest_bs_pdf(r0, model, geom):
    """
    Density of the distance R₀ from the user to the nearest base station of
    the annulus, conditioned on the annulus holding at least one base
    station:

        Λ'(r₀)·e^(-Λ(r₀)) / (e^(-Λ(r_e)) - e^(-Λ(τ))).

    Zero outside [r_e, τ].

    :param r0: Distance(s) [m].
    :param ~emf_coverage.radial_density.IpppModel model: Density model.
    :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
    :rtype: float or numpy.ndarray
    :raise ~emf_coverage.errors.EmptyRegionError:
        If Λ(τ) - Λ(r_e) vanishes.
    """
    rr = np.asarray(r0, dtype=float)
    base = intensity_measure(geom.r_e, model)
    mass = intensity_measure(geom.tau, model) - base
    if not mass > 1e-12:
        raise EmptyRegionError(geom.r_e, geom.tau)
    inside = (rr >= geom.r_e) & (rr <= geom.tau)
    out = np.zeros(rr.shape)
    if np.any(inside):
        r_in = rr[inside]
        out[inside] = intensity_derivative(r_in, model) * \
            np.exp(-(intensity_measure(r_in, model) - base)) / \
            -math.expm1(-mass)
    return out[()]


def recenter(model, u_c):
    """
    Density model seen from a user at planar position ``u_c`` (same frame
    as the current user): the maximum-density point moves to
    ``center - u_c``; the coefficients are unchanged.

    :param ~emf_coverage.radial_density.IpppModel model: Density model.
    :param u_c: Planar point (x, y) [m].
    :rtype: ~emf_coverage.radial_density.IpppModel
    """
    shifted = model.center - np.asarray(u_c, dtype=float)
    return model.replace(rho_t=float(np.hypot(shifted[0], shifted[1])),
                         theta_t=float(np.arctan2(shifted[1], shifted[0])))


def delta_range(model, inner, outer):
    """
    Range of distances Δ to the maximum-density point over the annulus
    inner <= r <= outer around the user.

    :rtype: tuple
    """
    rho = model.rho_t
    lower = max(0.0, rho - outer, inner - rho)
    return lower, outer + rho


def _edges(excess, grid, flags):
    """
    First and last Δ of the flagged grid points, moved to the root of
    ``excess`` where a neighbour is unflagged.
    """
    index = np.flatnonzero(flags)
    first, last = index[0], index[-1]
    start, stop = float(grid[first]), float(grid[last])
    if first > 0:
        start = optimize.brentq(excess, grid[first - 1], grid[first])
    if last < grid.size - 1:
        stop = optimize.brentq(excess, grid[last], grid[last + 1])
    return start, stop


def validate_density(model, tau, r_e=0.0):
    """
    Checks λ >= 0 and ∂λ/∂Δ <= 0 on a Δ grid covering the disk of radius
    ``tau`` (or the annulus from ``r_e``) around the user. The slope is
    compared with a rounding allowance relative to its own terms at every
    Δ, and the ends of a violated range are refined to the sign change.

    :param ~emf_coverage.radial_density.IpppModel model: Density model.
    :param float tau: Study-disk radius [m].
    :param float r_e: Exclusion radius [m].
    :return: One :py:data:`DensityViolation` per violated condition
        (``"negative"`` or ``"increasing"``), empty if both hold.
    :rtype: list
    """
    lower, upper = delta_range(model, r_e, tau)
    grid = np.linspace(max(lower, 1e-3), upper, GRID_SIZE)
    violations = []
    density = model.profile(grid)
    negative = density < 0
    if np.any(negative):
        start, stop = _edges(model.profile, grid, negative)
        violations.append(DensityViolation(
            "negative", start, stop, float(np.min(density))))

    def excess(delta):
        tolerance = 1e-12 * (abs(model.a_t) / delta ** 2 + abs(model.c_t) +
                             2.0 * abs(model.d_t) * delta)
        return model.profile_slope(delta) - tolerance

    increasing = excess(grid) > 0
    if np.any(increasing):
        start, stop = _edges(excess, grid, increasing)
        violations.append(DensityViolation(
            "increasing", start, stop,
            float(np.max(model.profile_slope(grid)))))
    for violation in violations:
        log.debug("validate_density found violation: " +
                  "kind={} ".format(violation.kind) +
                  "delta=[{}, {}] ".format(violation.delta_min,
                                           violation.delta_max) +
                  "extreme={}".format(violation.extreme))
    return violations


class _Dominating(object):
    """
    Thinning plan: optional exact sampling of the ã/Δ component plus
    rejection sampling of the remaining density.
    """

    def __init__(self, model, geom):
        super(_Dominating, self).__init__()
        lower, upper = delta_range(model, geom.r_e, geom.tau)
        self.delta_max = upper
        grid = np.linspace(lower, upper, GRID_SIZE)
        rest = model.b_t + model.c_t * grid + model.d_t * grid ** 2
        self.split = model.a_t > 0 and np.all(rest >= 0)
        self.capped = False
        if self.split:
            self.a_t = model.a_t
            self.bound = max(float(np.max(rest)), 0.0) * DOMINATING_FACTOR
        else:
            self.a_t = 0.0
            capped_grid = np.maximum(grid, MIN_DELTA)
            self.capped = model.a_t > 0 and lower < MIN_DELTA
            self.bound = float(np.max(model.profile(capped_grid))) * \
                DOMINATING_FACTOR

    def density(self, model, delta):
        if self.split:
            return model.b_t + model.c_t * delta + model.d_t * delta ** 2
        return model.profile(np.maximum(delta, MIN_DELTA))


def draw_ippp(model, geom, rng, size):
    """
    Draws ``size`` independent I-PPP realizations at once.

    The ã/Δ component is sampled exactly (it is uniform in Δ and in the
    angle around the maximum-density point) whenever the remaining density
    b̃ + c̃Δ + d̃Δ² is nonnegative on the annulus; the rest is obtained by
    thinning a dominating H-PPP. Otherwise the whole density is thinned
    with the 1/Δ term capped at Δ = 1 m.

    :param ~emf_coverage.radial_density.IpppModel model: Density model.
    :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
    :param numpy.random.Generator rng: Random stream.
    :param int size: Number of realizations.
    :return:
        Tuple ``(realization, points)``: realization index of every point
        and the (n, 2) planar coordinates [m].
    :rtype: tuple
    :raise ~emf_coverage.errors.DomainError:
        If the density is negative somewhere in the annulus.
    """
    for violation in validate_density(model, geom.tau, geom.r_e):
        if violation.kind == "negative":
            raise DomainError("density", violation.extreme, "lambda >= 0")
    plan = _Dominating(model, geom)
    if plan.capped:
        log.warning("I-PPP sampler caps the 1/delta density term at "
                    "delta={} m".format(MIN_DELTA))
    center = model.center
    indices = []
    coordinates = []
    if plan.split:
        counts = rng.poisson(2.0 * math.pi * plan.a_t * plan.delta_max,
                             size=size)
        total = int(np.sum(counts))
        delta = rng.uniform(0.0, plan.delta_max, size=total)
        phi = rng.uniform(-math.pi, math.pi, size=total)
        xy = center + np.column_stack([delta * np.cos(phi),
                                       delta * np.sin(phi)])
        u = np.sum(xy ** 2, axis=1)
        keep = (u >= geom.r_e ** 2) & (u <= geom.tau ** 2)
        indices.append(np.repeat(np.arange(size), counts)[keep])
        coordinates.append(xy[keep])
    counts = rng.poisson(plan.bound * geom.area, size=size)
    total = int(np.sum(counts))
    u = rng.uniform(geom.r_e ** 2, geom.tau ** 2, size=total)
    angle = rng.uniform(-math.pi, math.pi, size=total)
    xy = np.sqrt(u)[:, None] * np.column_stack([np.cos(angle),
                                                 np.sin(angle)])
    delta = np.linalg.norm(xy - center, axis=1)
    accept = rng.random(total) * plan.bound < plan.density(model, delta)
    indices.append(np.repeat(np.arange(size), counts)[accept])
    coordinates.append(xy[accept])
    log.debug("draw_ippp drew batch: " +
              "size={} ".format(size) +
              "candidates={} ".format(total) +
              "accepted={} ".format(int(np.sum(accept))) +
              "split={}".format(plan.split))
    return np.concatenate(indices), np.concatenate(coordinates)


def sample_ippp(model, geom, seed=None):
    """
    One I-PPP deployment in the study annulus.

    :param ~emf_coverage.radial_density.IpppModel model: Density model.
    :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
    :param seed: Seed or :py:class:`numpy.random.Generator`.
    :rtype: ~emf_coverage.deployment.Deployment
    """
    _, points = draw_ippp(model, geom, as_generator(seed), 1)
    return Deployment(points)
