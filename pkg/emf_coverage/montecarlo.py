# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Monte Carlo simulation of the exposure and the SINR at the user.

Realizations are drawn in batches. Batch ``b`` uses the random streams
``random_stream(seed, b, d)`` for the dimensions d = 0 (deployment), 1 (beam
gains) and 2 (fading), so a batch can be regenerated alone and batches can
run in any order or in parallel without changing the result.
"""

from __future__ import absolute_import, division, print_function
from .deployment import random_stream
from .empirical import EmpiricalDistribution
from .errors import DomainError, InsufficientConditioningError
from .ginibre import BetaGppModel, draw_bgpp
from .model import mean_received_power_squared
from .output import Table, write_table
from .radial_density import IpppModel, draw_ippp
import math
import multiprocessing
import numbers
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Supported topologies.
TOPOLOGIES = ("bgpp", "hppp", "ippp")

#: Default number of realizations per batch.
DEFAULT_BATCH_SIZE = 20000

#: Fewest realizations a conditioning event must retain.
MIN_CONDITIONED = 100

#: Random stream dimensions.
DEPLOYMENT_STREAM, GAIN_STREAM, FADING_STREAM = 0, 1, 2


class SimulationPlan(object):
    """
    Everything a simulation needs: topology, radio and antenna model, study
    annulus, realization count and master seed.
    """

    def __init__(self, topology, model, radio, geom, bf, n_realizations,
                 seed=None, sigma2=None, batch_size=DEFAULT_BATCH_SIZE,
                 workers=1):
        """
        :param str topology: ``"bgpp"``, ``"hppp"`` or ``"ippp"``.
        :param model:
            :py:class:`~emf_coverage.ginibre.BetaGppModel` (the H-PPP uses
            its density only) or
            :py:class:`~emf_coverage.radial_density.IpppModel`.
        :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
        :param ~emf_coverage.model.GeometryConfig geom: Study annulus.
        :param ~emf_coverage.model.BeamformingConfig bf: Antenna model.
        :param int n_realizations: Number of realizations, >= 1.
        :param int seed: Master seed.
        :param float sigma2: Noise power [W]; defaults to the radio's
            thermal noise.
        :param int batch_size: Realizations per batch.
        :param int workers: Worker processes; 1 simulates in-process.
        """
        super(SimulationPlan, self).__init__()
        if topology not in TOPOLOGIES:
            raise DomainError("topology", topology,
                              "one of {}".format(TOPOLOGIES))
        expected = IpppModel if topology == "ippp" else BetaGppModel
        if not isinstance(model, expected):
            raise DomainError("model", model,
                              "{} for topology {}".format(expected.__name__,
                                                          topology))
        for name, value in (("n_realizations", n_realizations),
                            ("batch_size", batch_size),
                            ("workers", workers)):
            if isinstance(value, bool) or \
                    not isinstance(value, numbers.Integral) or value < 1:
                raise DomainError(name, value, "integer {} >= 1".format(name))
        self._topology = topology
        self._model = model
        self._radio = radio
        self._geom = geom
        self._bf = bf
        self._n_realizations = int(n_realizations)
        self._seed = seed
        self._sigma2 = radio.noise_power if sigma2 is None else float(sigma2)
        self._batch_size = int(batch_size)
        self._workers = int(workers)

    def replace(self, **changes):
        """
        Returns a copy with some fields replaced.

        :rtype: ~emf_coverage.montecarlo.SimulationPlan
        """
        fields = dict(topology=self._topology, model=self._model,
                      radio=self._radio, geom=self._geom, bf=self._bf,
                      n_realizations=self._n_realizations, seed=self._seed,
                      sigma2=self._sigma2, batch_size=self._batch_size,
                      workers=self._workers)
        fields.update(changes)
        return SimulationPlan(**fields)

    @property
    def topology(self):
        """
        :type: str
        """
        return self._topology

    @property
    def model(self):
        """
        Topology model.

        :type: ~emf_coverage.ginibre.BetaGppModel or
            ~emf_coverage.radial_density.IpppModel
        """
        return self._model

    @property
    def radio(self):
        """
        :type: ~emf_coverage.model.RadioConfig
        """
        return self._radio

    @property
    def geom(self):
        """
        :type: ~emf_coverage.model.GeometryConfig
        """
        return self._geom

    @property
    def bf(self):
        """
        :type: ~emf_coverage.model.BeamformingConfig
        """
        return self._bf

    @property
    def n_realizations(self):
        """
        :type: int
        """
        return self._n_realizations

    @property
    def seed(self):
        """
        Root seed of the random streams, ``None`` for fresh entropy.

        :type: int
        """
        return self._seed

    @property
    def sigma2(self):
        """
        Noise power [W].

        :type: float
        """
        return self._sigma2

    @property
    def batch_size(self):
        """
        Realizations drawn per batch.

        :type: int
        """
        return self._batch_size

    @property
    def workers(self):
        """
        Worker processes; 1 simulates in-process.

        :type: int
        """
        return self._workers

    def batches(self):
        """
        ``(index, size)`` of every batch, in order.

        :rtype: list
        """
        full, rest = divmod(self._n_realizations, self._batch_size)
        sizes = [self._batch_size] * full + ([rest] if rest else [])
        return list(enumerate(sizes))

    def __repr__(self):
        return "SimulationPlan(topology={!r}, n_realizations={}, " \
            "seed={!r})".format(self._topology, self._n_realizations,
                                self._seed)


def _draw_squared_distances(plan, rng, size):
    """
    Squared distances of all base stations of ``size`` realizations and the
    realization each one belongs to.
    """
    geom = plan.geom
    if plan.topology == "ippp":
        owner, points = draw_ippp(plan.model, geom, rng, size)
        return owner, np.sum(points ** 2, axis=1)
    if plan.topology == "hppp" or plan.model.is_poisson:
        counts = rng.poisson(plan.model.lam * geom.area, size=size)
        owner = np.repeat(np.arange(size), counts)
        return owner, rng.uniform(geom.r_e ** 2, geom.tau ** 2,
                                  size=owner.size)
    squared, present = draw_bgpp(plan.model, geom, rng, size)
    owner = np.nonzero(present)[0]
    return owner, squared[present]


def simulate_batch(plan, index, size):
    """
    Simulates one batch.

    :param ~emf_coverage.montecarlo.SimulationPlan plan: Plan.
    :param int index: Batch index (selects the random streams).
    :param int size: Realizations in the batch.
    :return: Per-realization arrays ``signal``, ``interference``,
        ``serving_distance`` (``nan`` without base station) and the counts
        ``gain_hits``/``gain_trials`` of interfering links in the main lobe.
    :rtype: dict
    """
    seed = plan.seed
    owner, squared = _draw_squared_distances(
        plan, random_stream(seed, index, DEPLOYMENT_STREAM), size)
    order = np.lexsort((squared, owner))
    owner = owner[order]
    squared = squared[order]
    serving = np.ones(owner.size, dtype=bool)
    serving[1:] = owner[1:] != owner[:-1]
    m = plan.radio.m
    fading = random_stream(seed, index, FADING_STREAM).gamma(
        m, 1.0 / m, size=owner.size)
    gain = np.ones(owner.size)
    interferers = ~serving
    if plan.bf.enabled:
        draws = random_stream(seed, index, GAIN_STREAM).random(owner.size)
        gain[interferers] = (draws[interferers] < plan.bf.p_g).astype(float)
    power = mean_received_power_squared(squared, plan.radio) * fading * gain
    signal = np.bincount(owner[serving], weights=power[serving],
                         minlength=size)
    interference = np.bincount(owner[interferers],
                               weights=power[interferers], minlength=size)
    distance = np.full(size, np.nan)
    distance[owner[serving]] = np.sqrt(squared[serving])
    hits = int(np.count_nonzero(gain[interferers]))
    log.debug("simulate_batch done: " +
              "index={} ".format(index) +
              "size={} ".format(size) +
              "stations={} ".format(owner.size) +
              "empty={}".format(int(np.count_nonzero(np.isnan(distance)))))
    return dict(signal=signal, interference=interference,
                serving_distance=distance, gain_hits=hits,
                gain_trials=int(np.count_nonzero(interferers)))


def _batch_task(task):
    return simulate_batch(*task)


class SimulationResult(object):
    """
    Per-realization outcome of :py:func:`simulate`.

    Realizations without a base station in the annulus have S₀ = I₀ = 0 and
    SINR 0. They are part of the unconditioned laws
    (``include_empty=True``) and dropped by the conditioned ones, which are
    the laws the analytic metrics describe.
    """

    def __init__(self, plan, signal, interference, serving_distance,
                 gain_hits=0, gain_trials=0):
        super(SimulationResult, self).__init__()
        self._plan = plan
        self._signal = np.asarray(signal, dtype=float)
        self._interference = np.asarray(interference, dtype=float)
        self._distance = np.asarray(serving_distance, dtype=float)
        self._gain_hits = int(gain_hits)
        self._gain_trials = int(gain_trials)

    @property
    def plan(self):
        """
        :type: ~emf_coverage.montecarlo.SimulationPlan
        """
        return self._plan

    @property
    def count(self):
        """
        Number of realizations.

        :type: int
        """
        return self._signal.size

    @property
    def signal(self):
        """
        Serving power S₀ per realization [W].

        :type: numpy.ndarray
        """
        return self._signal

    @property
    def interference(self):
        """
        Interference I₀ per realization [W].

        :type: numpy.ndarray
        """
        return self._interference

    @property
    def exposure_values(self):
        """
        Exposure 𝒫 = S₀ + I₀ per realization [W].

        :type: numpy.ndarray
        """
        return self._signal + self._interference

    @property
    def sinr_values(self):
        """
        S₀/(I₀ + σ²) per realization (0 without base station).

        :type: numpy.ndarray
        """
        return self._signal / (self._interference + self._plan.sigma2)

    @property
    def serving_distance(self):
        """
        Distance to the serving base station per realization [m], ``nan``
        without base station.

        :type: numpy.ndarray
        """
        return self._distance

    @property
    def has_station(self):
        """
        :type: numpy.ndarray
        """
        return ~np.isnan(self._distance)

    @property
    def empty_fraction(self):
        """
        Fraction of realizations without base station in the annulus.

        :type: float
        """
        return 1.0 - float(np.count_nonzero(self.has_station)) / self.count

    @property
    def gain_trials(self):
        """
        Number of interfering links over all realizations.

        :type: int
        """
        return self._gain_trials

    @property
    def gain_hit_rate(self):
        """
        Fraction of interfering links whose main lobe hits the user
        (estimates p_g), ``nan`` without interferers.

        :type: float
        """
        if self._gain_trials == 0:
            return float("nan")
        return self._gain_hits / self._gain_trials

    def _mask(self, include_empty):
        return np.ones(self.count, dtype=bool) if include_empty \
            else self.has_station

    def exposure(self, include_empty=False):
        """
        Law of 𝒫, paired with the SINR of the same realization.

        :rtype: ~emf_coverage.empirical.EmpiricalDistribution
        """
        mask = self._mask(include_empty)
        return EmpiricalDistribution(self.exposure_values[mask],
                                     pairs=self.sinr_values[mask])

    def sinr(self, include_empty=False):
        """
        Law of the SINR.

        :rtype: ~emf_coverage.empirical.EmpiricalDistribution
        """
        return EmpiricalDistribution(
            self.sinr_values[self._mask(include_empty)])

    def joint(self, include_empty=False):
        """
        Joint law of (𝒫, SINR); see
        :py:meth:`~emf_coverage.empirical.EmpiricalDistribution.joint_cdf`.

        :rtype: ~emf_coverage.empirical.EmpiricalDistribution
        """
        return self.exposure(include_empty)

    def to_table(self):
        """
        One row per realization: index, exposure [W], SINR and serving
        distance [m].

        :rtype: ~emf_coverage.output.Table
        """
        return Table(["realization", "exposure_w", "sinr",
                      "serving_distance_m"],
                     zip(range(self.count), self.exposure_values,
                         self.sinr_values, self._distance))

    def to_csv(self, path, comments=()):
        """
        Writes :py:meth:`to_table` as CSV.

        :param str path: Output file.
        :param comments: Lines written first, each prefixed with ``#``.
        """
        write_table(path, self.to_table(), comments)

    def __repr__(self):
        return "SimulationResult(count={}, empty_fraction={!r})".format(
            self.count, self.empty_fraction)


def simulate(plan):
    """
    Runs all batches of ``plan`` and concatenates them in batch order.

    :param ~emf_coverage.montecarlo.SimulationPlan plan: Plan.
    :return: Per-realization results; its :py:meth:`SimulationResult.exposure`,
        :py:meth:`SimulationResult.sinr` and :py:meth:`SimulationResult.joint`
        give the empirical laws.
    :rtype: ~emf_coverage.montecarlo.SimulationResult
    """
    tasks = [(plan, index, size) for index, size in plan.batches()]
    if plan.workers > 1 and len(tasks) > 1:
        pool = multiprocessing.Pool(min(plan.workers, len(tasks)))
        try:
            outputs = pool.map(_batch_task, tasks)
        finally:
            pool.close()
            pool.join()
    else:
        outputs = [_batch_task(task) for task in tasks]
    result = SimulationResult(
        plan,
        np.concatenate([o["signal"] for o in outputs]),
        np.concatenate([o["interference"] for o in outputs]),
        np.concatenate([o["serving_distance"] for o in outputs]),
        sum(o["gain_hits"] for o in outputs),
        sum(o["gain_trials"] for o in outputs))
    log.debug("simulate done: " +
              "plan={!r} ".format(plan) +
              "batches={} ".format(len(tasks)) +
              "empty_fraction={}".format(result.empty_fraction))
    return result


class ConditionedStatistics(object):
    """
    Interference statistics of the realizations whose serving distance lies
    in a window.
    """

    def __init__(self, window, interference, q):
        super(ConditionedStatistics, self).__init__()
        self._window = tuple(window)
        self._interference = np.asarray(interference, dtype=float)
        self._q = np.atleast_1d(np.asarray(q, dtype=float))
        phases = np.exp(1j * self._q[:, None] * self._interference[None, :])
        self._cf = np.mean(phases, axis=1)
        n = self._interference.size
        self._cf_error = (np.std(phases.real, axis=1) +
                          1j * np.std(phases.imag, axis=1)) / math.sqrt(n)

    @property
    def window(self):
        return self._window

    @property
    def count(self):
        """
        Retained realizations.

        :type: int
        """
        return self._interference.size

    @property
    def mean_interference(self):
        """
        :type: float
        """
        return float(np.mean(self._interference))

    @property
    def mean_error(self):
        """
        Standard error of :py:attr:`mean_interference`.

        :type: float
        """
        return float(np.std(self._interference, ddof=1) /
                     math.sqrt(self.count))

    @property
    def second_moment(self):
        """
        :type: float
        """
        return float(np.mean(self._interference ** 2))

    @property
    def second_moment_error(self):
        """
        :type: float
        """
        return float(np.std(self._interference ** 2, ddof=1) /
                     math.sqrt(self.count))

    @property
    def q(self):
        return self._q

    @property
    def characteristic_function(self):
        """
        Empirical mean of e^(jqI₀) at :py:attr:`q`.

        :type: numpy.ndarray
        """
        return self._cf

    @property
    def characteristic_function_error(self):
        """
        Standard errors of the real and imaginary parts, packed as a
        complex array.

        :type: numpy.ndarray
        """
        return self._cf_error

    def __repr__(self):
        return "ConditionedStatistics(window={}, count={})".format(
            self._window, self.count)


def conditioned_statistics(plan, window, q=(), result=None):
    """
    Interference statistics conditioned on the serving distance falling in
    ``window``.

    :param ~emf_coverage.montecarlo.SimulationPlan plan: Plan.
    :param tuple window: (lower, upper) serving distance [m] inside
        [r_e, τ].
    :param q: Frequencies of the empirical characteristic function.
    :param ~emf_coverage.montecarlo.SimulationResult result:
        Result of ``plan`` to reuse; simulated if omitted.
    :rtype: ~emf_coverage.montecarlo.ConditionedStatistics
    :raise ~emf_coverage.errors.InsufficientConditioningError:
        If fewer than :py:data:`MIN_CONDITIONED` realizations remain.
    """
    lower, upper = (float(v) for v in window)
    geom = plan.geom
    if not geom.r_e <= lower <= upper <= geom.tau:
        raise DomainError("window", window, "r_e <= lower <= upper <= tau")
    result = result or simulate(plan)
    distance = result.serving_distance
    with np.errstate(invalid='ignore'):
        keep = (distance >= lower) & (distance <= upper)
    retained = int(np.count_nonzero(keep))
    if retained < MIN_CONDITIONED:
        raise InsufficientConditioningError(retained, MIN_CONDITIONED)
    return ConditionedStatistics((lower, upper), result.interference[keep], q)
