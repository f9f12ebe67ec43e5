# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Scenario files: versioned JSON documents describing one study.

Every field name carries its unit; the schema validates the document before
any computation and converts it to the SI value classes of the package.
"""

from __future__ import absolute_import, division, print_function
from .errors import ScenarioError
from .ginibre import DEFAULT_TRUNCATION, BetaGppModel
from .inversion import QuadratureConfig
from .ippp_analytics import METHODS
from .model import BeamformingConfig, GeometryConfig, MAX_BEAMWIDTH, \
    RadioConfig, db_to_linear, dbm_to_watt
from .montecarlo import DEFAULT_BATCH_SIZE, SimulationPlan
from .radial_density import IpppModel
from .spatial_map import DEFAULT_SHAPE, METRICS, MapGrid
from pydantic import BaseModel, ConfigDict, Field, ValidationError, \
    field_validator, model_validator
from typing import List, Literal, Optional, Tuple, Union
import copy
import hashlib
import io
import json
import numpy as np
import os

import logging
log = logging.getLogger(__name__)

#: Version of the scenario schema understood by this package.
SCHEMA_VERSION = 1

#: Directory of the shipped presets.
PRESET_DIRECTORY = os.path.join(os.path.dirname(__file__), "presets")


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class RadioSection(_Section):
    frequency_mhz: float = Field(gt=0)
    bandwidth_mhz: float = Field(gt=0)
    eirp_dbm: float
    height_m: float = Field(ge=0)
    alpha: float = Field(gt=2)
    nakagami_m: int = Field(default=1, ge=1)
    noise_figure_db: float = 0.0
    noise_dbm: Optional[float] = Field(
        default=None, description="Overrides the thermal noise power.")

    def to_radio(self):
        return RadioConfig.from_units(
            frequency_mhz=self.frequency_mhz,
            bandwidth_mhz=self.bandwidth_mhz, eirp_dbm=self.eirp_dbm,
            height_m=self.height_m, alpha=self.alpha, m=self.nakagami_m,
            noise_figure_db=self.noise_figure_db)


class GeometrySection(_Section):
    r_e_km: float = Field(default=0.0, ge=0)
    tau_km: float = Field(gt=0)

    @model_validator(mode="after")
    def _ordered(self):
        if not self.tau_km > self.r_e_km:
            raise ValueError("tau_km must exceed r_e_km")
        return self

    def to_geometry(self):
        return GeometryConfig.from_km(self.r_e_km, self.tau_km)


class BeamformingSection(_Section):
    enabled: bool = True
    omega_rad: float = Field(default=MAX_BEAMWIDTH, ge=0,
                             le=MAX_BEAMWIDTH)

    def to_beamforming(self):
        if not self.enabled:
            return BeamformingConfig.disabled()
        return BeamformingConfig(self.omega_rad)


class TopologySection(_Section):
    kind: Literal["bgpp", "hppp", "ippp"]
    lambda_per_km2: Optional[float] = Field(default=None, gt=0)
    beta: Optional[float] = Field(default=None, ge=0, le=1)
    truncation_n: int = Field(default=DEFAULT_TRUNCATION, ge=1)
    a_per_km: Optional[float] = None
    b_per_km2: Optional[float] = None
    c_per_km3: Optional[float] = None
    d_per_km4: Optional[float] = None
    center_km: Tuple[float, float] = (0.0, 0.0)
    method: Literal[METHODS] = METHODS[0]

    @model_validator(mode="after")
    def _complete(self):
        if self.kind == "ippp":
            missing = [name for name in ("a_per_km", "b_per_km2",
                                         "c_per_km3", "d_per_km4")
                       if getattr(self, name) is None]
        else:
            missing = ["lambda_per_km2"] if self.lambda_per_km2 is None \
                else []
            if self.kind == "bgpp" and self.beta is None:
                missing.append("beta")
        if missing:
            raise ValueError("topology {} requires {}".format(
                self.kind, ", ".join(missing)))
        return self

    def to_model(self, user_km=(0.0, 0.0)):
        """
        Density model seen from a user at ``user_km`` (the ``center_km``
        frame).
        """
        if self.kind == "ippp":
            center = (self.center_km[0] - user_km[0],
                      self.center_km[1] - user_km[1])
            return IpppModel.from_km(self.a_per_km, self.b_per_km2,
                                     self.c_per_km3, self.d_per_km4,
                                     center_km=center)
        beta = 0.0 if self.kind == "hppp" else self.beta
        return BetaGppModel.from_km(self.lambda_per_km2, beta,
                                    self.truncation_n)


class GridRange(_Section):
    start: float
    stop: float
    num: int = Field(ge=1)

    def values(self):
        return np.linspace(self.start, self.stop, self.num)


class ThresholdSection(_Section):
    exposure_dbm: Union[GridRange, List[float]] = GridRange(
        start=-60.0, stop=-10.0, num=11)
    sinr_db: Union[GridRange, List[float]] = GridRange(
        start=-10.0, stop=30.0, num=9)
    probability: float = Field(default=0.95, gt=0, lt=1)

    @field_validator("exposure_dbm", "sinr_db")
    @classmethod
    def _nonempty(cls, value):
        if isinstance(value, list) and not value:
            raise ValueError("threshold grid must not be empty")
        return value


class QuadratureSection(_Section):
    abs_tol: float = Field(default=1e-6, gt=0)
    rel_tol: float = Field(default=1e-6, gt=0)
    max_panels: int = Field(default=4000, ge=1)
    order: int = Field(default=16, ge=2)

    @field_validator("order")
    @classmethod
    def _even(cls, value):
        if value % 2:
            raise ValueError("order must be even")
        return value

    def to_quadrature(self):
        return QuadratureConfig(abs_tol=self.abs_tol, rel_tol=self.rel_tol,
                                max_panels=self.max_panels, order=self.order)


class MonteCarloSection(_Section):
    realizations: int = Field(default=100000, ge=1)
    batch_size: int = Field(default=DEFAULT_BATCH_SIZE, ge=1)
    workers: int = Field(default=1, ge=1)


class MapSection(_Section):
    x_km: Tuple[float, float] = (-2.0, 2.0)
    y_km: Tuple[float, float] = (-2.0, 2.0)
    shape: Tuple[int, int] = DEFAULT_SHAPE
    metric: Literal[METRICS] = METRICS[0]
    method: Literal[METHODS] = "quadrature"
    threshold_dbm: Optional[float] = None
    sinr_threshold_db: Optional[float] = None

    @field_validator("shape")
    @classmethod
    def _positive_shape(cls, value):
        if min(value) < 1:
            raise ValueError("shape entries must be >= 1")
        return value

    def to_grid(self):
        return MapGrid.from_km(self.x_km, self.y_km, self.shape)


class ToleranceSection(_Section):
    ks: float = Field(default=0.01, gt=0, le=1)
    mean_sigma: float = Field(default=3.0, gt=0)


class Scenario(_Section):
    """
    A validated scenario document.
    """
    schema_version: Literal[1] = SCHEMA_VERSION
    name: str = ""
    description: str = ""
    radio: RadioSection
    geometry: GeometrySection
    beamforming: BeamformingSection = BeamformingSection()
    topology: TopologySection
    user_km: Tuple[float, float] = (0.0, 0.0)
    thresholds: ThresholdSection = ThresholdSection()
    quadrature: QuadratureSection = QuadratureSection()
    monte_carlo: MonteCarloSection = MonteCarloSection()
    map: MapSection = MapSection()
    tolerances: ToleranceSection = ToleranceSection()
    seed: Optional[int] = Field(default=None, ge=0)

    @property
    def digest(self):
        """
        Short SHA-256 digest of the canonical document.

        :type: str
        """
        text = json.dumps(self.model_dump(mode="json"), sort_keys=True)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]

    @property
    def is_motion_variant(self):
        """
        ``True`` for an ippp topology, whose metrics depend on the user
        location.

        :type: bool
        """
        return self.topology.kind == "ippp"

    def override(self, **changes):
        """
        Returns a validated copy with fields replaced; nested fields are
        addressed by dotted names passed through a dict, e.g.
        ``override(**{"monte_carlo.realizations": 10})``. ``None`` values
        are ignored.

        :rtype: ~emf_coverage.scenario.Scenario
        :raise ~emf_coverage.errors.ScenarioError: If the result is invalid.
        """
        document = copy.deepcopy(self.model_dump(mode="json"))
        for dotted, value in changes.items():
            if value is None:
                continue
            target = document
            keys = dotted.split(".")
            for key in keys[:-1]:
                target = target.setdefault(key, {})
            target[keys[-1]] = value
        return parse_scenario(document)

    def radio_config(self):
        """
        :rtype: ~emf_coverage.model.RadioConfig
        """
        return self.radio.to_radio()

    def geometry_config(self):
        """
        :rtype: ~emf_coverage.model.GeometryConfig
        """
        return self.geometry.to_geometry()

    def beamforming_config(self):
        """
        :rtype: ~emf_coverage.model.BeamformingConfig
        """
        return self.beamforming.to_beamforming()

    def density_model(self, user_km=None):
        """
        Topology model seen from ``user_km`` (defaults to the scenario's
        user location).
        """
        return self.topology.to_model(self.user_km if user_km is None
                                      else user_km)

    def quadrature_config(self):
        """
        :rtype: ~emf_coverage.inversion.QuadratureConfig
        """
        return self.quadrature.to_quadrature()

    @property
    def sigma2(self):
        """
        Noise power [W].

        :type: float
        """
        if self.radio.noise_dbm is not None:
            return float(dbm_to_watt(self.radio.noise_dbm))
        return self.radio_config().noise_power

    def exposure_thresholds(self):
        """
        Exposure thresholds T' [W].

        :rtype: numpy.ndarray
        """
        return dbm_to_watt(_grid(self.thresholds.exposure_dbm))

    def sinr_thresholds(self):
        """
        SINR thresholds (linear).

        :rtype: numpy.ndarray
        """
        return db_to_linear(_grid(self.thresholds.sinr_db))

    def simulation_plan(self):
        """
        :rtype: ~emf_coverage.montecarlo.SimulationPlan
        """
        mc = self.monte_carlo
        return SimulationPlan(
            self.topology.kind, self.density_model(), self.radio_config(),
            self.geometry_config(), self.beamforming_config(),
            mc.realizations, seed=self.seed, sigma2=self.sigma2,
            batch_size=mc.batch_size, workers=mc.workers)


def _grid(spec):
    if isinstance(spec, GridRange):
        return spec.values()
    return np.asarray(spec, dtype=float)


def _error_details(error):
    return ["{}: {}".format(".".join(str(p) for p in e["loc"]), e["msg"])
            for e in error.errors()]


def parse_scenario(document):
    """
    Validates a scenario document.

    :param dict document: Decoded JSON document.
    :rtype: ~emf_coverage.scenario.Scenario
    :raise ~emf_coverage.errors.ScenarioError: On schema violations.
    """
    if not isinstance(document, dict):
        raise ScenarioError("document must be a JSON object")
    version = document.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ScenarioError("unsupported schema_version {!r}".format(version))
    try:
        return Scenario.model_validate(document)
    except ValidationError as e:
        details = _error_details(e)
        raise ScenarioError("; ".join(details), details)


def preset_names():
    """
    Names of the shipped presets.

    :rtype: list
    """
    return sorted(os.path.splitext(name)[0]
                  for name in os.listdir(PRESET_DIRECTORY)
                  if name.endswith(".json"))


def load_scenario(source):
    """
    Loads a scenario from a preset name or a file path.

    :param str source: Preset name (see :py:func:`preset_names`) or path.
    :rtype: ~emf_coverage.scenario.Scenario
    :raise ~emf_coverage.errors.ScenarioError:
        If the file is missing, not JSON or violates the schema.
    """
    path = source
    if source in preset_names():
        path = os.path.join(PRESET_DIRECTORY, source + ".json")
    try:
        with io.open(path, "r", encoding="utf-8") as stream:
            document = json.load(stream)
    except (IOError, OSError) as e:
        raise ScenarioError("cannot read {}: {}".format(source, e))
    except ValueError as e:
        raise ScenarioError("{} is not valid JSON: {}".format(source, e))
    scenario = parse_scenario(document)
    log.debug("load_scenario loaded: " +
              "source={} ".format(source) +
              "kind={} ".format(scenario.topology.kind) +
              "digest={}".format(scenario.digest))
    return scenario
