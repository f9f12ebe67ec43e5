# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from emf_coverage.errors import ScenarioError
from emf_coverage.ginibre import BetaGppModel
from emf_coverage.model import watt_to_dbm
from emf_coverage.radial_density import IpppModel
from emf_coverage.scenario import load_scenario, parse_scenario, \
    preset_names
import json
import math
import numpy as np
import pytest


def minimal_document(**changes):
    document = {
        "radio": {"frequency_mhz": 2132.7, "bandwidth_mhz": 14.8,
                  "eirp_dbm": 66.0, "height_m": 33.0, "alpha": 3.2},
        "geometry": {"tau_km": 2.0},
        "topology": {"kind": "hppp", "lambda_per_km2": 6.17},
    }
    document.update(changes)
    return document


def test_presets():
    assert preset_names() == ["brussels-lte1800", "paris-5gnr2100"]


def test_paris_preset():
    scenario = load_scenario("paris-5gnr2100")
    assert scenario.name == "paris-5gnr2100"
    assert not scenario.is_motion_variant
    model = scenario.density_model()
    assert isinstance(model, BetaGppModel)
    assert model.beta == 0.75
    assert model.n_trunc == 50
    assert scenario.beamforming_config().p_g == pytest.approx(0.0469,
                                                              abs=1e-4)
    assert watt_to_dbm(scenario.sigma2) == pytest.approx(-96.27, abs=0.01)
    assert scenario.exposure_thresholds().size == 26
    assert scenario.sinr_thresholds()[0] == pytest.approx(0.1)
    plan = scenario.simulation_plan()
    assert plan.seed == 2132
    assert plan.n_realizations == 1000000


def test_brussels_preset():
    scenario = load_scenario("brussels-lte1800")
    assert scenario.is_motion_variant
    assert not scenario.beamforming_config().enabled
    model = scenario.density_model()
    assert isinstance(model, IpppModel)
    assert model.rho_t == pytest.approx(math.hypot(145.0, 569.0))
    # seen from the center the density is centered
    moved = scenario.density_model(user_km=(-0.145, -0.569))
    assert moved.rho_t == pytest.approx(0.0, abs=1e-9)
    assert scenario.map.shape == (50, 50)
    assert scenario.map.to_grid().size == 2500


def test_load_from_path(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(minimal_document(seed=5)))
    scenario = load_scenario(str(path))
    assert scenario.seed == 5
    assert scenario.topology.kind == "hppp"
    assert scenario.density_model().is_poisson
    assert scenario.quadrature_config().order == 16


def test_load_errors(tmp_path):
    with pytest.raises(ScenarioError, match="cannot read"):
        load_scenario(str(tmp_path / "missing.json"))
    path = tmp_path / "broken.json"
    path.write_text(u"{radio")
    with pytest.raises(ScenarioError, match="not valid JSON"):
        load_scenario(str(path))


@pytest.mark.parametrize("changes,message", [
    (dict(colour="red"), "colour"),
    (dict(schema_version=2), "schema_version"),
    (dict(geometry={"r_e_km": 3.0, "tau_km": 2.0}), "tau_km must exceed"),
    (dict(topology={"kind": "bgpp", "lambda_per_km2": 6.17}), "beta"),
    (dict(topology={"kind": "ippp", "a_per_km": 0.0}), "b_per_km2"),
    (dict(quadrature={"order": 15}), "even"),
    (dict(thresholds={"exposure_dbm": []}), "empty"),
    (dict(map={"shape": [0, 3]}), "shape"),
    (dict(beamforming={"omega_rad": 3.0}), "omega_rad"),
])
def test_invalid_documents(changes, message):
    with pytest.raises(ScenarioError, match=message):
        parse_scenario(minimal_document(**changes))


def test_alpha_must_exceed_two():
    document = minimal_document()
    document["radio"]["alpha"] = 2.0
    with pytest.raises(ScenarioError) as info:
        parse_scenario(document)
    assert any(detail.startswith("radio.alpha")
               for detail in info.value.errors)


def test_not_an_object():
    with pytest.raises(ScenarioError):
        parse_scenario([1, 2])


def test_override():
    scenario = parse_scenario(minimal_document())
    changed = scenario.override(**{"monte_carlo.realizations": 10,
                                   "seed": 3, "geometry.r_e_km": None})
    assert changed.monte_carlo.realizations == 10
    assert changed.seed == 3
    assert changed.geometry.r_e_km == 0.0
    assert changed.digest != scenario.digest
    with pytest.raises(ScenarioError):
        scenario.override(**{"radio.alpha": 1.5})


def test_digest_is_stable():
    first = parse_scenario(minimal_document())
    second = parse_scenario(minimal_document())
    assert first.digest == second.digest
    assert len(first.digest) == 16


def test_threshold_lists():
    scenario = parse_scenario(minimal_document(
        thresholds={"exposure_dbm": [-30.0, 0.0], "sinr_db": [10.0]}))
    np.testing.assert_allclose(scenario.exposure_thresholds(), [1e-6, 1e-3])
    np.testing.assert_allclose(scenario.sinr_thresholds(), [10.0])


def test_noise_override():
    document = minimal_document()
    document["radio"]["noise_dbm"] = -100.0
    assert parse_scenario(document).sigma2 == pytest.approx(1e-13)
