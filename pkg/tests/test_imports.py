# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from setuptools import find_packages
import importlib
import pkgutil
import re
from os import path
from pytest import mark

EXCLUDES = [r"\.__main__$"]  # Regex: remember to use \. !


root_path = path.join(path.dirname(__file__), "..")


@mark.parametrize("package",
                  find_packages(where=root_path,
                                exclude=['tests', 'tests.*', 'examples',
                                         'examples.*']))
def test_import(package):
    """Tests if all (sub-)packages are importable."""
    module = importlib.import_module(package)
    prefix = "{}.".format(package)
    for _, mod, _ in pkgutil.walk_packages(module.__path__, prefix=prefix):
        if not any([re.search(exclude, mod) for exclude in EXCLUDES]):
            importlib.import_module(mod)


@mark.parametrize("owner,name", [
    ("emf_coverage.spatial_map.MapGrid", "size"),
    ("emf_coverage.spatial_map.MapResult", "threshold"),
    ("emf_coverage.scenario.Scenario", "is_motion_variant"),
    ("emf_coverage.montecarlo.SimulationPlan", "model"),
    ("emf_coverage.montecarlo.SimulationPlan", "seed"),
    ("emf_coverage.montecarlo.SimulationPlan", "batch_size"),
    ("emf_coverage.montecarlo.SimulationPlan", "workers"),
])
def test_property_documented(owner, name):
    module, cls = owner.rsplit(".", 1)
    attribute = getattr(getattr(importlib.import_module(module), cls), name)
    assert attribute.__doc__ and attribute.__doc__.strip()
