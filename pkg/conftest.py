# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from emf_coverage.ginibre import BetaGppModel
from emf_coverage.model import BeamformingConfig, GeometryConfig, \
    RadioConfig
from emf_coverage.radial_density import IpppModel
import pytest


@pytest.fixture
def radio():
    """
    Paris radio parameters.
    """
    return RadioConfig.from_units(frequency_mhz=2132.7, bandwidth_mhz=14.8,
                                  eirp_dbm=66.0, height_m=33.0, alpha=3.2,
                                  m=1, noise_figure_db=6.0)


@pytest.fixture
def small_geom():
    """
    Compact annulus keeping the tables small.
    """
    return GeometryConfig.from_km(0.0, 2.0)


@pytest.fixture
def bf():
    return BeamformingConfig(0.0982)


@pytest.fixture
def bgpp_model():
    return BetaGppModel.from_km(6.17, 0.75, n_trunc=20)


@pytest.fixture
def ippp_model():
    """
    Brussels density coefficients around a center 500 m east of the user.
    """
    return IpppModel.from_km(0.05, 5.241, -0.973, 0.048,
                             center_km=(0.5, 0.0))
