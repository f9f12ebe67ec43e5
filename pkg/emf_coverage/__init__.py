# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from .version import version as __version__  # noqa: F401
from .model import RadioConfig, GeometryConfig, BeamformingConfig, \
    ExposureValue, convert_exposure  # noqa: F401
from .ginibre import BetaGppModel, sample_bgpp, sample_hppp  # noqa: F401
from .radial_density import IpppModel, recenter, sample_ippp  # noqa: F401
from .density_fit import fit_radial_density, read_bs_dataset  # noqa: F401
from .inversion import QuadratureConfig, CharacteristicFunction  # noqa: F401
from .bgpp_analytics import BgppKernel  # noqa: F401
from .ippp_analytics import MvStudy  # noqa: F401
from .serving import frechet_bounds  # noqa: F401
from .spatial_map import MapGrid, evaluate_map  # noqa: F401
from .empirical import EmpiricalDistribution, ks_distance  # noqa: F401
from .montecarlo import SimulationPlan, simulate  # noqa: F401
from .scenario import Scenario, load_scenario  # noqa: F401

__copyright__ = '(c) Copyright 2026 emf-coverage contributors'
