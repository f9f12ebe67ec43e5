# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Command line interface.

Every subcommand reads a scenario (preset name or JSON file), applies the
command line overrides, computes its table and writes it only after the
computation finished. Errors of this package end the process with exit code
2 and one JSON line on stderr.
"""

from __future__ import absolute_import, division, print_function
from . import bgpp_analytics as mi
from . import ippp_analytics as mv
from .bgpp_analytics import BgppKernel
from .density_fit import DEFAULT_BINS, fit_radial_density, read_bs_dataset
from .empirical import grid_distance
from .errors import EmfCoverageError, ScenarioError
from .ippp_analytics import MvStudy
from .model import BeamformingConfig, convert_exposure, db_to_linear, \
    dbm_to_watt, linear_to_db, watt_to_dbm
from .montecarlo import simulate
from .output import Table, provenance, write_json, write_table
from .scenario import load_scenario, preset_names
from .serving import frechet_bounds
from .spatial_map import METRICS as MAP_METRICS, evaluate_map
from .version import version
import argparse
import json
import math
import sys

import logging
log = logging.getLogger(__name__)

#: Metrics of the ``analyze`` command.
ANALYZE_METRICS = ("exposure-cdf", "exposure-cdf-nobf", "sinr-ccdf",
                   "joint-cdf", "moments", "isocurve", "frechet")

#: Curve metrics a sweep can hold.
SWEEP_METRICS = ("exposure-cdf", "sinr-ccdf")

#: Parameters of the ``sweep`` command.
SWEEP_PARAMETERS = ("beta", "lambda", "omega", "density-scale")

#: Exit code of failed commands.
EXIT_FAILURE = 2


class Analytics(object):
    """
    One interface over the motion-invariant (β-GPP, H-PPP) and the
    motion-variant (I-PPP) analytics of a scenario.
    """

    def __init__(self, scenario, model=None):
        """
        :param ~emf_coverage.scenario.Scenario scenario: Scenario.
        :param model: Topology model replacing the scenario's one.
        """
        super(Analytics, self).__init__()
        self._scenario = scenario
        self._radio = scenario.radio_config()
        self._geom = scenario.geometry_config()
        self._bf = scenario.beamforming_config()
        self._quad = scenario.quadrature_config()
        self._sigma2 = scenario.sigma2
        self._model = scenario.density_model() if model is None else model
        self._study = None
        self._kernel = None
        if scenario.is_motion_variant:
            self._study = MvStudy(self._model, self._geom, self._radio,
                                  self._bf, quad=self._quad,
                                  method=scenario.topology.method)
        else:
            self._kernel = BgppKernel(self._model, self._geom)

    @property
    def radio(self):
        """
        :type: ~emf_coverage.model.RadioConfig
        """
        return self._radio

    @property
    def bf(self):
        return self._bf

    @property
    def model(self):
        return self._model

    @property
    def is_motion_variant(self):
        return self._study is not None

    def cdf_exposure(self, t_prime):
        """
        :rtype: ~emf_coverage.inversion.InversionResult
        """
        if self._study is not None:
            return mv.cdf_exposure(t_prime, self._study, self._quad, True)
        return mi.cdf_exposure(t_prime, self._kernel, self._radio, self._bf,
                               self._quad, True)

    def cdf_exposure_nobf(self, t_prime):
        """
        :rtype: ~emf_coverage.inversion.InversionResult
        """
        if self._study is not None:
            return mv.cdf_exposure_nobf(t_prime, self._study, self._quad,
                                        True)
        return mi.cdf_exposure(t_prime, self._kernel, self._radio,
                               BeamformingConfig.disabled(), self._quad,
                               True)

    def ccdf_sinr(self, t):
        """
        :rtype: ~emf_coverage.inversion.InversionResult
        """
        if self._study is not None:
            return mv.ccdf_sinr(t, self._study, self._sigma2, self._quad,
                                True)
        return mi.ccdf_sinr(t, self._kernel, self._radio, self._bf,
                            self._sigma2, self._quad, True)

    def joint_cdf(self, t, t_prime):
        """
        :rtype: ~emf_coverage.inversion.InversionResult
        """
        if self._study is not None:
            return mv.joint_cdf(t, t_prime, self._study, self._sigma2,
                                self._quad, True)
        return mi.joint_cdf(t, t_prime, self._kernel, self._radio, self._bf,
                            self._sigma2, self._quad, True)

    def moments(self):
        """
        Mean, second moment and variance of the exposure [W, W²].

        :rtype: dict
        """
        if self._study is not None:
            mean = mv.mean_exposure(self._study)
            second = mv.second_moment_exposure(self._study)
        else:
            mean = mi.mean_exposure(self._kernel, self._radio, self._bf)
            second = mi.second_moment_exposure(self._kernel, self._radio,
                                               self._bf)
        return dict(mean=mean, second_moment=second,
                    variance=max(second - mean ** 2, 0.0))

    def quantile(self, p):
        if self._study is not None:
            return mv.exposure_quantile(p, self._study, self._quad)
        return mi.exposure_quantile(p, self._kernel, self._radio, self._bf,
                                    self._quad)

    def isocurve(self, p, t_grid):
        if self._study is not None:
            return mv.joint_isocurve(p, t_grid, self._study, self._sigma2,
                                     self._quad)
        return mi.joint_isocurve(p, t_grid, self._kernel, self._radio,
                                 self._bf, self._sigma2, self._quad)

    def mean_serving_distance(self):
        """
        :rtype: float
        """
        if self._study is not None:
            return mv.mean_serving_distance(self._study)
        return mi.mean_serving_distance(self._kernel)


def _exposure_cells(power, radio):
    exposure = convert_exposure(power, radio)
    return [float(watt_to_dbm(power)), float(exposure.ipd),
            float(exposure.field)]


def _exposure_curve(analytics, thresholds, nobf=False):
    table = Table(["exposure_dbm", "ipd_w_m2", "field_v_m", "value",
                   "error"])
    evaluate = analytics.cdf_exposure_nobf if nobf \
        else analytics.cdf_exposure
    for t_prime in thresholds:
        result = evaluate(t_prime)
        table.append(_exposure_cells(t_prime, analytics.radio) +
                     [result.value, result.error_estimate])
    return table


def _sinr_curve(analytics, thresholds):
    table = Table(["sinr_db", "value", "error"])
    for t in thresholds:
        result = analytics.ccdf_sinr(t)
        table.append([float(linear_to_db(t)), result.value,
                      result.error_estimate])
    return table


def cmd_analyze(scenario, metric):
    """
    Analytic curve or statistics of ``metric`` on the scenario's threshold
    grids.

    :param ~emf_coverage.scenario.Scenario scenario: Scenario.
    :param str metric: One of :py:data:`ANALYZE_METRICS`.
    :rtype: ~emf_coverage.output.Table
    """
    if metric not in ANALYZE_METRICS:
        raise ScenarioError("unknown metric {!r}".format(metric))
    analytics = Analytics(scenario)
    exposure = scenario.exposure_thresholds()
    sinr = scenario.sinr_thresholds()
    radio = analytics.radio
    if metric in ("exposure-cdf", "exposure-cdf-nobf"):
        return _exposure_curve(analytics, exposure,
                               nobf=metric == "exposure-cdf-nobf")
    if metric == "sinr-ccdf":
        return _sinr_curve(analytics, sinr)
    if metric == "moments":
        return _moments_table(analytics, scenario.thresholds.probability)
    if metric == "isocurve":
        p = scenario.thresholds.probability
        table = Table(["sinr_db", "probability", "exposure_dbm", "ipd_w_m2",
                       "field_v_m"])
        for t, t_prime in zip(sinr, analytics.isocurve(p, sinr)):
            cells = [float("nan")] * 3 if math.isnan(t_prime) \
                else _exposure_cells(t_prime, radio)
            table.append([float(linear_to_db(t)), p] + cells)
        return table
    columns = ["sinr_db", "exposure_dbm", "value", "error"]
    if metric == "frechet":
        columns += ["lower", "upper"]
        coverage = [analytics.ccdf_sinr(t).value for t in sinr]
        emf = [analytics.cdf_exposure(t_prime).value
               for t_prime in exposure]
    table = Table(columns)
    for i, t in enumerate(sinr):
        for k, t_prime in enumerate(exposure):
            joint = analytics.joint_cdf(t, t_prime)
            row = [float(linear_to_db(t)), float(watt_to_dbm(t_prime)),
                   joint.value, joint.error_estimate]
            if metric == "frechet":
                row += list(frechet_bounds(coverage[i], emf[k]))
            table.append(row)
    return table


def _moments_table(analytics, probability):
    radio = analytics.radio
    moments = analytics.moments()
    ipd_factor = radio.kappa / (4.0 * math.pi)
    mean = moments["mean"]
    quantile = analytics.quantile(probability)
    table = Table(["quantity", "value", "unit"])
    table.append(["mean_power", mean, "W"])
    table.append(["mean_power_dbm", float(watt_to_dbm(mean)), "dBm"])
    table.append(["mean_ipd", ipd_factor * mean, "W/m2"])
    table.append(["mean_field", float(convert_exposure(mean, radio).field),
                  "V/m"])
    table.append(["second_moment_power", moments["second_moment"], "W2"])
    table.append(["variance_power", moments["variance"], "W2"])
    table.append(["variance_ipd", ipd_factor ** 2 * moments["variance"],
                  "W2/m4"])
    table.append(["quantile_{}_dbm".format(probability),
                  float(watt_to_dbm(quantile)), "dBm"])
    table.append(["mean_serving_distance", analytics.mean_serving_distance(),
                  "m"])
    return table


def _sweep_variant(scenario, parameter, value):
    if parameter == "density-scale":
        if not scenario.is_motion_variant:
            raise ScenarioError("density-scale needs an ippp topology")
        return scenario, scenario.density_model().scaled(value)
    if parameter in ("beta", "lambda") and scenario.is_motion_variant:
        raise ScenarioError("{} needs a bgpp or hppp topology".format(
            parameter))
    if parameter == "beta":
        changes = {"topology.kind": "bgpp", "topology.beta": value}
    elif parameter == "lambda":
        changes = {"topology.lambda_per_km2": value}
    elif parameter == "omega":
        changes = {"beamforming.omega_rad": value}
    else:
        raise ScenarioError("unknown sweep parameter {!r}".format(parameter))
    variant = scenario.override(**changes)
    return variant, variant.density_model()


def cmd_sweep(scenario, parameter, values, metric="exposure-cdf",
              simulate_sinr=True):
    """
    One curve of ``metric`` per parameter value, plus a summary with the
    mean serving distance, the mean exposure and the simulated mean SINR.

    :param ~emf_coverage.scenario.Scenario scenario: Scenario.
    :param str parameter: One of :py:data:`SWEEP_PARAMETERS`.
    :param values: Parameter values (β, BS/km², rad or a density factor).
    :param str metric: One of :py:data:`SWEEP_METRICS`.
    :param bool simulate_sinr: Run the Monte Carlo mean SINR.
    :return: Tuple ``(curves, summary)`` of tables.
    :rtype: tuple
    """
    if parameter not in SWEEP_PARAMETERS:
        raise ScenarioError("unknown sweep parameter {!r}".format(parameter))
    if metric not in SWEEP_METRICS:
        raise ScenarioError("unknown sweep metric {!r}".format(metric))
    if not len(values):
        raise ScenarioError("sweep needs at least one value")
    curves = None
    summary = Table(["parameter", "value", "mean_serving_distance_m",
                     "mean_power_w", "mc_mean_sinr_db"])
    for value in values:
        variant, model = _sweep_variant(scenario, parameter, value)
        analytics = Analytics(variant, model)
        if metric == "exposure-cdf":
            curve = _exposure_curve(analytics,
                                    variant.exposure_thresholds())
        else:
            curve = _sinr_curve(analytics, variant.sinr_thresholds())
        if curves is None:
            curves = Table(["parameter", "parameter_value"] + curve.columns)
        for row in curve.rows:
            row = dict(row, parameter=parameter, parameter_value=value)
            curves.append(row)
        mean_sinr = float("nan")
        if simulate_sinr:
            plan = variant.simulation_plan().replace(model=model)
            mean_sinr = float(linear_to_db(simulate(plan).sinr().mean))
        summary.append([parameter, value, analytics.mean_serving_distance(),
                        analytics.moments()["mean"], mean_sinr])
        log.info("Sweep {}={} done".format(parameter, value))
    return curves, summary


def _check_row(table, check, threshold, analytic, empirical, gap, tolerance):
    table.append([check, threshold, analytic, empirical, gap, tolerance,
                  bool(gap <= tolerance)])


def cmd_validate(scenario):
    """
    Compares the analytics with a Monte Carlo run of the scenario: the
    exposure CDF and the SINR CCDF on the threshold grids (KS-type gaps),
    the mean exposure (gap in standard errors) and, with beamforming, the
    main-lobe hit rate of the interferers.

    :param ~emf_coverage.scenario.Scenario scenario: Scenario.
    :return: Tuple ``(report, passed)``.
    :rtype: tuple
    """
    tolerances = scenario.tolerances
    analytics = Analytics(scenario)
    result = simulate(scenario.simulation_plan())
    report = Table(["check", "threshold", "analytic", "empirical", "gap",
                    "tolerance", "passed"])
    exposure_law = result.exposure()
    sinr_law = result.sinr()
    curves = (
        ("exposure-cdf", exposure_law, scenario.exposure_thresholds(),
         analytics.cdf_exposure, False, watt_to_dbm),
        ("sinr-ccdf", sinr_law, scenario.sinr_thresholds(),
         analytics.ccdf_sinr, True, linear_to_db),
    )
    for check, law, grid, evaluate, complement, to_db in curves:
        analytic = [evaluate(x).value for x in grid]
        empirical = law.ccdf(grid) if complement else law.cdf(grid)
        for x, a, e in zip(grid, analytic, empirical):
            _check_row(report, check, float(to_db(x)), a, float(e),
                       abs(a - e), tolerances.ks)
        _check_row(report, check + "-ks", None, None, None,
                   grid_distance(law, grid, analytic, complement),
                   tolerances.ks)
    # the β-GPP moments include realizations without base station
    mean_law = result.exposure(include_empty=not scenario.is_motion_variant)
    mean = analytics.moments()["mean"]
    _check_row(report, "mean-exposure-sigma", None, mean, mean_law.mean,
               _sigma_gap(mean, mean_law.mean, mean_law.standard_error),
               tolerances.mean_sigma)
    bf = analytics.bf
    if bf.enabled and result.gain_trials:
        error = math.sqrt(bf.p_g * (1.0 - bf.p_g) / result.gain_trials)
        _check_row(report, "gain-hit-rate-sigma", None, bf.p_g,
                   result.gain_hit_rate,
                   _sigma_gap(bf.p_g, result.gain_hit_rate, error),
                   tolerances.mean_sigma)
    passed = all(report.column("passed"))
    if not passed:
        log.warning("Validation of {} failed {} check(s)".format(
            scenario.name or "scenario",
            report.column("passed").count(False)))
    return report, passed


def _sigma_gap(analytic, empirical, standard_error):
    difference = abs(analytic - empirical)
    if standard_error > 0:
        return difference / standard_error
    return 0.0 if difference == 0 else float("inf")


def cmd_map(scenario, metric=None, shape=None):
    """
    Map of a motion-variant metric over the scenario's grid. Mean exposure
    maps hold the incident power density [W/m²].

    :param ~emf_coverage.scenario.Scenario scenario: Scenario (ippp).
    :param str metric: One of the map metrics; the scenario's by default.
    :param tuple shape: (rows, columns) replacing the scenario's.
    :return: Tuple ``(table, average, failures)``.
    :rtype: tuple
    """
    if not scenario.is_motion_variant:
        raise ScenarioError("map needs an ippp topology")
    section = scenario.map
    metric = metric or section.metric
    if shape is not None:
        scenario = scenario.override(**{"map.shape": list(shape)})
        section = scenario.map
    threshold = None
    if metric == "exposure-cdf" and section.threshold_dbm is not None:
        threshold = float(dbm_to_watt(section.threshold_dbm))
    elif metric == "sinr-ccdf" and section.sinr_threshold_db is not None:
        threshold = float(db_to_linear(section.sinr_threshold_db))
    radio = scenario.radio_config()
    result = evaluate_map(metric, section.to_grid(),
                          scenario.density_model(user_km=(0.0, 0.0)),
                          scenario.geometry_config(), radio,
                          scenario.beamforming_config(), threshold=threshold,
                          quad=scenario.quadrature_config(),
                          method=section.method,
                          workers=scenario.monte_carlo.workers,
                          sigma2=scenario.sigma2)
    scale = radio.kappa / (4.0 * math.pi) if metric == "mean-exposure" \
        else 1.0
    table = Table(["x_km", "y_km", metric, "error"])
    for x, y, value, error in result.rows():
        table.append([x / 1e3, y / 1e3, scale * float(value), error])
    return table, scale * result.average, len(result.failures)


def cmd_fit(dataset, center_km, tau_km, n_bins=DEFAULT_BINS):
    """
    Fits the radial density to a base station dataset.

    :param str dataset: Dataset path.
    :param tuple center_km: Maximum-density point (x, y) [km].
    :param float tau_km: Dataset disk radius [km].
    :param int n_bins: Number of Δ bins.
    :return: Scenario-compatible ``topology`` block plus diagnostics.
    :rtype: dict
    """
    points = read_bs_dataset(dataset)
    center = (1e3 * center_km[0], 1e3 * center_km[1])
    fit = fit_radial_density(points, center, 1e3 * tau_km, n_bins)
    model = fit.model
    topology = {
        "kind": "ippp",
        "a_per_km": model.a_t * 1e3,
        "b_per_km2": model.b_t * 1e6,
        "c_per_km3": model.c_t * 1e9,
        "d_per_km4": model.d_t * 1e12,
        "center_km": list(center_km),
    }
    diagnostics = {
        "points": int(points.shape[0]),
        "residual": fit.residual,
        "edges_km": [float(e) / 1e3 for e in fit.edges],
        "counts": [float(c) for c in fit.counts],
        "expected": [float(e) for e in fit.expected],
        "violations": [{"kind": v.kind, "delta_min_km": v.delta_min / 1e3,
                        "delta_max_km": v.delta_max / 1e3,
                        "extreme": v.extreme} for v in fit.violations],
    }
    return {"topology": topology, "diagnostics": diagnostics}


def parse_grid(text):
    """
    Parses a threshold grid: ``START:STOP:NUM`` or a comma-separated list.

    :rtype: dict or list
    """
    text = text.strip()
    try:
        if ":" in text:
            start, stop, num = text.split(":")
            grid = {"start": float(start), "stop": float(stop),
                    "num": int(num)}
            if grid["num"] < 1:
                raise ValueError("num")
            return grid
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "invalid grid {!r} (START:STOP:NUM or a,b,c)".format(text))
    if not values:
        raise argparse.ArgumentTypeError("empty threshold grid")
    return values


def parse_pair(text):
    """
    Parses ``X,Y`` into a tuple of floats.
    """
    try:
        x, y = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected two comma-separated numbers, got {!r}".format(text))
    return x, y


def parse_shape(text):
    """
    Parses ``ROWSxCOLUMNS``.
    """
    try:
        rows, columns = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected ROWSxCOLUMNS, got {!r}".format(text))
    if rows < 1 or columns < 1:
        raise argparse.ArgumentTypeError("grid shape must be positive")
    return rows, columns


def parse_values(text):
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "invalid value list {!r}".format(text))
    if not values:
        raise argparse.ArgumentTypeError("empty value list")
    return values


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="-",
                        help="output file (default: stdout)")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true",
                           help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true",
                           help="warnings only")
    return common


def _scenario_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--scenario", required=True,
                        help="preset name ({}) or scenario file".format(
                            ", ".join(preset_names())))
    parser.add_argument("--seed", type=int, help="master seed")
    parser.add_argument("--realizations", type=int,
                        help="Monte Carlo realizations")
    parser.add_argument("--truncation-n", type=int,
                        help="β-GPP truncation order N")
    parser.add_argument("--tolerance", type=float,
                        help="absolute and relative inversion tolerance")
    parser.add_argument("--workers", type=int, help="worker processes")
    parser.add_argument("--user", type=parse_pair, metavar="X,Y",
                        help="user location [km]")
    return parser


def build_parser():
    """
    :rtype: argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog="emf-coverage",
        description="EMF exposure and SINR analytics of cellular networks.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s {}".format(version))
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True
    common = _common_parser()
    scenario = _scenario_parser()

    analyze = commands.add_parser("analyze", parents=[common, scenario],
                                  help="analytic curves and statistics")
    analyze.add_argument("--metric", choices=ANALYZE_METRICS,
                         default="exposure-cdf")
    analyze.add_argument("--grid", type=parse_grid,
                         help="exposure thresholds [dBm] (SINR thresholds "
                              "[dB] for sinr-ccdf and isocurve)")
    analyze.add_argument("--sinr-grid", type=parse_grid,
                         help="SINR thresholds [dB] of the joint metrics")
    analyze.set_defaults(handler=_run_analyze)

    sweep = commands.add_parser("sweep", parents=[common, scenario],
                                help="curves for several parameter values")
    sweep.add_argument("--parameter", choices=SWEEP_PARAMETERS,
                       required=True)
    sweep.add_argument("--values", type=parse_values, required=True,
                       help="comma-separated parameter values")
    sweep.add_argument("--metric", choices=SWEEP_METRICS,
                       default="exposure-cdf")
    sweep.add_argument("--grid", type=parse_grid,
                       help="thresholds of the swept metric")
    sweep.add_argument("--summary", help="summary table file (default: "
                                         "appended to the output)")
    sweep.add_argument("--no-simulation", action="store_true",
                       help="skip the Monte Carlo mean SINR")
    sweep.set_defaults(handler=_run_sweep)

    validate = commands.add_parser("validate", parents=[common, scenario],
                                   help="Monte Carlo cross-check")
    validate.set_defaults(handler=_run_validate)

    map_ = commands.add_parser("map", parents=[common, scenario],
                               help="spatial map of a motion-variant metric")
    map_.add_argument("--metric", choices=MAP_METRICS)
    map_.add_argument("--grid", type=parse_shape, metavar="ROWSxCOLUMNS")
    map_.set_defaults(handler=_run_map)

    fit = commands.add_parser("fit", parents=[common],
                              help="fit the radial density to a dataset")
    fit.add_argument("dataset", help="base station dataset")
    fit.add_argument("--center", type=parse_pair, default=(0.0, 0.0),
                     metavar="X,Y", help="maximum-density point [km]")
    fit.add_argument("--tau", type=float, required=True,
                     help="dataset disk radius [km]")
    fit.add_argument("--bins", type=int, default=DEFAULT_BINS)
    fit.set_defaults(handler=_run_fit)
    return parser


def _load(args, **changes):
    changes.update({
        "seed": args.seed,
        "monte_carlo.realizations": args.realizations,
        "monte_carlo.workers": args.workers,
        "topology.truncation_n": args.truncation_n,
        "quadrature.abs_tol": args.tolerance,
        "quadrature.rel_tol": args.tolerance,
        "user_km": None if args.user is None else list(args.user),
    })
    return load_scenario(args.scenario).override(**changes)


def _run_analyze(args):
    sinr_first = args.metric in ("sinr-ccdf", "isocurve")
    scenario = _load(args, **{
        "thresholds.sinr_db": args.grid if sinr_first else args.sinr_grid,
        "thresholds.exposure_dbm": None if sinr_first else args.grid,
    })
    table = cmd_analyze(scenario, args.metric)
    write_table(args.out, table,
                provenance("analyze", scenario, scenario.seed,
                           metric=args.metric))
    return 0


def _run_sweep(args):
    key = "thresholds.sinr_db" if args.metric == "sinr-ccdf" \
        else "thresholds.exposure_dbm"
    scenario = _load(args, **{key: args.grid})
    curves, summary = cmd_sweep(scenario, args.parameter, args.values,
                                args.metric, not args.no_simulation)
    comments = provenance("sweep", scenario, scenario.seed,
                          parameter=args.parameter, metric=args.metric)
    if args.summary:
        write_table(args.out, curves, comments)
        write_table(args.summary, summary, comments)
    else:
        footer = [",".join(summary.columns)] + \
            [",".join(_text(row.get(c)) for c in summary.columns)
             for row in summary.rows]
        write_table(args.out, curves, comments, footer)
    return 0


def _text(value):
    return "nan" if isinstance(value, float) and math.isnan(value) \
        else str(value)


def _run_validate(args):
    scenario = _load(args)
    report, passed = cmd_validate(scenario)
    write_table(args.out, report,
                provenance("validate", scenario, scenario.seed,
                           realizations=scenario.monte_carlo.realizations),
                ["result={}".format("pass" if passed else "fail")])
    return 0


def _run_map(args):
    scenario = _load(args)
    table, average, failures = cmd_map(scenario, args.metric, args.grid)
    write_table(args.out, table,
                provenance("map", scenario, scenario.seed,
                           metric=args.metric or scenario.map.metric),
                ["grid_average={!r}".format(float(average)),
                 "failed_cells={}".format(failures)])
    return 0


def _run_fit(args):
    document = cmd_fit(args.dataset, args.center, args.tau, args.bins)
    write_json(args.out, document,
               provenance("fit", dataset=args.dataset, tau_km=args.tau))
    return 0


def configure_logging(args):
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    """
    Entry point of the ``emf-coverage`` command.

    :param list argv: Arguments without the program name.
    :return: Exit code.
    :rtype: int
    """
    args = build_parser().parse_args(argv)
    configure_logging(args)
    try:
        return args.handler(args)
    except EmfCoverageError as e:
        sys.stderr.write(json.dumps({"error": type(e).__name__,
                                     "message": e.error_message}) + "\n")
        return EXIT_FAILURE
