# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Radio, geometry and antenna parameters, the propagation model and the
exposure unit conversions.

All values are stored in SI units (Hz, m, W, rad). Conversions from the
units used in scenario files (MHz, dBm, km) happen in the ``from_*``
constructors only.
"""

from __future__ import absolute_import, division, print_function
from .errors import DomainError, UnsupportedOrderError
import math
import numbers
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Speed of light in vacuum [m/s].
SPEED_OF_LIGHT = 299792458.0

#: Boltzmann constant [J/K].
BOLTZMANN = 1.380649e-23

#: Reference noise temperature [K].
REFERENCE_TEMPERATURE = 290.0

#: Free-space wave impedance approximation 120π [Ohm].
WAVE_IMPEDANCE = 120.0 * math.pi

#: Largest sector beamwidth [rad] (three sectors cover the full circle).
MAX_BEAMWIDTH = 2.0 * math.pi / 3.0


def dbm_to_watt(value_dbm):
    """
    Converts dBm to W.

    :param value_dbm: Power level(s) in dBm.
    :rtype: float or numpy.ndarray
    """
    return 10.0 ** ((np.asarray(value_dbm, dtype=float) - 30.0) / 10.0)


def watt_to_dbm(value_w):
    """
    Converts W to dBm (``-inf`` for 0 W).

    :param value_w: Power(s) in W.
    :rtype: float or numpy.ndarray
    """
    with np.errstate(divide='ignore'):
        return 10.0 * np.log10(np.asarray(value_w, dtype=float)) + 30.0


def db_to_linear(value_db):
    """
    Converts a ratio from dB to linear scale.
    """
    return 10.0 ** (np.asarray(value_db, dtype=float) / 10.0)


def linear_to_db(value):
    """
    Converts a ratio from linear scale to dB.
    """
    with np.errstate(divide='ignore'):
        return 10.0 * np.log10(np.asarray(value, dtype=float))


def _positive(name, value):
    value = float(value)
    if not value > 0 or not math.isfinite(value):
        raise DomainError(name, value, "{} > 0".format(name))
    return value


def _nonnegative(name, value):
    value = float(value)
    if not value >= 0 or not math.isfinite(value):
        raise DomainError(name, value, "{} >= 0".format(name))
    return value


class RadioConfig(object):
    """
    Radio link parameters of the downlink budget.

    The receiver gain is fixed to 1 (isotropic user equipment).
    """

    def __init__(self, f, bw, pt_gmax, z, alpha, m=1, noise_figure_db=0.0):
        """
        Creates a radio configuration from SI values.

        :param float f: Carrier frequency [Hz].
        :param float bw: Bandwidth [Hz].
        :param float pt_gmax: EIRP P_t·G_max [W], may be 0.
        :param float z: Base station antenna height [m].
        :param float alpha: Path-loss exponent, > 2.
        :param int m: Nakagami fading shape, positive integer.
        :param float noise_figure_db: Receiver noise figure [dB].
        :raise ~emf_coverage.errors.DomainError:
            If a value violates its constraint.
        """
        super(RadioConfig, self).__init__()
        self._f = _positive("f", f)
        self._bw = _positive("bw", bw)
        self._pt_gmax = _nonnegative("pt_gmax", pt_gmax)
        self._z = _positive("z", z)
        self._alpha = float(alpha)
        if not self._alpha > 2:
            raise DomainError("alpha", alpha, "alpha > 2")
        if isinstance(m, bool) or not isinstance(m, numbers.Real) or \
                m < 1 or not float(m).is_integer():
            raise UnsupportedOrderError(m)
        self._m = int(m)
        self._noise_figure_db = float(noise_figure_db)

    @classmethod
    def from_units(cls, frequency_mhz, bandwidth_mhz, eirp_dbm, height_m,
                   alpha, m=1, noise_figure_db=0.0):
        """
        Creates a radio configuration from the units of the parameter
        tables (MHz, dBm, m).

        :param float frequency_mhz: Carrier frequency [MHz].
        :param float bandwidth_mhz: Bandwidth [MHz].
        :param float eirp_dbm: EIRP [dBm].
        :param float height_m: Antenna height [m].
        :param float alpha: Path-loss exponent.
        :param int m: Nakagami shape.
        :param float noise_figure_db: Noise figure [dB].
        :rtype: ~emf_coverage.model.RadioConfig
        """
        return cls(f=frequency_mhz * 1e6, bw=bandwidth_mhz * 1e6,
                   pt_gmax=float(dbm_to_watt(eirp_dbm)), z=height_m,
                   alpha=alpha, m=m, noise_figure_db=noise_figure_db)

    def replace(self, **changes):
        """
        Returns a copy with some fields replaced.

        :rtype: ~emf_coverage.model.RadioConfig
        """
        fields = dict(f=self._f, bw=self._bw, pt_gmax=self._pt_gmax,
                      z=self._z, alpha=self._alpha, m=self._m,
                      noise_figure_db=self._noise_figure_db)
        fields.update(changes)
        return RadioConfig(**fields)

    @property
    def f(self):
        """
        Carrier frequency [Hz].

        :type: float
        """
        return self._f

    @property
    def bw(self):
        """
        Bandwidth [Hz].

        :type: float
        """
        return self._bw

    @property
    def pt_gmax(self):
        """
        EIRP P_t·G_max [W].

        :type: float
        """
        return self._pt_gmax

    @property
    def z(self):
        """
        Base station antenna height [m].

        :type: float
        """
        return self._z

    @property
    def alpha(self):
        """
        Path-loss exponent.

        :type: float
        """
        return self._alpha

    @property
    def m(self):
        """
        Nakagami fading shape.

        :type: int
        """
        return self._m

    @property
    def noise_figure_db(self):
        """
        Receiver noise figure [dB].

        :type: float
        """
        return self._noise_figure_db

    @property
    def g_r(self):
        """
        Receiver antenna gain, always 1.

        :type: float
        """
        return 1.0

    @property
    def kappa(self):
        """
        Free-space constant κ = (4πf/c₀)².

        :type: float
        """
        return kappa(self)

    @property
    def noise_power(self):
        """
        Thermal noise power σ² [W] of the receiver.

        :type: float
        """
        return noise_power(self._bw, self._noise_figure_db)

    def __repr__(self):
        return "RadioConfig(f={!r}, bw={!r}, pt_gmax={!r}, z={!r}, " \
            "alpha={!r}, m={!r}, noise_figure_db={!r})".format(
                self._f, self._bw, self._pt_gmax, self._z, self._alpha,
                self._m, self._noise_figure_db)


class GeometryConfig(object):
    """
    Study region: the annulus between the exclusion radius and the study-disk
    radius, centered at the evaluated user.
    """

    def __init__(self, r_e, tau):
        """
        :param float r_e: Exclusion radius [m], >= 0.
        :param float tau: Study-disk radius [m], > r_e.
        :raise ~emf_coverage.errors.DomainError: If ``0 <= r_e < tau`` fails.
        """
        super(GeometryConfig, self).__init__()
        self._r_e = _nonnegative("r_e", r_e)
        self._tau = _positive("tau", tau)
        if not self._r_e < self._tau:
            raise DomainError("tau", tau, "tau > r_e")

    @classmethod
    def from_km(cls, r_e_km, tau_km):
        """
        Creates a geometry from radii in km.

        :rtype: ~emf_coverage.model.GeometryConfig
        """
        return cls(r_e=r_e_km * 1e3, tau=tau_km * 1e3)

    @property
    def r_e(self):
        """
        Exclusion radius [m].

        :type: float
        """
        return self._r_e

    @property
    def tau(self):
        """
        Study-disk radius [m].

        :type: float
        """
        return self._tau

    @property
    def area(self):
        """
        Area of the annulus [m²].

        :type: float
        """
        return math.pi * (self._tau ** 2 - self._r_e ** 2)

    def __repr__(self):
        return "GeometryConfig(r_e={!r}, tau={!r})".format(self._r_e,
                                                           self._tau)


class BeamformingConfig(object):
    """
    Sectored dynamic beamforming: the serving base station points its main
    lobe at the user, interferers illuminate the user with probability
    ``p_g``.
    """

    def __init__(self, omega, enabled=True):
        """
        :param float omega: Main-lobe beamwidth [rad] in [0, 2π/3].
        :param bool enabled:
            If ``False``, every base station radiates toward the user
            (``p_g = 1``).
        """
        super(BeamformingConfig, self).__init__()
        self._enabled = bool(enabled)
        self._omega = float(omega)
        self._p_g = illumination_probability(self._omega) \
            if self._enabled else 1.0

    @classmethod
    def disabled(cls):
        """
        Beamforming switched off (all gains 1).

        :rtype: ~emf_coverage.model.BeamformingConfig
        """
        return cls(omega=MAX_BEAMWIDTH, enabled=False)

    @property
    def omega(self):
        """
        Main-lobe beamwidth [rad].

        :type: float
        """
        return self._omega

    @property
    def enabled(self):
        """
        Whether dynamic beamforming is modeled.

        :type: bool
        """
        return self._enabled

    @property
    def p_g(self):
        """
        Probability that an interfering base station illuminates the user.

        :type: float
        """
        return self._p_g

    def __repr__(self):
        return "BeamformingConfig(omega={!r}, enabled={!r})".format(
            self._omega, self._enabled)


class ExposureValue(object):
    """
    One exposure level in its three representations: received power,
    incident power density and RMS electric field.
    """

    def __init__(self, power, ipd, field):
        super(ExposureValue, self).__init__()
        self._power = power
        self._ipd = ipd
        self._field = field

    @property
    def power(self):
        """
        Total received power [W].
        """
        return self._power

    @property
    def power_dbm(self):
        """
        Total received power [dBm].
        """
        return watt_to_dbm(self._power)

    @property
    def ipd(self):
        """
        Incident power density [W/m²].
        """
        return self._ipd

    @property
    def field(self):
        """
        RMS electric field strength [V/m].
        """
        return self._field

    @classmethod
    def from_ipd(cls, ipd, radio):
        """
        Builds the representations from an incident power density.

        :param ipd: IPD value(s) [W/m²], >= 0.
        :param ~emf_coverage.model.RadioConfig radio: Carrier frequency.
        :rtype: ~emf_coverage.model.ExposureValue
        """
        ipd = np.asarray(ipd, dtype=float)
        if np.any(ipd < 0):
            raise DomainError("ipd", ipd, "ipd >= 0")
        return convert_exposure(4.0 * math.pi * ipd / kappa(radio), radio)

    @classmethod
    def from_field(cls, field, radio):
        """
        Builds the representations from an RMS field strength.

        :param field: Field value(s) [V/m], >= 0.
        :param ~emf_coverage.model.RadioConfig radio: Carrier frequency.
        :rtype: ~emf_coverage.model.ExposureValue
        """
        field = np.asarray(field, dtype=float)
        if np.any(field < 0):
            raise DomainError("field", field, "field >= 0")
        return cls.from_ipd(field ** 2 / WAVE_IMPEDANCE, radio)

    def __repr__(self):
        return "ExposureValue(power={!r}, ipd={!r}, field={!r})".format(
            self._power, self._ipd, self._field)


def kappa_from_frequency(f):
    """
    κ = (4πf/c₀)² for a carrier frequency in Hz.
    """
    return (4.0 * math.pi * f / SPEED_OF_LIGHT) ** 2


def kappa(radio):
    """
    Free-space constant κ = (4πf/c₀)² of the path-loss model.

    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :rtype: float
    """
    return kappa_from_frequency(radio.f)


def path_gain(r, radio):
    """
    Large-scale path gain κ⁻¹·(r² + z²)^(-α/2) at horizontal distance ``r``.

    :param r: Horizontal distance(s) [m], >= 0.
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :rtype: float or numpy.ndarray
    """
    r = np.asarray(r, dtype=float)
    return path_gain_squared(r * r, radio)


def path_gain_squared(u, radio):
    """
    Path gain expressed in the squared horizontal distance ``u = r²``.

    :param u: Squared distance(s) [m²], >= 0.
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :rtype: float or numpy.ndarray
    """
    u = np.asarray(u, dtype=float)
    return (u + radio.z ** 2) ** (-0.5 * radio.alpha) / kappa(radio)


def mean_received_power(r, radio):
    """
    Fading-averaged received power P̄(r) = P_t·G_max·l(r) of one base station
    whose main lobe points at the user.

    :param r: Horizontal distance(s) [m].
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :rtype: float or numpy.ndarray
    """
    return radio.pt_gmax * path_gain(r, radio)


def mean_received_power_squared(u, radio):
    """
    :py:func:`mean_received_power` as a function of ``u = r²``.
    """
    return radio.pt_gmax * path_gain_squared(u, radio)


def sector_gain(theta, bf):
    """
    Normalized two-level sector gain: 1 inside the main lobe
    (``|theta| <= omega``, boundary included), 0 outside. Without
    beamforming every direction has gain 1.

    :param theta: Angle(s) off boresight [rad] in [-π, π].
    :param ~emf_coverage.model.BeamformingConfig bf: Antenna model.
    :rtype: float or numpy.ndarray
    """
    theta = np.asarray(theta, dtype=float)
    if not bf.enabled:
        return np.ones_like(theta)[()]
    return np.where(np.abs(theta) <= bf.omega, 1.0, 0.0)[()]


def illumination_probability(omega):
    """
    Probability 3ω/(2π) that a randomly oriented three-sector site
    illuminates the user with its main lobe.

    :param float omega: Beamwidth [rad] in [0, 2π/3].
    :rtype: float
    :raise ~emf_coverage.errors.DomainError: If ``omega`` is out of range.
    """
    omega = float(omega)
    if not (0.0 <= omega <= MAX_BEAMWIDTH * (1.0 + 1e-12)):
        raise DomainError("omega", omega, "0 <= omega <= 2*pi/3")
    return min(3.0 * omega / (2.0 * math.pi), 1.0)


def noise_power(bw, noise_figure_db):
    """
    Thermal noise power 10·log₁₀(k·T₀·B_w) + 30 + F [dBm], returned in W.

    :param float bw: Bandwidth [Hz].
    :param float noise_figure_db: Noise figure [dB].
    :rtype: float
    """
    bw = _positive("bw", bw)
    return BOLTZMANN * REFERENCE_TEMPERATURE * bw * \
        10.0 ** (noise_figure_db / 10.0)


def convert_exposure(power, radio):
    """
    Converts a received power into IPD and field strength:
    S = κ·P/(4π), E = √(120π·S).

    :param power: Received power(s) [W], >= 0.
    :param ~emf_coverage.model.RadioConfig radio: Carrier frequency.
    :rtype: ~emf_coverage.model.ExposureValue
    :raise ~emf_coverage.errors.DomainError: If a power is negative.
    """
    power = np.asarray(power, dtype=float)
    if np.any(power < 0):
        raise DomainError("power", power, "power >= 0")
    ipd = kappa(radio) * power / (4.0 * math.pi)
    field = np.sqrt(WAVE_IMPEDANCE * ipd)
    return ExposureValue(power[()], ipd[()], field[()])


def received_power_integral(u_lower, u_upper, radio, power=1):
    """
    Closed form of ∫ P̄(v)^p dv over squared distances v in
    [u_lower, u_upper], with P̄(v) = P_t·G_max·κ⁻¹·(v + z²)^(-α/2):

        A^p / (pα/2 - 1) · [s^(1 - pα/2)] between s_upper and s_lower,

    s = v + z². For p = 1 this is the bracket 2/(α-2)·[P̄·(r² + z²)].

    :param u_lower: Lower squared distance(s) [m²].
    :param u_upper: Upper squared distance(s) [m²].
    :param ~emf_coverage.model.RadioConfig radio: Radio configuration.
    :param int power: Exponent p (1 or 2).
    :rtype: float or numpy.ndarray
    """
    s_lower = np.asarray(u_lower, dtype=float) + radio.z ** 2
    s_upper = np.asarray(u_upper, dtype=float) + radio.z ** 2
    amplitude = (radio.pt_gmax / kappa(radio)) ** power
    exponent = 0.5 * power * radio.alpha - 1.0
    return (amplitude / exponent *
            (s_lower ** -exponent - s_upper ** -exponent))[()]
