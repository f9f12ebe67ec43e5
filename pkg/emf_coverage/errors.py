# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function

import logging
log = logging.getLogger(__name__)


class EmfCoverageError(Exception):
    """
    Base exception of all errors raised by this package.
    """
    def __init__(self, message="EMF coverage error."):
        super(EmfCoverageError, self).__init__(message)
        self.error_message = message

    def __reduce__(self):
        # subclasses take other constructor arguments than ``args``
        return _rebuild_error, (type(self), self.args, self.__dict__)


def _rebuild_error(cls, args, state):
    """
    Unpickles an error of any subclass (errors cross process boundaries in
    parallel maps and simulations).
    """
    error = cls.__new__(cls)
    Exception.__init__(error, *args)
    error.__dict__.update(state)
    return error


class UnsupportedOrderError(EmfCoverageError, ValueError):
    """
    An order parameter (fading shape, incomplete gamma order, ...) is not a
    positive integer.
    """
    def __init__(self, order):
        super(UnsupportedOrderError, self).__init__(
            "Unsupported order {!r} (expected a positive integer).".format(
                order)
        )
        self.order = order


class DomainError(EmfCoverageError, ValueError):
    """
    An argument lies outside the domain of the called function.
    """
    def __init__(self, name, value, constraint):
        super(DomainError, self).__init__(
            "Domain error: {}={!r} violates {}.".format(name, value,
                                                        constraint)
        )
        self.name = name
        self.value = value
        self.constraint = constraint


class SingularityError(DomainError):
    """
    Evaluation requested exactly at an integrable singularity.
    """
    def __init__(self, point):
        super(SingularityError, self).__init__(
            "r", point, "r != rho_t (logarithmic singularity)")
        self.point = point


class ConvergenceError(EmfCoverageError, ArithmeticError):
    """
    An iterative scheme exhausted its budget before reaching its tolerance.
    The best available value is kept in ``partial_value``.
    """
    def __init__(self, partial_value, error_estimate,
                 message="No convergence."):
        super(ConvergenceError, self).__init__(
            "Convergence failed: {} (partial value {!r}, error estimate "
            "{!r}).".format(message, partial_value, error_estimate)
        )
        self.partial_value = partial_value
        self.error_estimate = error_estimate


class QuadratureError(ConvergenceError):
    """
    Fixed-rule quadrature whose embedded error estimate exceeds its
    tolerance.
    """
    def __init__(self, value, error_estimate, interval):
        super(QuadratureError, self).__init__(
            value,
            error_estimate,
            "quadrature on [{}, {}] not accurate enough".format(*interval)
        )
        self.interval = tuple(interval)


class EmptyRegionError(EmfCoverageError):
    """
    The study annulus carries (numerically) no expected base station, so the
    nearest-BS law cannot be normalized.
    """
    def __init__(self, lower, upper):
        super(EmptyRegionError, self).__init__(
            "Empty region: no expected base station between r={} m and "
            "r={} m.".format(lower, upper)
        )
        self.lower = lower
        self.upper = upper


class NormalizationError(EmfCoverageError, ArithmeticError):
    """
    A probability law integrates to a total too far away from one.
    """
    def __init__(self, total, tolerance):
        super(NormalizationError, self).__init__(
            "Normalization failed: total mass {!r} deviates from 1 by more "
            "than {!r}.".format(total, tolerance)
        )
        self.total = total
        self.tolerance = tolerance


class InsufficientDataError(EmfCoverageError, ValueError):
    """
    Not enough data points for the requested estimation.
    """
    def __init__(self, count, required):
        super(InsufficientDataError, self).__init__(
            "Insufficient data: got {} usable entries, need at least {}."
            .format(count, required)
        )
        self.count = count
        self.required = required


class InsufficientConditioningError(EmfCoverageError):
    """
    Too few Monte Carlo realizations satisfy a conditioning event.
    """
    def __init__(self, retained, required):
        super(InsufficientConditioningError, self).__init__(
            "Insufficient conditioning: {} realizations retained, need at "
            "least {}.".format(retained, required)
        )
        self.retained = retained
        self.required = required


class ScenarioError(EmfCoverageError, ValueError):
    """
    A scenario or dataset file does not match its schema.
    """
    def __init__(self, message, errors=None):
        super(ScenarioError, self).__init__(
            "Invalid scenario: {}".format(message))
        self.errors = list(errors or [])
