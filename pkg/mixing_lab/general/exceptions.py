#!/usr/bin/env python3
"""This module lists all user defined exceptions for import to the modules
that need them (in alphabetical order, after the common base class).

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""



class MixingLabError(Exception):
    """
    Base class for every error raised by this package.  The CLI maps any of
    these (other than `LabConfigError`) to exit code 1.
    """



class ChiSlopeExceeded(MixingLabError):
    """
    Raised when the damping function cannot be made to satisfy |chi'| <= |b|,
    even after raising its level towards 1.
    """



class ConeEscape(MixingLabError):
    """
    Raised when an iterate of the cone iteration leaves the cone.

    Instance Attributes:
      step (int): The iteration index at which the pair left the cone.
      condition (str): The name of the first violated cone condition.
    """
    def __init__(self, step, condition, message=None):
        self.step = step
        self.condition = condition
        if message is None:
            message = f'Pair left the cone at step {step}: {condition}'
        super().__init__(message)



class ContractionFailed(MixingLabError):
    """
    Raised when the fiber contraction of a skew product is required but the
    measured contraction rate is not below 1.
    """



class InsufficientDecayWindow(MixingLabError):
    """
    Raised when a norm curve reaches the grid noise floor before enough points
    are available for a decay-rate fit.
    """



class LabConfigError(MixingLabError):
    """
    Raised when a run or model configuration is missing, malformed, or holds
    values outside their valid range.
    """



class LedgerIncomplete(MixingLabError):
    """
    Raised when a constants ledger lacks a measured value needed by the
    requested evaluation (e.g. C3 for the admissibility inequalities).
    """



class NoCaseWins(MixingLabError):
    """
    Raised when neither cancellation case holds on any candidate ball of a
    sweep window while building the damping function.
    """



class NoConvergence(MixingLabError):
    """
    Raised when the power iteration for the leading eigendata does not meet
    its tolerances within the iteration budget.
    """



class NotConverged(MixingLabError):
    """
    Raised when the fiber averages stall above tolerance on more than the
    allowed fraction of base nodes.
    """



class NoUNIWitness(MixingLabError):
    """
    Raised when a constants ledger is requested without a UNI witness.
    """



class OrbitHitsBoundary(MixingLabError):
    """
    Raised when an orbit lands within tolerance of an interior partition
    endpoint, where the map is not defined.
    """



class PreconditionViolated(MixingLabError):
    """
    Raised when an operation is invoked outside of its documented parameter
    range (e.g. a frequency below 4*pi/D for the cone machinery).
    """



class RegularityViolated(MixingLabError):
    """
    Raised when a positive function fails the log-Holder bound required for the
    interval mass comparison.
    """



class SeriesNotSettled(MixingLabError):
    """
    Raised when the last retained term of the Laplace series exceeds its
    tolerance.
    """



class SpectralMismatch(MixingLabError):
    """
    Raised when spectral data at one twist is used with an operator whose
    real part differs, or when a density leaves the band [f0/2, 2 f0] around
    the sigma = 0 density.
    """



class TruncationTailTooLarge(MixingLabError):
    """
    Raised when the mass omitted by truncating a countable branch family is
    above the configured bound.
    """



class UnknownModel(MixingLabError):
    """
    Raised when a model name is not present in the model zoo.
    """



class WindowTooShort(MixingLabError):
    """
    Raised when a correlation curve has too few significant entries for a
    decay fit.
    """



class WordLengthMismatch(MixingLabError):
    """
    Raised when two branch words of different lengths are compared.
    """
