#!/usr/bin/env python3
"""
Probes the Dolgopyat contraction: the decay of ||L_{sigma+ib}^{k n0} v||_b in k
for cone-compatible samples v, fitted log-linearly to a rate gamma per step.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import logging

import numpy as np
import pandas as pd

from mixing_lab.general import utils
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.transfer import operators
from mixing_lab.transfer.grid import GridFunction



logger = logging.getLogger(__name__)



@dataclass
class DolgopyatReport:
    """
    The outcome of `dolgopyat_probe()`.

    Instance Attributes:
      gamma (float): The fitted rate per iterate, max over b and samples.
      gamma_by_b ({float: float}): The fitted rate per frequency.
      passed (bool): gamma < 1.
      below_threshold ([float]): The probed b with |b| < D'.
      rows ([{str: *}]): One row per (b, sample, n) with the b-norm.
    """
    gamma: float
    gamma_by_b: dict
    passed: bool
    below_threshold: list = field(default_factory=list)
    rows: list = field(default_factory=list)

    def to_frame(self):
        """
        Returns:
          (DataFrame): The norm curves, columns b, n, sample, norm_b, ratio.
        """
        return pd.DataFrame(self.rows,
                columns=['b', 'n', 'sample', 'norm_b', 'ratio'])



def cone_compatible_samples(b, c4, n_intervals, alpha=1.0, seed=0, count=3,
        modes=8):
    """
    Builds probe inputs with |v|_alpha <= C4 |b|^alpha |v|_inf: the constant 1
    and random band-limited functions rescaled in frequency content to meet
    the bound.

    Args:
      b (float): The frequency.
      c4 (float): The cone constant.
      n_intervals (int): The grid size.
      alpha (float): The Holder exponent.
      seed (int): The seed.
      count (int): The number of random samples.
      modes (int): The Fourier modes per random sample.

    Returns:
      ([GridFunction]): The samples.
    """
    samples = [GridFunction.constant(1.0, n_intervals, alpha)]
    limit = c4 * abs(b) ** alpha
    ks = np.arange(1, modes + 1)
    for rng in utils.spawn_generators(seed, count):
        coeffs = (rng.uniform(-1.0, 1.0, modes)
                + 1j * rng.uniform(-1.0, 1.0, modes)) / ks ** 2
        v = GridFunction.from_callable(
                lambda y, c=coeffs: 1.0 + np.exp(2j * np.pi * np.outer(y, ks))
                @ c, n_intervals, alpha)
        while v.holder_seminorm() > limit * v.sup_norm():
            v = v.map_values(lambda x: 1.0 + 0.5 * (x - 1.0))
        samples.append(v)
    return samples



def _decay_window(norms, floor, rel_tol=1e-9):
    # growth below rel_tol is rounding, so a flat curve keeps its whole window
    start = 0
    while start < len(norms) - 1 \
            and norms[start] * (1.0 + rel_tol) < np.max(norms[start + 1:]):
        start += 1
    end = start
    while end < len(norms) and norms[end] > floor:
        end += 1
    return start, end



def dolgopyat_probe(spectral, ledger, b_list, samples=None, steps=30,
        floor=1e-12, seed=0):
    """
    Runs the probe over the frequencies in `b_list`.

    The fit window starts at the first step from which the norm never grows
    again and ends where the norm reaches `floor`.

    Args:
      spectral (SpectralData): The data at the probed sigma.
      ledger (ConstantsLedger): Supplies n0, C4 and D'.
      b_list ([float]): The frequencies.
      samples (callable or [GridFunction] or None): A fixed suite, a callable
        b -> suite, or None for `cone_compatible_samples()`.
      steps (int): The number of n0-blocks applied.
      floor (float): The norm floor ending the fit window.
      seed (int): The seed for the default suite.

    Returns:
      (DolgopyatReport): The fitted rates.

    Raises:
      (InsufficientDecayWindow): A sample gives fewer than 3 points to fit.
    """
    n0 = ledger.n0
    rows = []
    gamma_by_b = {}
    below = []
    for b in b_list:
        if abs(b) < ledger.d_prime:
            logger.warning(f'Probing |b|={abs(b)} below D\'={ledger.d_prime}')
            below.append(b)
        s = complex(spectral.sigma, b)
        if samples is None:
            suite = cone_compatible_samples(b, ledger.c4,
                    spectral.n_intervals, spectral.density.alpha, seed)
        elif callable(samples):
            suite = samples(b)
        else:
            suite = samples

        gamma_b = 0.0
        for i_sample, v in enumerate(suite):
            if v.sup_norm() == 0:
                logger.debug(f'b={b}: skipping zero sample {i_sample}')
                continue
            norms = [v.b_norm(b)]
            image = v
            for _ in range(steps):
                for _ in range(n0):
                    image = operators.apply_L(spectral, s, image)
                norms.append(image.b_norm(b))
            norms = np.array(norms)
            for k, norm in enumerate(norms):
                rows.append({'b': b, 'n': k * n0, 'sample': i_sample,
                        'norm_b': norm, 'ratio': norm / norms[0]})

            start, end = _decay_window(norms, floor)
            if end - start < 3:
                logger.critical(f'b={b}, sample {i_sample}: decay window'
                        + f' [{start}, {end}) too short')
                raise InsufficientDecayWindow(f'b={b}: only {end - start}'
                        + ' points above the floor in monotone decay')
            k_vals = np.arange(start, end) * n0
            _, slope, _ = utils.fit_log_linear(k_vals, norms[start:end])
            gamma_b = max(gamma_b, float(np.exp(slope)))
        gamma_by_b[b] = gamma_b
        logger.info(f'Dolgopyat probe b={b}: gamma={gamma_b:.6f}')

    gamma = max(gamma_by_b.values()) if gamma_by_b else 0.0
    return DolgopyatReport(gamma, gamma_by_b, gamma < 1.0, below, rows)
