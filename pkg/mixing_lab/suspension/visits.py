#!/usr/bin/env python3
"""
Moments int gamma^{psi_t} dmu^R of the number psi_t of roof crossings by time t.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import logging

import numpy as np

from mixing_lab.suspension import correlation



logger = logging.getLogger(__name__)



def visit_moment_at(system, gamma, t):
    """
    Integrates gamma^{psi_t} against mu^R: the set of heights u in [0, R(y))
    with exactly n crossings by time t is an interval, so only its length
    enters.

    Args:
      system (SuspensionSystem): The suspension.
      gamma (float): The contraction factor in (0,1).
      t (float): The time, t >= 0.

    Returns:
      (float): The moment.
    """
    roof = system.roof
    y = system.quadrature.nodes
    height = roof.value(y)
    z = y.copy()
    r_n = np.zeros_like(y)
    acc = np.zeros_like(y)
    for n in range(correlation.n_terms_for(roof, t)):
        r_next = r_n + roof.value(z)
        length = np.maximum(0.0, np.minimum(height, r_next - t)
                - np.maximum(0.0, r_n - t))
        acc += gamma ** n * length
        z = system.exp_map.forward(z)
        r_n = r_next
    return float(system.quadrature.integrate(acc)) / system.r_bar



def visit_moment(system, gamma, t_grid, fit=True):
    """
    Evaluates the visit moment on a t-grid and fits its exponential decay.

    Args:
      system (SuspensionSystem): The suspension.
      gamma (float): The contraction factor in (0,1).
      t_grid (ndarray): The times.
      fit (bool): Whether to fit delta^ by `decay_fit()`.

    Returns:
      (CorrelationCurve): The curve ('visits'); its fit holds delta^ as the
        rate when `fit` is set.
    """
    assert 0.0 < gamma < 1.0
    t_grid = np.asarray(t_grid, dtype=float)
    values = np.array([visit_moment_at(system, gamma, t) for t in t_grid])
    curve = correlation.CorrelationCurve(t_grid, values,
            np.zeros(len(t_grid)), 'visits')
    if fit:
        correlation.decay_fit(curve)
        logger.info(f'Visit moment gamma={gamma}: delta^={curve.fit.rate:.6g}')
    return curve
