#!/usr/bin/env python3
"""
Correlation functions of the suspension semiflow

  rho_{v,w}(t) = int v . w o F_t dmu^R - int v dmu^R int w dmu^R

by two independent routes: a weighted Monte-Carlo average over samples of mu^R,
and the series rho = sum_n J_n(t) evaluated by quadrature, where J_n collects
the points that cross the roof exactly n times by time t.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import logging
import math

import numpy as np
import pandas as pd

from mixing_lab.general import utils
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.suspension import semiflow



logger = logging.getLogger(__name__)

_U_ORDER = 16
_SE_FACTOR = 3.0



@dataclass
class DecayFit:
    """
    A fitted envelope C e^{-c t}.

    Instance Attributes:
      const (float): C.
      rate (float): c.
      r_squared (float): The coefficient of determination.
      window ((float, float)): The first and last t used.
      n_points (int): The number of points used.
    """
    const: float
    rate: float
    r_squared: float
    window: tuple
    n_points: int

    def to_dict(self):
        """
        Returns:
          ({str: *}): A JSON-ready view.
        """
        return {'C': self.const, 'c': self.rate, 'r_squared': self.r_squared,
                'window': list(self.window), 'n_points': self.n_points}



@dataclass
class CorrelationCurve:
    """
    Correlation estimates on a t-grid.

    Instance Attributes:
      t (ndarray): The times.
      estimate (ndarray): The correlation estimates.
      se (ndarray): Standard errors (zero for quadrature curves).
      method (str): 'direct', 'series', 'visits' or 'skew'.
      fit (DecayFit or None): The fitted envelope once `decay_fit()` ran.
    """
    t: np.ndarray
    estimate: np.ndarray
    se: np.ndarray
    method: str
    fit: object = field(default=None)

    def to_frame(self):
        """
        Returns:
          (DataFrame): Columns t, estimate, se, method.
        """
        return pd.DataFrame({'t': self.t, 'estimate': self.estimate,
                'se': self.se, 'method': self.method})



def default_t_grid(r_bar):
    """
    Args:
      r_bar (float): int R dmu.

    Returns:
      (ndarray): [0, 10 R_bar] at spacing R_bar / 8.
    """
    return np.linspace(0.0, 10.0 * r_bar, 81)



def u_gauss(lo, hi, order=_U_ORDER):
    """
    Gauss-Legendre nodes and weights on [lo, hi] for arrays of intervals.

    Args:
      lo (ndarray): Lower ends.
      hi (ndarray): Upper ends (hi <= lo gives zero weights).
      order (int): Points per interval.

    Returns:
      u (ndarray): Nodes, shape lo.shape + (order,).
      weights (ndarray): Weights of the same shape.
    """
    gl_x, gl_w = np.polynomial.legendre.leggauss(order)
    lo = np.asarray(lo, dtype=float)
    half = 0.5 * np.maximum(np.asarray(hi, dtype=float) - lo, 0.0)
    u = (lo + half)[..., None] + half[..., None] * gl_x
    return u, half[..., None] * gl_w



def mean_muR(system, v):
    """
    Integrates an observable against mu^R by quadrature.

    Args:
      system (SuspensionSystem): The suspension.
      v (Observable): The observable.

    Returns:
      (float): int v dmu^R.
    """
    y = system.quadrature.nodes
    u, wts = u_gauss(np.zeros_like(y), system.roof.value(y))
    inner = np.sum(wts * v(y[:, None], u), axis=1)
    return float(np.real(system.quadrature.integrate(inner))) / system.r_bar



def center(system, v):
    """
    Args:
      system (SuspensionSystem): The suspension.
      v (Observable): The observable.

    Returns:
      (Observable): v - int v dmu^R.
    """
    return v.shifted(mean_muR(system, v))



def n_terms_for(roof, t):
    """
    The number of roof crossings that can occur within time t from a point
    below the roof.

    Args:
      roof (RoofFunction): The roof.
      t (float): The time.

    Returns:
      (int): ceil((t + sup R) / inf R) + 2.
    """
    return int(math.ceil((t + roof.sup_value()) / roof.inf_value())) + 2



def batch_estimates(v0, wt, weight, batch, n_batches):
    """
    The self-normalized covariance overall and per batch.
    """
    def _cov(sel):
        mass = np.sum(weight[sel])
        mean_v = np.sum(weight[sel] * v0[sel]) / mass
        mean_w = np.sum(weight[sel] * wt[sel]) / mass
        return np.sum(weight[sel] * v0[sel] * wt[sel]) / mass \
                - mean_v * mean_w

    overall = _cov(slice(None))
    per_batch = np.array([_cov(batch == k) for k in range(n_batches) \
            if np.any(batch == k)])
    if len(per_batch) < 2:
        return float(overall), 0.0
    se = float(np.std(per_batch, ddof=1) / math.sqrt(len(per_batch)))
    return float(overall), se



def correlation_direct(exp_map, roof, v, w, t_grid, sample, workers=1):
    """
    Estimates the correlation on a t-grid from a weighted sample of mu^R, with
    standard errors from the batch means.

    Args:
      exp_map (ExpandingMap): The base map.
      roof (RoofFunction): The roof.
      v (Observable): The first observable.
      w (Observable): The second observable, evaluated along the flow.
      t_grid (ndarray): Increasing times, t >= 0.
      sample (WeightedSample): Samples from `sample_muR()`.
      workers (int or None): Workers for the batches.

    Returns:
      (CorrelationCurve): The direct curve.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    assert np.all(np.diff(t_grid) >= 0) and t_grid[0] >= 0
    n_batches = int(np.max(sample.batch)) + 1 if len(sample) else 0

    def _flow_batch(k):
        sel = sample.batch == k
        y, u = sample.y[sel], sample.u[sel]
        out = np.empty((len(t_grid), len(y)))
        t_prev = 0.0
        for j, t in enumerate(t_grid):
            y, u, _ = semiflow.flow_arrays(exp_map, roof, y, u, t - t_prev)
            out[j] = np.real(w(y, u))
            t_prev = t
        return out

    flowed = utils.parallel_map(_flow_batch, range(n_batches), workers)
    w_t = np.concatenate(flowed, axis=1) if flowed \
            else np.empty((len(t_grid), 0))
    v0 = np.real(v(sample.y, sample.u))
    estimate = np.zeros(len(t_grid))
    se = np.zeros(len(t_grid))
    if len(sample):
        for j in range(len(t_grid)):
            estimate[j], se[j] = batch_estimates(v0, w_t[j], sample.weight,
                    sample.batch, n_batches)
    logger.info(f'Direct correlation over {len(sample)} points,'
            + f' {len(t_grid)} times')
    return CorrelationCurve(t_grid, estimate, se, 'direct')



def correlation_series(system, v, w, t, centered=False):
    """
    Evaluates rho_{v,w}(t) = sum_n J_n(t) by quadrature over Y x [0, R(y)].

    Args:
      system (SuspensionSystem): The suspension.
      v (Observable): The first observable.
      w (Observable): The second observable.
      t (float): The time, t >= 0.
      centered (bool): True if v and w already have mu^R mean zero.

    Returns:
      (float): The correlation.
    """
    assert t >= 0
    if not centered:
        v = center(system, v)
        w = center(system, w)
    roof = system.roof
    y = system.quadrature.nodes
    height = roof.value(y)
    z = y.copy()
    r_n = np.zeros_like(y)
    total = 0.0
    for _ in range(n_terms_for(roof, t)):
        r_next = r_n + roof.value(z)
        lo = np.maximum(0.0, r_n - t)
        hi = np.minimum(height, r_next - t)
        if np.any(hi > lo):
            u, wts = u_gauss(lo, hi)
            shift = (t - r_n)[:, None]
            inner = np.sum(wts * v(y[:, None], u) * w(z[:, None], u + shift),
                    axis=1)
            total += float(np.real(system.quadrature.integrate(inner)))
        z = system.exp_map.forward(z)
        r_n = r_next
    return total / system.r_bar



def correlation_series_curve(system, v, w, t_grid):
    """
    Args:
      system (SuspensionSystem): The suspension.
      v (Observable): The first observable.
      w (Observable): The second observable.
      t_grid (ndarray): The times.

    Returns:
      (CorrelationCurve): The series curve (zero standard errors).
    """
    v_c = center(system, v)
    w_c = center(system, w)
    t_grid = np.asarray(t_grid, dtype=float)
    estimate = np.array([correlation_series(system, v_c, w_c, t, True) \
            for t in t_grid])
    return CorrelationCurve(t_grid, estimate, np.zeros(len(t_grid)), 'series')



def decay_fit(curve, floor=1e-12, min_points=5):
    """
    Fits log|rho| = log C - c t over the first run of points that stand out of
    the noise (|estimate| > 3 SE and above `floor`).

    Args:
      curve (CorrelationCurve): The curve; the fit is stored on it.
      floor (float): Values at or below this count as zero.
      min_points (int): The fewest points a window may have.

    Returns:
      (DecayFit): The fit.

    Raises:
      (WindowTooShort): The window has fewer than `min_points` points.
    """
    mag = np.abs(curve.estimate)
    above = (mag > _SE_FACTOR * curve.se) & (mag > floor)
    start = int(np.argmax(above)) if np.any(above) else len(mag)
    end = start
    while end < len(mag) and above[end]:
        end += 1
    if end - start < min_points:
        logger.critical(f'Decay window has {end - start} points')
        raise WindowTooShort(f'Only {end - start} points above the noise'
                + f' floor, need {min_points}')
    const, slope, r_squared = utils.fit_log_linear(curve.t[start:end],
            curve.estimate[start:end])
    fit = DecayFit(const, -slope, r_squared,
            (float(curve.t[start]), float(curve.t[end - 1])), end - start)
    curve.fit = fit
    logger.info(f'Decay fit ({curve.method}): C={const:.6g}, c={-slope:.6g},'
            + f' R^2={r_squared:.4f}')
    return fit
