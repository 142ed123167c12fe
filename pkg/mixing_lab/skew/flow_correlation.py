#!/usr/bin/env python3
"""
Correlations of the skew-product suspension flow on X^R and the split

  rho_{v,w}(2t) = I1(t) + I2(t),
  I2(t) = int v . w_t o F_t o pi^R dmu_X^R,
  w_t(y,u) = int over the fiber of y of w o f_t(x,u) deta_y(x),

where |I1(t)| is controlled by |v|_inf |w|_alpha int gamma^{psi_t} dmu^R, and I2
is a correlation of the quotient semiflow.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass
import logging
import math

import numpy as np
import pandas as pd

from mixing_lab.general import utils
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.skew import disintegration
from mixing_lab.suspension import correlation, semiflow, visits



logger = logging.getLogger(__name__)

_BURN_IN_TOL = 1e-10



@dataclass
class SkewSample:
    """
    Points of X^R with importance weights and batch labels.

    Instance Attributes:
      y (ndarray): Base points.
      z (ndarray): Fiber points.
      u (ndarray): Heights.
      weight (ndarray): R(y) / R_bar.
      batch (ndarray of int): Batch labels.
      seed (int): The seed.
    """
    y: np.ndarray
    z: np.ndarray
    u: np.ndarray
    weight: np.ndarray
    batch: np.ndarray
    seed: int = 0

    def __len__(self):
        return len(self.y)



def burn_in_steps(gamma0, tol=_BURN_IN_TOL):
    """
    Args:
      gamma0 (float): The fiber contraction rate in (0,1).
      tol (float): The target fiber spread.

    Returns:
      (int): ceil(log tol / log gamma0).
    """
    assert 0.0 < gamma0 < 1.0
    return int(math.ceil(math.log(tol) / math.log(gamma0)))



def sample_muXR(skew, roof, spectral0, n, seed=0, gamma0=0.5, workers=1):
    """
    Draws points of mu_X^R.  (y, u, weight) are drawn as for mu^R; the fiber
    coordinate comes from walking K = `burn_in_steps()` inverse branches back
    from y with the Markov kernel of L and pushing z = center of Z forward
    along that path.

    Args:
      skew (SkewMap): The skew product.
      roof (RoofFunction): The roof.
      spectral0 (SpectralData): The data at sigma = 0.
      n (int): The number of points.
      seed (int): The seed.
      gamma0 (float): The fiber contraction rate.
      workers (int or None): Workers for the batches.

    Returns:
      (SkewSample): The points, in batch order.
    """
    density = spectral0.density
    base = semiflow.sample_muR(skew.exp_map, roof, density, n, seed, workers)
    n_steps = burn_in_steps(gamma0)
    n_batches = semiflow.N_BATCHES
    gens = utils.spawn_generators([seed, 1], n_batches)
    exp_map = skew.exp_map
    m_idx = np.arange(exp_map.n_usable_branches)[:, None]

    def _fiber(k):
        rng = gens[k]
        y = base.y[base.batch == k]
        path = [y]
        for _ in range(n_steps):
            pre = exp_map.inverse(m_idx, y[None, :])
            weight = np.abs(exp_map.inverse_derivative(m_idx, y[None, :])) \
                    * np.real(density(pre))
            cdf = np.cumsum(weight / np.sum(weight, axis=0), axis=0)
            pick = np.minimum(np.sum(cdf < rng.random(len(y)), axis=0),
                    len(m_idx) - 1)
            y = pre[pick, np.arange(len(y))]
            path.append(y)
        z = np.full(len(y), 0.5)
        for y_prev in reversed(path[1:]):
            z = skew.fiber.value(y_prev, z)
        return z

    parts = utils.parallel_map(_fiber, range(n_batches), workers)
    z = np.concatenate(parts) if parts else np.empty(0)
    return SkewSample(base.y, z, base.u, base.weight, base.batch, seed)



def flow_skew_arrays(skew, roof, y, z, u, t):
    """
    Flows points of X^R for a common time t.

    Args:
      skew (SkewMap): The skew product.
      roof (RoofFunction): The roof (a function of y).
      y (ndarray): Base points.
      z (ndarray): Fiber points.
      u (ndarray): Heights.
      t (float): The time, t >= 0.

    Returns:
      y (ndarray): New base points.
      z (ndarray): New fiber points.
      u (ndarray): New heights.
      visits (ndarray of int): Roof crossings.

    Raises:
      (OrbitHitsBoundary): F is applied at a partition endpoint.
    """
    assert t >= 0
    y = np.array(y, dtype=float)
    z = np.array(z, dtype=float)
    u = np.array(u, dtype=float) + t
    n_visits = np.zeros(y.shape, dtype=int)
    height = roof.value(y)
    crossing = u >= height
    while np.any(crossing):
        if np.any(skew.exp_map.is_near_boundary(y[crossing])):
            logger.critical('Skew flow crosses the roof at a boundary point')
            raise OrbitHitsBoundary('A roof crossing is on a partition'
                    + ' endpoint')
        u[crossing] -= height[crossing]
        z[crossing] = skew.fiber.value(y[crossing], z[crossing])
        y[crossing] = skew.exp_map.forward(y[crossing])
        n_visits[crossing] += 1
        height[crossing] = roof.value(y[crossing])
        crossing = u >= height
    return y, z, u, n_visits



@dataclass
class SplitReport:
    """
    The I1/I2 diagnostic of `flow_correlation()`.

    Instance Attributes:
      rows ([{str: float}]): Per t: |I1|, its envelope, I2, and the quotient
        correlation of (v_bar, w_t).
      below_envelope (bool): |I1| <= envelope + 3 SE at every t.
    """
    rows: list
    below_envelope: bool

    def to_frame(self):
        """
        Returns:
          (DataFrame): Columns t, i1_abs, envelope, i2, quotient.
        """
        return pd.DataFrame(self.rows, columns=['t', 'i1_abs', 'i1_se',
                'envelope', 'i2', 'quotient'])



def _w_t(skew, roof, w, law, y, u, t):
    """
    w_t(y,u): the eta_y-average of w o f_t over the fiber of y.
    """
    probs = law.at(y)
    n_z = len(law.fiber_nodes)
    yy = np.repeat(y, n_z)
    zz = np.tile(law.fiber_nodes, len(y))
    uu = np.repeat(u, n_z)
    y1, z1, u1, _ = flow_skew_arrays(skew, roof, yy, zz, uu, t)
    vals = np.real(w(y1, z1, u1)).reshape(len(y), n_z)
    return np.sum(probs * vals, axis=1)



def _split(skew, system, v, w, t_grid, sample, law, gamma, contraction,
        n_split):
    """
    Evaluates I1 and I2 on the first `n_split` points of every batch.
    """
    roof = system.roof
    keep = np.zeros(len(sample), dtype=bool)
    for k in np.unique(sample.batch):
        idx = np.nonzero(sample.batch == k)[0]
        keep[idx[:max(2, n_split // (int(np.max(sample.batch)) + 1))]] = True
    y, z, u = sample.y[keep], sample.z[keep], sample.u[keep]
    weight, batch = sample.weight[keep], sample.batch[keep]
    n_batches = int(np.max(batch)) + 1

    v0 = np.real(v(y, z, u))
    v0 = v0 - np.sum(weight * v0) / np.sum(weight)
    v_bar = law.average(lambda yy, zz: v(yy, zz, u[:, None]), y)
    v_bar = v_bar - np.sum(weight * v_bar) / np.sum(weight)

    moment = visits.visit_moment(system, gamma, t_grid, fit=False).estimate
    scale = contraction.const * skew.fiber.diameter if contraction else 1.0
    rows = []
    ok = True
    for j, t in enumerate(t_grid):
        y2, z2, u2, _ = flow_skew_arrays(skew, roof, y, z, u, 2.0 * t)
        w_2t = np.real(w(y2, z2, u2))
        y1, u1, _ = semiflow.flow_arrays(system.exp_map, roof, y, u, t)
        w_t = _w_t(skew, roof, w, law, y1, u1, t)
        i1, i1_se = correlation.batch_estimates(
                v0, w_2t - w_t, weight, batch, n_batches)
        i2, _ = correlation.batch_estimates(
                v0, w_t, weight, batch, n_batches)
        quotient, _ = correlation.batch_estimates(
                v_bar, w_t, weight, batch, n_batches)
        envelope = float(np.max(np.abs(v0))) * w.holder \
                * scale ** skew.exp_map.alpha * moment[j]
        ok = ok and abs(i1) <= envelope + 3.0 * i1_se + 1e-12
        rows.append({'t': float(t), 'i1_abs': abs(i1), 'i1_se': i1_se,
                'envelope': envelope, 'i2': i2, 'quotient': quotient})
    return SplitReport(rows, ok)



def flow_correlation(skew, system, v, w, t_grid, sample, split=True,
        contraction=None, n_eta=40, n_split=1024, workers=1):
    """
    Estimates rho_{v,w}(t) on X^R from a weighted sample of mu_X^R, and
    optionally the I1/I2 split at t/2 for every grid time t.

    Args:
      skew (SkewMap): The skew product.
      system (SuspensionSystem): The quotient suspension (same map and roof).
      v (SkewObservable): The first observable.
      w (SkewObservable): The second observable.
      t_grid (ndarray): Increasing times.
      sample (SkewSample): Samples from `sample_muXR()`.
      split (bool): Whether to compute the split diagnostic.
      contraction (ContractionReport or None): The measured (C, gamma0);
        gamma = gamma0^alpha enters the envelope (0.5 when None).
      n_eta (int): Steps for the fiber laws.
      n_split (int): Points used for the split.
      workers (int or None): Workers for the batches.

    Returns:
      (CorrelationCurve): The direct curve on X^R ('skew').
      (SplitReport or None): The split, when requested.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    roof = system.roof
    n_batches = int(np.max(sample.batch)) + 1 if len(sample) else 0

    def _flow_batch(k):
        sel = sample.batch == k
        y, z, u = sample.y[sel], sample.z[sel], sample.u[sel]
        out = np.empty((len(t_grid), len(y)))
        t_prev = 0.0
        for j, t in enumerate(t_grid):
            y, z, u, _ = flow_skew_arrays(skew, roof, y, z, u, t - t_prev)
            out[j] = np.real(w(y, z, u))
            t_prev = t
        return out

    flowed = utils.parallel_map(_flow_batch, range(n_batches), workers)
    w_t = np.concatenate(flowed, axis=1) if flowed \
            else np.empty((len(t_grid), 0))
    v0 = np.real(v(sample.y, sample.z, sample.u))
    estimate = np.zeros(len(t_grid))
    se = np.zeros(len(t_grid))
    if len(sample):
        for j in range(len(t_grid)):
            estimate[j], se[j] = correlation.batch_estimates(
                    v0, w_t[j], sample.weight, sample.batch, n_batches)
    curve = correlation.CorrelationCurve(t_grid, estimate, se, 'skew')
    logger.info(f'Skew flow correlation over {len(sample)} points')
    if not split:
        return curve, None

    gamma0 = contraction.gamma0 if contraction and not contraction.degenerate \
            else 0.5
    gamma = gamma0 ** skew.exp_map.alpha
    law = disintegration.fiber_distribution(skew, system.spectral0, n_eta)[-1]
    report = _split(skew, system, v, w, 0.5 * t_grid, sample, law, gamma,
            contraction, n_split)
    if not report.below_envelope:
        logger.warning('|I1| exceeds the visit-moment envelope')
    return curve, report
