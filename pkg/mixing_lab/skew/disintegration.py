#!/usr/bin/env python3
"""
The fiber measures eta_y of the skew-product measure mu_X, and integrals
against mu_X.

eta_y is the limit of (L^n v_n)(y) with v_n(y) = v(f^n(y, 0)).  Written out,
(L^n v_n)(y) integrates v(y, .) against the fiber law reached by pushing z = 0
along the n inverse branches back to y, each branch weighted by the Markov
kernel p_m(y) = |h_m'(y)| f0(h_m y) / f0(y) of L.  That law is kept as a
cloud-in-cell histogram on a fiber grid at every base grid node, and is updated
one step at a time:

  nu_n(y) = sum_m p_m(y) G(h_m y, .)_* nu_{n-1}(h_m y),   nu_0(y) = delta_0.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import logging

import numpy as np

from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.transfer.grid import GridFunction, holder_seminorm_of



logger = logging.getLogger(__name__)

_FLAG_FRACTION = 0.01



@dataclass(frozen=True)
class SkewObservable:
    """
    A bounded function v(y, z, u) on X^R.

    Instance Attributes:
      func (callable): Maps arrays (y, z, u) to values.
      sup (float): A bound on |v|.
      holder (float): The declared Holder seminorm in (y, z).
      name (str): A label.
    """
    func: object
    sup: float
    holder: float = 0.0
    name: str = ''

    def __call__(self, y, z, u):
        y = np.asarray(y, dtype=float)
        z = np.asarray(z, dtype=float)
        u = np.asarray(u, dtype=float)
        shape = np.broadcast_shapes(y.shape, z.shape, u.shape)
        return np.broadcast_to(np.asarray(self.func(y, z, u)), shape)



    def at_height(self, u):
        """
        Args:
          u (float): A height.

        Returns:
          (callable): (y, z) -> v(y, z, u).
        """
        return lambda y, z: self(y, z, u)



    def shifted(self, const):
        """
        Args:
          const (float): The constant to subtract.

        Returns:
          (SkewObservable): v - const.
        """
        func = self.func
        return SkewObservable(lambda y, z, u: func(y, z, u) - const,
                self.sup + abs(const), self.holder, self.name)



    def holder_on_samples(self, points, points_other):
        """
        Measures the Holder quotient on sample pairs at common heights.

        Args:
          points ((ndarray, ndarray, ndarray)): (y, z, u).
          points_other ((ndarray, ndarray, ndarray)): (y', z', u).

        Returns:
          (float): max |v(y,z,u) - v(y',z',u)| / (|y - y'| + |z - z'|).
        """
        y, z, u = points
        y2, z2, _ = points_other
        dist = np.abs(y - y2) + np.abs(z - z2)
        keep = dist > 0
        if not np.any(keep):
            return 0.0
        diff = np.abs(self(y, z, u) - self(y2, z2, u))
        return float(np.max(diff[keep] / dist[keep]))



@dataclass
class FiberDistribution:
    """
    Approximations of eta_y at the base grid nodes.

    Instance Attributes:
      nodes (ndarray): The base grid nodes.
      fiber_nodes (ndarray): The fiber grid.
      weights (ndarray): Shape (len(nodes), len(fiber_nodes)); rows sum to 1.
      topology (str): 'interval' or 'circle'.
      n_steps (int): The number of steps taken.
    """
    nodes: np.ndarray
    fiber_nodes: np.ndarray
    weights: np.ndarray = field(repr=False)
    topology: str = 'interval'
    n_steps: int = 0

    def at(self, y):
        """
        Linearly interpolates the histograms in y.

        Args:
          y (ndarray): Base points.

        Returns:
          (ndarray): Shape (len(y), n_fiber).
        """
        y = np.clip(np.atleast_1d(np.asarray(y, dtype=float)), 0.0, 1.0)
        n_intervals = len(self.nodes) - 1
        pos = y * n_intervals
        left = np.minimum(np.floor(pos).astype(int), n_intervals - 1)
        frac = (pos - left)[:, None]
        return (1.0 - frac) * self.weights[left] \
                + frac * self.weights[left + 1]



    def average(self, v, y):
        """
        Integrates v(y, .) against the fiber law at y.

        Args:
          v (callable): (y, z) -> values.
          y (ndarray): Base points.

        Returns:
          (ndarray): The averages.
        """
        y = np.atleast_1d(np.asarray(y, dtype=float))
        vals = v(y[:, None], self.fiber_nodes[None, :])
        return np.sum(self.at(y) * vals, axis=1)



@dataclass
class EtaResult:
    """
    The outcome of `eta_average()`.

    Instance Attributes:
      value (ndarray): eta_y(v) at the requested points.
      increments ([float]): |L^n v_n - L^{n-1} v_{n-1}|_inf per step.
      v_bar (GridFunction): y -> eta_y(v) on the base grid.
      holder_ratio (float or None): |v_bar|_alpha / |v|_alpha.
      flagged (ndarray of int): Base nodes whose last increment exceeds the
        tolerance.
      distribution (FiberDistribution): The final fiber laws.
    """
    value: np.ndarray
    increments: list
    v_bar: GridFunction
    holder_ratio: object
    flagged: np.ndarray
    distribution: FiberDistribution = field(repr=False)



def fiber_grid(topology, n_fiber=257):
    """
    Args:
      topology (str): 'interval' or 'circle'.
      n_fiber (int): Points on the interval; the circle uses one fewer.

    Returns:
      (ndarray): The fiber grid.
    """
    if topology == 'circle':
        return np.arange(n_fiber - 1) / (n_fiber - 1)
    return np.linspace(0.0, 1.0, n_fiber)



def _deposit(z, mass, n_fiber, topology):
    """
    Cloud-in-cell deposit of point masses onto the fiber grid.

    Args:
      z (ndarray): Positions, shape (rows, k).
      mass (ndarray): Masses of the same shape.
      n_fiber (int): The fiber grid size.
      topology (str): 'interval' or 'circle'.

    Returns:
      (ndarray): Shape (rows, n_fiber).
    """
    rows = z.shape[0]
    if topology == 'circle':
        pos = np.mod(z, 1.0) * n_fiber
        cell = np.floor(pos)
        left = cell.astype(int) % n_fiber
        right = (left + 1) % n_fiber
    else:
        pos = np.clip(z, 0.0, 1.0) * (n_fiber - 1)
        cell = np.minimum(np.floor(pos), n_fiber - 2)
        left = cell.astype(int)
        right = left + 1
    frac = pos - cell
    offset = (np.arange(rows) * n_fiber)[:, None]
    out = np.bincount((offset + left).ravel(),
            weights=((1.0 - frac) * mass).ravel(), minlength=rows * n_fiber)
    out += np.bincount((offset + right).ravel(),
            weights=(frac * mass).ravel(), minlength=rows * n_fiber)
    return out.reshape(rows, n_fiber)



def _kernel(exp_map, density, nodes):
    """
    The Markov kernel p_m(y) of L at the nodes, rows normalized.
    """
    m_idx = np.arange(exp_map.n_usable_branches)[:, None]
    pre = exp_map.inverse(m_idx, nodes[None, :])
    weight = np.abs(exp_map.inverse_derivative(m_idx, nodes[None, :])) \
            * np.real(density(pre))
    return pre, weight / np.sum(weight, axis=0)



def fiber_distribution(skew, spectral0, n, n_intervals=256, n_fiber=257):
    """
    Builds the fiber laws nu_n on the base grid.

    Args:
      skew (SkewMap): The skew product.
      spectral0 (SpectralData): The data at sigma = 0, for f0.
      n (int): The number of steps.
      n_intervals (int): The base grid.
      n_fiber (int): The fiber grid size.

    Returns:
      ([FiberDistribution]): nu_0, ..., nu_n.
    """
    assert n >= 0
    topology = skew.fiber.topology
    nodes = np.linspace(0.0, 1.0, n_intervals + 1)
    z_grid = fiber_grid(topology, n_fiber)
    n_z = len(z_grid)
    density = spectral0.on_grid(n_intervals).density
    pre, kernel = _kernel(skew.exp_map, density, nodes)

    weights = np.zeros((len(nodes), n_z))
    weights[:, 0] = 1.0
    out = [FiberDistribution(nodes, z_grid, weights, topology, 0)]
    for step in range(1, n + 1):
        prev = out[-1]
        new = np.zeros_like(weights)
        for m in range(pre.shape[0]):
            source = prev.at(pre[m])
            moved = skew.fiber.value(pre[m][:, None], z_grid[None, :])
            new += _deposit(moved, source * kernel[m][:, None], n_z, topology)
        new /= np.sum(new, axis=1, keepdims=True)
        out.append(FiberDistribution(nodes, z_grid, new, topology, step))
    return out



def eta_average(skew, v, y, n, spectral0, n_intervals=256, n_fiber=257,
        tol=1e-6, alpha=1.0, v_holder=None):
    """
    Approximates eta_y(v) by (L^n v_n)(y).

    Args:
      skew (SkewMap): The skew product.
      v (callable): (y, z) -> values, a continuous function on X.
      y (float or ndarray): The base points.
      n (int): The number of steps, n >= 1.
      spectral0 (SpectralData): The data at sigma = 0.
      n_intervals (int): The base grid.
      n_fiber (int): The fiber grid size.
      tol (float): The tolerance for the last increment.
      alpha (float): The Holder exponent of v_bar.
      v_holder (float or None): The declared |v|_alpha for the ratio report.

    Returns:
      (EtaResult): The values, increments and v_bar.

    Raises:
      (NotConverged): More than 1% of the base nodes have a last increment
        above `tol`.
    """
    assert n >= 1
    laws = fiber_distribution(skew, spectral0, n, n_intervals, n_fiber)
    nodes = laws[0].nodes
    grid_vals = [law.average(v, nodes) for law in laws]
    increments = [float(np.max(np.abs(grid_vals[k] - grid_vals[k - 1]))) \
            for k in range(1, n + 1)]
    last = np.abs(grid_vals[-1] - grid_vals[-2])
    flagged = np.nonzero(last > tol)[0]
    if len(flagged) > _FLAG_FRACTION * len(nodes):
        logger.critical(f'eta_y(v) not settled at {len(flagged)} nodes')
        raise NotConverged(f'{len(flagged)} of {len(nodes)} nodes moved more'
                + f' than {tol} at step {n}')
    if len(flagged):
        logger.warning(f'eta_y(v) flagged at {len(flagged)} nodes')

    v_bar = GridFunction(grid_vals[-1], alpha)
    holder_ratio = None
    if v_holder:
        holder_ratio = holder_seminorm_of(np.real(grid_vals[-1]), alpha) \
                / v_holder
    value = laws[-1].average(v, np.atleast_1d(y))
    logger.debug(f'eta_average: increments {increments}')
    return EtaResult(value, increments, v_bar, holder_ratio, flagged,
            laws[-1])



@dataclass
class MuXIntegral:
    """
    The outcome of `muX_integral()`.

    Instance Attributes:
      lower (float): int (v o f^n)_- dmu.
      upper (float): int (v o f^n)_+ dmu.
      value (float): The midpoint.
      gap_bound (float): |v|_alpha (C gamma0^n diam Z)^alpha, or None.
    """
    lower: float
    upper: float
    value: float
    gap_bound: object = None



def muX_integral(skew, v, n, quadrature, n_fiber=257, contraction=None,
        alpha=1.0, v_holder=0.0):
    """
    Brackets int v dmu_X between the mu-integrals of the fiber infimum and
    supremum of v o f^n, the fiber extrema taken on a fiber grid and padded by
    the Lipschitz constant of v o f^n in z times half the grid step.

    Args:
      skew (SkewMap): The skew product.
      v (callable): (y, z) -> values.
      n (int): The number of iterates.
      quadrature (BaseQuadrature): The quadrature for dmu.
      n_fiber (int): The fiber grid size.
      contraction (ContractionReport or None): Supplies (C, gamma0) for the
        gap bound.
      alpha (float): The Holder exponent.
      v_holder (float): The declared |v|_alpha.

    Returns:
      (MuXIntegral): The bracket.
    """
    assert n >= 0
    y0 = quadrature.nodes
    z_grid = fiber_grid(skew.fiber.topology, n_fiber)
    y = np.repeat(y0[:, None], len(z_grid), axis=1)
    z = np.repeat(z_grid[None, :], len(y0), axis=0)
    for _ in range(n):
        y, z = skew.forward(y, z)
    vals = np.real(v(y, z))
    step = 1.0 / (n_fiber - 1)
    pad = v_holder * (skew.fiber.lipschitz ** n * 0.5 * step) ** alpha
    lower = float(quadrature.integrate(np.min(vals, axis=1) - pad))
    upper = float(quadrature.integrate(np.max(vals, axis=1) + pad))
    gap_bound = None
    if contraction is not None:
        gap_bound = v_holder * (contraction.const * contraction.gamma0 ** n
                * skew.fiber.diameter) ** alpha
    return MuXIntegral(lower, upper, 0.5 * (lower + upper), gap_bound)
