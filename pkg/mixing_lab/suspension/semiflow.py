#!/usr/bin/env python3
"""
The suspension semiflow F_t(y,u) = (y, u+t) modulo (y, R(y)) ~ (Fy, 0), and
samples of the normalized measure mu^R = (mu x Leb) / R_bar.

Module Attributes:
  logger (Logger): Logger for this module.
  N_BATCHES (int): The fixed number of Monte-Carlo batches.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass
import logging

import numpy as np
from scipy import integrate

from mixing_lab.general import utils
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



logger = logging.getLogger(__name__)

N_BATCHES = 32

_MAX_REDRAWS = 100



@dataclass(frozen=True)
class SuspensionPoint:
    """
    A point of Y^R, normalized so 0 <= u < R(y).

    Instance Attributes:
      y (float): The base point.
      u (float): The height.
    """
    y: float
    u: float



@dataclass
class WeightedSample:
    """
    Points of Y^R with importance weights and their batch labels.

    Instance Attributes:
      y (ndarray): Base points.
      u (ndarray): Heights.
      weight (ndarray): R(y) / R_bar.
      batch (ndarray of int): The batch each point was drawn in.
      seed (int): The seed the sample was drawn with.
    """
    y: np.ndarray
    u: np.ndarray
    weight: np.ndarray
    batch: np.ndarray
    seed: int = 0

    def __len__(self):
        return len(self.y)



def flow(exp_map, roof, point, t):
    """
    Flows a point for time t.

    Args:
      exp_map (ExpandingMap): The base map.
      roof (RoofFunction): The roof.
      point (SuspensionPoint): The start point.
      t (float): The time, t >= 0.

    Returns:
      (SuspensionPoint): F_t(point).
      (int): The number of roof crossings.

    Raises:
      (OrbitHitsBoundary): F is applied at a partition endpoint.
    """
    assert t >= 0, 'The semiflow runs forward only'
    y = float(point.y)
    u = float(point.u) + t
    visits = 0
    height = float(roof.value(y))
    while u >= height:
        if exp_map.is_near_boundary(y):
            logger.critical(f'Flow crosses the roof at boundary point {y!r}')
            raise OrbitHitsBoundary(f'Roof crossing {visits} at {y!r} is on a'
                    + ' partition endpoint')
        u -= height
        y = float(exp_map.forward(y))
        visits += 1
        height = float(roof.value(y))
    return SuspensionPoint(y, u), visits



def flow_arrays(exp_map, roof, y, u, t):
    """
    Flows arrays of points for a common time t.

    Args:
      exp_map (ExpandingMap): The base map.
      roof (RoofFunction): The roof.
      y (ndarray): Base points.
      u (ndarray): Heights.
      t (float): The time, t >= 0.

    Returns:
      y (ndarray): The new base points.
      u (ndarray): The new heights.
      visits (ndarray of int): The roof crossings per point.

    Raises:
      (OrbitHitsBoundary): F is applied at a partition endpoint.
    """
    assert t >= 0, 'The semiflow runs forward only'
    y = np.array(y, dtype=float)
    u = np.array(u, dtype=float) + t
    visits = np.zeros(len(y), dtype=int)
    height = roof.value(y)
    crossing = u >= height
    while np.any(crossing):
        if np.any(exp_map.is_near_boundary(y[crossing])):
            logger.critical('Flow crosses the roof at a boundary point')
            raise OrbitHitsBoundary('A roof crossing is on a partition'
                    + ' endpoint')
        u[crossing] -= height[crossing]
        y[crossing] = exp_map.forward(y[crossing])
        visits[crossing] += 1
        height[crossing] = roof.value(y[crossing])
        crossing = u >= height
    return y, u, visits



def density_cdf(f0):
    """
    The numeric CDF of mu on the density grid.

    Args:
      f0 (GridFunction): The invariant density.

    Returns:
      (ndarray): The CDF at the grid nodes, from 0 to 1.
    """
    cdf = integrate.cumulative_trapezoid(np.real(f0.values), f0.nodes,
            initial=0.0)
    return cdf / cdf[-1]



def sample_muR(exp_map, roof, f0, n, seed=0, workers=1,
        n_batches=N_BATCHES):
    """
    Draws points of mu^R: y by inverse CDF of f0, u uniform on [0, R(y)], and
    weight R(y)/R_bar so that weighted averages are mu^R averages.

    Args:
      exp_map (ExpandingMap): The base map; points drawn on a partition
        endpoint are redrawn, since the flow cannot cross the roof there.
      roof (RoofFunction): The roof.
      f0 (GridFunction): The invariant density.
      n (int): The number of points.
      seed (int): The seed.
      workers (int or None): Workers for the batches.
      n_batches (int): The number of batches, each with its own stream.

    Returns:
      (WeightedSample): The points, in batch order.
    """
    assert n >= 0
    cdf = density_cdf(f0)
    nodes = f0.nodes
    dens = np.real(f0.values)
    r_bar = integrate.trapezoid(roof.value(nodes) * dens, nodes) \
            / integrate.trapezoid(dens, nodes)
    gens = utils.spawn_generators(seed, n_batches)
    sizes = [n // n_batches + (1 if k < n % n_batches else 0) \
            for k in range(n_batches)]

    def _draw(k):
        rng = gens[k]
        y = np.interp(rng.random(sizes[k]), cdf, nodes)
        on_edge = exp_map.is_near_boundary(y)
        for _ in range(_MAX_REDRAWS):
            if not np.any(on_edge):
                break
            y[on_edge] = np.interp(rng.random(int(np.sum(on_edge))), cdf,
                    nodes)
            on_edge = exp_map.is_near_boundary(y)
        assert not np.any(on_edge), 'Density concentrated on endpoints'
        height = roof.value(y)
        u = rng.random(sizes[k]) * height
        return y, u, height / r_bar

    parts = utils.parallel_map(_draw, range(n_batches), workers)
    sample = WeightedSample(
            np.concatenate([p[0] for p in parts]),
            np.concatenate([p[1] for p in parts]),
            np.concatenate([p[2] for p in parts]),
            np.repeat(np.arange(n_batches), sizes),
            seed)
    logger.debug(f'Drew {n} points of mu^R with seed {seed}')
    return sample
