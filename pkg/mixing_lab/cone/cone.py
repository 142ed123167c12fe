#!/usr/bin/env python3
"""
The cone C_b of pairs (u, v): u > 0, |v| <= u, |log u|_alpha <= C4 |b|^alpha
and |v(x) - v(y)| <= C4 |b|^alpha u(y) |x - y|^alpha.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import logging
import math

import numpy as np

from mixing_lab.general import utils
from mixing_lab.transfer.grid import GridFunction, holder_seminorm_of



logger = logging.getLogger(__name__)

_CONE_TOL = 1e-9
_MAX_HALVINGS = 60



@dataclass(frozen=True)
class ConePair:
    """
    A candidate cone element.

    Instance Attributes:
      u (GridFunction): The positive envelope.
      v (GridFunction): The complex function.
      b (float): The frequency.
      c4 (float): The cone constant.
    """
    u: GridFunction
    v: GridFunction
    b: float
    c4: float



@dataclass
class ConeReport:
    """
    The outcome of `cone_check()`.  Every margin is a ratio that must be at
    most 1 (positivity: min u, which must be above 0).

    Instance Attributes:
      member (bool): All four conditions hold.
      margins ({str: float}): positivity, modulus, log_holder, v_holder.
      violated ([str]): The names of failing conditions.
    """
    member: bool
    margins: dict = field(default_factory=dict)
    violated: list = field(default_factory=list)



def _v_holder_ratio(u_vals, v_vals, alpha):
    n_intervals = len(u_vals) - 1
    best = 0.0
    k = 1
    while k <= n_intervals:
        diff = np.abs(v_vals[k:] - v_vals[:-k])
        u_min = np.minimum(u_vals[k:], u_vals[:-k])
        best = max(best, float(np.max(diff / u_min))
                / (k / n_intervals) ** alpha)
        k *= 2
    return best



def cone_check(u, v, b, ledger):
    """
    Checks the four cone conditions on the grid (dyadic separations for the
    Holder conditions; the bound with u(y) is checked with min(u(x), u(y)) so
    both orderings of each pair are covered).

    Args:
      u (GridFunction): The envelope.
      v (GridFunction): The function.
      b (float): The frequency.
      ledger (ConstantsLedger): Supplies C4.

    Returns:
      (ConeReport): Membership and the tightest ratio per condition.
    """
    assert u.n_intervals == v.n_intervals, 'Grids must match'
    limit = ledger.c4 * abs(b) ** u.alpha
    u_vals = np.real(u.values)
    report = ConeReport(True)
    report.margins['positivity'] = float(np.min(u_vals))
    if report.margins['positivity'] <= 0:
        report.member = False
        report.violated.append('positivity')
        return report

    v_vals = v.values
    report.margins['modulus'] = float(np.max(np.abs(v_vals) / u_vals))
    report.margins['log_holder'] = holder_seminorm_of(np.log(u_vals),
            u.alpha) / limit
    report.margins['v_holder'] = _v_holder_ratio(u_vals, v_vals, u.alpha) \
            / limit
    for name in ('modulus', 'log_holder', 'v_holder'):
        if report.margins[name] > 1.0 + _CONE_TOL:
            report.member = False
            report.violated.append(name)
    return report



def cone_grid_size(n_intervals, b, delta):
    """
    The working grid for cone computations: fine enough that every middle third
    of a damping interval (width 2 delta / (3|b|)) holds several nodes.

    Args:
      n_intervals (int): The base grid size.
      b (float): The frequency.
      delta (float): The ledger delta.

    Returns:
      (int): max(n_intervals, the power of 2 at or above 8 |b| / delta).
    """
    needed = 8.0 * abs(b) / delta
    return max(int(n_intervals), 1 << int(math.ceil(math.log2(needed))))



def sample_cone(b, ledger, seed=0, modes=8, n_intervals=1024):
    """
    Draws a cone pair u = exp(g), v = u exp(i theta) with g and theta random
    band-limited real functions (amplitude of mode k at most 1/k^2).  g is
    scaled so |g|_alpha <= 0.9 C4 |b|^alpha; both are then halved until the
    pair passes `cone_check()`.

    Args:
      b (float): The frequency, |b| >= 1.
      ledger (ConstantsLedger): Supplies C4 and delta.
      seed (int): The seed.
      modes (int): The Fourier modes; 0 gives the pair (1, 1).
      n_intervals (int): The base grid size, refined by `cone_grid_size()`.

    Returns:
      (ConePair): The pair.
    """
    assert abs(b) >= 1
    n_grid = cone_grid_size(n_intervals, b, ledger.delta)
    alpha = ledger.alpha
    rng = utils.spawn_generators(seed, 1)[0]
    ks = np.arange(1, modes + 1)
    amps = rng.uniform(-1.0, 1.0, (2, modes)) / ks ** 2
    phases = rng.uniform(0.0, 2.0 * np.pi, (2, modes))
    nodes = np.linspace(0.0, 1.0, n_grid + 1)
    waves = np.cos(2.0 * np.pi * np.outer(nodes, ks)[None, :, :]
            + phases[:, None, :])
    g_vals, theta_vals = np.einsum('jnk,jk->jn', waves, amps)

    limit = 0.9 * ledger.c4 * abs(b) ** alpha
    g_holder = holder_seminorm_of(g_vals, alpha)
    if g_holder > limit:
        g_vals = g_vals * (limit / g_holder)

    for _ in range(_MAX_HALVINGS):
        u = GridFunction(np.exp(g_vals), alpha)
        v = GridFunction(np.exp(g_vals + 1j * theta_vals), alpha)
        if cone_check(u, v, b, ledger).member:
            return ConePair(u, v, float(b), ledger.c4)
        g_vals = 0.5 * g_vals
        theta_vals = 0.5 * theta_vals
    raise AssertionError('Cone sampler failed to produce a member')
