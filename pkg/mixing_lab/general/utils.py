#!/usr/bin/env python3
"""
General utilities for items that are reused, but not enough in a single
category to separate into its own file/module.

Random streams are counter-based (Philox) and spawned from one seed, so every
batch of Monte-Carlo work owns an independent, reproducible stream regardless
of which worker runs it.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import logging

from joblib import Parallel, cpu_count, delayed
import numpy as np
from scipy import stats



logger = logging.getLogger(__name__)



def spawn_generators(seed, n_streams):
    """
    Creates independent random generators derived from a single seed.

    Args:
      seed (int): The root seed.
      n_streams (int): The number of streams to spawn.

    Returns:
      ([Generator]): One numpy Generator per stream, in spawn order.
    """
    assert n_streams >= 0
    children = np.random.SeedSequence(seed).spawn(n_streams)
    return [np.random.Generator(np.random.Philox(c)) for c in children]



def resolve_workers(workers):
    """
    Turns a configured worker count into a usable one.

    Args:
      workers (int or None): The requested worker count; None or non-positive
        means all available cores.

    Returns:
      (int): The number of workers to use (at least 1).
    """
    if workers is None or workers <= 0:
        return max(1, cpu_count())
    return int(workers)



def parallel_map(func, items, workers=1):
    """
    Applies a function to every item, optionally in parallel.  Results are
    always returned in the order of `items`, so any reduction done by the caller
    is independent of the worker count.

    Threads are used since the work is numpy-bound and releases the GIL.

    Args:
      func (callable): The function to apply to each item.
      items ([*]): The items to process.
      workers (int or None): The number of workers (see `resolve_workers()`).

    Returns:
      ([*]): The results, one per item, in item order.
    """
    items = list(items)
    n_jobs = min(resolve_workers(workers), max(1, len(items)))
    if n_jobs == 1:
        return [func(item) for item in items]
    return Parallel(n_jobs=n_jobs, backend='threading')(
            delayed(func)(item) for item in items)



def fit_log_linear(x_vals, y_vals):
    """
    Least-squares fit of log|y| = log C + slope * x.

    Args:
      x_vals ([float]): The abscissae.
      y_vals ([float]): The values; only their magnitudes are used and all must
        be nonzero.

    Returns:
      const (float): The fitted prefactor C.
      slope (float): The fitted slope.
      r_squared (float): The coefficient of determination of the fit.
    """
    x_vals = np.asarray(x_vals, dtype=float)
    log_y = np.log(np.abs(np.asarray(y_vals)))
    assert len(x_vals) >= 2
    fit = stats.linregress(x_vals, log_y)
    r_squared = fit.rvalue ** 2 if np.isfinite(fit.rvalue) else 1.0
    return float(np.exp(fit.intercept)), float(fit.slope), float(r_squared)
