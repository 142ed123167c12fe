#!/usr/bin/env python3
"""
Observables on Y^R and their u-transforms

  v_s(y) = int_0^{R(y)} e^{s u} v(y,u) du,   w_s(y) = int_0^{R(y)} e^{-s u} w(y,u) du.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass
import logging
import math

import numpy as np
from scipy import integrate

from mixing_lab.transfer.grid import GridFunction



logger = logging.getLogger(__name__)

_PANEL_WIDTH = 0.05



@dataclass(frozen=True)
class Observable:
    """
    A bounded function on Y^R.

    Instance Attributes:
      func (callable): Maps arrays (y, u) to values.
      sup (float): A bound on |v|.
      holder (float or None): The declared Holder seminorm in y.
      d_t (callable or None): The derivative along the flow.
      d_tt (callable or None): The second derivative along the flow.
      name (str): A label for reports.
    """
    func: object
    sup: float
    holder: object = None
    d_t: object = None
    d_tt: object = None
    name: str = ''

    def __call__(self, y, u):
        y = np.asarray(y, dtype=float)
        u = np.asarray(u, dtype=float)
        shape = np.broadcast_shapes(y.shape, u.shape)
        return np.broadcast_to(np.asarray(self.func(y, u)), shape)



    @classmethod
    def from_base(cls, func_y, sup, holder=None, name=''):
        """
        Wraps a function of y alone.

        Args:
          func_y (callable): Maps y to values.
          sup (float): A bound on |v|.
          holder (float or None): The Holder seminorm.
          name (str): A label.

        Returns:
          (Observable): v(y,u) = func_y(y); its flow derivatives vanish.
        """
        def _zero(y, u):
            return np.zeros(np.broadcast_shapes(np.shape(y), np.shape(u)))

        return cls(lambda y, u: func_y(y) + 0.0 * u, sup, holder, _zero,
                _zero, name)



    def shifted(self, const):
        """
        Args:
          const (float): The constant to subtract.

        Returns:
          (Observable): v - const.
        """
        func = self.func
        return Observable(lambda y, u: func(y, u) - const,
                self.sup + abs(const), self.holder, self.d_t, self.d_tt,
                self.name)



    def holder_on_samples(self, y, y_other, u):
        """
        Measures the Holder quotient in y on sample pairs at common heights.

        Args:
          y (ndarray): First base points.
          y_other (ndarray): Second base points.
          u (ndarray): Heights valid over both.

        Returns:
          (float): The largest |v(y,u) - v(y',u)| / |y - y'|.
        """
        diff = np.abs(self(y, u) - self(y_other, u))
        dist = np.abs(np.asarray(y) - np.asarray(y_other))
        keep = dist > 0
        if not np.any(keep):
            return 0.0
        return float(np.max(diff[keep] / dist[keep]))



def observable_transform(v, s, sign, roof, n_intervals=1024, alpha=1.0):
    """
    Integrates e^{sign s u} v(y,u) over [0, R(y)] at every grid node by
    composite Simpson with panels of width at most 0.05.

    Args:
      v (Observable): The observable.
      s (complex): The transform parameter.
      sign (int): +1 for v_s, -1 for w_s.
      roof (RoofFunction): The roof.
      n_intervals (int): The output grid.
      alpha (float): The Holder exponent of the output.

    Returns:
      (GridFunction): The transform.
    """
    assert sign in (1, -1)
    s = complex(s)
    nodes = np.linspace(0.0, 1.0, n_intervals + 1)
    height = roof.value(nodes)
    n_panels = 2 * max(1, math.ceil(roof.sup_value() / (2 * _PANEL_WIDTH)))
    tau = np.linspace(0.0, 1.0, n_panels + 1)
    u = height[:, None] * tau[None, :]
    integrand = np.exp(sign * s * u) * v(nodes[:, None], u)
    values = height * integrate.simpson(integrand, x=tau, axis=1)
    growth = np.exp(max(0.0, sign * s.real) * height)
    assert np.all(np.abs(values) <= height * growth * v.sup * (1.0 + 1e-9)
            + 1e-300), '|v_s| exceeds R e^{|Re s| R}|v|'
    return GridFunction(values, alpha)
