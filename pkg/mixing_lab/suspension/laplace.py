#!/usr/bin/env python3
"""
The Laplace side of the correlation function.

  rho^(s) = J^_0(s) + sum_{n >= 1} J^_n(s),
  J^_n(s) = R_bar^{-1} int_Y e^{-s R_n} v_s . w_s o F^n dmu    (n >= 1)

with J^_0 the triple integral over 0 <= u, 0 <= t, u + t < R(y).

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass
import logging

import numpy as np
from scipy import integrate

from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.suspension import correlation



logger = logging.getLogger(__name__)



@dataclass
class LaplaceResult:
    """
    The outcome of `laplace_rho()`.

    Instance Attributes:
      s (complex): The transform parameter.
      value (complex): rho^(s).
      j0 (complex): J^_0(s).
      terms ([complex]): J^_n(s) for n = 1..N.
      last_term (float): |J^_N(s)|.
      bound (float): The bound on |J^_0| from the roof moment.
    """
    s: complex
    value: complex
    j0: complex
    terms: list
    last_term: float
    bound: float

    def to_dict(self):
        """
        Returns:
          ({str: *}): A JSON-ready view.
        """
        return {'s_re': self.s.real, 's_im': self.s.imag,
                'value_re': self.value.real, 'value_im': self.value.imag,
                'j0_re': self.j0.real, 'j0_im': self.j0.imag,
                'n_terms': len(self.terms), 'last_term': self.last_term,
                'j0_bound': self.bound}



def _transform_at(obs, s, sign, y, height):
    u, wts = correlation.u_gauss(np.zeros_like(y), height)
    return np.sum(wts * np.exp(sign * s * u) * obs(y[:, None], u), axis=1)



def laplace_rho(system, v, w, s, n_terms=40, tol=1e-6):
    """
    Evaluates the Laplace transform of the correlation function of the
    centered pair.

    Args:
      system (SuspensionSystem): The suspension.
      v (Observable): The first observable.
      w (Observable): The second observable.
      s (complex): The transform parameter, Re s > -eps/2.
      n_terms (int): N, the last series index.
      tol (float): The largest allowed |J^_N|.

    Returns:
      (LaplaceResult): The value and the series diagnostics.

    Raises:
      (SeriesNotSettled): |J^_N(s)| > tol.
    """
    assert n_terms >= 1
    s = complex(s)
    v = correlation.center(system, v)
    w = correlation.center(system, w)
    roof = system.roof
    quad = system.quadrature
    y = quad.nodes
    height = roof.value(y)

    # J^_0: u on [0, R], t on [0, R - u]
    u, u_wts = correlation.u_gauss(np.zeros_like(y), height)
    t, t_wts = correlation.u_gauss(np.zeros_like(u), height[:, None] - u)
    inner = np.sum(t_wts * np.exp(-s * t) * w(y[:, None, None],
            u[..., None] + t), axis=2)
    j0_y = np.sum(u_wts * v(y[:, None], u) * inner, axis=1)
    j0 = complex(quad.integrate(j0_y)) / system.r_bar

    growth = np.exp(max(0.0, -s.real) * height)
    bound = float(quad.integrate(0.5 * height ** 2 * growth)) / system.r_bar \
            * v.sup * w.sup
    assert abs(j0) <= bound * (1.0 + 1e-9) + 1e-300, \
            '|J^_0| exceeds the roof moment bound'

    v_s = _transform_at(v, s, 1, y, height)
    z = y.copy()
    r_n = np.zeros_like(y)
    terms = []
    for _ in range(n_terms):
        r_n = r_n + roof.value(z)
        z = system.exp_map.forward(z)
        w_s = _transform_at(w, s, -1, z, roof.value(z))
        terms.append(complex(quad.integrate(np.exp(-s * r_n) * v_s * w_s))
                / system.r_bar)
    last = abs(terms[-1])
    if last > tol:
        logger.critical(f'Laplace series at s={s} not settled: |J_N|={last}')
        raise SeriesNotSettled(f'|J^_{n_terms}({s})| = {last} > {tol}')
    value = j0 + sum(terms)
    logger.info(f'rho^({s}) = {value} with {n_terms} terms')
    return LaplaceResult(s, value, j0, terms, float(last), bound)



def transform_curve(curve, s):
    """
    The trapezoid transform int e^{-st} rho(t) dt over the curve's t-grid.

    Args:
      curve (CorrelationCurve): The curve.
      s (complex): The transform parameter.

    Returns:
      (complex): The truncated transform.
    """
    return complex(integrate.trapezoid(np.exp(-complex(s) * curve.t)
            * curve.estimate, curve.t))
