#!/usr/bin/env python3
"""
The cancellation inequality |L_s^n0 v| <= L_sigma^n0(chi u), invariance of the
cone under (u, v) -> (L_sigma^n0(chi u), L_s^n0 v), the per-step L^2 ratios of
the envelope, and the comparison of a positive weight on the middle thirds
against the rest of Y.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import logging
import math

import numpy as np
import pandas as pd
from scipy import integrate

from mixing_lab.cone import chi as chi_mod
from mixing_lab.cone import cone as cone_mod
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.transfer import operators
from mixing_lab.transfer.grid import holder_seminorm_of



logger = logging.getLogger(__name__)

_CANCEL_TOL = 1e-8
_GL_ORDER = 8



@dataclass
class CancellationReport:
    """
    The outcome of `cancellation_check()`.

    Instance Attributes:
      margin (float): min over nodes of L_sigma^n0(chi u) - |L_s^n0 v|.
      argmin (float): The node of the smallest margin.
      passed (bool): margin >= -1e-8.
    """
    margin: float
    argmin: float
    passed: bool



@dataclass
class ConeIterationReport:
    """
    The outcome of `cone_iterate()`.

    Instance Attributes:
      pairs ([ConePair]): The pairs, starting with the input.
      ratios ([float]): r_m = int u_{m+1}^2 dmu / int u_m^2 dmu.
      beta_hat (float or None): max r_m, None when no step was taken.
      rows ([{str: *}]): Per-step diagnostics.
    """
    pairs: list
    ratios: list
    beta_hat: object
    rows: list = field(default_factory=list)

    def to_frame(self):
        """
        Returns:
          (DataFrame): Columns m, r_m, modulus, log_holder, v_holder,
            cancellation_margin, n_intervals_chi.
        """
        return pd.DataFrame(self.rows, columns=['m', 'r_m', 'modulus',
                'log_holder', 'v_holder', 'cancellation_margin',
                'n_intervals_chi'])



@dataclass
class FedReport:
    """
    The outcome of `fed_ratio()`.

    Instance Attributes:
      int_hat_i (float): int over the middle thirds of w dmu.
      int_hat_j (float): int over the rest of Y of w dmu.
      ratio (float): int_hat_i / int_hat_j.
      delta_ppp (float): The lower bound the ratio must meet.
      passed (bool): ratio >= delta_ppp.
      diam_ok (bool): diam(I^_j) >= delta' diam(J^_j) for every j.
    """
    int_hat_i: float
    int_hat_j: float
    ratio: float
    delta_ppp: float
    passed: bool
    diam_ok: bool



def cancellation_check(s, pair, chi, spectral, n0):
    """
    Evaluates both sides of the cancellation inequality on the pair's grid.

    Args:
      s (complex): The twist; Im s is the frequency of `chi`.
      pair (ConePair): The cone pair.
      chi (ChiFunction): The damping function built for the pair.
      spectral (SpectralData): The data at sigma = Re s.
      n0 (int): The witness word length.

    Returns:
      (CancellationReport): The minimum margin.
    """
    s = complex(s)
    lhs = np.abs(operators.apply_L_words(spectral, s, pair.v, n0).values)
    rhs = np.real(operators.apply_L_words(spectral, s.real, pair.u, n0,
            word_weights=chi.word_weights).values)
    gap = rhs - lhs
    i_min = int(np.argmin(gap))
    margin = float(gap[i_min])
    return CancellationReport(margin, float(pair.u.nodes[i_min]),
            margin >= -_CANCEL_TOL)



def _u2_integral(u, spectral0):
    return float(np.real(operators.mu_integral(u * u, spectral0)))



def cone_iterate(s, pair, m, ledger, witness, spectral, spectral0=None):
    """
    Iterates u_{k+1} = L_sigma^n0(chi_k u_k), v_{k+1} = L_s^n0 v_k with chi_k
    rebuilt for every pair, checking cone membership after every step.

    Args:
      s (complex): The twist.
      pair (ConePair): The start pair, in the cone.
      m (int): The number of steps.
      ledger (ConstantsLedger): The constants.
      witness (UNIWitness): The witness pair.
      spectral (SpectralData): The data at sigma = Re s.
      spectral0 (SpectralData or None): The data at sigma = 0 for dmu; None
        uses `spectral` (which must then be at sigma = 0).

    Returns:
      (ConeIterationReport): The pairs and ratios.

    Raises:
      (PreconditionViolated): |b| is not above max(4 pi / D, 1).
      (ConeEscape): A new pair leaves the cone.
    """
    s = complex(s)
    b = s.imag
    if abs(b) <= max(4.0 * math.pi / ledger.d, 1.0):
        logger.critical(f'|b|={abs(b)} too small for cone iteration')
        raise PreconditionViolated(f'|b|={abs(b)} <= max(4 pi / D, 1)')
    if spectral0 is None:
        assert spectral.sigma == 0, 'dmu needs the sigma = 0 density'
        spectral0 = spectral
    n0 = witness.n0

    pairs = [pair]
    ratios = []
    rows = []
    norm_prev = _u2_integral(pair.u, spectral0)
    for step in range(1, m + 1):
        current = pairs[-1]
        chi = chi_mod.build_chi(b, current, ledger, witness, spectral)
        cancel = cancellation_check(s, current, chi, spectral, n0)
        u_next = operators.apply_L_words(spectral, s.real, current.u, n0,
                word_weights=chi.word_weights).map_values(np.real)
        v_next = operators.apply_L_words(spectral, s, current.v, n0)
        report = cone_mod.cone_check(u_next, v_next, b, ledger)
        if not report.member:
            condition = report.violated[0]
            logger.critical(f'Cone escape at step {step}: {condition}'
                    + f' ({report.margins})')
            raise ConeEscape(step, condition)
        norm_next = _u2_integral(u_next, spectral0)
        ratio = norm_next / norm_prev
        ratios.append(ratio)
        rows.append({'m': step, 'r_m': ratio,
                'modulus': report.margins['modulus'],
                'log_holder': report.margins['log_holder'],
                'v_holder': report.margins['v_holder'],
                'cancellation_margin': cancel.margin,
                'n_intervals_chi': len(chi.intervals)})
        logger.debug(f'Cone step {step}: r={ratio:.12f}')
        pairs.append(cone_mod.ConePair(u_next, v_next, b, ledger.c4))
        norm_prev = norm_next

    beta_hat = max(ratios) if ratios else None
    logger.info(f'Cone iteration b={b}, m={m}: beta_hat={beta_hat}')
    return ConeIterationReport(pairs, ratios, beta_hat, rows)



def fed_ratio(w, chi, k_fed, spectral0, ledger):
    """
    Compares int over the middle thirds of w dmu with the integral over the rest.

    Args:
      w (GridFunction): A positive weight.
      chi (ChiFunction): The damping function giving the intervals.
      k_fed (float): The log-Holder constant K allowed for w.
      spectral0 (SpectralData): The data at sigma = 0 for dmu.
      ledger (ConstantsLedger): Supplies delta' and delta'''.

    Returns:
      (FedReport): The two integrals and the ratio.

    Raises:
      (RegularityViolated): |log w|_alpha > K |b|^alpha.
    """
    w_vals = np.real(w.values)
    assert np.all(w_vals > 0), 'The weight must be positive'
    b = chi.b
    log_holder = holder_seminorm_of(np.log(w_vals), w.alpha)
    if log_holder > k_fed * abs(b) ** w.alpha:
        logger.critical(f'|log w|_alpha={log_holder} exceeds K|b|^alpha')
        raise RegularityViolated(f'|log w|_alpha={log_holder} >'
                + f' {k_fed * abs(b) ** w.alpha}')

    dens = spectral0.on_grid(w.n_intervals).density
    mass = float(integrate.trapezoid(dens.real, w.nodes))
    total = float(np.real(operators.mu_integral(w, dens)))
    gl_x, gl_w = np.polynomial.legendre.leggauss(_GL_ORDER)
    int_hat_i = 0.0
    for lo, hi in chi.hat_i():
        x = 0.5 * (hi - lo) * gl_x + 0.5 * (hi + lo)
        int_hat_i += 0.5 * (hi - lo) \
                * float(np.sum(gl_w * np.real(w(x)) * np.real(dens(x))))
    int_hat_i /= mass
    int_hat_j = total - int_hat_i
    ratio = int_hat_i / int_hat_j

    hat_j = chi.hat_j()
    diam_ok = all(hi - lo >= ledger.delta_prime * (hat_j[j][1] - hat_j[j][0]) \
            for j, (lo, hi) in enumerate(chi.hat_i()))
    passed = ratio >= ledger.delta_ppp
    if not passed:
        logger.warning(f'Middle-third ratio {ratio} below {ledger.delta_ppp}')
    return FedReport(int_hat_i, int_hat_j, ratio, ledger.delta_ppp, passed,
            diam_ok)
