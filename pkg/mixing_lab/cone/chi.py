#!/usr/bin/env python3
"""
The damping function chi built from the cancellation case analysis.

For a cone pair (u, v), twist s = sigma + ib and UNI words h1, h2 of length n0,
write at every base point y

  a_m(y) = e^{-s R_n0(h_m y)} |h_m'(y)| (f_sigma v)(h_m y)
  U_m(y) = e^{-sigma R_n0(h_m y)} |h_m'(y)| (f_sigma u)(h_m y)

Case h1 holds at y when |a1 + a2| <= eta0 U1 + U2, case h2 when
|a1 + a2| <= U1 + eta0 U2.  A left-to-right sweep places disjoint intervals
I_j = [y1 - delta/|b|, y1 + delta/|b|] on whose closed ball one case holds, with
the gaps between them at most 2 Delta/|b|.  chi(h_m(y)) then dips to eta on the
middle third of each type-h_m interval (cubic smoothstep on the outer thirds)
and is 1 everywhere else.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import logging
import math

import numpy as np

from mixing_lab.dynamics import words as words_mod
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.transfer.grid import interpolate
from mixing_lab.uni.ledger import ETA0



logger = logging.getLogger(__name__)

_SLOPE_FACTOR = 1.5



def _smoothstep(x):
    return 3.0 * x ** 2 - 2.0 * x ** 3



@dataclass
class ChiFunction:     # pylint: disable=too-many-instance-attributes
    """
    The damping function.

    Instance Attributes:
      b (float): The frequency.
      eta (float): The damping level.
      intervals ([(float, float, int)]): The I_j in base coordinates as
        (start, end, case), case 1 or 2 naming h1 or h2.
      gaps ([(float, float)]): The J_j between and around the intervals.
      word1 (BranchWord): h1.
      word2 (BranchWord): h2.
      branch_inf_deriv (float): min over both words of inf |h'|.
      max_slope (float): The bound on |chi'| from the profile.
    """
    b: float
    eta: float
    intervals: list
    gaps: list
    word1: words_mod.BranchWord = field(repr=False)
    word2: words_mod.BranchWord = field(repr=False)
    branch_inf_deriv: float = 1.0
    max_slope: float = 0.0

    def profile(self, case, y):
        """
        Evaluates p_m(y) = chi(h_m(y)) for the case m.

        Args:
          case (int): 1 or 2.
          y (ndarray): Base points.

        Returns:
          (ndarray): The profile values in [eta, 1].
        """
        y = np.asarray(y, dtype=float)
        out = np.ones_like(y)
        for start, end, c in self.intervals:
            if c != case:
                continue
            third = (end - start) / 3.0
            left = (y >= start) & (y < start + third)
            mid = (y >= start + third) & (y <= end - third)
            right = (y > end - third) & (y <= end)
            out[left] = 1.0 - (1.0 - self.eta) \
                    * _smoothstep((y[left] - start) / third)
            out[mid] = self.eta
            out[right] = 1.0 - (1.0 - self.eta) \
                    * _smoothstep((end - y[right]) / third)
        return out



    def word_weights(self, indices, y):
        """
        The factor chi(h(y)) for every word row of an operator table.

        Args:
          indices (ndarray): Word indices, shape (n_words, n0).
          y (ndarray): The output nodes.

        Returns:
          (ndarray): Shape (n_words, len(y)); rows of the witness words carry
            their profile, every other row is 1.
        """
        out = np.ones((indices.shape[0], len(y)))
        for case, word in ((1, self.word1), (2, self.word2)):
            assert indices.shape[1] == len(word), 'Word length is not n0'
            rows = np.all(indices == np.array(word.indices), axis=1)
            if np.any(rows):
                out[rows] = self.profile(case, y)
        return out



    def evaluate(self, x, n_table=4097):
        """
        Evaluates chi on Y.

        Args:
          x (ndarray): Points of Y.
          n_table (int): Table size for inverting h_m.

        Returns:
          (ndarray): chi(x).
        """
        x = np.asarray(x, dtype=float)
        out = np.ones_like(x)
        table_y = np.linspace(0.0, 1.0, n_table)
        for case, word in ((1, self.word1), (2, self.word2)):
            lo, hi = word.image
            inside = (x >= lo) & (x <= hi)
            h_vals, _ = words_mod.branch_eval(word, table_y)
            order = np.argsort(h_vals)
            y = np.interp(x[inside], h_vals[order], table_y[order])
            out[inside] = self.profile(case, y)
        return out



    def hat_i(self):
        """
        Returns:
          ([(float, float)]): The middle thirds of the I_j.
        """
        return [(a + (e - a) / 3.0, e - (e - a) / 3.0) \
                for a, e, _ in self.intervals]



    def hat_j(self):
        """
        Returns:
          ([(float, float)]): J_j widened by the adjacent outer thirds; the j-th
            lies left of the j-th middle third and the last one reaches 1.
        """
        out = []
        prev = 0.0
        for a, e, _ in self.intervals:
            third = (e - a) / 3.0
            out.append((prev, a + third))
            prev = e - third
        out.append((prev, 1.0))
        return out



    def to_dict(self):
        """
        Returns:
          ({str: *}): A JSON-ready view of the intervals and level.
        """
        return {
            'b': self.b,
            'eta': self.eta,
            'intervals': [[a, e, c] for a, e, c in self.intervals],
            'gaps': [list(g) for g in self.gaps],
            'max_slope': self.max_slope,
        }



def _ball_ok(ok, k):
    """
    Marks nodes j with ok true on every node of [j - k, j + k].
    """
    bad = np.concatenate(([0], np.cumsum(~ok)))
    n_nodes = len(ok)
    out = np.zeros(n_nodes, dtype=bool)
    j = np.arange(k, n_nodes - k)
    out[j] = (bad[j + k + 1] - bad[j - k]) == 0
    return out



def case_tables(b, pair, witness, spectral):
    """
    Evaluates both case inequalities at every node.

    Args:
      b (float): The frequency.
      pair (ConePair): The cone pair.
      witness (UNIWitness): Supplies h1 and h2.
      spectral (SpectralData): The data at sigma.

    Returns:
      ok1 (ndarray of bool): Case h1 holds at the node.
      ok2 (ndarray of bool): Case h2 holds at the node.
    """
    n_intervals = pair.u.n_intervals
    data = spectral.on_grid(n_intervals)
    sigma = data.sigma
    s = complex(sigma, b)
    nodes = pair.u.nodes
    fv = (data.density * pair.v).values
    fu = np.real((data.density * pair.u).values)
    a_sum = np.zeros(len(nodes), dtype=complex)
    u_terms = []
    for word in (witness.word1, witness.word2):
        table = words_mod.word_table(word.exp_map, data.roof,
                np.array([word.indices]), nodes)
        weight = np.abs(table.derivs[0])
        a_sum += np.exp(-s * table.roof_sums[0]) * weight \
                * interpolate(fv, table.points[0])
        u_terms.append(np.exp(-sigma * table.roof_sums[0]) * weight
                * interpolate(fu, table.points[0]))
    mod = np.abs(a_sum)
    ok1 = mod <= ETA0 * u_terms[0] + u_terms[1]
    ok2 = mod <= u_terms[0] + ETA0 * u_terms[1]
    return ok1, ok2



def build_chi(b, pair, ledger, witness, spectral):
    """
    Builds the damping function for a cone pair.

    Args:
      b (float): The frequency, |b| > 4 pi / D.
      pair (ConePair): The cone pair on the working grid.
      ledger (ConstantsLedger): Supplies delta, Delta, eta, D.
      witness (UNIWitness): Supplies h1 and h2.
      spectral (SpectralData): The data at sigma = Re s.

    Returns:
      (ChiFunction): The damping function.

    Raises:
      (PreconditionViolated): |b| <= 4 pi / D.
      (NoCaseWins): No ball in some sweep window satisfies either case.
      (ChiSlopeExceeded): |chi'| > |b| even with eta raised toward 1.
    """
    if abs(b) <= 4.0 * math.pi / ledger.d:
        logger.critical(f'|b|={abs(b)} is not above 4 pi / D')
        raise PreconditionViolated(f'|b|={abs(b)} <= 4 pi / D ='
                + f' {4.0 * math.pi / ledger.d}')
    n_intervals = pair.u.n_intervals
    step = 1.0 / n_intervals
    nodes = pair.u.nodes
    radius = ledger.delta / abs(b)
    width = ledger.big_delta / abs(b)
    k_ball = int(math.floor(radius / step + 1e-9))
    assert k_ball >= 1, 'Working grid too coarse for the damping intervals'

    ok1, ok2 = case_tables(b, pair, witness, spectral)
    ball1 = _ball_ok(ok1, k_ball)
    ball2 = _ball_ok(ok2, k_ball)
    either = ball1 | ball2

    intervals = []
    prev_end = 0.0
    while 1.0 - prev_end > 2.0 * width:
        target = prev_end + width
        lo = prev_end + radius + step
        hi = min(prev_end + 2.0 * width + radius, 1.0 - radius)
        cand = np.nonzero(either & (nodes >= lo) & (nodes <= hi))[0]
        if len(cand) == 0:
            logger.critical(f'No case wins in [{lo}, {hi}] at b={b}')
            raise NoCaseWins(f'No ball of radius {radius} in [{lo}, {hi}]'
                    + ' satisfies either case')
        j = int(cand[np.argmin(np.abs(nodes[cand] - target))])
        case = 1 if ball1[j] else 2
        center = nodes[j]
        intervals.append((center - radius, center + radius, case))
        prev_end = center + radius
        logger.debug(f'b={b}: interval at {center:.6f}, case h{case}')

    gaps = []
    prev = 0.0
    for start, end, _ in intervals:
        gaps.append((prev, start))
        prev = end
    gaps.append((prev, 1.0))

    third = 2.0 * radius / 3.0
    p_inf = ledger.branch_inf_deriv
    eta = ledger.eta
    slope = _SLOPE_FACTOR * (1.0 - eta) / (third * p_inf)
    if slope > abs(b):
        eta = 1.0 - abs(b) * third * p_inf / _SLOPE_FACTOR * (1.0 - 1e-9)
        logger.warning(f'Raised eta to {eta} to keep |chi\'| <= |b|')
        if not ledger.eta0 <= eta < 1.0:
            raise ChiSlopeExceeded(f'No eta in [eta0, 1) gives |chi\'| <='
                    + f' {abs(b)}')
        slope = _SLOPE_FACTOR * (1.0 - eta) / (third * p_inf)
    if slope > abs(b):
        raise ChiSlopeExceeded(f'|chi\'| bound {slope} > |b| = {abs(b)}')

    logger.info(f'Built chi at b={b}: {len(intervals)} intervals, eta={eta}')
    return ChiFunction(float(b), eta, intervals, gaps, witness.word1,
            witness.word2, p_inf, slope)
