#!/usr/bin/env python3
"""
The twisted transfer operators on grid functions.

  A_{s,h,n} v = e^{-s R_n o h} |h'| v o h        (single word)
  P_s v       = sum over single branches of A_{s,h}
  L_s v       = (lambda_sigma f_sigma)^{-1} P_s(f_sigma v),  sigma = Re s
  Q_s f       = f0^{-1} P_s(f0 f)

All operators are evaluated nodewise on the grid of their input, with the
input interpolated at the branch points.  The branch tables for a given
(map, roof, word length, grid) are computed once and reused.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass
import functools
import logging

import numpy as np
from scipy import integrate

from mixing_lab.dynamics import words as words_mod
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.transfer.grid import GridFunction, interpolate



logger = logging.getLogger(__name__)

_SIGMA_TOL = 1e-14



@dataclass(frozen=True)
class TwistParameter:
    """
    The complex twist s = sigma + i b.

    Instance Attributes:
      sigma (float): The real part.
      b (float): The imaginary part (the frequency).
    """
    sigma: float
    b: float

    @property
    def s(self):
        """
        (complex): sigma + i b.
        """
        return complex(self.sigma, self.b)



    @classmethod
    def from_complex(cls, s):
        """
        Args:
          s (complex): The twist.

        Returns:
          (TwistParameter): The split twist.
        """
        s = complex(s)
        return cls(s.real, s.imag)



    def check_domain(self, epsilon):
        """
        Args:
          epsilon (float): The twist-domain half-width from the ledger.

        Returns:
          (bool): True if |sigma| < epsilon.
        """
        return abs(self.sigma) < epsilon



@functools.lru_cache(maxsize=64)
def _cached_table(exp_map, roof, n, n_intervals, truncation):
    words, _ = words_mod.enumerate_words(exp_map, n, truncation)
    nodes = np.linspace(0.0, 1.0, n_intervals + 1)
    return words_mod.word_table(exp_map, roof,
            words_mod.words_to_indices(words), nodes)



def _apply_table(table, s, v_values, word_weights=None, nodes=None):
    """
    Sums e^{-s R_n o h} |h'| (chi v) o h over the rows of a word table.

    Args:
      table (WordTable): The branch data at the output nodes.
      s (complex): The twist.
      v_values (ndarray): Nodal values of the input.
      word_weights (callable or None): Maps (indices, nodes) to an extra
        factor per row and output node.
      nodes (ndarray or None): The output nodes, needed with `word_weights`.

    Returns:
      (ndarray): The output nodal values.
    """
    terms = np.exp(-s * table.roof_sums) * np.abs(table.derivs) \
            * interpolate(v_values, table.points)
    if word_weights is not None:
        terms = terms * word_weights(table.indices, nodes)
    return np.sum(terms, axis=0)



def apply_A(word, s, roof, v):
    """
    Applies the single-word operator A_{s,h,n}.

    Args:
      word (BranchWord): The inverse branch h of length n.
      s (complex): The twist.
      roof (RoofFunction): The roof.
      v (GridFunction): The input.

    Returns:
      (GridFunction): e^{-s R_n(h y)} |h'(y)| v(h(y)) at every node y.
    """
    table = words_mod.word_table(word.exp_map, roof, np.array([word.indices]),
            v.nodes)
    return GridFunction(_apply_table(table, complex(s), v.values), v.alpha)



def apply_P(exp_map, roof, s, v, truncation=None, tail_bound=None):
    """
    Applies P_s, summing over the usable single branches.

    Args:
      exp_map (ExpandingMap): The map.
      roof (RoofFunction): The roof.
      s (complex): The twist.
      v (GridFunction): The input.
      truncation (int or None): Branch truncation; None uses the map's own.
      tail_bound (float or None): Raise if the omitted condition-(iv) mass
        exceeds this.

    Returns:
      (GridFunction): P_s v.

    Raises:
      (TruncationTailTooLarge): The omitted mass exceeds `tail_bound`.
    """
    if tail_bound is not None:
        words_mod.enumerate_words(exp_map, 1, truncation, roof, tail_bound)
    return apply_P_words(exp_map, roof, s, v, 1, truncation)



def apply_P_words(exp_map, roof, s, v, n, truncation=None,
        word_weights=None):
    """
    Applies sum_{h in H_n} A_{s,h,n} directly from the words of length n.

    Args:
      exp_map (ExpandingMap): The map.
      roof (RoofFunction): The roof.
      s (complex): The twist.
      v (GridFunction): The input.
      n (int): The word length.
      truncation (int or None): Branch truncation; None uses the map's own.
      word_weights (callable or None): Extra factor per word, see
        `ChiFunction.word_weights()`.

    Returns:
      (GridFunction): The n-word operator applied to v.
    """
    table = _cached_table(exp_map, roof, int(n), v.n_intervals, truncation)
    return GridFunction(_apply_table(table, complex(s), v.values,
            word_weights, v.nodes), v.alpha)



def _check_sigma(spectral, s):
    if abs(spectral.sigma - complex(s).real) > _SIGMA_TOL:
        logger.critical(f'Spectral data at sigma={spectral.sigma} used for'
                + f' s={s}')
        raise SpectralMismatch(f'Spectral data sigma {spectral.sigma} does'
                + f' not match Re s = {complex(s).real}')



def apply_L(spectral, s, v):
    """
    Applies the normalized operator L_s.

    Args:
      spectral (SpectralData): The leading spectral data at sigma = Re s.
      s (complex): The twist.
      v (GridFunction): The input.

    Returns:
      (GridFunction): L_s v.

    Raises:
      (SpectralMismatch): The spectral data belong to another sigma.
    """
    _check_sigma(spectral, s)
    data = spectral.on_grid(v.n_intervals)
    dens = data.density
    out = apply_P(data.exp_map, data.roof, s, v * dens) \
            / (data.eigenvalue * dens)
    assert out.sup_norm() <= v.sup_norm() * (1.0 + 1e-8) + 1e-300, \
            '|L_s v| exceeds |v|'
    if complex(s).imag == 0:
        one = apply_P(data.exp_map, data.roof, s, dens) \
                / (data.eigenvalue * dens)
        assert np.max(np.abs(one.values - 1.0)) <= 1e-8, 'L_sigma 1 != 1'
    return out



def apply_L_words(spectral, s, v, n, word_weights=None):
    """
    Applies L_s^n from the words of length n, optionally with a per-word
    damping factor inside the sum (L_sigma^n(chi u) for a damping chi).

    Args:
      spectral (SpectralData): The leading spectral data at sigma = Re s.
      s (complex): The twist.
      v (GridFunction): The input.
      n (int): The power.
      word_weights (callable or None): Extra factor per word.

    Returns:
      (GridFunction): L_s^n v.

    Raises:
      (SpectralMismatch): The spectral data belong to another sigma.
    """
    _check_sigma(spectral, s)
    data = spectral.on_grid(v.n_intervals)
    dens = data.density
    out = apply_P_words(data.exp_map, data.roof, s, v * dens, n,
            word_weights=word_weights)
    return out / (data.eigenvalue ** n * dens)



def apply_Q(exp_map, roof, s, f, f0):
    """
    Applies Q_s f = f0^{-1} P_s(f0 f), the transfer operator for mu.

    Args:
      exp_map (ExpandingMap): The map.
      roof (RoofFunction): The roof.
      s (complex): The twist.
      f (GridFunction): The input.
      f0 (GridFunction): The invariant density on the same grid.

    Returns:
      (GridFunction): Q_s f.
    """
    return apply_P(exp_map, roof, s, f0 * f) / f0



def adjoint_gap(exp_map, roof, s, f, g, f0):
    """
    Compares int Q_s f . g dmu against int e^{-sR} f . g o F dmu.  The right
    side is integrated cell by cell in the original variable, so the two sides
    share no evaluation points.

    Args:
      exp_map (ExpandingMap): The map.
      roof (RoofFunction): The roof.
      s (complex): The twist.
      f (GridFunction): The first test function.
      g (GridFunction): The second test function.
      f0 (GridFunction): The invariant density.

    Returns:
      (float): The absolute difference of the two sides.
    """
    lhs = mu_integral(apply_Q(exp_map, roof, s, f, f0) * g, f0)
    rhs = 0.0
    for m in range(exp_map.n_usable_branches):
        left, right = exp_map.branch_interval(m)
        x = np.linspace(left, right, f.n_intervals + 1)
        x_in = np.clip(x, left + 1e-12, right - 1e-12)
        integrand = np.exp(-complex(s) * roof.value(x)) * f(x) \
                * g(exp_map.forward(x_in)) * np.real(f0(x))
        rhs += integrate.trapezoid(integrand, x)
    return float(abs(lhs - rhs))



def mu_integral(v, f0):
    """
    Integrates against the invariant measure d mu = f0 dLeb by trapezoid.

    Args:
      v (GridFunction): The integrand.
      f0 (GridFunction or SpectralData): The invariant density (or the
        spectral data at sigma = 0 holding it).

    Returns:
      (complex): int v dmu.
    """
    if not isinstance(f0, GridFunction):
        f0 = f0.density
    if f0.n_intervals != v.n_intervals:
        f0 = f0.resample(v.n_intervals)
    nodes = v.nodes
    mass = integrate.trapezoid(np.real(f0.values), nodes)
    return complex(integrate.trapezoid(v.values * np.real(f0.values), nodes)
            / mass)
