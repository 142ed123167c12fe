#!/usr/bin/env python3
"""
Leading spectral data of the real twisted operators P_sigma by power iteration,
and a spectral-radius probe for the purely imaginary twists.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import functools
import logging

import numpy as np
from scipy import integrate

from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.transfer import operators
from mixing_lab.transfer.grid import GridFunction



logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class SpectralData:
    """
    The leading eigenpair of P_sigma on one grid.

    Instance Attributes:
      sigma (float): The real twist.
      eigenvalue (float): lambda_sigma > 0.
      density (GridFunction): f_sigma > 0, normalized to int f_sigma dLeb = 1.
      residual (float): |P_sigma f_sigma - lambda_sigma f_sigma|_inf.
      iterations (int): The power iterations used.
      exp_map (ExpandingMap): The map the data belong to.
      roof (RoofFunction): The roof the data belong to.
    """
    sigma: float
    eigenvalue: float
    density: GridFunction
    residual: float
    iterations: int
    exp_map: object = field(default=None, repr=False, compare=False)
    roof: object = field(default=None, repr=False, compare=False)

    @property
    def n_intervals(self):
        """
        (int): The grid size the data were computed on.
        """
        return self.density.n_intervals



    def on_grid(self, n_intervals):
        """
        Gets the same spectral data solved on another grid, so that the
        normalized operator on that grid fixes constants exactly.

        Args:
          n_intervals (int): The grid size wanted.

        Returns:
          (SpectralData): This object if the grids match, else a re-solve.
        """
        if n_intervals == self.n_intervals:
            return self
        return _cached_spectrum(self.exp_map, self.roof, self.sigma,
                int(n_intervals))



    @property
    def density_sup(self):
        """
        (float): |f_sigma|_inf.
        """
        return float(np.max(self.density.real))



    @property
    def density_inv_sup(self):
        """
        (float): |f_sigma^{-1}|_inf.
        """
        return float(1.0 / np.min(self.density.real))



    @property
    def density_holder(self):
        """
        (float): |f_sigma|_alpha.
        """
        return self.density.holder_seminorm()



@functools.lru_cache(maxsize=32)
def _cached_spectrum(exp_map, roof, sigma, n_intervals):
    return leading_spectrum(exp_map, roof, sigma, n_intervals=n_intervals)



def leading_spectrum(exp_map, roof, sigma, n_intervals=1024, epsilon=None,
        reference=None, tol=1e-12, residual_tol=1e-9, max_iter=2000):
    """
    Finds lambda_sigma and f_sigma by power iteration on P_sigma, normalizing
    int f dLeb = 1 at every step.

    Args:
      exp_map (ExpandingMap): The map.
      roof (RoofFunction): The roof.
      sigma (float): The real twist.
      n_intervals (int): The grid size.
      epsilon (float or None): The twist-domain half-width; checked if given.
      reference (SpectralData or None): The data at sigma = 0; if given, the
        band f0/2 <= f_sigma <= 2 f0 is checked against it.
      tol (float): The eigenvalue-increment tolerance.
      residual_tol (float): The residual tolerance.
      max_iter (int): The iteration cap.

    Returns:
      (SpectralData): The leading spectral data.

    Raises:
      (NoConvergence): The tolerances were not met within `max_iter`.
      (SpectralMismatch): f_sigma leaves the band around `reference`.
    """
    sigma = float(sigma)
    if epsilon is not None:
        assert abs(sigma) < epsilon, f'|sigma|={abs(sigma)} >= eps={epsilon}'
    nodes = np.linspace(0.0, 1.0, n_intervals + 1)
    dens = GridFunction.constant(1.0, n_intervals, exp_map.alpha)
    eigenvalue = np.inf
    residual = np.inf

    for iteration in range(1, max_iter + 1):
        image = operators.apply_P(exp_map, roof, sigma, dens).map_values(
                np.real)
        new_eigenvalue = float(integrate.trapezoid(image.real, nodes))
        residual = float(np.max(np.abs(image.real
                - new_eigenvalue * dens.real)))
        increment = abs(new_eigenvalue - eigenvalue)
        eigenvalue = new_eigenvalue
        logger.debug(f'sigma={sigma}: iteration {iteration}, lambda='
                + f'{eigenvalue:.15f}, residual={residual:.3e}')
        if increment < tol and residual < residual_tol:
            break
        dens = image / eigenvalue
    else:
        logger.critical(f'Power iteration at sigma={sigma} did not converge')
        raise NoConvergence(f'sigma={sigma}: residual {residual:.3e} after'
                + f' {max_iter} iterations')

    assert eigenvalue > 0 and np.all(dens.real > 0)
    assert 0.5 <= eigenvalue <= 2.0, f'lambda_sigma={eigenvalue} out of band'
    if reference is not None:
        ref = reference.on_grid(n_intervals).density.real
        if np.any(dens.real < 0.5 * ref) or np.any(dens.real > 2.0 * ref):
            logger.critical(f'f_sigma at sigma={sigma} leaves the band'
                    + ' [f0/2, 2 f0]')
            raise SpectralMismatch(f'sigma={sigma}: f_sigma not within'
                    + ' [f0/2, 2 f0] of the reference')

    logger.info(f'Leading spectrum at sigma={sigma}: lambda={eigenvalue:.12f}'
            + f' after {iteration} iterations')
    return SpectralData(sigma, eigenvalue, dens, residual, iteration, exp_map,
            roof)



def twisted_spectral_radius(spectral, b, n_iter=64):
    """
    Estimates the spectral radius of L_{sigma+ib} by (|L^n 1|_inf)^{1/n}.

    Args:
      spectral (SpectralData): The data at sigma.
      b (float): The frequency.
      n_iter (int): The power n.

    Returns:
      (float): The estimate, at most 1.
    """
    s = complex(spectral.sigma, b)
    v = GridFunction.constant(1.0, spectral.n_intervals,
            spectral.density.alpha)
    for _ in range(n_iter):
        v = operators.apply_L(spectral, s, v)
    return float(v.sup_norm() ** (1.0 / n_iter))
