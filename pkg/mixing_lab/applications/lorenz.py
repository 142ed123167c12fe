#!/usr/bin/env python3
"""
Eigenvalues of the Lorenz vector field at the equilibrium at the origin,

  x' = sigma (y - x),  y' = x (rho - z) - y,  z' = x y - beta z,

and the two flags that make the flow fit the expanding-map framework: the
Lorenz-like ordering of the eigenvalues and strong dissipativity.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import asdict, dataclass
import logging
import math

import numpy as np



logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class EquilibriumSpectrum:
    """
    The spectrum at the origin.

    Instance Attributes:
      lambda_ss (float): The strong stable eigenvalue.
      lambda_s (float): The weak stable eigenvalue (-beta).
      lambda_u (float): The unstable eigenvalue.
      divergence (float): -(sigma + 1 + beta), constant in space.
      lorenz_like_ordering (bool): lambda_ss < lambda_s < 0 < -lambda_s <
        lambda_u.
      strong_dissipativity (bool): divergence < 0 and lambda_u + lambda_ss <
        lambda_s.
    """
    lambda_ss: float
    lambda_s: float
    lambda_u: float
    divergence: float
    lorenz_like_ordering: bool
    strong_dissipativity: bool

    def to_dict(self):
        """
        Returns:
          ({str: *}): A JSON-ready view.
        """
        return asdict(self)



def lorenz_spectrum(sigma, rho, beta):
    """
    Args:
      sigma (float): The Prandtl parameter.
      rho (float): The Rayleigh parameter.
      beta (float): The geometric parameter.

    Returns:
      (EquilibriumSpectrum): The eigenvalues and flags.
    """
    assert sigma > 0 and rho > 0 and beta >= 0
    # roots of x^2 + (sigma + 1) x - sigma (rho - 1)
    b_coef = sigma + 1.0
    disc = math.sqrt(b_coef ** 2 + 4.0 * sigma * (rho - 1.0))
    lambda_u = 0.5 * (-b_coef + disc)
    lambda_ss = 0.5 * (-b_coef - disc)
    lambda_s = -float(beta)
    divergence = -(sigma + 1.0 + beta)
    ordering = lambda_ss < lambda_s < 0.0 < -lambda_s < lambda_u
    dissipative = divergence < 0.0 and lambda_u + lambda_ss < lambda_s
    spectrum = EquilibriumSpectrum(lambda_ss, lambda_s, lambda_u, divergence,
            ordering, dissipative)
    logger.info(f'Lorenz ({sigma}, {rho}, {beta}): {spectrum}')
    return spectrum



def lorenz_jacobian(sigma, rho, beta, point=(0.0, 0.0, 0.0)):
    """
    The Jacobian of the Lorenz field.

    Args:
      sigma (float): The Prandtl parameter.
      rho (float): The Rayleigh parameter.
      beta (float): The geometric parameter.
      point ((float, float, float)): The point (x, y, z).

    Returns:
      (ndarray): The 3x3 Jacobian.
    """
    x, y, z = point
    return np.array([
        [-sigma, sigma, 0.0],
        [rho - z, -1.0, -x],
        [y, x, -beta],
    ])
