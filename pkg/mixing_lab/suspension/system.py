#!/usr/bin/env python3
"""
The suspension handle: the base map and roof with the invariant density and a
composite Gauss-Legendre quadrature for integrals against mu over Y.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import logging

import numpy as np

from mixing_lab.transfer import spectrum



logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class BaseQuadrature:
    """
    Nodes and weights for int_Y g dmu, the weights carrying f0 and summing
    to 1.

    Instance Attributes:
      nodes (ndarray): The quadrature nodes in (0,1).
      weights (ndarray): The weights.
    """
    nodes: np.ndarray
    weights: np.ndarray

    @classmethod
    def build(cls, density, cells=2048, order=8):
        """
        Args:
          density (GridFunction): The invariant density f0.
          cells (int): The number of equal cells.
          order (int): Gauss-Legendre points per cell.

        Returns:
          (BaseQuadrature): The quadrature.
        """
        gl_x, gl_w = np.polynomial.legendre.leggauss(order)
        edges = np.linspace(0.0, 1.0, cells + 1)
        half = 0.5 * (edges[1:] - edges[:-1])
        mids = 0.5 * (edges[1:] + edges[:-1])
        nodes = (mids[:, None] + half[:, None] * gl_x[None, :]).ravel()
        weights = (half[:, None] * gl_w[None, :]).ravel() \
                * np.real(density(nodes))
        return cls(nodes, weights / np.sum(weights))



    def integrate(self, values):
        """
        Args:
          values (ndarray): The integrand at the nodes (trailing axes allowed
            after the node axis).

        Returns:
          (float or complex or ndarray): The weighted sum over the node axis.
        """
        return np.tensordot(self.weights, values, axes=(0, 0))



@dataclass(frozen=True)
class SuspensionSystem:
    """
    The quotient suspension semiflow data.

    Instance Attributes:
      exp_map (ExpandingMap): The base map.
      roof (RoofFunction): The roof.
      spectral0 (SpectralData): The leading data at sigma = 0.
      quadrature (BaseQuadrature): The quadrature for dmu.
      r_bar (float): int R dmu.
    """
    exp_map: object = field(repr=False)
    roof: object = field(repr=False)
    spectral0: object = field(repr=False)
    quadrature: BaseQuadrature = field(repr=False)
    r_bar: float = 0.0

    @classmethod
    def build(cls, exp_map, roof, n_intervals=1024, cells=2048, order=8,
            spectral0=None):
        """
        Solves for f0 (unless given) and sets up the quadrature.

        Args:
          exp_map (ExpandingMap): The base map.
          roof (RoofFunction): The roof.
          n_intervals (int): The grid for f0.
          cells (int): Quadrature cells.
          order (int): Gauss-Legendre points per cell.
          spectral0 (SpectralData or None): Precomputed data at sigma = 0.

        Returns:
          (SuspensionSystem): The system.
        """
        if spectral0 is None:
            spectral0 = spectrum.leading_spectrum(exp_map, roof, 0.0,
                    n_intervals=n_intervals)
        quad = BaseQuadrature.build(spectral0.density, cells, order)
        r_bar = float(quad.integrate(roof.value(quad.nodes)))
        logger.info(f'Suspension over {exp_map!r}: R_bar={r_bar:.12f}')
        return cls(exp_map, roof, spectral0, quad, r_bar)



    @property
    def density(self):
        """
        (GridFunction): f0.
        """
        return self.spectral0.density
