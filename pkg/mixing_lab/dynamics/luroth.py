#!/usr/bin/env python3
"""
The Luroth map, a countable full-branch linear expanding map, to implement the
generic interface components defined by the metaclass.

Branch m (0-indexed, n = m + 1) covers [1/(n+1), 1/n], with inverse
h_m(y) = (y + n) / (n (n+1)) and |h_m'| = 1/(n (n+1)).  Only the first M
branches are enumerated; the rest are accounted for through the tail bound.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import logging

import numpy as np

from mixing_lab.dynamics import map_meta
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



logger = logging.getLogger(__name__)



class LurothMap(map_meta.ExpandingMap):
    """
    The Luroth map with a truncated branch family.

    Class Attributes:
      N/A

    Instance Attributes:
      [inherited from ExpandingMap]:
        _map_id (str): The id used as the section name in the model conf.
        _alpha (float): The Holder exponent in (0,1].
        _c1 (float): The declared distortion constant C1 >= 1.
        _rho0 (float): The declared contraction rate in (0,1).
        _truncation (int): The number M of branches enumerated.
        _boundary_tol (float): Boundary tolerance for forward iteration.
    """
    def __init__(self, **kwargs):
        """
        Creates the map.

        Args:
          See parent(s) for required kwargs; `truncation` is required.
        """
        super().__init__(**kwargs)
        assert self._truncation is not None and self._truncation >= 1



    @property
    def branch_count(self):
        return None



    def interior_endpoints(self):
        n_vals = np.arange(self._truncation, 1, -1)
        return 1.0 / n_vals



    def branch_interval(self, m):
        assert m >= 0
        n = m + 1
        return 1.0 / (n + 1), 1.0 / n



    def inverse(self, m, y):
        n = np.asarray(m) + 1
        return (np.asarray(y, dtype=float) + n) / (n * (n + 1))



    def inverse_derivative(self, m, y):
        n = np.asarray(m) + 1
        shape = np.broadcast(n, np.asarray(y)).shape
        return np.broadcast_to(1.0 / (n * (n + 1.0)), shape).copy()



    def branch_index(self, y):
        y = np.asarray(y, dtype=float)
        with np.errstate(divide='ignore'):
            n = np.floor(1.0 / np.maximum(y, 1e-300))
        n = np.clip(n, 1, 2**52).astype(np.int64)
        return n - 1



    def forward(self, y):
        y = np.asarray(y, dtype=float)
        n = (self.branch_index(y) + 1).astype(float)
        return np.clip(n * (n + 1) * y - n, 0.0, 1.0)



    def _accumulation_mask(self, y):
        return np.asarray(y) <= self._boundary_tol



    def tail_bound(self, sup_weight):
        return sup_weight / (self._truncation + 1)



    @classmethod
    def load_from_config(cls, model_cp, model_id):
        """
        Loads the map for this model from the configparser from file provided.

        Args:
          model_cp (configparser): The full configparser from the model conf.
          model_id (str): The ID name for this model as it appears as the
            section header in the model_cp.

        Returns:
          exp_map (LurothMap): The map created and loaded from config.

        Raises:
          (LabConfigError): The truncation is missing.
        """
        kwargs = map_meta.get_common_kwargs_from_config(model_cp, model_id)
        if kwargs['truncation'] is None:
            raise LabConfigError(
                    f'[{model_id}] countable map needs a positive truncation')
        return LurothMap(**kwargs)



    @classmethod
    def get_map_names(cls):
        """
        Get the list of names that can be used as the 'map' in the model conf
        to identify this map type.

        Returns:
          ([str]): A list of names that are valid to use for this map type.
        """
        return ['luroth']
