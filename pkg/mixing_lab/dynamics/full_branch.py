#!/usr/bin/env python3
"""
Full-branch linear maps y -> k*y mod 1 (doubling for k=2, ternary for k=3) to
implement the generic interface components defined by the metaclass.  All
branches are closed form: h_m(y) = (y+m)/k with h_m' = 1/k.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import logging

import numpy as np

from mixing_lab.dynamics import map_meta
from mixing_lab.general import config
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



logger = logging.getLogger(__name__)



class FullBranchMap(map_meta.ExpandingMap):
    """
    The k-branch full-branch linear expanding map.

    Class Attributes:
      _NAMED_BRANCH_COUNTS ({str: int}): The map names that fix k.

    Instance Attributes:
      _k (int): The number of branches (the expansion factor).

      [inherited from ExpandingMap]:
        _map_id (str): The id used as the section name in the model conf.
        _alpha (float): The Holder exponent in (0,1].
        _c1 (float): The declared distortion constant C1 >= 1.
        _rho0 (float): The declared contraction rate in (0,1).
        _truncation (int or None): Always None for this finite family.
        _boundary_tol (float): Boundary tolerance for forward iteration.
    """
    _NAMED_BRANCH_COUNTS = {
        'doubling': 2,
        'ternary': 3,
    }

    def __init__(self, branches, **kwargs):
        """
        Creates the map.

        Args:
          branches (int): The number of branches k >= 2.

          See parent(s) for required kwargs.
        """
        assert branches >= 2
        super().__init__(**kwargs)
        self._k = int(branches)



    @property
    def branch_count(self):
        return self._k



    def interior_endpoints(self):
        return np.arange(1, self._k) / self._k



    def branch_interval(self, m):
        assert 0 <= m < self._k
        return m / self._k, (m + 1) / self._k



    def inverse(self, m, y):
        return (np.asarray(y, dtype=float) + m) / self._k



    def inverse_derivative(self, m, y):
        shape = np.broadcast(np.asarray(m), np.asarray(y)).shape
        return np.full(shape, 1.0 / self._k)



    def branch_index(self, y):
        idx = np.floor(np.asarray(y, dtype=float) * self._k).astype(int)
        return np.clip(idx, 0, self._k - 1)



    def forward(self, y):
        y = np.asarray(y, dtype=float)
        return self._k * y - self.branch_index(y)



    def tail_bound(self, sup_weight):
        return 0.0



    @classmethod
    def load_from_config(cls, model_cp, model_id):
        """
        Loads the map for this model from the configparser from file provided.

        Args:
          model_cp (configparser): The full configparser from the model conf.
          model_id (str): The ID name for this model as it appears as the
            section header in the model_cp.

        Returns:
          exp_map (FullBranchMap): The map created and loaded from config.

        Raises:
          (LabConfigError): The branch count is missing or invalid.
        """
        kwargs = map_meta.get_common_kwargs_from_config(model_cp, model_id)
        map_name = model_cp[model_id]['map'].strip()
        if map_name in cls._NAMED_BRANCH_COUNTS:
            kwargs['branches'] = cls._NAMED_BRANCH_COUNTS[map_name]
        else:
            kwargs['branches'] = config.get_conf_value(model_cp, model_id,
                    'branches', config.CastType.INT, positive=True)
        if kwargs['branches'] < 2:
            raise LabConfigError(f'[{model_id}] needs at least 2 branches')
        kwargs['truncation'] = None
        return FullBranchMap(**kwargs)



    @classmethod
    def get_map_names(cls):
        """
        Get the list of names that can be used as the 'map' in the model conf
        to identify this map type.

        Returns:
          ([str]): A list of names that are valid to use for this map type.
        """
        return ['doubling', 'ternary', 'full-branch']
