#!/usr/bin/env python3
"""
Holds the generic expanding map meta-class that concrete model maps subclass.
Any other shared map code that needs to be accessed by all maps can be
implemented here so they have access when this is imported.

Branches are indexed from 0.  Every evaluator accepts numpy arrays and
broadcasts the branch index against the points, so whole grids of points and
whole families of branches are evaluated in one call.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from abc import ABC, abstractmethod
import logging

import numpy as np

from mixing_lab.general import config
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



logger = logging.getLogger(__name__)



class ExpandingMap(ABC):
    """
    The abstract class for all piecewise C^{1+alpha} uniformly expanding maps
    of Y = [0,1].  Each map type will subclass this, but externally will likely
    only call the generic methods defined here to unify the interface.

    This serves as a base class for other maps, so will consume any final
    kwargs.

    Class Attributes:
      N/A

    Instance Attributes:
      _map_id (str): The id used as the section name in the model conf.
      _alpha (float): The Holder exponent in (0,1].
      _c1 (float): The declared distortion constant C1 >= 1.
      _rho0 (float): The declared contraction rate in (0,1).
      _truncation (int or None): The number of branches kept for a countable
        branch family; None for finite families (all kept).
      _boundary_tol (float): Distance to an interior partition endpoint under
        which a point is considered to be on the boundary.
    """
    def __init__(self, map_id, alpha, c1, rho0, truncation=None,
            boundary_tol=1e-13, **kwargs):
        """
        Creates the map handle.

        Args:
          map_id (str): The id used as the section name in the model conf.
          alpha (float): The Holder exponent in (0,1].
          c1 (float): The declared distortion constant C1.
          rho0 (float): The declared contraction rate in (0,1).
          truncation (int or None): The branch truncation M, if countable.
          boundary_tol (float): The boundary tolerance for forward iteration.
        """
        assert 0 < alpha <= 1
        assert c1 > 0
        assert 0 < rho0 < 1
        self._map_id = map_id
        self._alpha = float(alpha)
        self._c1 = float(c1)
        self._rho0 = float(rho0)
        self._truncation = truncation
        self._boundary_tol = float(boundary_tol)

        if kwargs:
            logger.warning('Discarded excess kwargs provided to'
                    + f' {self.__class__.__name__}: {", ".join(kwargs.keys())}')



    def __repr__(self):
        return f'{self.__class__.__name__}({self._map_id!r})'



    @property
    def map_id(self):
        """
        (str): The model id this map was loaded for.
        """
        return self._map_id



    @property
    def alpha(self):
        """
        (float): The Holder exponent.
        """
        return self._alpha



    @property
    def c1(self):
        """
        (float): The declared distortion constant C1.
        """
        return self._c1



    @property
    def rho0(self):
        """
        (float): The declared contraction rate rho0.
        """
        return self._rho0



    @property
    def rho(self):
        """
        (float): rho0^alpha.
        """
        return self._rho0 ** self._alpha



    @property
    def boundary_tol(self):
        """
        (float): The boundary tolerance for forward iteration.
        """
        return self._boundary_tol



    @property
    def n_usable_branches(self):
        """
        (int): The number of branches actually enumerated, i.e. the branch
        count for finite families or the truncation M for countable ones.
        """
        count = self.branch_count
        if count is None:
            assert self._truncation is not None, \
                    'Countable branch family requires a truncation'
            return int(self._truncation)
        if self._truncation is None:
            return count
        return min(count, int(self._truncation))



    def is_near_boundary(self, y):
        """
        Checks which points are within tolerance of an interior partition
        endpoint.

        Args:
          y (float or ndarray): The points in [0,1].

        Returns:
          (bool or ndarray of bool): True where a point is on the boundary.
        """
        y = np.asarray(y, dtype=float)
        ends = self.interior_endpoints()
        if len(ends) == 0:
            return self._accumulation_mask(y)
        idx = np.searchsorted(ends, y)
        above = ends[np.clip(idx, 0, len(ends) - 1)]
        below = ends[np.clip(idx - 1, 0, len(ends) - 1)]
        dist = np.minimum(np.abs(y - above), np.abs(y - below))
        return (dist <= self._boundary_tol) | self._accumulation_mask(y)



    def _accumulation_mask(self, y):
        """
        Marks points at which a countable family of endpoints accumulates.
        Finite families have none.

        Args:
          y (ndarray): The points.

        Returns:
          (ndarray of bool): True where a point is at an accumulation point.
        """
        return np.zeros(np.shape(y), dtype=bool)



    def branch_sizes(self):
        """
        Gets |h_m'|_inf for every usable branch, used by the condition-(iv)
        series and the truncation tail.

        Returns:
          (ndarray): sup |h_m'| per usable branch.
        """
        grid = np.linspace(0.0, 1.0, 65)
        m_idx = np.arange(self.n_usable_branches)[:, None]
        return np.max(np.abs(self.inverse_derivative(m_idx, grid[None, :])),
                axis=1)



    @property
    @abstractmethod
    def branch_count(self):
        """
        (int or None): The number of branches; None for a countable family.
        """



    @abstractmethod
    def interior_endpoints(self):
        """
        Gets the sorted partition endpoints strictly inside (0,1) that are in
        use (those of the usable branches).

        Returns:
          (ndarray): The sorted interior endpoints.
        """



    @abstractmethod
    def branch_interval(self, m):
        """
        Gets the partition element [c_m, d_m] that branch m maps onto Y.

        Args:
          m (int): The branch index.

        Returns:
          (float, float): The endpoints (c_m, d_m).
        """



    @abstractmethod
    def inverse(self, m, y):
        """
        Evaluates the inverse branch h_m at y.

        Args:
          m (int or ndarray of int): The branch index, broadcast against y.
          y (float or ndarray): The points in [0,1].

        Returns:
          (float or ndarray): h_m(y).
        """



    @abstractmethod
    def inverse_derivative(self, m, y):
        """
        Evaluates h_m'(y), signed.

        Args:
          m (int or ndarray of int): The branch index, broadcast against y.
          y (float or ndarray): The points in [0,1].

        Returns:
          (float or ndarray): h_m'(y).
        """



    @abstractmethod
    def branch_index(self, y):
        """
        Finds the partition element containing y.

        Args:
          y (float or ndarray): The points in [0,1].

        Returns:
          (int or ndarray of int): The branch index m with y in [c_m, d_m].
        """



    @abstractmethod
    def forward(self, y):
        """
        Evaluates F(y) without any boundary check.

        Args:
          y (float or ndarray): The points in [0,1].

        Returns:
          (float or ndarray): F(y).
        """



    @abstractmethod
    def tail_bound(self, sup_weight):
        """
        Bounds the condition-(iv) mass of the branches omitted by truncation,
        sum over m >= M of e^{eps |R o h_m|_inf} |h_m'|_inf, given an upper bound
        on e^{eps |R o h_m|_inf}.

        Args:
          sup_weight (float): An upper bound of e^{eps |R|_inf}.

        Returns:
          (float): The tail bound; 0 for finite families without truncation.
        """



    @classmethod
    @abstractmethod
    def load_from_config(cls, model_cp, model_id):
        """
        Loads the map for this model from the configparser from file provided.

        Args:
          model_cp (configparser): The full configparser from the model conf.
          model_id (str): The ID name for this model as it appears as the
            section header in the model_cp.

        Returns:
          exp_map (ExpandingMap<>): The ExpandingMap<> object created and
            loaded from config, where ExpandingMap<> is a subclass of
            ExpandingMap (e.g. FullBranchMap).
        """



    @classmethod
    @abstractmethod
    def get_map_names(cls):
        """
        Get the list of names that can be used as the 'map' in the model conf
        to identify this map type.

        Returns:
          ([str]): A list of names that are valid to use for this map type.
        """



def get_common_kwargs_from_config(model_cp, model_id):
    """
    Reads the keys shared by every map type from a model conf section.

    Args:
      model_cp (configparser): The full configparser from the model conf.
      model_id (str): The section ID of the model.

    Returns:
      ({str: *}): The kwargs for `ExpandingMap.__init__()`.

    Raises:
      (LabConfigError): A key is missing or out of range.
    """
    kwargs = {}
    kwargs['map_id'] = model_id
    kwargs['alpha'] = config.get_conf_value(model_cp, model_id, 'alpha',
            config.CastType.FLOAT, fallback=1.0, positive=True)
    kwargs['c1'] = config.get_conf_value(model_cp, model_id, 'c1',
            config.CastType.FLOAT, fallback=1.0, positive=True)
    kwargs['rho0'] = config.get_conf_value(model_cp, model_id, 'rho0',
            config.CastType.FLOAT, positive=True)
    truncation = config.get_conf_value(model_cp, model_id, 'truncation',
            config.CastType.INT, fallback=0)
    kwargs['truncation'] = truncation if truncation > 0 else None

    if kwargs['alpha'] > 1 or kwargs['rho0'] >= 1:
        raise LabConfigError(f'[{model_id}] needs alpha <= 1 and rho0 < 1')
    return kwargs
