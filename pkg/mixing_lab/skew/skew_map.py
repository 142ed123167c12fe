#!/usr/bin/env python3
"""
Skew products f(y,z) = (Fy, G(y,z)) over an expanding base map, with fibers Z
an interval or a circle, and the fiber contraction |f^n(y,z) - f^n(y,z')| <=
C gamma0^n |z - z'|.

Module Attributes:
  logger (Logger): Logger for this module.
  TOPOLOGIES ((str)): The supported fiber spaces.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
import logging

import numpy as np

from mixing_lab.dynamics import words as words_mod
from mixing_lab.general import config, utils
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



logger = logging.getLogger(__name__)

TOPOLOGIES = ('interval', 'circle')



class FiberMap(ABC):
    """
    The abstract class for fiber maps G: Y x Z -> Z.

    Class Attributes:
      N/A

    Instance Attributes:
      _fiber_id (str): The id used as the section name in the model conf.
      _topology (str): 'interval' or 'circle'.
    """
    def __init__(self, fiber_id, topology='interval', **kwargs):
        """
        Args:
          fiber_id (str): The id used as the section name in the model conf.
          topology (str): 'interval' for Z = [0,1], 'circle' for Z = R/Z.
        """
        assert topology in TOPOLOGIES, f'Unknown fiber topology {topology}'
        self._fiber_id = fiber_id
        self._topology = topology

        if kwargs:
            logger.warning('Discarded excess kwargs provided to'
                    + f' {self.__class__.__name__}: {", ".join(kwargs.keys())}')



    def __repr__(self):
        return f'{self.__class__.__name__}({self._fiber_id!r})'



    @property
    def topology(self):
        """
        (str): 'interval' or 'circle'.
        """
        return self._topology



    @property
    def diameter(self):
        """
        (float): diam Z.
        """
        return 1.0 if self._topology == 'interval' else 0.5



    def distance(self, z, z_other):
        """
        Args:
          z (ndarray): Fiber points.
          z_other (ndarray): Fiber points.

        Returns:
          (ndarray): The distance in Z.
        """
        diff = np.abs(np.asarray(z) - np.asarray(z_other))
        if self._topology == 'circle':
            diff = np.mod(diff, 1.0)
            return np.minimum(diff, 1.0 - diff)
        return diff



    @abstractmethod
    def value(self, y, z):
        """
        Evaluates G(y,z).

        Args:
          y (ndarray): Base points.
          z (ndarray): Fiber points.

        Returns:
          (ndarray): G(y,z) in Z.
        """



    @property
    @abstractmethod
    def lipschitz(self):
        """
        (float): sup over y of the Lipschitz constant of G(y, .).
        """



    @classmethod
    @abstractmethod
    def load_from_config(cls, model_cp, model_id):
        """
        Loads the fiber map for this model from the model conf.

        Args:
          model_cp (configparser): The full configparser from the model conf.
          model_id (str): The section ID of the model.

        Returns:
          fiber (FiberMap<>): The fiber map.
        """



    @classmethod
    @abstractmethod
    def get_fiber_names(cls):
        """
        Returns:
          ([str]): The names valid as 'fiber' in the model conf.
        """



class AffineFiberMap(FiberMap):
    """
    G(y,z) = a z + c y + d, reduced mod 1 on the circle.

    Class Attributes:
      N/A

    Instance Attributes:
      _contraction (float): a.
      _shear (float): c.
      _offset (float): d.

      [inherited from FiberMap]:
        _fiber_id (str): The id used as the section name in the model conf.
        _topology (str): 'interval' or 'circle'.
    """
    def __init__(self, contraction, shear=0.0, offset=0.0, **kwargs):
        """
        Args:
          contraction (float): a.
          shear (float): c.
          offset (float): d.

          See parent(s) for required kwargs.
        """
        super().__init__(**kwargs)
        self._contraction = float(contraction)
        self._shear = float(shear)
        self._offset = float(offset)
        if self._topology == 'interval':
            corners = [self._contraction * z + self._shear * y + self._offset \
                    for y in (0.0, 1.0) for z in (0.0, 1.0)]
            assert min(corners) >= 0.0 and max(corners) <= 1.0, \
                    'G must map [0,1] into itself'



    def value(self, y, z):
        out = self._contraction * np.asarray(z) + self._shear * np.asarray(y) \
                + self._offset
        if self._topology == 'circle':
            return np.mod(out, 1.0)
        return out



    @property
    def lipschitz(self):
        return abs(self._contraction)



    @classmethod
    def load_from_config(cls, model_cp, model_id):
        """
        Loads the fiber map for this model from the model conf.

        Args:
          model_cp (configparser): The full configparser from the model conf.
          model_id (str): The section ID of the model.

        Returns:
          fiber (AffineFiberMap): The fiber map.

        Raises:
          (LabConfigError): A key is missing, or G leaves [0,1].
        """
        kwargs = {}
        kwargs['fiber_id'] = model_id
        kwargs['contraction'] = config.get_conf_value(model_cp, model_id,
                'fiber contraction', config.CastType.FLOAT, positive=True)
        kwargs['shear'] = config.get_conf_value(model_cp, model_id,
                'fiber shear', config.CastType.FLOAT, fallback=0.0)
        kwargs['offset'] = config.get_conf_value(model_cp, model_id,
                'fiber offset', config.CastType.FLOAT, fallback=0.0)
        kwargs['topology'] = config.get_conf_value(model_cp, model_id,
                'fiber topology', config.CastType.STRING,
                fallback='interval')
        if kwargs['topology'] not in TOPOLOGIES:
            raise LabConfigError(f'[{model_id}] fiber topology must be one of'
                    + f' {TOPOLOGIES}')
        try:
            return AffineFiberMap(**kwargs)
        except AssertionError as ex:
            raise LabConfigError(
                    f'[{model_id}] fiber map must map [0,1] into itself') from ex



    @classmethod
    def get_fiber_names(cls):
        return ['affine']



@dataclass(frozen=True)
class SkewMap:
    """
    The skew product over a base map.

    Instance Attributes:
      exp_map (ExpandingMap): F.
      fiber (FiberMap): G.
    """
    exp_map: object = field(repr=False)
    fiber: FiberMap

    def forward(self, y, z):
        """
        Applies f without boundary checks.

        Args:
          y (ndarray): Base points.
          z (ndarray): Fiber points.

        Returns:
          y (ndarray): F(y).
          z (ndarray): G(y,z).
        """
        return self.exp_map.forward(y), self.fiber.value(y, z)



    def project(self, y, z):
        """
        The projection pi(y,z) = y.
        """
        del z
        return y



@dataclass
class ContractionReport:
    """
    The outcome of `contraction_check()`.

    Instance Attributes:
      const (float): The fitted C.
      gamma0 (float): The fitted gamma0.
      degenerate (bool): Fibers collapse to a point after one step.
      ratios ({int: float}): sup |f^n z - f^n z'| / |z - z'| per n.
    """
    const: float
    gamma0: float
    degenerate: bool
    ratios: dict

    def to_dict(self):
        """
        Returns:
          ({str: *}): A JSON-ready view.
        """
        return {'C': self.const, 'gamma0': self.gamma0,
                'degenerate': self.degenerate,
                'ratios': {str(k): v for k, v in self.ratios.items()}}



def skew_iterate(skew, y, z, n):
    """
    Computes the orbit of (y,z) under f.

    Args:
      skew (SkewMap): The skew product.
      y (float): The base point.
      z (float): The fiber point.
      n (int): The number of iterates.

    Returns:
      ys (ndarray): The base orbit, length n+1.
      zs (ndarray): The fiber orbit, length n+1.

    Raises:
      (OrbitHitsBoundary): A base iterate is on a partition endpoint.
    """
    ys = words_mod.eval_forward(skew.exp_map, y, n)
    zs = np.empty(n + 1)
    zs[0] = z
    for j in range(n):
        zs[j + 1] = skew.fiber.value(ys[j], zs[j])
    return ys, zs



def contraction_check(skew, n_list=tuple(range(1, 9)), n_pairs=256, seed=0,
        require=True):
    """
    Measures the fiber contraction on random pairs (y,z), (y,z') and fits
    sup-ratio = C gamma0^n.

    Args:
      skew (SkewMap): The skew product.
      n_list ([int]): The iterate counts.
      n_pairs (int): The number of sample pairs.
      seed (int): The seed.
      require (bool): Raise when the fibers do not contract.

    Returns:
      (ContractionReport): The measured pair (C, gamma0).

    Raises:
      (ContractionFailed): gamma0 >= 1 while `require` is set.
    """
    rng = utils.spawn_generators(seed, 1)[0]
    y = rng.random(n_pairs)
    z = rng.random(n_pairs)
    z_other = rng.random(n_pairs)
    dist0 = skew.fiber.distance(z, z_other)
    keep = dist0 > 0.1 * skew.fiber.diameter
    y, z, z_other, dist0 = y[keep], z[keep], z_other[keep], dist0[keep]

    ratios = {}
    n_done = 0
    for n in sorted(n_list):
        for _ in range(n - n_done):
            z = skew.fiber.value(y, z)
            z_other = skew.fiber.value(y, z_other)
            y = skew.exp_map.forward(y)
        n_done = n
        ratios[n] = float(np.max(skew.fiber.distance(z, z_other) / dist0))

    ns = np.array(sorted(ratios))
    vals = np.array([ratios[n] for n in ns])
    if np.all(vals == 0):
        logger.info(f'{skew.fiber!r}: fibers collapse after one step')
        return ContractionReport(0.0, 0.0, True, ratios)
    pos = vals > 0
    const, slope, _ = utils.fit_log_linear(ns[pos], vals[pos])
    gamma0 = float(np.exp(slope))
    report = ContractionReport(const, gamma0, False, ratios)
    logger.info(f'{skew.fiber!r}: C={const:.6g}, gamma0={gamma0:.6g}')
    if require and gamma0 >= 1.0:
        logger.critical(f'{skew.fiber!r} does not contract: gamma0={gamma0}')
        raise ContractionFailed(f'Measured gamma0 = {gamma0} >= 1')
    return report
