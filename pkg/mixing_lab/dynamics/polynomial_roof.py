#!/usr/bin/env python3
"""
Polynomial roof functions R(y) = sum_k a_k y^k on Y = [0,1] (constant, linear
and quadratic roofs of the model zoo).

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import logging

import numpy as np
from numpy.polynomial import Polynomial

from mixing_lab.dynamics import roof_meta
from mixing_lab.general import config
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



logger = logging.getLogger(__name__)



class PolynomialRoof(roof_meta.RoofFunction):
    """
    A polynomial roof, with exact extrema from its critical points.

    Class Attributes:
      N/A

    Instance Attributes:
      _poly (Polynomial): R.
      _dpoly (Polynomial): R'.
      _inf (float): inf R over [0,1].
      _sup (float): sup R over [0,1].

      [inherited from RoofFunction]:
        _roof_id (str): The id used as the section name in the model conf.
        _epsilon (float): The moment parameter eps of condition (iv).
    """
    def __init__(self, coefficients, **kwargs):
        """
        Creates the roof.

        Args:
          coefficients ([float]): a_0, a_1, ... in increasing degree.

          See parent(s) for required kwargs.
        """
        super().__init__(**kwargs)
        self._poly = Polynomial(np.asarray(coefficients, dtype=float))
        self._dpoly = self._poly.deriv()

        candidates = [0.0, 1.0]
        if self._dpoly.degree() >= 1:
            for root in self._dpoly.roots():
                if abs(root.imag) < 1e-14 and 0.0 < root.real < 1.0:
                    candidates.append(float(root.real))
        vals = self._poly(np.array(candidates))
        self._inf = float(np.min(vals))
        self._sup = float(np.max(vals))
        assert self._inf > 0, 'Roof must be bounded away from 0'



    @property
    def coefficients(self):
        """
        ([float]): The polynomial coefficients in increasing degree.
        """
        return [float(c) for c in self._poly.coef]



    def value(self, y):
        return self._poly(np.asarray(y, dtype=float))



    def derivative(self, y):
        return self._dpoly(np.asarray(y, dtype=float))



    def inf_value(self):
        return self._inf



    def sup_value(self):
        return self._sup



    def is_constant(self):
        return bool(np.all(np.abs(self._poly.coef[1:]) == 0))



    @classmethod
    def load_from_config(cls, model_cp, model_id):
        """
        Loads the roof for this model from the configparser from file provided.

        Args:
          model_cp (configparser): The full configparser from the model conf.
          model_id (str): The ID name for this model as it appears as the
            section header in the model_cp.

        Returns:
          roof (PolynomialRoof): The roof created and loaded from config.

        Raises:
          (LabConfigError): Missing coefficients, or a roof that is not
            positive on [0,1].
        """
        kwargs = {}
        kwargs['roof_id'] = model_id
        kwargs['coefficients'] = config.get_conf_list(model_cp, model_id,
                'roof coefficients', config.CastType.FLOAT)
        kwargs['epsilon'] = config.get_conf_value(model_cp, model_id,
                'roof epsilon', config.CastType.FLOAT, fallback=0.1,
                positive=True)
        try:
            return PolynomialRoof(**kwargs)
        except AssertionError as ex:
            raise LabConfigError(
                    f'[{model_id}] roof must be positive on [0,1]') from ex



    @classmethod
    def get_roof_names(cls):
        """
        Get the list of names that can be used as the 'roof' in the model conf
        to identify this roof type.

        Returns:
          ([str]): A list of names that are valid to use for this roof type.
        """
        return ['polynomial', 'constant', 'linear', 'quadratic']
