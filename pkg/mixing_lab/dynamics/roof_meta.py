#!/usr/bin/env python3
"""
Holds the generic roof function meta-class that concrete roofs subclass.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from abc import ABC, abstractmethod
import logging



logger = logging.getLogger(__name__)



class RoofFunction(ABC):
    """
    The abstract class for roof functions R: Y -> (0, inf) that are C^1 on
    every partition element.  Evaluators accept numpy arrays.

    This serves as a base class for other roofs, so will consume any final
    kwargs.

    Class Attributes:
      N/A

    Instance Attributes:
      _roof_id (str): The id used as the section name in the model conf.
      _epsilon (float): The moment parameter eps of condition (iv).
    """
    def __init__(self, roof_id, epsilon, **kwargs):
        """
        Creates the roof handle.

        Args:
          roof_id (str): The id used as the section name in the model conf.
          epsilon (float): The moment parameter eps > 0 of condition (iv).
        """
        assert epsilon > 0
        self._roof_id = roof_id
        self._epsilon = float(epsilon)

        if kwargs:
            logger.warning('Discarded excess kwargs provided to'
                    + f' {self.__class__.__name__}: {", ".join(kwargs.keys())}')



    def __repr__(self):
        return f'{self.__class__.__name__}({self._roof_id!r})'



    @property
    def epsilon(self):
        """
        (float): The moment parameter eps of condition (iv).
        """
        return self._epsilon



    @abstractmethod
    def value(self, y):
        """
        Evaluates R(y).

        Args:
          y (float or ndarray): The points in [0,1].

        Returns:
          (float or ndarray): R(y).
        """



    @abstractmethod
    def derivative(self, y):
        """
        Evaluates R'(y).

        Args:
          y (float or ndarray): The points in [0,1].

        Returns:
          (float or ndarray): R'(y).
        """



    @abstractmethod
    def inf_value(self):
        """
        Returns:
          (float): inf R over Y.
        """



    @abstractmethod
    def sup_value(self):
        """
        Returns:
          (float): sup R over Y.
        """



    @abstractmethod
    def is_constant(self):
        """
        Returns:
          (bool): True if the roof is constant.
        """



    @classmethod
    @abstractmethod
    def load_from_config(cls, model_cp, model_id):
        """
        Loads the roof for this model from the configparser from file provided.

        Args:
          model_cp (configparser): The full configparser from the model conf.
          model_id (str): The ID name for this model as it appears as the
            section header in the model_cp.

        Returns:
          roof (RoofFunction<>): The RoofFunction<> object created and loaded
            from config.
        """



    @classmethod
    @abstractmethod
    def get_roof_names(cls):
        """
        Get the list of names that can be used as the 'roof' in the model conf
        to identify this roof type.

        Returns:
          ([str]): A list of names that are valid to use for this roof type.
        """
