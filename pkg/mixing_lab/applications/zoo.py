#!/usr/bin/env python3
"""
The model zoo access module.  Models are sections of `models.conf`; the map,
roof and optional fiber map of each are built by the class whose names match
the section's 'map', 'roof' and 'fiber' keys.

Module Attributes:
  logger (Logger): Logger for this module.
  _MAP_TYPES ((Class<ExpandingMap<>>)): All map classes supported.
  _ROOF_TYPES ((Class<RoofFunction<>>)): All roof classes supported.
  _FIBER_TYPES ((Class<FiberMap<>>)): All fiber map classes supported.
  _models_loaded ({(str, str): ModelConfig}): The models loaded and cached,
    keyed by (conf file, model id).

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import logging

from mixing_lab.dynamics import full_branch, luroth, polynomial_roof
from mixing_lab.general import config, dirs
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.skew import skew_map



logger = logging.getLogger(__name__)

_MAP_TYPES = (
    full_branch.FullBranchMap,
    luroth.LurothMap,
)

_ROOF_TYPES = (
    polynomial_roof.PolynomialRoof,
)

_FIBER_TYPES = (
    skew_map.AffineFiberMap,
)

_models_loaded = {}



@dataclass(frozen=True)
class ModelConfig:
    """
    A named (map, roof, fiber) configuration.

    Instance Attributes:
      name (str): The model id.
      exp_map (ExpandingMap): The base map.
      roof (RoofFunction): The roof.
      fiber (FiberMap or None): The fiber map, if any.
    """
    name: str
    exp_map: object = field(repr=False)
    roof: object = field(repr=False)
    fiber: object = field(default=None, repr=False)

    @property
    def skew(self):
        """
        (SkewMap or None): The skew product over the map, if a fiber is set.
        """
        if self.fiber is None:
            return None
        return skew_map.SkewMap(self.exp_map, self.fiber)



def _select(types, name, names_getter, model_id, key):
    for cls in types:
        if name in getattr(cls, names_getter)():
            return cls
    logger.critical(f'[{model_id}] unknown {key} {name!r}')
    raise LabConfigError(f'[{model_id}] unknown {key}: {name!r}')



def load_model_from_section(model_cp, model_id):
    """
    Builds a model from one conf section.

    Args:
      model_cp (ConfigParser): The conf holding the section.
      model_id (str): The section id.

    Returns:
      (ModelConfig): The model.

    Raises:
      (LabConfigError): Unknown map, roof or fiber name, or a bad value.
    """
    section = model_cp[model_id]
    if 'map' not in section or 'roof' not in section:
        raise LabConfigError(f'[{model_id}] needs both map and roof')
    map_cls = _select(_MAP_TYPES, section['map'].strip(), 'get_map_names',
            model_id, 'map')
    roof_cls = _select(_ROOF_TYPES, section['roof'].strip(), 'get_roof_names',
            model_id, 'roof')
    fiber = None
    if 'fiber' in section:
        fiber_cls = _select(_FIBER_TYPES, section['fiber'].strip(),
                'get_fiber_names', model_id, 'fiber')
        fiber = fiber_cls.load_from_config(model_cp, model_id)
    return ModelConfig(model_id, map_cls.load_from_config(model_cp, model_id),
            roof_cls.load_from_config(model_cp, model_id), fiber)



def get_model(model_id, conf_file=dirs.MODELS_CONF, conf_base_dir=None):
    """
    Gets the requested model.  Will return cached version if already loaded,
    otherwise will load and cache.

    Args:
      model_id (str): The section ID of the model in the zoo conf.
      conf_file (str): The zoo conf file.
      conf_base_dir (str or None): The dir holding it; None for the repo conf
        dir.

    Returns:
      (ModelConfig): The model.

    Raises:
      (UnknownModel): No such section.
      (LabConfigError): The section is invalid.
    """
    key = (conf_base_dir, conf_file, model_id)
    if key in _models_loaded:
        return _models_loaded[key]

    model_cp = config.read_conf_file(conf_file, conf_base_dir)
    if model_id not in model_cp.sections():
        logger.critical(f'Model {model_id!r} not in {conf_file}')
        raise UnknownModel(f'No model named {model_id!r}')

    model = load_model_from_section(model_cp, model_id)
    _models_loaded[key] = model
    logger.info(f'Loaded model {model_id!r}')
    return model



def model_zoo(conf_file=dirs.MODELS_CONF, conf_base_dir=None):
    """
    Loads every model in the zoo.

    Args:
      conf_file (str): The zoo conf file.
      conf_base_dir (str or None): The dir holding it.

    Returns:
      ({str: ModelConfig}): The models by name, in file order.
    """
    model_cp = config.read_conf_file(conf_file, conf_base_dir)
    return {model_id: get_model(model_id, conf_file, conf_base_dir) \
            for model_id in model_cp.sections()}
