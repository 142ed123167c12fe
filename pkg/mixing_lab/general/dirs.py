#!/usr/bin/env python3
"""
Locations of the config files and run artifacts of the lab.  Every path the
package reads or writes by default is derived here from the package location,
so a run is independent of the current working directory.

Module Attributes:
  MODELS_CONF (str): File name of the model zoo / run config.
  LOGGER_CONF (str): File name of the logging config.
  DEFAULT_OUTPUT_DIR (str): The output dir name that resolves to the repo
    output dir rather than a path relative to the working directory.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import os.path



MODELS_CONF = 'models.conf'
LOGGER_CONF = 'logger.conf'
DEFAULT_OUTPUT_DIR = 'output'



def get_src_app_root_path():
    """
    Returns:
      (str): Absolute path of the `mixing_lab` package dir.
    """
    general_dir = os.path.dirname(os.path.realpath(__file__))
    return os.path.dirname(general_dir)



def get_root_path():
    """
    Returns:
      (str): Absolute path of the repo root (the parent of the package).
    """
    return os.path.dirname(get_src_app_root_path())



def get_conf_path():
    """
    Returns:
      (str): Absolute path of the config dir.
    """
    return os.path.join(get_root_path(), 'config')



def get_logger_conf_file():
    """
    Returns:
      (str): Absolute path of the logging config.
    """
    return os.path.join(get_conf_path(), LOGGER_CONF)



def get_output_path():
    """
    The default dir for JSON summaries and CSV tables.  Not created here; the
    CLI creates it on first write.

    Returns:
      (str): Absolute path of the output dir.
    """
    return os.path.join(get_root_path(), DEFAULT_OUTPUT_DIR)



def resolve_output_dir(output_dir):
    """
    Maps the configured output dir to the path artifacts are written to.  The
    bare default name points at the repo output dir; anything else is used
    as given.

    Args:
      output_dir (str): The configured output dir.

    Returns:
      (str): The dir to write artifacts into.
    """
    if output_dir == DEFAULT_OUTPUT_DIR:
        return get_output_path()
    return output_dir
