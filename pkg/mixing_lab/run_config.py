#!/usr/bin/env python3
"""
The run configuration: which model to study, the numerical resolutions, the
seed, and the per-subcommand parameter grids, loaded from a conf file such as
`config/lab.conf`.

Module Attributes:
  logger (Logger): Logger for this module.
  SCHEMA_VERSION (int): The version of the JSON summaries written by runs.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import logging

from mixing_lab.applications import zoo
from mixing_lab.general import config, dirs
from mixing_lab.general.config import CastType
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1



@dataclass
class RunConfig:     # pylint: disable=too-many-instance-attributes
    """
    A validated run configuration.  All numeric fields are positive.

    Instance Attributes:
      model (ModelConfig): The model studied.
      seed (int): The RNG seed.
      workers (int): The worker count; 0 means all cores.
      output_dir (str): Where artifacts are written.
      n_intervals (int): The grid size N.
      alpha (float): The Holder exponent.
      truncation (int or None): The branch truncation M.
      uni_n_range ([int]): Word lengths scanned for UNI.
      uni_n_grid (int): The UNI scan grid.
      sigmas ([float]): sigma values of the spectrum sweep.
      ly_b_list ([float]): Frequencies of the Lasota-Yorke report.
      ly_n_list ([int]): Powers of the Lasota-Yorke report.
      dolgopyat_b_list ([float]): Frequencies of the Dolgopyat probe.
      dolgopyat_steps (int): Power-iteration steps of the probe.
      cone_b_list ([float]): Frequencies of the cone diagnostics.
      cone_seeds ([int]): Seeds of the sampled cone pairs.
      cone_steps (int): Steps of the cone iteration.
      mc_samples (int): Monte-Carlo sample count.
      t_max_factor (float): The t-grid ends at this times R_bar.
      t_step_factor (float): The t-grid spacing is this times R_bar.
      laplace_s_list ([float]): Real s values of the Laplace transform.
      laplace_terms (int): Series terms N.
      laplace_tol (float): The largest allowed last term.
      visit_gamma (float): gamma of the visit moment.
      skew_samples (int): Monte-Carlo samples on X^R.
      skew_n_eta (int): Steps of the fiber laws.
      lorenz ((float, float, float)): (sigma, rho, beta).
      residual_tol (float): Power-iteration residual tolerance.
      echo ({str: {str: str}}): The raw conf, for artifact headers.
    """
    model: object = field(repr=False)
    seed: int = 0
    workers: int = 0
    output_dir: str = 'output'
    n_intervals: int = 1024
    alpha: float = 1.0
    truncation: object = None
    uni_n_range: list = field(default_factory=lambda: [1])
    uni_n_grid: int = 4096
    sigmas: list = field(default_factory=lambda: [-0.05, 0.0, 0.05])
    ly_b_list: list = field(default_factory=lambda: [1.0, 10.0, 100.0])
    ly_n_list: list = field(default_factory=lambda: [1, 2, 4, 8])
    dolgopyat_b_list: list = field(default_factory=lambda: [40.0, 100.0])
    dolgopyat_steps: int = 30
    cone_b_list: list = field(default_factory=lambda: [60.0, 100.0])
    cone_seeds: list = field(default_factory=lambda: [0, 1])
    cone_steps: int = 5
    mc_samples: int = 100000
    t_max_factor: float = 10.0
    t_step_factor: float = 0.125
    laplace_s_list: list = field(default_factory=lambda: [0.3, 0.5, 1.0])
    laplace_terms: int = 40
    laplace_tol: float = 1e-6
    visit_gamma: float = 0.5
    skew_samples: int = 20000
    skew_n_eta: int = 40
    lorenz: tuple = (10.0, 28.0, 8.0 / 3.0)
    residual_tol: float = 1e-9
    echo: dict = field(default_factory=dict, repr=False)

    @classmethod
    def load(cls, conf_rel_file='lab.conf', conf_base_dir=None,
            models_conf=dirs.MODELS_CONF, models_base_dir=None):
        """
        Loads and validates a run conf.

        Args:
          conf_rel_file (str): The run conf file.
          conf_base_dir (str or None): Its dir; None for the repo conf dir.
          models_conf (str): The zoo conf file.
          models_base_dir (str or None): Its dir; None for the repo conf dir.

        Returns:
          (RunConfig): The configuration.

        Raises:
          (LabConfigError): Missing model, a non-positive numeric field, or an
            unparsable value.
        """
        run_cp = config.read_conf_file(conf_rel_file, conf_base_dir)
        try:
            if run_cp.has_section('model'):
                model = zoo.load_model_from_section(run_cp, 'model')
            else:
                model_id = config.get_conf_value(run_cp, 'run', 'model',
                        CastType.STRING)
                model = zoo.get_model(model_id, models_conf, models_base_dir)
        except UnknownModel as ex:
            raise LabConfigError(str(ex)) from ex

        def _val(section, key, cast_type, fallback, positive=True):
            return config.get_conf_value(run_cp, section, key, cast_type,
                    fallback, positive)

        def _list(section, key, cast_type, fallback, positive=True):
            return config.get_conf_list(run_cp, section, key, cast_type,
                    fallback, positive)

        truncation = _val('grid', 'truncation', CastType.INT, 0, False)
        if truncation < 0:
            raise LabConfigError(f'[grid] > truncation must be >= 0:'
                    + f' {truncation}')
        seed = _val('run', 'seed', CastType.INT, 0, False)
        if seed < 0:
            raise LabConfigError(f'[run] > seed must be >= 0: {seed}')

        run_config = cls(
            model=model,
            seed=seed,
            workers=_val('run', 'workers', CastType.INT, 0, False),
            output_dir=_val('run', 'output dir', CastType.STRING, 'output',
                    False),
            n_intervals=_val('grid', 'n intervals', CastType.INT, 1024),
            alpha=_val('grid', 'alpha', CastType.FLOAT, 1.0),
            truncation=truncation if truncation > 0 else None,
            uni_n_range=_list('uni', 'n range', CastType.INT, [1]),
            uni_n_grid=_val('uni', 'n grid', CastType.INT, 4096),
            sigmas=_list('spectrum', 'sigmas', CastType.FLOAT,
                    [-0.05, 0.0, 0.05], False),
            ly_b_list=_list('lasota yorke', 'b list', CastType.FLOAT,
                    [1.0, 10.0, 100.0]),
            ly_n_list=_list('lasota yorke', 'n list', CastType.INT,
                    [1, 2, 4, 8]),
            dolgopyat_b_list=_list('dolgopyat', 'b list', CastType.FLOAT,
                    [40.0, 100.0]),
            dolgopyat_steps=_val('dolgopyat', 'steps', CastType.INT, 30),
            cone_b_list=_list('cone', 'b list', CastType.FLOAT,
                    [60.0, 100.0]),
            cone_seeds=_list('cone', 'seeds', CastType.INT, [0, 1], False),
            cone_steps=_val('cone', 'steps', CastType.INT, 5),
            mc_samples=_val('correlate', 'samples', CastType.INT, 100000),
            t_max_factor=_val('correlate', 't max factor', CastType.FLOAT,
                    10.0),
            t_step_factor=_val('correlate', 't step factor', CastType.FLOAT,
                    0.125),
            laplace_s_list=_list('laplace', 's list', CastType.FLOAT,
                    [0.3, 0.5, 1.0], False),
            laplace_terms=_val('laplace', 'n terms', CastType.INT, 40),
            laplace_tol=_val('laplace', 'tol', CastType.FLOAT, 1e-6),
            visit_gamma=_val('visits', 'gamma', CastType.FLOAT, 0.5),
            skew_samples=_val('skew', 'samples', CastType.INT, 20000),
            skew_n_eta=_val('skew', 'n eta', CastType.INT, 40),
            lorenz=(_val('lorenz', 'sigma', CastType.FLOAT, 10.0),
                    _val('lorenz', 'rho', CastType.FLOAT, 28.0),
                    _val('lorenz', 'beta', CastType.FLOAT, 8.0 / 3.0)),
            residual_tol=_val('tolerances', 'residual', CastType.FLOAT, 1e-9),
            echo={s: dict(run_cp[s]) for s in run_cp.sections()},
        )
        if any(s.real <= -0.5 * run_config.model.roof.epsilon \
                for s in run_config.laplace_s_list):
            raise LabConfigError('[laplace] > s list must have Re s > -eps/2')
        if not 0.0 < run_config.visit_gamma < 1.0:
            raise LabConfigError('[visits] > gamma must be in (0,1)')
        logger.info(f'Loaded run config {conf_rel_file} for model'
                + f' {run_config.model.name!r}')
        return run_config



    def with_overrides(self, seed=None, output_dir=None, workers=None):
        """
        Applies command line overrides.

        Args:
          seed (int or None): A new seed.
          output_dir (str or None): A new output dir.
          workers (int or None): A new worker count.

        Returns:
          (RunConfig): self, updated in place.
        """
        if seed is not None:
            if seed < 0:
                raise LabConfigError(f'Seed must be >= 0: {seed}')
            self.seed = seed
            self.echo.setdefault('run', {})['seed'] = str(seed)
        if output_dir is not None:
            self.output_dir = output_dir
            self.echo.setdefault('run', {})['output dir'] = output_dir
        if workers is not None:
            self.workers = workers
        return self



    def t_grid(self, r_bar):
        """
        Args:
          r_bar (float): int R dmu.

        Returns:
          ([float]): [0, t_max_factor R_bar] at spacing t_step_factor R_bar.
        """
        n_steps = int(round(self.t_max_factor / self.t_step_factor))
        return [k * self.t_step_factor * r_bar for k in range(n_steps + 1)]
