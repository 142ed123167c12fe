#!/usr/bin/env python3
"""
The command line driver.  Every pipeline is a subcommand; each run writes a
JSON summary (with a `schema_version`, the seed and the conf echo) and CSV
tables (headed by a `#` line holding the same echo) to the output dir.

Exit codes: 0 when every check passed, 1 when a check failed or a pipeline
raised a domain error (details in the JSON summary), 2 for an invalid config.

Module Attributes:
  logger (Logger): Logger for this module.
  SUBCOMMANDS ((str)): The subcommand names.
  EXIT_OK (int): Exit code for success.
  EXIT_CHECK_FAILED (int): Exit code for a failed check.
  EXIT_BAD_CONFIG (int): Exit code for an invalid config.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import argparse
import json
import logging
import os.path
import sys

import numpy as np
import pandas as pd
from scipy import integrate

from mixing_lab import run_config as run_config_mod
from mixing_lab.applications import lorenz
from mixing_lab.cone import chi as chi_mod
from mixing_lab.cone import cone as cone_mod
from mixing_lab.cone import contraction
from mixing_lab.dynamics import conditions
from mixing_lab.general import config, dirs
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.skew import disintegration, flow_correlation, skew_map
from mixing_lab.suspension import correlation, laplace, observables, semiflow
from mixing_lab.suspension import visits
from mixing_lab.suspension.system import SuspensionSystem
from mixing_lab.transfer import dolgopyat, lasota_yorke, operators, spectrum
from mixing_lab.transfer.grid import GridFunction
from mixing_lab.uni import ledger as ledger_mod
from mixing_lab.uni import scan



if __name__ == '__main__':                                  # Ignored by CodeCov
    # Since no unit testing here, code kept at absolute minimum
    logger = logging.getLogger('mixing_lab.lab_main')
else:
    logger = logging.getLogger(__name__)

SUBCOMMANDS = ('check', 'uni', 'spectrum', 'dolgopyat', 'cone', 'correlate',
        'laplace', 'skew', 'lorenz')

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_CONFIG = 2

_ADMISSIBLE_SPAN = 5
_SKEW_TOL = 1e-3



def _json_default(obj):
    """
    Converts numpy scalars/arrays and complex numbers for `json.dumps()`.
    """
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f'Not JSON serializable: {type(obj)}')



def _echo_header(run_config):
    return {'schema_version': run_config_mod.SCHEMA_VERSION,
            'seed': run_config.seed, 'model': run_config.model.name,
            'config': run_config.echo}



def write_json(out_dir, name, payload):
    """
    Writes a JSON artifact with sorted keys.

    Args:
      out_dir (str): The output dir, created if missing.
      name (str): The file stem.
      payload ({str: *}): The content.

    Returns:
      (str): The path written.
    """
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f'{name}.json')
    with open(path, 'w', encoding='utf-8') as json_file:
        json_file.write(json.dumps(payload, sort_keys=True, indent=2,
                default=_json_default) + '\n')
    logger.info(f'Wrote {path}')
    return path



def write_csv(out_dir, name, frame, run_config):
    """
    Writes a CSV artifact headed by a `#` line holding the config echo.

    Args:
      out_dir (str): The output dir, created if missing.
      name (str): The file stem.
      frame (DataFrame): The table.
      run_config (RunConfig): Supplies the echo.

    Returns:
      (str): The path written.
    """
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f'{name}.csv')
    header = json.dumps(_echo_header(run_config), sort_keys=True,
            default=_json_default)
    with open(path, 'w', encoding='utf-8', newline='') as csv_file:
        csv_file.write(f'# {header}\n')
        frame.to_csv(csv_file, index=False, float_format='%.17g')
    logger.info(f'Wrote {path}')
    return path



def _spectral0(run_config):
    model = run_config.model
    return spectrum.leading_spectrum(model.exp_map, model.roof, 0.0,
            run_config.n_intervals, residual_tol=run_config.residual_tol)



def _witness_and_ledger(run_config, spectral0, c3=None):
    """
    Scans for a UNI witness and builds the ledger on it.  Without a witness
    the ledger is built on a nominal pair and the caller runs as a negative
    control.

    Returns:
      (UNIWitness): The witness, `nominal` if none was found.
      (ConstantsLedger): The ledger.
    """
    model = run_config.model
    witness = scan.uni_scan(model.exp_map, model.roof, run_config.uni_n_range,
            n_grid=run_config.uni_n_grid, truncation=run_config.truncation,
            workers=run_config.workers)
    if witness is None:
        logger.warning(f'No UNI witness for {model.name!r}; running as a'
                + ' negative control')
        witness = scan.nominal_witness(model.exp_map, model.roof,
                min(run_config.uni_n_range), n_grid=run_config.uni_n_grid,
                truncation=run_config.truncation)
    return witness, ledger_mod.build_ledger(model.exp_map, model.roof,
            spectral0, witness, c3=c3, n_grid=run_config.uni_n_grid)



def _ly_report(run_config, spectral0):
    return lasota_yorke.ly_report(spectral0,
            [complex(0.0, b) for b in run_config.ly_b_list],
            run_config.ly_n_list, seed=run_config.seed)



def _cos_observable():
    return observables.Observable.from_base(
            lambda y: np.cos(2.0 * np.pi * y), 1.0, 2.0 * np.pi, 'cos')



def run_check(run_config):
    """
    Runs `verify_conditions()` on the model.

    Returns:
      (bool): Whether every condition holds.
      ({str: *}): The summary.
    """
    model = run_config.model
    report = conditions.verify_conditions(model.exp_map, model.roof,
            n_grid=run_config.n_intervals, truncation=run_config.truncation)
    return report.passed, {'conditions': report.to_dict()}



def run_uni(run_config):
    """
    Finds a UNI witness, builds the ledger with the measured C3, and reports the
    admissibility of n0 over a window of lengths.
    """
    model = run_config.model
    spectral0 = _spectral0(run_config)
    ly = _ly_report(run_config, spectral0)
    write_csv(run_config.output_dir, 'uni_lasota_yorke', ly.to_frame(),
            run_config)
    witness = scan.uni_scan(model.exp_map, model.roof, run_config.uni_n_range,
            n_grid=run_config.uni_n_grid, truncation=run_config.truncation,
            workers=run_config.workers)
    if witness is None:
        logger.warning(f'No UNI witness for {model.name!r}')
        return False, {'witness': None, 'c3': ly.c3,
                'ly_bound_ok': ly.bound_ok}

    ledger = ledger_mod.build_ledger(model.exp_map, model.roof, spectral0,
            witness, c3=ly.c3, n_grid=run_config.uni_n_grid)
    first = ledger_mod.n0_admissible(ledger, witness.n0)
    start = first.smallest_admissible
    window = [ledger_mod.n0_admissible(ledger, n) \
            for n in range(start, start + _ADMISSIBLE_SPAN + 1)]
    monotone = all(report.passed for report in window)
    admissibility = [{'n0': r.n0, 'large1': r.large1, 'large2': r.large2,
            'large3': r.large3, 'c4_vs_c3': r.c4_vs_c3,
            'passed': r.passed} for r in [first] + window]
    summary = {
        'witness': witness.to_dict(),
        'd': witness.d,
        'ledger': ledger.to_dict(),
        'c3': ly.c3,
        'ly_bound_ok': ly.bound_ok,
        'smallest_admissible': start,
        'admissibility': admissibility,
        'admissibility_monotone': monotone,
    }
    return ly.bound_ok and monotone, summary



def run_spectrum(run_config):
    """
    Sweeps the leading eigenpair over sigma and probes the aperiodicity of the
    imaginary twists.
    """
    model = run_config.model
    spectral0 = _spectral0(run_config)
    rows = []
    epsilon = ledger_mod.twist_epsilon(model.roof)
    for sigma in run_config.sigmas:
        data = spectrum.leading_spectrum(model.exp_map, model.roof, sigma,
                run_config.n_intervals, epsilon=epsilon,
                reference=spectral0, residual_tol=run_config.residual_tol)
        rows.append({'sigma': sigma, 'eigenvalue': data.eigenvalue,
                'residual': data.residual, 'iterations': data.iterations,
                'density_min': float(np.min(np.real(data.density.values))),
                'density_max': float(np.max(np.real(data.density.values)))})
    write_csv(run_config.output_dir, 'spectrum', pd.DataFrame(rows,
            columns=['sigma', 'eigenvalue', 'residual', 'iterations',
            'density_min', 'density_max']), run_config)
    radii = {str(b): spectrum.twisted_spectral_radius(spectral0, b) \
            for b in run_config.ly_b_list}
    eigen_ok = abs(spectral0.eigenvalue - 1.0) <= 1e-10
    return eigen_ok, {'lambda0': spectral0.eigenvalue,
            'lambda0_ok': eigen_ok, 'sweep': rows,
            'twisted_spectral_radius': radii,
            'aperiodic': all(r < 1.0 for r in radii.values())}



def run_dolgopyat(run_config):
    """
    Fits the decay rate of ||L_{ib}^n v||_b per frequency.  Without a UNI
    witness the probe runs on a nominal pair as a negative control: the rates
    are reported and nothing is asserted.
    """
    spectral0 = _spectral0(run_config)
    witness, ledger = _witness_and_ledger(run_config, spectral0)
    report = dolgopyat.dolgopyat_probe(spectral0, ledger,
            run_config.dolgopyat_b_list, steps=run_config.dolgopyat_steps,
            seed=run_config.seed)
    write_csv(run_config.output_dir, 'dolgopyat', report.to_frame(),
            run_config)
    return report.passed or witness.nominal, {'gamma': report.gamma,
            'gamma_by_b': {str(b): g for b, g in report.gamma_by_b.items()},
            'below_threshold': report.below_threshold,
            'gamma_below_one': report.passed,
            'negative_control': witness.nominal}



def _cone_row(run_config, b, seed, ledger, witness, spectral0):
    s = complex(0.0, b)
    pair = cone_mod.sample_cone(b, ledger, seed,
            n_intervals=run_config.n_intervals)
    chi = chi_mod.build_chi(b, pair, ledger, witness, spectral0)
    cancel = contraction.cancellation_check(s, pair, chi, spectral0,
            witness.n0)
    weight = GridFunction.constant(1.0, pair.u.n_intervals, ledger.alpha)
    fed = contraction.fed_ratio(weight, chi, ledger.k_fed, spectral0, ledger)
    iteration = contraction.cone_iterate(s, pair, run_config.cone_steps,
            ledger, witness, spectral0)
    frame = iteration.to_frame()
    frame.insert(0, 'seed', seed)
    frame.insert(0, 'b', b)
    ok = cancel.passed and fed.passed and fed.diam_ok \
            and iteration.beta_hat is not None and iteration.beta_hat < 1.0
    return {'b': b, 'seed': seed, 'beta_hat': iteration.beta_hat,
            'cancellation_margin': cancel.margin, 'fed_ratio': fed.ratio,
            'fed_diam_ok': fed.diam_ok, 'chi': chi.to_dict(),
            'passed': ok}, frame



def run_cone(run_config):
    """
    For every (b, seed): samples a cone pair, builds chi, checks the
    cancellation inequality and the middle-third ratio, and iterates the pair.
    The iteration runs at the witness length n0; whether n0 meets the
    largeness conditions (with the measured C3) is reported alongside.

    Without a UNI witness the pipeline runs on a nominal pair as a negative
    control: a pair whose construction fails is reported with its error, and
    no beta_hat < 1 is asserted.
    """
    spectral0 = _spectral0(run_config)
    ly = _ly_report(run_config, spectral0)
    witness, ledger = _witness_and_ledger(run_config, spectral0, c3=ly.c3)
    admissible = ledger_mod.n0_admissible(ledger, witness.n0)
    rows = []
    frames = []
    passed = True
    for b in run_config.cone_b_list:
        for seed in run_config.cone_seeds:
            try:
                row, frame = _cone_row(run_config, b, seed, ledger, witness,
                        spectral0)
            except (ChiSlopeExceeded, ConeEscape, NoCaseWins,
                    PreconditionViolated) as ex:
                if not witness.nominal:
                    raise
                logger.info(f'Negative control b={b}, seed={seed}:'
                        + f' {type(ex).__name__}')
                rows.append({'b': b, 'seed': seed, 'beta_hat': None,
                        'error': type(ex).__name__, 'passed': False})
                continue
            frames.append(frame)
            passed = passed and row['passed']
            rows.append(row)
    if frames:
        write_csv(run_config.output_dir, 'cone', pd.concat(frames,
                ignore_index=True), run_config)
    summary = {
        'pairs': rows,
        'ledger': ledger.to_dict(),
        'n0': witness.n0,
        'n0_admissible': admissible.passed,
        'smallest_admissible': admissible.smallest_admissible,
        'c3': ly.c3,
        'negative_control': witness.nominal,
    }
    return passed or witness.nominal, summary



def _direct_curve(run_config, system, v, w, t_grid):
    model = run_config.model
    sample = semiflow.sample_muR(model.exp_map, model.roof, system.density,
            run_config.mc_samples, run_config.seed, run_config.workers)
    return correlation.correlation_direct(model.exp_map, model.roof, v, w,
            t_grid, sample, run_config.workers)



def _try_fit(curve):
    try:
        return correlation.decay_fit(curve).to_dict()
    except WindowTooShort as ex:
        logger.warning(f'No decay fit for {curve.method}: {ex}')
        return None



def run_correlate(run_config):
    """
    Cross-validates the direct and series correlation curves, fits their decay,
    and evaluates the visit moment.
    """
    model = run_config.model
    system = SuspensionSystem.build(model.exp_map, model.roof,
            run_config.n_intervals)
    t_grid = run_config.t_grid(system.r_bar)
    v = _cos_observable()
    direct = _direct_curve(run_config, system, v, v, t_grid)
    series = correlation.correlation_series_curve(system, v, v, t_grid)
    moment = visits.visit_moment(system, run_config.visit_gamma, t_grid,
            fit=False)
    fits = {curve.method: _try_fit(curve) for curve in (direct, series,
            moment)}
    gap = np.abs(direct.estimate - series.estimate)
    agree = bool(np.all(gap <= 3.0 * direct.se + 1e-12))
    write_csv(run_config.output_dir, 'correlate', pd.concat([c.to_frame() \
            for c in (direct, series, moment)], ignore_index=True), run_config)
    series_fit = fits['series']
    decay_ok = series_fit is not None and series_fit['c'] > 0
    return agree and decay_ok, {'r_bar': system.r_bar, 'fits': fits,
            'agree_within_3se': agree, 'max_gap': float(np.max(gap)),
            'n_samples': run_config.mc_samples}



def run_laplace(run_config):
    """
    Compares the series transform with the transform of the direct curve.
    """
    model = run_config.model
    system = SuspensionSystem.build(model.exp_map, model.roof,
            run_config.n_intervals)
    t_grid = run_config.t_grid(system.r_bar)
    v = _cos_observable()
    direct = _direct_curve(run_config, system, v, v, t_grid)
    rows = []
    passed = True
    for s in run_config.laplace_s_list:
        result = laplace.laplace_rho(system, v, v, s,
                run_config.laplace_terms, run_config.laplace_tol)
        numeric = laplace.transform_curve(direct, s)
        se = float(integrate.trapezoid(np.exp(-s * direct.t) * direct.se,
                direct.t))
        tol = run_config.laplace_tol + 3.0 * se
        ok = abs(result.value - numeric) <= tol
        passed = passed and ok
        row = result.to_dict()
        row.update({'direct_re': numeric.real, 'direct_im': numeric.imag,
                'tolerance': tol, 'consistent': ok})
        rows.append(row)
    write_csv(run_config.output_dir, 'laplace', pd.DataFrame(rows),
            run_config)
    return passed, {'rows': rows}



def run_skew(run_config):
    """
    Measures the fiber contraction, checks the fiber laws and the
    disintegration identity, and estimates the flow correlation with its
    I1/I2 split.
    """
    model = run_config.model
    skew = model.skew
    if skew is None:
        raise LabConfigError(f'Model {model.name!r} has no fiber map')
    report = skew_map.contraction_check(skew, seed=run_config.seed,
            require=False)
    summary = {'contraction': report.to_dict()}
    if not report.degenerate and report.gamma0 >= 1.0:
        logger.warning(f'Fibers of {model.name!r} do not contract')
        return False, summary

    system = SuspensionSystem.build(model.exp_map, model.roof,
            run_config.n_intervals)
    spectral0 = system.spectral0
    gamma0 = 0.5 if report.degenerate else report.gamma0

    def _one(y, z):
        return np.ones(np.broadcast_shapes(np.shape(y), np.shape(z)))

    def _v_x(y, z):
        return np.cos(2.0 * np.pi * y) + z

    eta_one = disintegration.eta_average(skew, _one, np.linspace(0, 1, 9),
            run_config.skew_n_eta, spectral0)
    eta_error = float(np.max(np.abs(eta_one.value - 1.0)))
    holder = 2.0 * np.pi + 1.0
    bracket = disintegration.muX_integral(skew, _v_x, run_config.skew_n_eta,
            system.quadrature, contraction=None if report.degenerate \
            else report, v_holder=holder)
    v_bar = disintegration.eta_average(skew, _v_x, [0.5],
            run_config.skew_n_eta, spectral0).v_bar
    mu_v_bar = float(np.real(operators.mu_integral(v_bar, spectral0)))
    identity_gap = abs(bracket.value - mu_v_bar)
    identity_ok = identity_gap \
            <= 0.5 * (bracket.upper - bracket.lower) + _SKEW_TOL

    obs = disintegration.SkewObservable(lambda y, z, u: _v_x(y, z), 2.0,
            holder, 'cos+z')
    sample = flow_correlation.sample_muXR(skew, model.roof, spectral0,
            run_config.skew_samples, run_config.seed, gamma0,
            run_config.workers)
    t_grid = run_config.t_grid(system.r_bar)
    curve, split = flow_correlation.flow_correlation(skew, system, obs, obs,
            t_grid, sample, contraction=None if report.degenerate else report,
            n_eta=run_config.skew_n_eta, workers=run_config.workers)
    write_csv(run_config.output_dir, 'skew_correlation', curve.to_frame(),
            run_config)
    write_csv(run_config.output_dir, 'skew_split', split.to_frame(),
            run_config)
    summary.update({
        'eta_one_error': eta_error,
        'disintegration': {'lower': bracket.lower, 'upper': bracket.upper,
                'muX': bracket.value, 'mu_v_bar': mu_v_bar,
                'gap': identity_gap, 'ok': identity_ok},
        'i1_below_envelope': split.below_envelope,
    })
    passed = eta_error <= 1e-10 and identity_ok and split.below_envelope
    return passed, summary



def run_lorenz(run_config):
    """
    The equilibrium spectrum of the configured Lorenz parameters.
    """
    result = lorenz.lorenz_spectrum(*run_config.lorenz)
    return result.lorenz_like_ordering and result.strong_dissipativity, \
            {'spectrum': result.to_dict()}



_RUNNERS = {
    'check': run_check,
    'uni': run_uni,
    'spectrum': run_spectrum,
    'dolgopyat': run_dolgopyat,
    'cone': run_cone,
    'correlate': run_correlate,
    'laplace': run_laplace,
    'skew': run_skew,
    'lorenz': run_lorenz,
}



def run(subcommand, run_config):
    """
    Runs one subcommand and writes its JSON summary.

    Args:
      subcommand (str): One of SUBCOMMANDS.
      run_config (RunConfig): The configuration.

    Returns:
      (int): The exit code.
    """
    assert subcommand in _RUNNERS, f'Unknown subcommand {subcommand!r}'
    payload = _echo_header(run_config)
    payload['subcommand'] = subcommand
    try:
        passed, summary = _RUNNERS[subcommand](run_config)
    except LabConfigError as ex:
        logger.critical(f'{subcommand}: invalid config: {ex}')
        return EXIT_BAD_CONFIG
    except MixingLabError as ex:
        logger.error(f'{subcommand} failed: {type(ex).__name__}: {ex}')
        passed = False
        summary = {'error': {'type': type(ex).__name__, 'message': str(ex)}}
    payload['passed'] = passed
    payload['result'] = summary
    write_json(run_config.output_dir, subcommand, payload)
    return EXIT_OK if passed else EXIT_CHECK_FAILED



def build_parser():
    """
    Returns:
      (ArgumentParser): The command line parser.
    """
    parser = argparse.ArgumentParser(prog='mixing_lab',
            description='Numerical checks of exponential mixing for'
            + ' suspension semiflows over expanding maps.')
    parser.add_argument('subcommand', choices=SUBCOMMANDS)
    parser.add_argument('--config', default='lab.conf',
            help='Run conf file; bare names are looked up in config/.')
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--out', default=None, help='Output dir.')
    parser.add_argument('--workers', type=int, default=None,
            help='Worker count; 0 for all cores.')
    parser.add_argument('--log-level', default=None,
            help='Root log level override (e.g. debug, info, all).')
    return parser



def main(argv=None):
    """
    Parses the command line, loads the config and runs the subcommand.

    Args:
      argv ([str] or None): The arguments; None for sys.argv.

    Returns:
      (int): The exit code.
    """
    args = build_parser().parse_args(argv)
    config.init_logger(args.log_level)
    conf_dir, conf_file = os.path.split(args.config)
    try:
        run_config = run_config_mod.RunConfig.load(conf_file,
                conf_dir or None)
        run_config.with_overrides(args.seed, args.out, args.workers)
    except LabConfigError as ex:
        logger.critical(f'Invalid config {args.config}: {ex}')
        return EXIT_BAD_CONFIG
    run_config.output_dir = dirs.resolve_output_dir(run_config.output_dir)
    return run(args.subcommand, run_config)



if __name__ == '__main__':                                  # Ignored by CodeCov
    # Since no unit testing here, code kept at absolute minimum
    sys.exit(main())
