#!/usr/bin/env python3
"""
Tests the mixing_lab.suspension.laplace functionality.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import math

import numpy as np
import pytest
from scipy import integrate

from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.suspension import correlation
from mixing_lab.suspension import laplace
from mixing_lab.suspension import semiflow
from mixing_lab.suspension.observables import Observable



def _cos_obs():
    return Observable.from_base(lambda y: np.cos(2 * np.pi * y), 1.0)



def test_laplace_rho_constant_roof(dc_system):
    """
    Tests the transform of (2 - t)/4 on [0, 2], which is
    (2/s - (1 - e^{-2s})/s^2)/4, equal to e^{-1} at s = 1/2.
    """
    cos = _cos_obs()
    res = laplace.laplace_rho(dc_system, cos, cos, 0.5)
    assert res.value.real == pytest.approx(math.exp(-1.0), abs=1e-5)
    assert abs(res.value.imag) < 1e-5
    assert res.j0 == pytest.approx(res.value, abs=1e-5)
    assert len(res.terms) == 40
    assert res.last_term <= 1e-6
    assert abs(res.j0) <= res.bound

    s = 1.0 + 2.0j
    res = laplace.laplace_rho(dc_system, cos, cos, s)
    expected = 0.25 * (2 / s - (1 - np.exp(-2 * s)) / s ** 2)
    assert res.value == pytest.approx(expected, abs=1e-5)

    as_dict = res.to_dict()
    assert as_dict['s_im'] == 2.0
    assert as_dict['n_terms'] == 40



def test_laplace_rho_not_settled(dq_system):
    """
    Tests that a series cut too early is rejected.
    """
    ident = Observable.from_base(lambda y: y, 1.0)
    with pytest.raises(SeriesNotSettled):
        laplace.laplace_rho(dq_system, ident, ident, 0.5, n_terms=1, tol=0.0)



def test_transform_curve(dc_system):
    """
    Tests the trapezoid transform of a series curve against the exact value.
    """
    cos = _cos_obs()
    curve = correlation.correlation_series_curve(dc_system, cos, cos,
            np.linspace(0.0, 4.0, 81))
    assert laplace.transform_curve(curve, 0.5).real \
            == pytest.approx(math.exp(-1.0), abs=1e-3)



def test_laplace_rho_matches_direct(dq_system):
    """
    Tests the series transform against the transform of the sampled curve on
    the quadratic roof, within three integrated standard errors.
    """
    cos = _cos_obs()
    t_grid = np.linspace(0.0, 12.0, 97)
    sample = semiflow.sample_muR(dq_system.exp_map, dq_system.roof,
            dq_system.density, 20000, seed=2)
    direct = correlation.correlation_direct(dq_system.exp_map,
            dq_system.roof, cos, cos, t_grid, sample, workers=2)
    for s in (0.5, 1.0):
        series = laplace.laplace_rho(dq_system, cos, cos, s)
        numeric = laplace.transform_curve(direct, s)
        se = integrate.trapezoid(np.exp(-s * t_grid) * direct.se, t_grid)
        assert abs(series.value - numeric) <= 3.0 * se + 2e-3
