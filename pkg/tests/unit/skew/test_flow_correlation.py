#!/usr/bin/env python3
"""
Tests the mixing_lab.skew.flow_correlation functionality.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import numpy as np
import pytest

from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.skew import flow_correlation
from mixing_lab.skew.disintegration import SkewObservable



@pytest.fixture(name='skew_sample', scope='module')
def fixture_skew_sample(dq_model, dq_spectral0):
    """
    Returns:
      (SkewSample): 4096 points of mu_X^R.
    """
    return flow_correlation.sample_muXR(dq_model.skew, dq_model.roof,
            dq_spectral0, 4096, seed=2)



def test_burn_in_steps():
    """
    Tests the burn-in length.
    """
    assert flow_correlation.burn_in_steps(0.5) == 34
    assert flow_correlation.burn_in_steps(0.1, 1e-3) == 3
    with pytest.raises(AssertionError):
        flow_correlation.burn_in_steps(1.0)



def test_sample_muXR(dq_model, dq_spectral0, skew_sample):
    """
    Tests the fiber coordinate against the fiber mean (y + 1)/6 and the
    independence from the worker count.
    """
    assert len(skew_sample) == 4096
    assert np.all((skew_sample.z >= 0) & (skew_sample.z <= 1))
    assert np.all(skew_sample.u < dq_model.roof.value(skew_sample.y))
    assert np.mean(skew_sample.z - (skew_sample.y + 1) / 6) \
            == pytest.approx(0.0, abs=0.01)

    threaded = flow_correlation.sample_muXR(dq_model.skew, dq_model.roof,
            dq_spectral0, 4096, seed=2, workers=4)
    np.testing.assert_array_equal(skew_sample.z, threaded.z)



def test_flow_skew_arrays(dq_model):
    """
    Tests one roof crossing and the boundary check.
    """
    y, z, u, visits = flow_correlation.flow_skew_arrays(dq_model.skew,
            dq_model.roof, np.array([0.3]), np.array([0.0]), np.array([0.5]),
            2.0)
    assert visits[0] == 1
    assert y[0] == pytest.approx(0.6)
    assert z[0] == pytest.approx(0.075)
    assert u[0] == pytest.approx(2.5 - 2.045)

    with pytest.raises(OrbitHitsBoundary):
        flow_correlation.flow_skew_arrays(dq_model.skew, dq_model.roof,
                np.array([0.5]), np.array([0.0]), np.array([2.0]), 1.0)



def test_flow_correlation(dq_model, dq_system, skew_sample):
    """
    Tests the skew correlation and its split for observables that do not see
    the fiber, where I1 vanishes.
    """
    cos = SkewObservable(lambda y, z, u: np.cos(2 * np.pi * y) + 0.0 * z,
            1.0, 2 * np.pi, 'cos')
    t_grid = np.array([0.0, 1.0, 2.0])
    curve, report = flow_correlation.flow_correlation(dq_model.skew,
            dq_system, cos, cos, t_grid, skew_sample, n_eta=20, n_split=256)
    assert curve.method == 'skew'
    assert curve.estimate[0] > 0
    assert np.all(curve.se > 0)
    assert report.below_envelope
    frame = report.to_frame()
    assert list(frame['t']) == [0.0, 0.5, 1.0]
    assert np.all(frame['i1_abs'] <= frame['envelope'] + 3 * frame['i1_se']
            + 1e-12)

    curve, report = flow_correlation.flow_correlation(dq_model.skew,
            dq_system, cos, cos, t_grid, skew_sample, split=False)
    assert report is None
    assert len(curve.t) == 3
