#!/usr/bin/env python3
"""
Tests the mixing_lab.transfer.lasota_yorke functionality.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import numpy as np
import pytest

from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.transfer import lasota_yorke
from mixing_lab.transfer.grid import GridFunction



def test_default_ly_samples():
    """
    Tests the suite size and that it is reproducible from its seed.
    """
    samples = lasota_yorke.default_ly_samples(64, 10.0, seed=3)
    assert len(samples) == 4
    assert np.all(samples[0].values == 1.0)
    np.testing.assert_allclose(samples[1].values,
            np.exp(10.0j * samples[1].nodes))

    again = lasota_yorke.default_ly_samples(64, 10.0, seed=3)
    np.testing.assert_array_equal(samples[2].values, again[2].values)
    other = lasota_yorke.default_ly_samples(64, 10.0, seed=4)
    assert not np.array_equal(samples[2].values, other[2].values)

    assert len(lasota_yorke.default_ly_samples(64, 0.0)) == 3



def test_ly_report(dq_spectral0):
    """
    Tests that C3 is the largest ratio and that the norm bound holds.
    """
    report = lasota_yorke.ly_report(dq_spectral0, [20.0j, 40.0j], [1, 2, 4])
    assert len(report.rows) == 2 * 4 * 3
    frame = report.to_frame()
    assert list(frame.columns) == ['sigma', 'b', 'n', 'sample', 'norm_b',
            'ratio']
    assert report.c3 == pytest.approx(frame['ratio'].max())
    assert report.c3 > 0
    assert report.bound_ok
    assert set(frame['n']) == {1, 2, 4}



def test_ly_report_small_c3(dq_spectral0):
    """
    Tests that the norm bound is floored at 2 when the measured C3 is below 1:
    the constant is fixed by L_0 and has no Holder part at all.
    """
    one = [GridFunction.constant(1.0, dq_spectral0.n_intervals)]
    report = lasota_yorke.ly_report(dq_spectral0, [0.0], [1, 2], samples=one)
    assert report.c3 == pytest.approx(0.0, abs=1e-9)
    assert report.bound_ok
    np.testing.assert_allclose(report.to_frame()['norm_b'], 1.0, atol=1e-9)



def test_ly_report_mismatch(dq_spectral0):
    """
    Tests that twists off the spectral sigma are refused.
    """
    with pytest.raises(SpectralMismatch):
        lasota_yorke.ly_report(dq_spectral0, [0.2 + 20.0j], [1])
