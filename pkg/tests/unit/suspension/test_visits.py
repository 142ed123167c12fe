#!/usr/bin/env python3
"""
Tests the mixing_lab.suspension.visits functionality.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import numpy as np
import pytest

from mixing_lab.suspension import visits



def _exact_constant_roof(gamma, t):
    k, r = divmod(t, 2.0)
    return (gamma ** k * (2.0 - r) + gamma ** (k + 1) * r) / 2.0



def test_visit_moment_at(dc_system):
    """
    Tests the moment over the constant roof 2 against its closed form.
    """
    assert visits.visit_moment_at(dc_system, 0.5, 0.0) == pytest.approx(1.0)
    assert visits.visit_moment_at(dc_system, 0.5, 3.0) \
            == pytest.approx(0.375)
    for t in [0.5, 2.0, 4.7, 9.1]:
        assert visits.visit_moment_at(dc_system, 0.3, t) \
                == pytest.approx(_exact_constant_roof(0.3, t), abs=1e-9)



def test_visit_moment(dc_system, dq_system):
    """
    Tests the curve and its fitted rate, log(1/gamma)/2 for the constant roof.
    """
    t_grid = np.linspace(0.0, 20.0, 41)
    curve = visits.visit_moment(dc_system, 0.5, t_grid)
    assert curve.method == 'visits'
    assert np.all(np.diff(curve.estimate) <= 1e-12)
    assert curve.fit.rate == pytest.approx(np.log(2.0) / 2.0, rel=0.05)

    curve = visits.visit_moment(dq_system, 0.5, t_grid[:5], fit=False)
    assert curve.fit is None
    assert curve.estimate[0] == pytest.approx(1.0)

    with pytest.raises(AssertionError):
        visits.visit_moment(dc_system, 1.0, t_grid)
