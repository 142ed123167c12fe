#!/usr/bin/env python3
"""
Tests the mixing_lab.dynamics map classes (full-branch and Luroth).

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import configparser

import numpy as np
import pytest

from mixing_lab.dynamics.full_branch import FullBranchMap
from mixing_lab.dynamics.luroth import LurothMap
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



def _map_cp(body):
    """
    Builds a model conf parser with a single [test-model] section.
    """
    model_cp = configparser.ConfigParser()
    model_cp.read_string('[test-model]\n' + body)
    return model_cp



def test_full_branch_inverse_and_forward():
    """
    Tests that every inverse branch lands in its interval and is undone by the
    forward map.
    """
    exp_map = FullBranchMap(3, map_id='test', alpha=1.0, c1=1.0,
            rho0=1.0 / 3.0)
    y = np.linspace(0.05, 0.95, 7)
    for m in range(3):
        left, right = exp_map.branch_interval(m)
        pre = exp_map.inverse(m, y)
        assert np.all(pre >= left) and np.all(pre <= right)
        np.testing.assert_allclose(exp_map.forward(pre), y, atol=1e-14)
        np.testing.assert_allclose(exp_map.inverse_derivative(m, y), 1.0 / 3)
        assert np.all(exp_map.branch_index(pre) == m)

    np.testing.assert_allclose(exp_map.interior_endpoints(), [1 / 3, 2 / 3])
    assert exp_map.n_usable_branches == 3
    assert exp_map.tail_bound(1.0) == 0.0
    np.testing.assert_allclose(exp_map.branch_sizes(), [1 / 3] * 3)
    assert exp_map.rho == pytest.approx(1.0 / 3.0)



def test_full_branch_boundary():
    """
    Tests `is_near_boundary()` on interior endpoints only.
    """
    exp_map = FullBranchMap(2, map_id='test', alpha=1.0, c1=1.0, rho0=0.5)
    assert exp_map.is_near_boundary(0.5)
    assert exp_map.is_near_boundary(0.5 + 1e-14)
    assert not exp_map.is_near_boundary(0.0)
    assert not exp_map.is_near_boundary(1.0)
    assert not exp_map.is_near_boundary(0.25)



def test_full_branch_load_from_config():
    """
    Tests `FullBranchMap.load_from_config()`.
    """
    model_cp = _map_cp('map = doubling\nalpha = 1.0\nc1 = 1.0\nrho0 = 0.5\n')
    exp_map = FullBranchMap.load_from_config(model_cp, 'test-model')
    assert exp_map.branch_count == 2
    assert exp_map.map_id == 'test-model'
    assert exp_map.c1 == 1.0

    model_cp = _map_cp('map = full-branch\nbranches = 5\nalpha = 1.0\n'
            + 'c1 = 1.0\nrho0 = 0.2\n')
    assert FullBranchMap.load_from_config(model_cp, 'test-model') \
            .branch_count == 5

    model_cp = _map_cp('map = full-branch\nalpha = 1.0\nc1 = 1.0\n'
            + 'rho0 = 0.2\n')
    with pytest.raises(LabConfigError):
        FullBranchMap.load_from_config(model_cp, 'test-model')

    assert 'doubling' in FullBranchMap.get_map_names()



def test_luroth():
    """
    Tests the Luroth branches, the tail bound and the accumulation point at 0.
    """
    exp_map = LurothMap(map_id='test', alpha=1.0, c1=1.0, rho0=0.5,
            truncation=8)
    assert exp_map.branch_count is None
    assert exp_map.n_usable_branches == 8

    assert exp_map.branch_interval(0) == (0.5, 1.0)
    assert exp_map.branch_interval(1) == (1.0 / 3.0, 0.5)
    y = np.array([0.1, 0.4, 0.7])
    for m in range(8):
        pre = exp_map.inverse(m, y)
        np.testing.assert_allclose(exp_map.forward(pre), y, atol=1e-12)
        assert np.all(exp_map.branch_index(pre) == m)
        np.testing.assert_allclose(exp_map.inverse_derivative(m, y),
                1.0 / ((m + 1) * (m + 2)))

    assert exp_map.tail_bound(1.0) == pytest.approx(1.0 / 9.0)
    assert exp_map.is_near_boundary(0.0)
    assert exp_map.is_near_boundary(0.5)
    assert not exp_map.is_near_boundary(0.7)



def test_luroth_load_from_config():
    """
    Tests that a Luroth map without a truncation is a config error.
    """
    model_cp = _map_cp('map = luroth\nalpha = 1.0\nc1 = 1.0\nrho0 = 0.5\n'
            + 'truncation = 16\n')
    assert LurothMap.load_from_config(model_cp, 'test-model') \
            .n_usable_branches == 16

    model_cp = _map_cp('map = luroth\nalpha = 1.0\nc1 = 1.0\nrho0 = 0.5\n')
    with pytest.raises(LabConfigError):
        LurothMap.load_from_config(model_cp, 'test-model')
