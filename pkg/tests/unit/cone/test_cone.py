#!/usr/bin/env python3
"""
Tests the mixing_lab.cone.cone functionality.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import numpy as np

from mixing_lab.cone import cone as cone_mod
from mixing_lab.transfer.grid import GridFunction



def test_cone_check(dq_ledger):
    """
    Tests membership and each way of leaving the cone.
    """
    one = GridFunction.constant(1.0, 256)
    report = cone_mod.cone_check(one, one, 60.0, dq_ledger)
    assert report.member
    assert report.violated == []
    assert report.margins['modulus'] == 1.0
    assert report.margins['log_holder'] == 0.0

    report = cone_mod.cone_check(-one, one, 60.0, dq_ledger)
    assert not report.member
    assert report.violated == ['positivity']

    report = cone_mod.cone_check(one, 2.0 * one, 60.0, dq_ledger)
    assert report.violated == ['modulus']

    steep = GridFunction.from_callable(lambda y: np.exp(700.0 * y), 256)
    report = cone_mod.cone_check(steep, steep, 60.0, dq_ledger)
    assert 'log_holder' in report.violated

    wiggle = GridFunction.from_callable(
            lambda y: 0.5 * np.exp(2000.0j * y), 4096)
    report = cone_mod.cone_check(GridFunction.constant(1.0, 4096), wiggle,
            60.0, dq_ledger)
    assert report.violated == ['v_holder']



def test_cone_grid_size():
    """
    Tests that the working grid resolves the damping intervals.
    """
    assert cone_mod.cone_grid_size(1024, 60.0, 0.0165) == 32768
    assert cone_mod.cone_grid_size(1 << 16, 60.0, 0.0165) == 1 << 16
    assert cone_mod.cone_grid_size(16, 1.0, 1.0) == 16



def test_sample_cone(dq_ledger, cone_pair):
    """
    Tests that sampled pairs are members and reproducible from their seed.
    """
    assert cone_pair.b == 100.0
    assert cone_pair.c4 == dq_ledger.c4
    assert cone_pair.u.n_intervals == cone_mod.cone_grid_size(1024, 100.0,
            dq_ledger.delta)
    assert cone_mod.cone_check(cone_pair.u, cone_pair.v, 100.0,
            dq_ledger).member

    again = cone_mod.sample_cone(100.0, dq_ledger, seed=5)
    np.testing.assert_array_equal(again.v.values, cone_pair.v.values)
    other = cone_mod.sample_cone(100.0, dq_ledger, seed=6)
    assert not np.array_equal(other.v.values, cone_pair.v.values)

    flat = cone_mod.sample_cone(60.0, dq_ledger, modes=0, n_intervals=64)
    np.testing.assert_allclose(flat.u.values, 1.0)
    np.testing.assert_allclose(flat.v.values, 1.0)
