#!/usr/bin/env python3
"""
Tests the mixing_lab.suspension.semiflow functionality.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import numpy as np
import pytest

from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.suspension import semiflow



def test_flow(dc_model):
    """
    Tests flowing single points over the constant roof 2.
    """
    point = semiflow.SuspensionPoint(0.3, 0.5)
    new_point, visits = semiflow.flow(dc_model.exp_map, dc_model.roof, point,
            4.0)
    assert visits == 2
    assert new_point.y == pytest.approx(0.2)
    assert new_point.u == pytest.approx(0.5)

    new_point, visits = semiflow.flow(dc_model.exp_map, dc_model.roof, point,
            1.0)
    assert visits == 0
    assert new_point.y == pytest.approx(0.3)
    assert new_point.u == pytest.approx(1.5)

    with pytest.raises(OrbitHitsBoundary):
        semiflow.flow(dc_model.exp_map, dc_model.roof,
                semiflow.SuspensionPoint(0.5, 1.9), 0.2)

    with pytest.raises(AssertionError):
        semiflow.flow(dc_model.exp_map, dc_model.roof, point, -1.0)



def test_flow_semigroup(dq_model):
    """
    Tests F_{t2}(F_{t1}(p)) = F_{t1+t2}(p) with the crossings adding up.
    """
    rng = np.random.default_rng(7)
    y0 = rng.uniform(0.01, 0.99, 20)
    u0 = rng.uniform(0.0, 1.0, 20) * dq_model.roof.value(y0)
    for t1, t2 in ((0.7, 3.1), (2.0, 5.5), (4.3, 0.0), (0.0, 9.25)):
        for y, u in zip(y0, u0):
            point = semiflow.SuspensionPoint(y, u)
            mid, visits1 = semiflow.flow(dq_model.exp_map, dq_model.roof,
                    point, t1)
            end, visits2 = semiflow.flow(dq_model.exp_map, dq_model.roof,
                    mid, t2)
            direct, visits = semiflow.flow(dq_model.exp_map, dq_model.roof,
                    point, t1 + t2)
            assert visits1 + visits2 == visits
            assert end.y == pytest.approx(direct.y, abs=1e-9)
            assert end.u == pytest.approx(direct.u, abs=1e-9)

    y, u, visits = semiflow.flow_arrays(dq_model.exp_map, dq_model.roof,
            y0, u0, 1.5)
    y, u, more = semiflow.flow_arrays(dq_model.exp_map, dq_model.roof, y, u,
            2.5)
    y_direct, u_direct, total = semiflow.flow_arrays(dq_model.exp_map,
            dq_model.roof, y0, u0, 4.0)
    np.testing.assert_array_equal(visits + more, total)
    np.testing.assert_allclose(y, y_direct, atol=1e-9)
    np.testing.assert_allclose(u, u_direct, atol=1e-9)



def test_flow_arrays(dq_model):
    """
    Tests that the array flow agrees with the pointwise flow.
    """
    y = np.array([0.1, 0.37, 0.62, 0.9])
    u = np.array([0.0, 1.0, 2.0, 0.5])
    new_y, new_u, visits = semiflow.flow_arrays(dq_model.exp_map,
            dq_model.roof, y, u, 5.0)
    for k in range(len(y)):
        point, n_vis = semiflow.flow(dq_model.exp_map, dq_model.roof,
                semiflow.SuspensionPoint(y[k], u[k]), 5.0)
        assert new_y[k] == pytest.approx(point.y)
        assert new_u[k] == pytest.approx(point.u)
        assert visits[k] == n_vis
    assert np.all(new_u < dq_model.roof.value(new_y))

    with pytest.raises(OrbitHitsBoundary):
        semiflow.flow_arrays(dq_model.exp_map, dq_model.roof,
                np.array([0.2, 0.5]), np.array([0.0, 2.0]), 1.0)



def test_density_cdf(dq_spectral0):
    """
    Tests the CDF of the (uniform) doubling density.
    """
    cdf = semiflow.density_cdf(dq_spectral0.density)
    assert cdf[0] == 0.0
    assert cdf[-1] == pytest.approx(1.0)
    assert np.all(np.diff(cdf) >= 0)
    np.testing.assert_allclose(cdf, dq_spectral0.density.nodes, atol=1e-6)



def test_sample_muR(dq_model, dq_spectral0):
    """
    Tests the weighted sample: layout, weights and independence from the
    worker count.
    """
    n = 20000
    sample = semiflow.sample_muR(dq_model.exp_map, dq_model.roof,
            dq_spectral0.density, n, seed=3)
    assert len(sample) == n
    assert sample.seed == 3
    assert np.all((sample.y >= 0) & (sample.y <= 1))
    assert not np.any(dq_model.exp_map.is_near_boundary(sample.y))
    assert np.all((sample.u >= 0) & (sample.u < dq_model.roof.value(sample.y)))
    assert np.all(np.diff(sample.batch) >= 0)
    assert set(sample.batch) == set(range(semiflow.N_BATCHES))
    assert np.mean(sample.weight) == pytest.approx(1.0, abs=0.01)

    threaded = semiflow.sample_muR(dq_model.exp_map, dq_model.roof,
            dq_spectral0.density, n, seed=3, workers=4)
    np.testing.assert_array_equal(sample.y, threaded.y)
    np.testing.assert_array_equal(sample.u, threaded.u)
    np.testing.assert_array_equal(sample.weight, threaded.weight)

    other = semiflow.sample_muR(dq_model.exp_map, dq_model.roof,
            dq_spectral0.density, n, seed=4)
    assert not np.array_equal(sample.y, other.y)

    empty = semiflow.sample_muR(dq_model.exp_map, dq_model.roof,
            dq_spectral0.density, 0)
    assert len(empty) == 0
