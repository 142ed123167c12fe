#!/usr/bin/env python3
"""
Tests the mixing_lab.transfer.grid functionality.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import numpy as np
import pytest

from mixing_lab.transfer.grid import GridFunction, holder_seminorm_of, \
        interpolate



def test_holder_seminorm_of():
    """
    Tests the seminorm of linear and square-root profiles, dyadic and full.
    """
    nodes = np.linspace(0.0, 1.0, 65)
    assert holder_seminorm_of(3.0 * nodes, 1.0) == pytest.approx(3.0)
    assert holder_seminorm_of(np.sqrt(nodes), 0.5) == pytest.approx(1.0)
    assert holder_seminorm_of(np.sqrt(nodes), 0.5, full=True) \
            == pytest.approx(1.0)
    assert holder_seminorm_of(np.array([1.0]), 1.0) == 0.0

    # 3 intervals has no dyadic top separation, so the full span is added
    assert holder_seminorm_of(np.array([0.0, 0.0, 0.0, 1.0]), 1.0) \
            == pytest.approx(3.0)



def test_grid_function_norms():
    """
    Tests the sup norm, the seminorm and the b-norm.
    """
    v = GridFunction.from_callable(lambda y: np.exp(2j * np.pi * y), 1024)
    assert v.n_intervals == 1024
    assert v.sup_norm() == pytest.approx(1.0)
    assert v.holder_seminorm() == pytest.approx(2.0 * np.pi, rel=1e-4)
    assert v.b_norm(0.0) == pytest.approx(v.holder_seminorm())
    assert v.b_norm(100.0) == pytest.approx(1.0)

    one = GridFunction.constant(1.0, 8)
    assert one.holder_seminorm() == 0.0
    assert one.b_norm(5.0) == 1.0
    assert np.all(one.nodes == np.linspace(0.0, 1.0, 9))



def test_grid_function_arithmetic():
    """
    Tests that arithmetic returns new functions and leaves operands alone.
    """
    v = GridFunction.from_callable(lambda y: y, 4)
    w = GridFunction.constant(2.0, 4)
    np.testing.assert_allclose((v + w).real, v.real + 2.0)
    np.testing.assert_allclose((1.0 - v).real, 1.0 - v.real)
    np.testing.assert_allclose((v * w).real, 2.0 * v.real)
    np.testing.assert_allclose((v / w).real, 0.5 * v.real)
    np.testing.assert_allclose((-v).real, -v.real)
    np.testing.assert_allclose(abs(v - w).real, 2.0 - v.real)
    np.testing.assert_allclose(v.real, [0.0, 0.25, 0.5, 0.75, 1.0])
    with pytest.raises(ValueError):
        v.values[0] = 1.0

    with pytest.raises(AssertionError):
        _ = v + GridFunction.constant(1.0, 8)



def test_interpolate_and_resample():
    """
    Tests piecewise-linear interpolation of real and complex values.
    """
    values = np.array([0.0, 1.0, 0.0])
    assert interpolate(values, 0.25) == pytest.approx(0.5)
    cvalues = np.array([0.0, 1.0 + 1.0j, 0.0])
    assert interpolate(cvalues, 0.75) == pytest.approx(0.5 + 0.5j)

    v = GridFunction.from_callable(lambda y: 2.0 * y + 1.0, 4)
    fine = v.resample(16)
    np.testing.assert_allclose(fine.real, 2.0 * fine.nodes + 1.0)
    assert v(0.3) == pytest.approx(1.6)
    np.testing.assert_allclose(v.map_values(np.conj).values, v.values)
