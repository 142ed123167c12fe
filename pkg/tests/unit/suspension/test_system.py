#!/usr/bin/env python3
"""
Tests the mixing_lab.suspension.system functionality.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import numpy as np
import pytest

from mixing_lab.suspension.system import BaseQuadrature



def test_base_quadrature(dq_spectral0):
    """
    Tests the density-weighted quadrature.
    """
    quad = BaseQuadrature.build(dq_spectral0.density, 64, 4)
    assert len(quad.nodes) == 256
    assert np.sum(quad.weights) == pytest.approx(1.0)
    assert np.all((quad.nodes > 0) & (quad.nodes < 1))
    assert quad.integrate(quad.nodes) == pytest.approx(0.5, abs=1e-6)
    assert quad.integrate(quad.nodes ** 2) == pytest.approx(1 / 3, abs=1e-6)

    stacked = np.stack([quad.nodes, np.ones_like(quad.nodes)], axis=1)
    np.testing.assert_allclose(quad.integrate(stacked), [0.5, 1.0],
            atol=1e-6)



def test_suspension_system(dq_system, dc_system, dq_spectral0):
    """
    Tests the mean roof and the density passthrough.
    """
    assert dq_system.r_bar == pytest.approx(13 / 6, abs=1e-6)
    assert dc_system.r_bar == pytest.approx(2.0, abs=1e-9)
    assert dq_system.density is dq_spectral0.density
    assert dq_system.spectral0 is dq_spectral0
