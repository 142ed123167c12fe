#!/usr/bin/env python3
"""
Tests the mixing_lab.transfer.operators functionality.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import numpy as np
import pytest

from mixing_lab.dynamics import words
from mixing_lab.dynamics.luroth import LurothMap
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.transfer import operators
from mixing_lab.transfer.grid import GridFunction



def test_twist_parameter():
    """
    Tests `TwistParameter`.
    """
    twist = operators.TwistParameter.from_complex(0.05 - 3.0j)
    assert twist.sigma == 0.05
    assert twist.b == -3.0
    assert twist.s == complex(0.05, -3.0)
    assert twist.check_domain(0.1)
    assert not twist.check_domain(0.05)



def test_apply_P_constant(dq_model):
    """
    Tests that P_0 fixes the constant 1 exactly for the doubling map, and that
    P_s 1 is the sum of the single-word operators.
    """
    one = GridFunction.constant(1.0, 256)
    image = operators.apply_P(dq_model.exp_map, dq_model.roof, 0.0, one)
    assert np.all(image.values == 1.0)

    s = 0.05 + 7.0j
    image = operators.apply_P(dq_model.exp_map, dq_model.roof, s, one)
    by_words = sum((operators.apply_A(
            words.BranchWord(dq_model.exp_map, (m,)), s, dq_model.roof, one) \
            for m in range(2)), GridFunction.constant(0.0, 256))
    np.testing.assert_allclose(image.values, by_words.values, atol=1e-14)

    y = one.nodes
    expected = 0.5 * np.exp(-s * dq_model.roof.value(y / 2)) \
            + 0.5 * np.exp(-s * dq_model.roof.value((y + 1) / 2))
    np.testing.assert_allclose(image.values, expected, atol=1e-14)



def test_apply_P_words(dq_model):
    """
    Tests that the two-word operator matches two applications of P_s up to
    interpolation error.
    """
    v = GridFunction.from_callable(lambda y: np.cos(2.0 * np.pi * y), 1024)
    s = 0.02 + 5.0j
    twice = operators.apply_P(dq_model.exp_map, dq_model.roof, s,
            operators.apply_P(dq_model.exp_map, dq_model.roof, s, v))
    direct = operators.apply_P_words(dq_model.exp_map, dq_model.roof, s, v, 2)
    np.testing.assert_allclose(direct.values, twice.values, atol=1e-4)



def test_apply_P_tail_bound(dq_model):
    """
    Tests that a truncated countable family can be refused by its tail.
    """
    luroth = LurothMap(map_id='test', alpha=1.0, c1=1.0, rho0=0.5,
            truncation=8)
    one = GridFunction.constant(1.0, 64)
    image = operators.apply_P(luroth, dq_model.roof, 0.0, one)
    assert image.sup_norm() < 1.0
    with pytest.raises(TruncationTailTooLarge):
        operators.apply_P(luroth, dq_model.roof, 0.0, one, tail_bound=1e-3)



def test_apply_L(dq_spectral0):
    """
    Tests that L_s is a weak contraction in sup norm, fixes constants at s=0,
    and refuses spectral data for another sigma.
    """
    v = GridFunction.from_callable(lambda y: np.exp(3j * y), 1024)
    image = operators.apply_L(dq_spectral0, 12.0j, v)
    assert image.sup_norm() <= v.sup_norm() + 1e-12

    one = GridFunction.constant(1.0, 1024)
    np.testing.assert_allclose(operators.apply_L(dq_spectral0, 0.0,
            one).values, 1.0)

    # A coarser input grid re-solves the spectral data on that grid
    coarse = operators.apply_L(dq_spectral0, 0.0,
            GridFunction.constant(1.0, 128))
    np.testing.assert_allclose(coarse.values, 1.0)

    with pytest.raises(SpectralMismatch):
        operators.apply_L(dq_spectral0, 0.1 + 2.0j, v)
    with pytest.raises(SpectralMismatch):
        operators.apply_L_words(dq_spectral0, 0.1, v, 2)

    two_step = operators.apply_L_words(dq_spectral0, 0.0, one, 3)
    np.testing.assert_allclose(two_step.values, 1.0)



def test_apply_Q_and_adjoint(dq_model, dq_spectral0):
    """
    Tests Q_s against P_s for the constant density and the duality of Q_s with
    composition by F.
    """
    f0 = dq_spectral0.density
    f = GridFunction.from_callable(lambda y: np.cos(2.0 * np.pi * y), 1024)
    g = GridFunction.from_callable(lambda y: y ** 2, 1024)
    s = 0.03 + 2.0j
    np.testing.assert_allclose(
            operators.apply_Q(dq_model.exp_map, dq_model.roof, s, f,
            f0).values,
            operators.apply_P(dq_model.exp_map, dq_model.roof, s, f).values,
            atol=1e-12)

    gap = operators.adjoint_gap(dq_model.exp_map, dq_model.roof, s, f, g, f0)
    assert gap < 1e-4



def test_mu_integral(dq_spectral0):
    """
    Tests `mu_integral()` against the density and the spectral data.
    """
    v = GridFunction.from_callable(lambda y: y, 1024)
    assert operators.mu_integral(v, dq_spectral0) == pytest.approx(0.5)
    assert operators.mu_integral(v, dq_spectral0.density) \
            == pytest.approx(0.5)
    coarse = GridFunction.from_callable(lambda y: y ** 2, 64)
    assert operators.mu_integral(coarse, dq_spectral0).real \
            == pytest.approx(1.0 / 3.0, abs=1e-3)
