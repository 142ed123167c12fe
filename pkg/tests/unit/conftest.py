#!/usr/bin/env python3
"""
Test configuration for the unit tests, including shared fixtures.

The fixtures are session scoped since the spectral data and the suspension
quadrature are the expensive part of most tests and never change.

Module Attributes:
  N_TEST_GRID (int): The grid size used by the shared fixtures.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import pytest

from mixing_lab.applications import zoo
from mixing_lab.suspension.system import SuspensionSystem
from mixing_lab.transfer import spectrum
from mixing_lab.uni import ledger as ledger_mod
from mixing_lab.uni import scan



N_TEST_GRID = 1024



@pytest.fixture(name='dq_model', scope='session')
def fixture_dq_model():
    """
    Returns:
      (ModelConfig): Doubling map with the roof 2 + y^2/2 and an affine fiber.
    """
    return zoo.get_model('doubling-quadratic')



@pytest.fixture(name='dc_model', scope='session')
def fixture_dc_model():
    """
    Returns:
      (ModelConfig): Doubling map with the constant roof 2.
    """
    return zoo.get_model('doubling-constant')



@pytest.fixture(name='dq_spectral0', scope='session')
def fixture_dq_spectral0(dq_model):
    """
    Returns:
      (SpectralData): The leading spectral data at sigma = 0.
    """
    return spectrum.leading_spectrum(dq_model.exp_map, dq_model.roof, 0.0,
            N_TEST_GRID)



@pytest.fixture(name='dq_witness', scope='session')
def fixture_dq_witness(dq_model):
    """
    Returns:
      (UNIWitness): The UNI witness over words of length 1.
    """
    return scan.uni_scan(dq_model.exp_map, dq_model.roof, [1])



@pytest.fixture(name='dq_ledger', scope='session')
def fixture_dq_ledger(dq_model, dq_spectral0, dq_witness):
    """
    Returns:
      (ConstantsLedger): The ledger without a measured C3.
    """
    return ledger_mod.build_ledger(dq_model.exp_map, dq_model.roof,
            dq_spectral0, dq_witness)



@pytest.fixture(name='dq_system', scope='session')
def fixture_dq_system(dq_model, dq_spectral0):
    """
    Returns:
      (SuspensionSystem): The suspension over the doubling-quadratic model.
    """
    return SuspensionSystem.build(dq_model.exp_map, dq_model.roof,
            spectral0=dq_spectral0)



@pytest.fixture(name='dc_system', scope='session')
def fixture_dc_system(dc_model):
    """
    Returns:
      (SuspensionSystem): The suspension over the constant roof.
    """
    return SuspensionSystem.build(dc_model.exp_map, dc_model.roof, 256)
