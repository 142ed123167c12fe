#!/usr/bin/env python3
"""
Test configuration for the cone tests, including shared fixtures.

Module Attributes:
  CONE_B (float): The frequency used throughout, above 4 pi / D = 16 pi.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import pytest

from mixing_lab.cone import chi as chi_mod
from mixing_lab.cone import cone as cone_mod



CONE_B = 100.0



@pytest.fixture(name='cone_pair', scope='package')
def fixture_cone_pair(dq_ledger):
    """
    Returns:
      (ConePair): A sampled cone pair at CONE_B.
    """
    return cone_mod.sample_cone(CONE_B, dq_ledger, seed=5)



@pytest.fixture(name='cone_chi', scope='package')
def fixture_cone_chi(cone_pair, dq_ledger, dq_witness, dq_spectral0):
    """
    Returns:
      (ChiFunction): The damping function for the sampled pair.
    """
    return chi_mod.build_chi(CONE_B, cone_pair, dq_ledger, dq_witness,
            dq_spectral0)
