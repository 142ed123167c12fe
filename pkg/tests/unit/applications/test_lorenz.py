#!/usr/bin/env python3
"""
Tests the mixing_lab.applications.lorenz functionality.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import math

import numpy as np
import pytest

from mixing_lab.applications import lorenz



def test_lorenz_spectrum():
    """
    Tests the classical parameters and a Rayleigh number below onset.
    """
    spectrum = lorenz.lorenz_spectrum(10.0, 28.0, 8.0 / 3.0)
    assert spectrum.divergence == pytest.approx(-41.0 / 3.0)
    assert spectrum.lambda_s == pytest.approx(-8.0 / 3.0)
    assert spectrum.lambda_u == pytest.approx((-11.0 + math.sqrt(1201.0)) / 2.0)
    assert spectrum.lambda_u == pytest.approx(11.8277, abs=1e-4)
    assert spectrum.lambda_ss == pytest.approx(-22.8277, abs=1e-4)
    assert spectrum.lorenz_like_ordering
    assert spectrum.strong_dissipativity
    as_dict = spectrum.to_dict()
    assert set(as_dict) == {'lambda_ss', 'lambda_s', 'lambda_u', 'divergence',
            'lorenz_like_ordering', 'strong_dissipativity'}

    spectrum = lorenz.lorenz_spectrum(10.0, 0.5, 8.0 / 3.0)
    assert spectrum.lambda_u < 0
    assert not spectrum.lorenz_like_ordering

    with pytest.raises(AssertionError):
        lorenz.lorenz_spectrum(-1.0, 28.0, 8.0 / 3.0)



def test_lorenz_jacobian():
    """
    Tests that the Jacobian at the origin has the spectrum reported and a
    trace equal to the divergence.
    """
    jac = lorenz.lorenz_jacobian(10.0, 28.0, 8.0 / 3.0)
    spectrum = lorenz.lorenz_spectrum(10.0, 28.0, 8.0 / 3.0)
    eig = np.sort(np.linalg.eigvals(jac).real)
    np.testing.assert_allclose(eig,
            [spectrum.lambda_ss, spectrum.lambda_s, spectrum.lambda_u], rtol=1e-10)
    assert np.trace(jac) == pytest.approx(spectrum.divergence)

    jac = lorenz.lorenz_jacobian(10.0, 28.0, 8.0 / 3.0, (1.0, 2.0, 3.0))
    np.testing.assert_allclose(jac[1], [25.0, -1.0, -1.0])
    np.testing.assert_allclose(jac[2], [2.0, 1.0, -8.0 / 3.0])
