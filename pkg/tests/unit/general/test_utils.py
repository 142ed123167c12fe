#!/usr/bin/env python3
"""
Tests the mixing_lab.general.utils functionality.

Per [pytest](https://docs.pytest.org/en/reorganize-docs/new-docs/user/naming_conventions.html),
all tiles, classes, and methods will be prefaced with `test_/Test` to comply
with auto-discovery (others may exist, but will not be part of test suite
directly).

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import numpy as np
import pytest

from mixing_lab.general import utils



def test_spawn_generators():
    """
    Tests `spawn_generators()` gives reproducible, distinct streams.
    """
    gens_a = utils.spawn_generators(7, 3)
    gens_b = utils.spawn_generators(7, 3)
    draws_a = [g.random(5) for g in gens_a]
    draws_b = [g.random(5) for g in gens_b]

    for d_a, d_b in zip(draws_a, draws_b):
        np.testing.assert_array_equal(d_a, d_b)
    assert not np.array_equal(draws_a[0], draws_a[1])

    other = utils.spawn_generators(8, 1)[0].random(5)
    assert not np.array_equal(other, draws_a[0])
    assert utils.spawn_generators(7, 0) == []



def test_resolve_workers():
    """
    Tests `resolve_workers()`.
    """
    assert utils.resolve_workers(3) == 3
    assert utils.resolve_workers(None) >= 1
    assert utils.resolve_workers(0) == utils.resolve_workers(None)
    assert utils.resolve_workers(-2) == utils.resolve_workers(None)



def test_parallel_map():
    """
    Tests `parallel_map()` keeps item order for any worker count.
    """
    items = list(range(20))
    expected = [i * i for i in items]
    assert utils.parallel_map(lambda i: i * i, items) == expected
    assert utils.parallel_map(lambda i: i * i, items, 4) == expected
    assert utils.parallel_map(lambda i: i * i, [], 4) == []



def test_fit_log_linear():
    """
    Tests `fit_log_linear()` on exact exponentials.
    """
    x_vals = np.arange(10)
    const, slope, r_squared = utils.fit_log_linear(x_vals,
            3.0 * 0.5 ** x_vals)
    assert const == pytest.approx(3.0)
    assert slope == pytest.approx(np.log(0.5))
    assert r_squared == pytest.approx(1.0)

    const, slope, _ = utils.fit_log_linear(x_vals, -2.0 * np.exp(0.1 * x_vals))
    assert const == pytest.approx(2.0)
    assert slope == pytest.approx(0.1)
