#!/usr/bin/env python3
"""
Inverse-branch words, forward orbits and Birkhoff sums of the roof.

A word is a sequence of branch indices applied left to right: the word
[i_1, ..., i_n] maps y to h_{i_n}(...h_{i_1}(y)), so the first index acts first
and F^n maps the image back to y.  Concatenating g then h therefore gives
h o g, and R_{n+m}(h o g (y)) = R_m(g(y)) + R_n(h(g(y))).

Derivatives are accumulated by the chain rule from the closed-form branch
derivatives; nothing here uses finite differences.

Module Attributes:
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field
import itertools
import logging

import numpy as np

from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class BranchWord:
    """
    An inverse branch of F^n given by its branch indices.

    Instance Attributes:
      exp_map (ExpandingMap): The map whose branches are composed.
      indices ((int)): The branch indices, first-applied first.
      image ((float, float)): The image interval h(Y), computed on creation.
    """
    exp_map: object = field(repr=False, compare=False)
    indices: tuple
    image: tuple = field(init=False, compare=False)

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        assert len(indices) >= 1, 'Words have length at least 1'
        object.__setattr__(self, 'indices', indices)
        ends = word_table(self.exp_map, None, np.array([indices]),
                np.array([0.0, 1.0])).points[0]
        object.__setattr__(self, 'image',
                (float(np.min(ends)), float(np.max(ends))))



    def __len__(self):
        return len(self.indices)



    def then(self, other):
        """
        Builds the word that applies this word first and `other` after it,
        i.e. other o self.

        Args:
          other (BranchWord): The word applied second.

        Returns:
          (BranchWord): The concatenated word.
        """
        return BranchWord(self.exp_map, self.indices + other.indices)



    def as_list(self):
        """
        Returns:
          ([int]): The indices as a list, for serialization.
        """
        return list(self.indices)



def eval_forward(exp_map, y, n):
    """
    Computes the forward orbit y, F(y), ..., F^n(y).

    Args:
      exp_map (ExpandingMap): The map.
      y (float): The start point in [0,1].
      n (int): The number of iterates.

    Returns:
      (ndarray): The orbit of length n+1.

    Raises:
      (OrbitHitsBoundary): An iterate to which F is applied is within tolerance
        of an interior partition endpoint.
    """
    assert 0.0 <= y <= 1.0
    assert n >= 0
    orbit = np.empty(n + 1)
    orbit[0] = y
    for j in range(n):
        if exp_map.is_near_boundary(orbit[j]):
            raise OrbitHitsBoundary(
                    f'Iterate {j} = {orbit[j]!r} is on a partition endpoint')
        orbit[j + 1] = exp_map.forward(orbit[j])
    return orbit



def branch_eval(word, y):
    """
    Evaluates an inverse-branch word and its derivative.

    Args:
      word (BranchWord): The word.
      y (float or ndarray): The points in [0,1].

    Returns:
      point (float or ndarray): h(y).
      deriv (float or ndarray): h'(y), the chain-rule product.
    """
    table = word_table(word.exp_map, None, np.array([word.indices]),
            np.asarray(y, dtype=float))
    if np.ndim(y) == 0:
        return float(table.points[0]), float(table.derivs[0])
    return table.points[0], table.derivs[0]



def enumerate_words(exp_map, n, truncation=None, roof=None, tail_bound=None):
    """
    Enumerates all words of length n over the usable branches in lexicographic
    order, with the condition-(iv) mass of the words left out.

    The omitted mass is bounded by S^n - K^n, where K is the condition-(iv) sum
    over the kept single branches and S = K + (single-branch tail).

    Args:
      exp_map (ExpandingMap): The map.
      n (int): The word length, at least 1.
      truncation (int or None): Keep only the first M branches; None uses the
        map's own truncation.
      roof (RoofFunction or None): The roof for the condition-(iv) weight; None
        uses the weight 1 (eps = 0).
      tail_bound (float or None): Raise if the omitted mass exceeds this.

    Returns:
      words ([BranchWord]): The words.
      tail_mass (float): The bound on the omitted mass (0 if none omitted).

    Raises:
      (TruncationTailTooLarge): The omitted mass exceeds `tail_bound`.
    """
    assert n >= 1
    n_branches = exp_map.n_usable_branches
    if truncation is not None:
        n_branches = min(n_branches, int(truncation))

    weight = 1.0
    if roof is not None:
        weight = float(np.exp(roof.epsilon * roof.sup_value()))
    sizes = exp_map.branch_sizes()
    kept = float(np.sum(sizes[:n_branches])) * weight
    single_tail = float(np.sum(sizes[n_branches:])) * weight
    if exp_map.branch_count is None:
        single_tail += exp_map.tail_bound(weight)

    tail_mass = 0.0
    if single_tail > 0:
        tail_mass = (kept + single_tail) ** n - kept ** n
    if tail_bound is not None and tail_mass > tail_bound:
        logger.critical(f'Truncation tail {tail_mass:.3e} exceeds bound'
                + f' {tail_bound:.3e}')
        raise TruncationTailTooLarge(
                f'Tail mass {tail_mass} > {tail_bound} at n={n},'
                + f' M={n_branches}')

    words = [BranchWord(exp_map, idx) \
            for idx in itertools.product(range(n_branches), repeat=n)]
    return words, tail_mass



def birkhoff_roof(roof, word, y):
    """
    Evaluates the Birkhoff sum R_n o h and its derivative for a word h of length
    n, i.e. sum_{j<n} R(F^j(h(y))).

    Args:
      roof (RoofFunction): The roof.
      word (BranchWord): The word.
      y (float or ndarray): The points in [0,1].

    Returns:
      value (float or ndarray): R_n(h(y)).
      deriv (float or ndarray): (R_n o h)'(y).
    """
    table = word_table(word.exp_map, roof, np.array([word.indices]),
            np.asarray(y, dtype=float))
    value, deriv = table.roof_sums[0], table.roof_derivs[0]
    exp_map = word.exp_map
    c2 = exp_map.c1 ** 2 / (1.0 - exp_map.rho)
    assert np.all(np.abs(deriv) <= c2 * (1.0 + 1e-9)), \
            f'|(R_n o h)\'| exceeds C2 = {c2}'
    if np.ndim(y) == 0:
        return float(value), float(deriv)
    return value, deriv



@dataclass
class WordTable:
    """
    Branch data of many words evaluated on a common set of points.  Row w of
    every array belongs to word w.

    Instance Attributes:
      indices (ndarray): The word indices, shape (n_words, n).
      points (ndarray): h_w(y).
      derivs (ndarray): h_w'(y).
      roof_sums (ndarray): R_n(h_w(y)).
      roof_derivs (ndarray): (R_n o h_w)'(y).
    """
    indices: np.ndarray
    points: np.ndarray
    derivs: np.ndarray
    roof_sums: np.ndarray
    roof_derivs: np.ndarray



def word_table(exp_map, roof, indices, y):
    """
    Evaluates many words, their derivatives and their roof Birkhoff sums at
    once.  The partial compositions z_k = h_{i_k}(...h_{i_1}(y)) are exactly the
    points F^{n-k}(h(y)), so R_n(h(y)) = sum_k R(z_k).

    Args:
      exp_map (ExpandingMap): The map.
      roof (RoofFunction or None): The roof; None skips the Birkhoff sums.
      indices (ndarray): The word indices, shape (n_words, n).
      y (ndarray): The points.

    Returns:
      (WordTable): The table.
    """
    idx = np.atleast_2d(np.asarray(indices, dtype=int))
    shape = (idx.shape[0],) + np.shape(y)
    extra_dims = (1,) * np.ndim(y)
    z = np.broadcast_to(np.asarray(y, dtype=float), shape).copy()
    derivs = np.ones(shape)
    sums = np.zeros(shape)
    sum_derivs = np.zeros(shape)
    for k in range(idx.shape[1]):
        m = idx[:, k].reshape((-1,) + extra_dims)
        derivs = derivs * exp_map.inverse_derivative(m, z)
        z = exp_map.inverse(m, z)
        if roof is not None:
            sums += roof.value(z)
            sum_derivs += roof.derivative(z) * derivs
    return WordTable(idx, z, derivs, sums, sum_derivs)



def words_to_indices(words):
    """
    Stacks the indices of equal-length words.

    Args:
      words ([BranchWord]): The words.

    Returns:
      (ndarray): Shape (n_words, n).

    Raises:
      (WordLengthMismatch): The words do not all have the same length.
    """
    lengths = {len(w) for w in words}
    if len(lengths) > 1:
        raise WordLengthMismatch(f'Mixed word lengths: {sorted(lengths)}')
    return np.array([w.indices for w in words], dtype=int)
