#!/usr/bin/env python3
"""
The uniform non-integrability (UNI) scan: for pairs of inverse-branch words of
equal length, psi = R_n o h1 - R_n o h2, and the witness pair maximizing
inf |psi'| over Y.

Module Attributes:
  NOMINAL_D (float): The UNI constant assigned to a nominal witness, used
    when no pair is eligible so that the UNI-dependent pipelines can still
    run as a negative control.
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass
import itertools
import logging

import numpy as np

from mixing_lab.dynamics import words as words_mod
from mixing_lab.general import utils
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



logger = logging.getLogger(__name__)

NOMINAL_D = 0.25

_PAIR_CHUNK = 256



@dataclass(frozen=True)
class UNIWitness:
    """
    A UNI witness pair.

    Instance Attributes:
      n0 (int): The word length.
      word1 (BranchWord): h1.
      word2 (BranchWord): h2.
      d (float): The grid infimum of |psi'|, the UNI constant D.
      margin (float): The largest change of psi' between adjacent grid nodes;
        d - margin bounds inf |psi'| between the nodes.
      argmin (float): The node where |psi'| is smallest.
      nominal (bool): True if d is NOMINAL_D rather than measured; the pair
        then witnesses nothing.
    """
    n0: int
    word1: words_mod.BranchWord
    word2: words_mod.BranchWord
    d: float
    margin: float
    argmin: float
    nominal: bool = False

    def to_dict(self):
        """
        Returns:
          ({str: *}): A JSON-ready view of the witness.
        """
        return {
            'n0': self.n0,
            'word1': self.word1.as_list(),
            'word2': self.word2.as_list(),
            'd': self.d,
            'margin': self.margin,
            'argmin': self.argmin,
            'nominal': self.nominal,
        }



def psi(roof, word1, word2, y):
    """
    Evaluates psi = R_n o h1 - R_n o h2 and its derivative.

    Args:
      roof (RoofFunction): The roof.
      word1 (BranchWord): h1.
      word2 (BranchWord): h2, the same length as h1.
      y (float or ndarray): The points.

    Returns:
      value (float or ndarray): psi(y).
      deriv (float or ndarray): psi'(y).

    Raises:
      (WordLengthMismatch): The words have different lengths.
    """
    if len(word1) != len(word2):
        logger.critical(f'psi of words of lengths {len(word1)} and'
                + f' {len(word2)}')
        raise WordLengthMismatch(f'Words of lengths {len(word1)} and'
                + f' {len(word2)} have no psi')
    val1, der1 = words_mod.birkhoff_roof(roof, word1, y)
    val2, der2 = words_mod.birkhoff_roof(roof, word2, y)
    return val1 - val2, der1 - der2



def _scan_pairs(roof_derivs, pairs):
    dpsi = roof_derivs[pairs[:, 0]] - roof_derivs[pairs[:, 1]]
    abs_dpsi = np.abs(dpsi)
    grid_inf = np.min(abs_dpsi, axis=1)
    argmin = np.argmin(abs_dpsi, axis=1)
    margin = np.max(np.abs(np.diff(dpsi, axis=1)), axis=1)
    return grid_inf, margin, argmin



def uni_scan(exp_map, roof, n_range, n_grid=4096, floor=1e-8,
        truncation=None, workers=1):
    """
    Scans all word pairs of each length in `n_range` for the largest grid
    infimum of |psi'|.  A pair is eligible when that infimum minus its
    between-node margin clears `floor`.  Ties go to the smaller length, then
    to the lexicographically first pair.

    Args:
      exp_map (ExpandingMap): The map.
      roof (RoofFunction): The roof.
      n_range ([int]): The word lengths to scan.
      n_grid (int): The number of grid points on [0,1].
      floor (float): The eligibility floor.
      truncation (int or None): Branch truncation; None uses the map's own.
      workers (int or None): Worker count for the pair scan.

    Returns:
      (UNIWitness or None): The best witness, or None if no pair is eligible.
    """
    assert len(n_range) > 0
    grid = np.linspace(0.0, 1.0, n_grid)
    best = None
    for n in sorted(set(int(n) for n in n_range)):
        words, _ = words_mod.enumerate_words(exp_map, n, truncation)
        table = words_mod.word_table(exp_map, roof,
                words_mod.words_to_indices(words), grid)
        pairs = np.array(list(itertools.combinations(range(len(words)), 2)),
                dtype=int).reshape(-1, 2)
        chunks = [pairs[i:i + _PAIR_CHUNK] \
                for i in range(0, len(pairs), _PAIR_CHUNK)]
        results = utils.parallel_map(
                lambda chunk: _scan_pairs(table.roof_derivs, chunk), chunks,
                workers)
        if not results:
            continue
        grid_inf = np.concatenate([r[0] for r in results])
        margin = np.concatenate([r[1] for r in results])
        argmin = np.concatenate([r[2] for r in results])

        eligible = grid_inf - margin >= floor
        if not np.any(eligible):
            logger.debug(f'n={n}: no eligible pair')
            continue
        scores = np.where(eligible, grid_inf, -np.inf)
        i_best = int(np.argmax(scores))
        if best is None or scores[i_best] > best.d:
            i1, i2 = pairs[i_best]
            best = UNIWitness(n, words[i1], words[i2],
                    float(grid_inf[i_best]), float(margin[i_best]),
                    float(grid[argmin[i_best]]))
            logger.debug(f'n={n}: new best D={best.d}')

    if best is None:
        logger.info(f'No UNI witness for {exp_map!r} / {roof!r} at n in'
                + f' {list(n_range)}')
    else:
        logger.info(f'UNI witness: n0={best.n0}, {best.word1.as_list()} vs'
                + f' {best.word2.as_list()}, D={best.d}')
    return best



def nominal_witness(exp_map, roof, n, n_grid=4096, truncation=None,
        d=NOMINAL_D):
    """
    Picks the pair of length-n words with the largest grid infimum of |psi'|
    regardless of eligibility, and assigns it the UNI constant `d`.  Models
    without a witness run the UNI-dependent pipelines on this pair as a
    negative control; nothing built from it is a certificate.

    Args:
      exp_map (ExpandingMap): The map.
      roof (RoofFunction): The roof.
      n (int): The word length.
      n_grid (int): The number of grid points on [0,1].
      truncation (int or None): Branch truncation; None uses the map's own.
      d (float): The nominal UNI constant.

    Returns:
      (UNIWitness): The nominal witness, with `nominal` set.
    """
    assert d > 0, 'The nominal D must be positive'
    grid = np.linspace(0.0, 1.0, n_grid)
    words, _ = words_mod.enumerate_words(exp_map, n, truncation)
    assert len(words) >= 2, 'A pair needs two words'
    table = words_mod.word_table(exp_map, roof,
            words_mod.words_to_indices(words), grid)
    pairs = np.array(list(itertools.combinations(range(len(words)), 2)),
            dtype=int)
    grid_inf, margin, argmin = _scan_pairs(table.roof_derivs, pairs)
    i_best = int(np.argmax(grid_inf))
    i1, i2 = pairs[i_best]
    logger.warning(f'Nominal witness at n={n}: {words[i1].as_list()} vs'
            + f' {words[i2].as_list()}, measured inf |psi\'|='
            + f'{grid_inf[i_best]:.3g}, nominal D={d}')
    return UNIWitness(int(n), words[i1], words[i2], float(d),
            float(margin[i_best]), float(grid[argmin[i_best]]), nominal=True)



def push_forward_witness(witness, roof, g_word, n_grid=4096):
    """
    Pushes a witness forward to the pair (h1 o g, h2 o g) at length n0 + m,
    whose inf |psi'| is at least D inf |g'| by the cocycle identity.

    Args:
      witness (UNIWitness): The witness.
      roof (RoofFunction): The roof.
      g_word (BranchWord or int): The word g, or a length m for the word of m
        zeros.
      n_grid (int): The number of grid points on [0,1].

    Returns:
      (UNIWitness): The pushed-forward witness with D recomputed.
    """
    if isinstance(g_word, (int, np.integer)):
        if g_word == 0:
            return witness
        g_word = words_mod.BranchWord(witness.word1.exp_map, (0,) * g_word)
    word1 = g_word.then(witness.word1)
    word2 = g_word.then(witness.word2)
    grid = np.linspace(0.0, 1.0, n_grid)
    _, dpsi = psi(roof, word1, word2, grid)
    abs_dpsi = np.abs(dpsi)
    return UNIWitness(len(word1), word1, word2, float(np.min(abs_dpsi)),
            float(np.max(np.abs(np.diff(dpsi)))),
            float(grid[int(np.argmin(abs_dpsi))]))
