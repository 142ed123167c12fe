#!/usr/bin/env python3
"""
The ledger of named constants derived from the map, roof, invariant density
and UNI witness, and the largeness conditions on n0 that the cone and
cancellation arguments need.

Module Attributes:
  ETA0 (float): The cancellation level (sqrt(7) - 1) / 2.
  logger (Logger): Logger for this module.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
from dataclasses import dataclass, field, fields, replace
import logging
import math

import numpy as np

from mixing_lab.dynamics import words as words_mod
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import
from mixing_lab.uni import scan



logger = logging.getLogger(__name__)

ETA0 = (math.sqrt(7.0) - 1.0) / 2.0

_LARGE1_RHS = 0.25 * math.sqrt(2.0 - 2.0 * math.cos(math.pi / 12.0))
_MAX_N0 = 100000



@dataclass(frozen=True)
class ConstantsLedger:     # pylint: disable=too-many-instance-attributes
    """
    Every constant downstream modules need, with a provenance string each.

    Instance Attributes:
      alpha, c1, rho0 (float): Declared by the map.
      rho (float): rho0^alpha.
      c2 (float): C1^2 / (1 - rho).
      c3 (float or None): The measured Lasota-Yorke constant, once known.
      c4 (float): 8 |f0^-1| |f0|_alpha C1 + 5 C2.
      d (float): The UNI constant D (nominal for a negative control).
      n0 (int): The raw witness word length.
      big_delta (float): 2 pi / D.
      d_prime (float): max(4 pi / D, 2).
      delta (float): 0.99 x the largest delta meeting the four cancellation
        constraints.
      eta0 (float): (sqrt 7 - 1) / 2.
      eta (float): The damping level in [eta0, 1).
      epsilon (float): The twist-domain half-width.
      f0_sup, f0_inv_sup, f0_holder (float): |f0|_inf, |f0^-1|_inf, |f0|_alpha.
      delta_prime (float): delta / (4 delta + 6 Delta).
      delta_pp (float): delta' inf f0 / sup f0.
      k_fed (float): 2 |f0^-1| |f0|_alpha + 2 C2.
      delta_ppp (float): delta'' exp(-(2 delta + 2 Delta)^alpha K) / 2.
      word1, word2 ((int)): The witness word indices.
      branch_inf_deriv (float): min over the witness words of inf |h'|.
      pushed_witness (UNIWitness or None): The witness pushed forward to the
        smallest admissible n0 (needs c3).
      provenance ({str: str}): How each constant was obtained.
    """
    alpha: float
    c1: float
    rho0: float
    rho: float
    c2: float
    c3: object
    c4: float
    d: float
    n0: int
    big_delta: float
    d_prime: float
    delta: float
    eta0: float
    eta: float
    epsilon: float
    f0_sup: float
    f0_inv_sup: float
    f0_holder: float
    delta_prime: float
    delta_pp: float
    k_fed: float
    delta_ppp: float
    word1: tuple
    word2: tuple
    branch_inf_deriv: float
    pushed_witness: object = None
    provenance: dict = field(default_factory=dict, compare=False)

    def to_dict(self):
        """
        Returns:
          ({str: *}): A JSON-ready view of the ledger.
        """
        out = {f.name: getattr(self, f.name) for f in fields(self) \
                if f.name not in ('pushed_witness', 'provenance')}
        out['word1'] = list(self.word1)
        out['word2'] = list(self.word2)
        out['pushed_witness'] = None if self.pushed_witness is None \
                else self.pushed_witness.to_dict()
        out['provenance'] = dict(self.provenance)
        return out



@dataclass(frozen=True)
class AdmissibilityReport:
    """
    The largeness conditions on n0.

    Instance Attributes:
      n0 (int): The length checked.
      large1 (bool): C1^a C4 rho^n0 (4 pi/D)^a <= sqrt(2 - 2 cos(pi/12)) / 4.
      large2 (bool): 2 rho^n0 (1 + C1^a C4) <= 1.
      large3 (bool): C3 rho^n0 <= 1/3.
      c4_vs_c3 (bool): C4 >= 6 C3.
      smallest_admissible (int): The smallest n >= n0 passing all three.
    """
    n0: int
    large1: bool
    large2: bool
    large3: bool
    c4_vs_c3: bool
    smallest_admissible: int

    @property
    def passed(self):
        """
        (bool): True if n0 passes the three largeness conditions.
        """
        return self.large1 and self.large2 and self.large3



def _delta_constraints(delta, c1, alpha, c4, c2, d):
    expo = c1 ** alpha * c4 * delta ** alpha
    return expo < 1.0 / 6.0 \
            and (2.0 / 3.0) * math.exp(expo) < ETA0 \
            and delta < 2.0 * math.pi / d \
            and 2.0 * c2 * delta < math.pi / 6.0



def _largest_delta(c1, alpha, c4, c2, d, tol=1e-10):
    lo, hi = 0.0, min(2.0 * math.pi / d, math.pi / (12.0 * c2))
    if _delta_constraints(hi * (1.0 - 1e-15), c1, alpha, c4, c2, d):
        return hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _delta_constraints(mid, c1, alpha, c4, c2, d):
            lo = mid
        else:
            hi = mid
    return lo



def _large_flags(ledger, n):
    rho_n = ledger.rho ** n
    c1a = ledger.c1 ** ledger.alpha
    large1 = c1a * ledger.c4 * rho_n \
            * (4.0 * math.pi / ledger.d) ** ledger.alpha <= _LARGE1_RHS
    large2 = 2.0 * rho_n * (1.0 + c1a * ledger.c4) <= 1.0
    large3 = ledger.c3 * rho_n <= 1.0 / 3.0
    return large1, large2, large3



def n0_admissible(ledger, n0):
    """
    Evaluates the three largeness conditions and C4 >= 6 C3 at n0, and finds
    the smallest admissible length from n0 on.

    Args:
      ledger (ConstantsLedger): The ledger, with C3 measured.
      n0 (int): The length to check.

    Returns:
      (AdmissibilityReport): The flags.

    Raises:
      (LedgerIncomplete): C3 has not been measured.
    """
    if ledger.c3 is None:
        logger.critical('Admissibility needs the measured C3')
        raise LedgerIncomplete('C3 is not in the ledger')
    flags = _large_flags(ledger, n0)
    smallest = n0
    while not all(_large_flags(ledger, smallest)):
        smallest += 1
        assert smallest < _MAX_N0, 'No admissible n0 found'
    return AdmissibilityReport(int(n0), *flags,
            c4_vs_c3=ledger.c4 >= 6.0 * ledger.c3,
            smallest_admissible=int(smallest))



def twist_epsilon(roof):
    """
    The half-width of the twist domain |sigma| < epsilon on which the ledger's
    constants are used.

    Args:
      roof (RoofFunction): The roof.

    Returns:
      (float): min(inf R eps_roof / 2, 0.99).
    """
    return min(0.5 * roof.inf_value() * roof.epsilon, 0.99)



def build_ledger(exp_map, roof, spectral0, witness, c3=None, n_grid=4096):
    """
    Derives every constant of the ledger.

    Args:
      exp_map (ExpandingMap): The map.
      roof (RoofFunction): The roof.
      spectral0 (SpectralData): The leading spectral data at sigma = 0.
      witness (UNIWitness or None): The UNI witness.
      c3 (float or None): The measured Lasota-Yorke constant, if known.
      n_grid (int): The grid for inf |h'| over the witness words.

    Returns:
      (ConstantsLedger): The ledger.

    Raises:
      (NoUNIWitness): `witness` is None.
    """
    if witness is None:
        logger.critical(f'No UNI witness for {exp_map!r} / {roof!r}')
        raise NoUNIWitness('A ledger needs a UNI witness')

    alpha, c1, rho0 = exp_map.alpha, exp_map.c1, exp_map.rho0
    rho = rho0 ** alpha
    c2 = c1 ** 2 / (1.0 - rho)
    f0_sup = spectral0.density_sup
    f0_inv_sup = spectral0.density_inv_sup
    f0_holder = spectral0.density_holder
    c4 = 8.0 * f0_inv_sup * f0_holder * c1 + 5.0 * c2
    d = witness.d
    big_delta = 2.0 * math.pi / d
    d_prime = max(4.0 * math.pi / d, 2.0)
    delta = 0.99 * _largest_delta(c1, alpha, c4, c2, d)

    grid = np.linspace(0.0, 1.0, n_grid)
    branch_inf = min(float(np.min(np.abs(words_mod.branch_eval(w, grid)[1]))) \
            for w in (witness.word1, witness.word2))
    eta = max(ETA0, 1.0 - delta * branch_inf / 3.0)
    epsilon = twist_epsilon(roof)

    delta_prime = delta / (4.0 * delta + 6.0 * big_delta)
    delta_pp = delta_prime / (f0_inv_sup * f0_sup)
    k_fed = 2.0 * f0_inv_sup * f0_holder + 2.0 * c2
    delta_ppp = 0.5 * delta_pp \
            * math.exp(-(2.0 * delta + 2.0 * big_delta) ** alpha * k_fed)

    provenance = {
        'alpha': 'declared', 'c1': 'declared', 'rho0': 'declared',
        'rho': 'rho0^alpha', 'c2': 'C1^2/(1-rho)',
        'c3': 'measured (Lasota-Yorke report)' if c3 is not None \
                else 'not measured',
        'c4': '8|f0^-1||f0|_alpha C1 + 5 C2',
        'd': 'nominal (no UNI witness; negative control)' \
                if witness.nominal else 'UNI scan grid infimum',
        'n0': 'UNI witness length', 'big_delta': '2 pi / D',
        'd_prime': 'max(4 pi / D, 2)',
        'delta': '0.99 x bisection supremum of the four constraints',
        'eta0': '(sqrt 7 - 1)/2', 'eta': 'max(eta0, 1 - delta P / 3)',
        'epsilon': 'min(0.5 inf R eps_roof, 0.99)',
        'f0': 'power iteration at sigma=0',
        'delta_prime': 'delta / (4 delta + 6 Delta)',
        'delta_pp': 'delta\' inf f0 / sup f0',
        'k_fed': '2|f0^-1||f0|_alpha + 2 C2',
        'delta_ppp': 'delta\'\' exp(-(2 delta + 2 Delta)^alpha K) / 2',
    }
    ledger = ConstantsLedger(alpha=alpha, c1=c1, rho0=rho0, rho=rho, c2=c2,
            c3=c3, c4=c4, d=d, n0=witness.n0, big_delta=big_delta,
            d_prime=d_prime, delta=delta, eta0=ETA0, eta=eta, epsilon=epsilon,
            f0_sup=f0_sup, f0_inv_sup=f0_inv_sup, f0_holder=f0_holder,
            delta_prime=delta_prime, delta_pp=delta_pp, k_fed=k_fed,
            delta_ppp=delta_ppp, word1=witness.word1.indices,
            word2=witness.word2.indices, branch_inf_deriv=branch_inf,
            provenance=provenance)

    if c3 is not None and not witness.nominal:
        report = n0_admissible(ledger, witness.n0)
        if not report.passed:
            logger.warning(f'Witness n0={witness.n0} is not admissible;'
                    + f' smallest admissible n0 is'
                    + f' {report.smallest_admissible}')
        pushed = scan.push_forward_witness(witness, roof,
                report.smallest_admissible - witness.n0, n_grid)
        ledger = replace(ledger, pushed_witness=pushed)

    logger.info(f'Ledger built: C2={c2:.6g}, C4={c4:.6g}, delta={delta:.6g},'
            + f' eta={eta:.6g}')
    return ledger
