#!/usr/bin/env python3
"""
Complex-valued functions sampled on a uniform grid over [0,1], with the norms
used throughout: the sup norm, the Holder seminorm and the b-norm
||v||_b = max{|v|_inf, |v|_alpha / (1 + |b|^alpha)}.

Values between nodes are piecewise-linear interpolations.

Module Attributes:
  N/A

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import numpy as np



def holder_seminorm_of(values, alpha, full=False):
    """
    Holder seminorm of nodal values on a uniform grid of [0,1].

    Args:
      values (ndarray): The N+1 nodal values (real or complex).
      alpha (float): The Holder exponent.
      full (bool): Scan all separations (O(N^2)) instead of dyadic ones.

    Returns:
      (float): max |v(x)-v(y)| / |x-y|^alpha over the separations scanned.
    """
    values = np.asarray(values)
    n_intervals = len(values) - 1
    if n_intervals < 1:
        return 0.0
    step = 1.0 / n_intervals
    if full:
        seps = range(1, n_intervals + 1)
    else:
        seps = [1 << j for j in range(int(np.log2(n_intervals)) + 1)]
        if seps[-1] != n_intervals:
            seps.append(n_intervals)
    best = 0.0
    for k in seps:
        diff = np.max(np.abs(values[k:] - values[:-k]))
        best = max(best, float(diff / (k * step) ** alpha))
    return best



class GridFunction:
    """
    A function on N+1 equally spaced nodes of [0,1].  Instances are treated as
    immutable; arithmetic returns new instances.

    Class Attributes:
      N/A

    Instance Attributes:
      _values (ndarray): The complex nodal values (read-only).
      _alpha (float): The Holder exponent for the seminorm.
    """
    def __init__(self, values, alpha=1.0):
        """
        Creates the grid function.

        Args:
          values (array-like): The nodal values, length N+1 >= 2.
          alpha (float): The Holder exponent in (0,1].
        """
        vals = np.array(values, dtype=complex)
        assert vals.ndim == 1 and len(vals) >= 2
        vals.setflags(write=False)
        self._values = vals
        self._alpha = float(alpha)



    @classmethod
    def from_callable(cls, func, n_intervals, alpha=1.0):
        """
        Samples a vectorized function on the grid.

        Args:
          func (callable): Maps an ndarray of points to values.
          n_intervals (int): The number N of grid intervals.
          alpha (float): The Holder exponent.

        Returns:
          (GridFunction): The sampled function.
        """
        nodes = np.linspace(0.0, 1.0, n_intervals + 1)
        return cls(np.broadcast_to(func(nodes), nodes.shape), alpha)



    @classmethod
    def constant(cls, value, n_intervals, alpha=1.0):
        """
        Args:
          value (complex): The constant.
          n_intervals (int): The number N of grid intervals.
          alpha (float): The Holder exponent.

        Returns:
          (GridFunction): The constant function.
        """
        return cls(np.full(n_intervals + 1, value, dtype=complex), alpha)



    def __repr__(self):
        return f'GridFunction(N={self.n_intervals}, alpha={self._alpha})'



    @property
    def values(self):
        """
        (ndarray): The complex nodal values.
        """
        return self._values



    @property
    def alpha(self):
        """
        (float): The Holder exponent.
        """
        return self._alpha



    @property
    def n_intervals(self):
        """
        (int): The number N of grid intervals.
        """
        return len(self._values) - 1



    @property
    def nodes(self):
        """
        (ndarray): The N+1 grid nodes.
        """
        return np.linspace(0.0, 1.0, self.n_intervals + 1)



    @property
    def real(self):
        """
        (ndarray): The real parts of the nodal values.
        """
        return self._values.real



    def __call__(self, y):
        """
        Interpolates piecewise linearly.

        Args:
          y (float or ndarray): Points in [0,1].

        Returns:
          (complex or ndarray): The interpolated values.
        """
        return interpolate(self._values, y)



    def sup_norm(self):
        """
        Returns:
          (float): max over nodes of |v|.
        """
        return float(np.max(np.abs(self._values)))



    def holder_seminorm(self, full=False):
        """
        Args:
          full (bool): Scan all node pairs instead of dyadic separations.

        Returns:
          (float): The Holder seminorm |v|_alpha.
        """
        return holder_seminorm_of(self._values, self._alpha, full)



    def b_norm(self, b, full=False):
        """
        Args:
          b (float): The frequency.
          full (bool): Scan all node pairs for the seminorm.

        Returns:
          (float): ||v||_b.
        """
        return max(self.sup_norm(),
                self.holder_seminorm(full) / (1.0 + abs(b) ** self._alpha))



    def resample(self, n_intervals):
        """
        Args:
          n_intervals (int): The new number of grid intervals.

        Returns:
          (GridFunction): The interpolant sampled on the new grid.
        """
        nodes = np.linspace(0.0, 1.0, n_intervals + 1)
        return GridFunction(self(nodes), self._alpha)



    def map_values(self, func):
        """
        Args:
          func (callable): Applied to the nodal value array.

        Returns:
          (GridFunction): func applied nodewise.
        """
        return GridFunction(func(self._values), self._alpha)



    def _other_values(self, other):
        if isinstance(other, GridFunction):
            assert other.n_intervals == self.n_intervals, 'Grids must match'
            return other.values
        return other



    def __add__(self, other):
        return GridFunction(self._values + self._other_values(other),
                self._alpha)

    __radd__ = __add__



    def __sub__(self, other):
        return GridFunction(self._values - self._other_values(other),
                self._alpha)



    def __rsub__(self, other):
        return GridFunction(self._other_values(other) - self._values,
                self._alpha)



    def __mul__(self, other):
        return GridFunction(self._values * self._other_values(other),
                self._alpha)

    __rmul__ = __mul__



    def __truediv__(self, other):
        return GridFunction(self._values / self._other_values(other),
                self._alpha)



    def __neg__(self):
        return GridFunction(-self._values, self._alpha)



    def __abs__(self):
        return GridFunction(np.abs(self._values), self._alpha)



def interpolate(values, y):
    """
    Piecewise-linear interpolation of nodal values on the uniform grid.

    Args:
      values (ndarray): The N+1 nodal values (real or complex).
      y (float or ndarray): Points in [0,1].

    Returns:
      (complex or ndarray): The interpolated values.
    """
    nodes = np.linspace(0.0, 1.0, len(values))
    if np.iscomplexobj(values):
        return np.interp(y, nodes, values.real) \
                + 1j * np.interp(y, nodes, values.imag)
    return np.interp(y, nodes, values)
