"""Normalized one-dimensional harmonic-oscillator eigenfunctions.

Positions are dimensionless, ``xi = alpha * x`` with ``alpha = sqrt(m omega / hbar)``.
Values come from the normalized three-term recurrence

    phi_0 = pi**(-1/4) exp(-xi**2 / 2)
    phi_1 = sqrt(2) xi phi_0
    phi_{n+1} = sqrt(2/(n+1)) xi phi_n - sqrt(n/(n+1)) phi_{n-1}

which never forms a Hermite polynomial or a factorial and so does not
overflow.  Far outside the cloud the Gaussian underflows and every mode
evaluates to exactly 0.0.
"""

from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import DomainError

DEFAULT_N_MAX = 500


def _check_position(xi):
    arr = np.asarray(xi, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise DomainError("position must be finite")
    return arr


@dataclass(frozen=True)
class OscillatorBasis:
    """Evaluator for phi_0 .. phi_{n_max}."""

    n_max: int = DEFAULT_N_MAX

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 0:
            raise DomainError(f"n_max must be a nonnegative integer, got {self.n_max!r}")

    def _check_index(self, n):
        if isinstance(n, bool) or int(n) != n:
            raise DomainError(f"mode index must be an integer, got {n!r}")
        if n < 0 or n > self.n_max:
            raise DomainError(f"mode index {n} outside [0, {self.n_max}]")
        return int(n)

    def eval_ladder(self, n_top, xi):
        """phi_0(xi) .. phi_{n_top}(xi).

        Scalar ``xi`` gives a vector of length ``n_top + 1``; an array gives
        shape ``(n_top + 1,) + xi.shape``.
        """
        n_top = self._check_index(n_top)
        arr = _check_position(xi)
        out = _backend.ladder(n_top, arr)
        return out.reshape((n_top + 1,) + arr.shape)

    def eval_mode(self, n, xi):
        """phi_n(xi); float for scalar input, array otherwise."""
        n = self._check_index(n)
        row = self.eval_ladder(n, xi)[n]
        return float(row) if row.ndim == 0 else row


_default = OscillatorBasis()


def eval_mode(n, xi, basis=_default):
    return basis.eval_mode(n, xi)


def eval_ladder(n_top, xi, basis=_default):
    return basis.eval_ladder(n_top, xi)


def overlap_bound(n_top, grid):
    """max over the grid pair of |phi_n(xi) phi_n(xi')| for every n <= n_top.

    The product is maximal at the largest |phi_n| on the grid, so this is
    ``max|phi_n|**2`` per mode.
    """
    values = eval_ladder(n_top, np.asarray(grid, dtype=np.float64))
    peak = np.max(np.abs(values), axis=1)
    return peak * peak


GROUND_PEAK = _backend.GROUND_PEAK
