"""Kernel backend selection.

The compiled core is used when it was built; otherwise the numpy fallback.
Both expose ``ladder``, ``overlap_sums`` and ``exchange_sums`` with identical
signatures.
"""

import math
from functools import lru_cache

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

NAME = "compiled" if _ckernels is not None else "python"
_active = BACKENDS[NAME]

# phi_0(0) = pi**(-1/4)
GROUND_PEAK = math.pi ** -0.25


def active():
    return NAME


def select(name):
    """Switch the process-wide kernel backend (``"compiled"`` or ``"python"``)."""
    global NAME, _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    NAME = name
    _active = BACKENDS[name]


@lru_cache(maxsize=None)
def _coefficients(n):
    # up[k] = sqrt(2/(k+1)), down[k] = sqrt(k/(k+1)); length >= 1 for the C signature
    k = np.arange(max(n, 1), dtype=np.float64)
    up = np.sqrt(2.0 / (k + 1.0))
    down = np.sqrt(k / (k + 1.0))
    up.setflags(write=False)
    down.setflags(write=False)
    return up, down


def ladder(n_top, x, backend=None):
    """Rows 0..n_top of the normalized Hermite functions at the points ``x``."""
    impl = BACKENDS[backend] if backend else _active
    x = np.ascontiguousarray(x, dtype=np.float64).ravel()
    up, down = _coefficients(n_top)
    return impl.ladder(int(n_top), x, up, down, GROUND_PEAK)


def overlap_sums(n_modes, x, xp, weights=None, backend=None):
    """Sums over modes 0..n_modes-1 at paired points.

    Returns ``(F, N(x), N(xp), Fw)`` with ``F = sum phi_k(x) phi_k(xp)`` and
    ``Fw = sum w_k phi_k(x) phi_k(xp)``.
    """
    impl = BACKENDS[backend] if backend else _active
    x, xp = np.broadcast_arrays(np.asarray(x, dtype=np.float64),
                                np.asarray(xp, dtype=np.float64))
    shape = x.shape
    x = np.ascontiguousarray(x).ravel()
    xp = np.ascontiguousarray(xp).ravel()
    if weights is None:
        w = np.ones(max(n_modes, 1))
    else:
        w = np.ascontiguousarray(weights, dtype=np.float64)
        if w.shape[0] < n_modes:
            raise ValueError("need one weight per mode")
    up, down = _coefficients(n_modes)
    out = impl.overlap_sums(int(n_modes), x, xp, w, up, down, GROUND_PEAK)
    return tuple(np.asarray(a).reshape(shape) for a in out)


def exchange_sums(n_modes, x, xp, backend=None):
    """``N(x)N(xp) - F**2`` over modes 0..n_modes-1, free of cancellation.

    Uses the Lagrange identity
    ``sum_{m<n} (phi_m(x) phi_n(xp) - phi_n(x) phi_m(xp))**2``, so the result is
    a sum of squares: nonnegative, and exactly zero for a single mode.
    """
    impl = BACKENDS[backend] if backend else _active
    x, xp = np.broadcast_arrays(np.asarray(x, dtype=np.float64),
                                np.asarray(xp, dtype=np.float64))
    shape = x.shape
    x = np.ascontiguousarray(x).ravel()
    xp = np.ascontiguousarray(xp).ravel()
    up, down = _coefficients(n_modes)
    return np.asarray(impl.exchange_sums(int(n_modes), x, xp, up, down, GROUND_PEAK)).reshape(shape)
