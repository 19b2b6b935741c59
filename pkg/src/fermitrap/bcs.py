"""Reduced BCS model on a ladder of doubly degenerate levels.

Mean-field treatment: the gap solves

    1 = lambda d sum_j 1 / (2 sqrt(eps_j^2 + Delta^2))

(from Delta = lambda d sum_j <b_{j-} b_{j+}> with <b_{j-} b_{j+}> = u_j v_j),
and the Bogoliubov amplitudes follow from Delta and the level energies.
Level j is attached to oscillator mode j - 1 when position kernels are
needed.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import DegenerateLevelError, DomainError, InvalidParameterError
from .oscillator import _check_position


def build_levels(M, d):
    """Equally spaced ladder ``eps_j = d (j - (M+1)/2)``, j = 1..M, centred on zero."""
    if isinstance(M, bool) or int(M) != M or M < 1:
        raise DomainError(f"level count must be a positive integer, got {M!r}")
    if not d > 0 or not math.isfinite(d):
        raise DomainError(f"level spacing must be positive, got {d!r}")
    j = np.arange(1, int(M) + 1, dtype=np.float64)
    return d * (j - (M + 1) / 2.0)


def gap_residual(levels, lam, d, delta):
    """``lambda d sum 1/(2E_j) - 1``; strictly decreasing in ``delta``."""
    levels = np.asarray(levels, dtype=np.float64)
    energies = np.sqrt(levels * levels + delta * delta)
    with np.errstate(divide="ignore"):
        return lam * d * math.fsum(0.5 / energies) - 1.0


def solve_gap(levels, lam, d, tol=None, max_iter=400):
    """Self-consistent gap by bracketing and bisection.

    Returns 0.0 when the coupling is too weak for a nontrivial solution
    (only possible if no level sits at zero energy).  ``tol`` bounds the
    residual of the gap equation; default ``1e-12 * d``.
    """
    levels = np.asarray(levels, dtype=np.float64)
    if not lam > 0:
        raise DomainError(f"coupling must be positive, got {lam!r}")
    if not d > 0:
        raise DomainError(f"level spacing must be positive, got {d!r}")
    if tol is None:
        tol = 1e-12 * d
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")

    if np.all(levels != 0.0) and gap_residual(levels, lam, d, 0.0) <= 0.0:
        return 0.0

    lo, hi = 0.0, d
    while gap_residual(levels, lam, d, hi) > 0.0:
        lo, hi = hi, 2.0 * hi
    mid = 0.5 * (lo + hi)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        r = gap_residual(levels, lam, d, mid)
        if abs(r) < tol or mid in (lo, hi):
            break
        if r > 0.0:
            lo = mid
        else:
            hi = mid
    return mid


def bogoliubov(levels, delta):
    """Nonnegative amplitudes ``u_j, v_j`` and the pair number ``Q = sum v_j^2``.

    ``v_j^2 = (1 - eps_j/E_j)/2`` is evaluated in the cancellation-free form
    for whichever of ``u_j^2``, ``v_j^2`` is the small one.
    """
    levels = np.asarray(levels, dtype=np.float64)
    if delta < 0:
        raise DomainError(f"gap must be nonnegative, got {delta!r}")
    if delta == 0.0 and np.any(levels == 0.0):
        raise DegenerateLevelError("zero gap with a level at the Fermi energy leaves v ill-defined")
    energies = np.sqrt(levels * levels + delta * delta)
    small = delta * delta / (2.0 * energies * (energies + np.abs(levels)))
    v2 = np.where(levels > 0.0, small, 1.0 - small)
    u2 = np.where(levels > 0.0, 1.0 - small, small)
    # eps = 0 with delta > 0 gives small = 1/2 on both branches
    return np.sqrt(u2), np.sqrt(v2), math.fsum(v2)


@dataclass(frozen=True, eq=False)
class BcsModel:
    M: int
    d: float
    lam: float
    levels: np.ndarray
    delta: float
    u: np.ndarray
    v: np.ndarray
    Q: float

    @property
    def v2(self):
        return self.v * self.v

    def check(self):
        u2 = self.u * self.u
        v2 = self.v2
        if np.max(np.abs(u2 + v2 - 1.0)) > 1e-12:
            raise InvalidParameterError("u^2 + v^2 != 1")
        target = self.delta ** 2 / (self.levels ** 2 + self.delta ** 2)
        if np.max(np.abs(4.0 * u2 * v2 - target)) > 1e-10:
            raise InvalidParameterError("4u^2v^2 != Delta^2/(eps^2 + Delta^2)")
        if self.delta > 0 and abs(gap_residual(self.levels, self.lam, self.d, self.delta)) >= 1e-10:
            raise InvalidParameterError("gap equation not satisfied")
        if not 0.0 < self.Q < self.M:
            raise InvalidParameterError(f"pair number {self.Q} outside (0, {self.M})")
        return self


def build_model(M, d, lam, tol=None):
    """Solve the gap on the symmetric ladder and return a checked ``BcsModel``."""
    levels = build_levels(M, d)
    delta = solve_gap(levels, lam, d, tol)
    u, v, Q = bogoliubov(levels, delta)
    for arr in (levels, u, v):
        arr.setflags(write=False)
    return BcsModel(int(M), float(d), float(lam), levels, delta, u, v, Q).check()


@dataclass(frozen=True)
class BcsKernels:
    f: float
    v2: float

    @property
    def re_fv2(self):
        return self.f * self.v2


def bcs_kernels(model, xi, xi_p, mode_map=None, v2=None):
    """Position kernels of the paired state.

        f   = sum_j phi_{m(j)}(x) phi_{m(j)}(x')
        v^2 = sum_j v_j^2 phi_{m(j)}(x) phi_{m(j)}(x')

    ``mode_map`` gives the oscillator mode of each level (default: level j on
    mode j-1).  ``v2`` overrides the model's occupations.
    """
    xi = float(_check_position(xi))
    xi_p = float(_check_position(xi_p))
    weights = model.v2 if v2 is None else np.asarray(v2, dtype=np.float64)
    if weights.shape != (model.M,):
        raise DomainError(f"need {model.M} occupations, got shape {weights.shape}")
    modes = np.arange(model.M) if mode_map is None else np.asarray(mode_map, dtype=int)
    if modes.shape != (model.M,) or np.any(modes < 0):
        raise DomainError("mode_map must give one nonnegative mode per level")
    if mode_map is None:
        f, _, _, fw = _backend.overlap_sums(model.M, xi, xi_p, weights)
        return BcsKernels(float(f), float(fw))
    table = _backend.ladder(int(modes.max()), np.array([xi, xi_p]))
    prod = table[modes, 0] * table[modes, 1]
    return BcsKernels(float(np.sum(prod)), float(np.sum(weights * prod)))


def uniform_overlap_threshold(Q, M):
    """|y| where the uniform-overlap concurrence starts (sqrt(Q/2M)) and peaks (sqrt(Q/M))."""
    if not 0 < Q <= M:
        raise DomainError(f"need 0 < Q <= M, got Q={Q!r}, M={M!r}")
    return math.sqrt(Q / (2.0 * M)), math.sqrt(Q / M)


def uniform_overlap_re_fv2(y_abs2, Q, M):
    """Re(f v^2) when every mode product equals y: f = M y, v^2 = Q y."""
    return M * Q * y_abs2
