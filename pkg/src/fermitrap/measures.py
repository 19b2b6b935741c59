"""Entanglement measures for two-spin states.

Concurrences are returned as plain floats in [0, 1].
"""

from dataclasses import dataclass

import numpy as np

from .density import DEGENERACY_FLOOR, PSD_TOL, TwoSpinDensityMatrix
from .errors import DegeneratePointError, InvalidParameterError, InvalidStateError

PPT_TOL = 1e-12

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SPIN_FLIP = np.kron(_SIGMA_Y, _SIGMA_Y)


def _clamp(c):
    return np.clip(c, 0.0, 1.0)


def concurrence_pair(k):
    """Closed-form concurrence of the filled-sea state.

        C = 2 max(2F^2 - N(x)N(x'), 0) / |4 N(x)N(x') - 2F^2|

    Works elementwise when the kernel fields are arrays.
    """
    F = np.asarray(k.F, dtype=np.float64)
    nn = np.asarray(k.N_x, dtype=np.float64) * np.asarray(k.N_xp, dtype=np.float64)
    hole = np.asarray(k.exchange, dtype=np.float64)
    f2 = F * F
    # 4NN' - 2F^2 and 2F^2 - NN' rewritten through the exchange term NN' - F^2
    norm = np.abs(2.0 * nn + 2.0 * hole)
    bad = ~(norm > DEGENERACY_FLOOR * np.maximum(1.0, nn))
    if np.any(bad):
        raise DegeneratePointError(
            f"{int(np.count_nonzero(bad))} point(s) with vanishing normalizer")
    c = _clamp(2.0 * np.maximum(f2 - hole, 0.0) / norm)
    return float(c) if c.ndim == 0 else c


def concurrence_bcs_uniform(y_abs2, Q, M):
    """Concurrence of the BCS pair state when every mode overlap equals y.

        C = max((2|y|^2 - Q/M) / (2Q/M - |y|^2), 0)

    Zero up to |y|^2 = Q/2M, one at |y|^2 = Q/M.  Beyond Q/M the expression
    exceeds one (the state is no longer positive) and is clamped.
    """
    y_abs2 = float(y_abs2)
    Q = float(Q)
    if not 0.0 <= y_abs2 <= 1.0:
        raise InvalidParameterError(f"|y|^2 must lie in [0, 1], got {y_abs2!r}")
    if not 0.0 < Q <= M:
        raise InvalidParameterError(f"need 0 < Q <= M, got Q={Q!r}, M={M!r}")
    ratio = Q / M
    denom = 2.0 * ratio - y_abs2
    if denom <= 0.0:
        raise InvalidParameterError(
            f"|y|^2 = {y_abs2!r} at or beyond 2Q/M = {2 * ratio!r}")
    numer = max(2.0 * y_abs2 - ratio, 0.0)
    return float(min(numer / denom, 1.0))


def _matrix(rho):
    if isinstance(rho, TwoSpinDensityMatrix):
        return rho.matrix
    return TwoSpinDensityMatrix(rho).matrix


def wootters_concurrence(rho):
    """Wootters concurrence ``max(0, l1 - l2 - l3 - l4)``.

    The ``l_i`` are the square roots of the eigenvalues of
    rho (Y x Y) rho* (Y x Y).  With rho = W W^+ (W = eigenvectors scaled by
    sqrt of the eigenvalues) they equal the singular values of the complex
    symmetric matrix W^T (Y x Y) W, which is how they are computed here:
    the product-matrix spectrum squares the small l_i and loses about half
    the digits near rank-deficient states such as the singlet.

    ``rho`` may be a ``TwoSpinDensityMatrix`` or any 4x4 array; arrays are
    validated first.
    """
    m = _matrix(rho)
    w, vecs = np.linalg.eigh(m)
    if w[0] < -PSD_TOL:
        raise InvalidStateError("state is not positive semidefinite")
    scaled = vecs * np.sqrt(np.clip(w, 0.0, None))
    tau = scaled.T @ SPIN_FLIP @ scaled
    lam = np.linalg.svd(tau, compute_uv=False)
    return float(_clamp(lam[0] - lam[1] - lam[2] - lam[3]))


def partial_transpose(m):
    """Transpose on the second spin of a 4x4 matrix."""
    m = np.asarray(m)
    return m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


@dataclass(frozen=True)
class PptReport:
    min_pt_eigenvalue: float
    entangled: bool


def ppt_min_eigenvalue(rho):
    """Peres-Horodecki test: smallest eigenvalue of the partial transpose."""
    m = _matrix(rho)
    low = float(np.linalg.eigvalsh(partial_transpose(m))[0])
    return PptReport(low, low < -PPT_TOL)


def flags_agree(concurrence, report, floor=1e-9):
    """PPT flag matches C > 0, ignoring states where both signals are below ``floor``."""
    if abs(concurrence) <= floor and abs(report.min_pt_eigenvalue) <= floor:
        return True
    return report.entangled == (concurrence > 0.0)
