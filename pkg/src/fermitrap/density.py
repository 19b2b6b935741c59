"""Normalized 4x4 two-spin density matrices.

Rows and columns run over ``(s, s')`` with ``s`` the spin at the first
position and ``s'`` at the second: ``uu, ud, du, dd`` for the trap and
``++, +-, -+, --`` (time-reversed partners) for BCS.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePointError, InvalidKernelError, InvalidStateError
from .pairs import TrapConfiguration, _as_config, odd_correction, pair_kernels

TRAP_BASIS = ("uu", "ud", "du", "dd")
BCS_BASIS = ("++", "+-", "-+", "--")

TRACE_TOL = 1e-12
PSD_TOL = 1e-12
HERMITIAN_TOL = 1e-12
# Normalizers below this are treated as underflowed tails.  Kept far above
# the subnormal range so F**2 and N(x)N(x') are still fully accurate.
DEGENERACY_FLOOR = 1e-200

_X_ZERO = [(i, j) for i in range(4) for j in range(4)
           if i != j and (i, j) not in ((1, 2), (2, 1))]


@dataclass(frozen=True, eq=False)
class TwoSpinDensityMatrix:
    """Validated two-qubit density matrix."""

    matrix: np.ndarray
    basis: tuple = TRAP_BASIS

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.result_type(self.matrix, np.float64))
        if m.shape != (4, 4):
            raise InvalidStateError(f"expected a 4x4 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidStateError("matrix has non-finite entries")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
            raise InvalidStateError("matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL:
            raise InvalidStateError(f"trace {np.trace(m).real!r} is not 1")
        if self.min_eigenvalue() < -PSD_TOL:
            raise InvalidStateError(
                f"matrix is not positive semidefinite (min eigenvalue {self.min_eigenvalue():.3e})")

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)

    def min_eigenvalue(self):
        return float(np.linalg.eigvalsh(self.matrix)[0])

    def is_x_state(self, tol=0.0):
        m = self.matrix
        return all(abs(m[i, j]) <= tol for i, j in _X_ZERO)

    def is_spin_symmetric(self, tol=1e-14):
        """(1,1) == (4,4) and (2,2) == (3,3)."""
        m = self.matrix
        return abs(m[0, 0] - m[3, 3]) <= tol and abs(m[1, 1] - m[2, 2]) <= tol

    def swapped(self):
        """The same state with the two sites exchanged."""
        perm = [0, 2, 1, 3]
        return TwoSpinDensityMatrix(self.matrix[np.ix_(perm, perm)], self.basis)


def _check_normalizer(value, scale):
    if not np.isfinite(value) or value <= DEGENERACY_FLOOR * max(1.0, scale):
        raise DegeneratePointError(
            f"density-matrix normalizer {value!r} vanishes; both points lie in the density tail")


def _pair_block(diag, inner, coherence):
    return np.array([
        [diag, 0.0, 0.0, 0.0],
        [0.0, inner, coherence, 0.0],
        [0.0, coherence, inner, 0.0],
        [0.0, 0.0, 0.0, diag],
    ])


def even_numerator(k):
    """Unnormalized filled-sea matrix: diag (NN'-F^2, NN', NN', NN'-F^2), coherence -F^2."""
    nn = k.N_x * k.N_xp
    return _pair_block(k.exchange, nn, -k.F * k.F)


def rho_even(k):
    """Two-spin state for a filled sea from its ``PairKernels``."""
    nn = k.N_x * k.N_xp
    norm = 2.0 * nn + 2.0 * k.exchange
    _check_normalizer(norm, nn)
    return TwoSpinDensityMatrix(even_numerator(k) / norm, TRAP_BASIS)


def rho_odd(cfg, xi, xi_p):
    """Two-spin state for odd N: filled-sea matrix plus extra-atom correction, unit trace."""
    cfg = _as_config(cfg)
    k = pair_kernels(cfg, float(xi), float(xi_p))
    total = even_numerator(k) + odd_correction(cfg, xi, xi_p).matrix()
    norm = float(np.trace(total))
    _check_normalizer(norm, k.N_x * k.N_xp)
    return TwoSpinDensityMatrix(total / norm, TRAP_BASIS)


def rho_trap(cfg, xi, xi_p):
    """``rho_even`` or ``rho_odd`` depending on the parity of ``cfg``."""
    cfg = _as_config(cfg)
    if cfg.parity == "odd":
        return rho_odd(cfg, xi, xi_p)
    return rho_even(pair_kernels(cfg, float(xi), float(xi_p)))


def rho_bcs(Q, re_fv2):
    """Two-site state of time-reversed partners in the BCS ground state.

    ``Q`` is the pair number and ``re_fv2`` the real part of f * v^2.
    """
    Q = float(Q)
    re_fv2 = float(re_fv2)
    q2 = Q * Q
    norm = 4.0 * q2 - 2.0 * re_fv2
    if not np.isfinite(norm) or norm <= 1e-14 * max(1.0, q2):
        raise DegeneratePointError(f"BCS normalizer 4Q^2 - 2Re(fv^2) = {norm!r} is not positive")
    if re_fv2 - q2 > 1e-12 * max(1.0, q2):
        raise InvalidKernelError(
            f"Re(fv^2) = {re_fv2!r} exceeds Q^2 = {q2!r}; matrix would not be positive")
    return TwoSpinDensityMatrix(_pair_block(q2 - re_fv2, q2, -re_fv2) / norm, BCS_BASIS)


def singlet():
    return TwoSpinDensityMatrix(_pair_block(0.0, 0.5, -0.5))


def maximally_mixed():
    return TwoSpinDensityMatrix(np.eye(4) / 4.0)


__all__ = [
    "TwoSpinDensityMatrix", "TrapConfiguration", "rho_even", "rho_odd", "rho_trap",
    "rho_bcs", "even_numerator", "singlet", "maximally_mixed", "TRAP_BASIS", "BCS_BASIS",
]
