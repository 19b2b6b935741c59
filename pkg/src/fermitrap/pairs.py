"""Filled-sea correlation kernels for a one-dimensional harmonic trap.

The ground state doubly occupies oscillator modes 0..M-1.  For two points
the relevant one-body quantities are

    F(x, x')  = sum_{n<M} phi_n(x) phi_n(x')     (overlap)
    N(x)      = sum_{n<M} phi_n(x)**2            (density per spin)

For odd particle number one extra atom sits in mode M with a definite spin;
its contribution to the two-point spin matrix is collected in
``OddCorrection``.
"""

from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import DomainError
from .oscillator import _check_position

SPINS = ("up", "down")


@dataclass(frozen=True)
class TrapConfiguration:
    """N atoms in the lowest levels of the trap.

    ``M`` counts doubly occupied levels (modes 0..M-1).  For odd ``N`` the
    extra atom occupies mode ``M`` with spin ``extra_spin``.
    """

    N: int
    extra_spin: str = "up"

    def __post_init__(self):
        if isinstance(self.N, bool) or int(self.N) != self.N:
            raise DomainError(f"particle number must be an integer, got {self.N!r}")
        if self.N < 2:
            raise DomainError(f"need at least two atoms, got N={self.N}")
        if self.extra_spin not in SPINS:
            raise DomainError(f"extra_spin must be 'up' or 'down', got {self.extra_spin!r}")

    @property
    def M(self):
        return int(self.N) // 2

    @property
    def parity(self):
        return "even" if self.N % 2 == 0 else "odd"

    @property
    def occupied_modes(self):
        return range(self.M)

    @property
    def extra_mode(self):
        return self.M if self.parity == "odd" else None


def _as_config(cfg):
    if isinstance(cfg, TrapConfiguration):
        return cfg
    return TrapConfiguration(cfg)


def _unwrap(value):
    return float(value) if np.ndim(value) == 0 else value


@dataclass(frozen=True)
class PairKernels:
    """F, N(x) and N(x') at one point pair (or elementwise over arrays).

    ``exchange`` is ``N(x)N(x') - F**2``.  ``pair_kernels`` fills it from a
    sum of squares so it stays accurate where the difference cancels (and
    is exactly zero for a single level); hand-built kernels fall back to the
    direct difference.
    """

    F: float
    N_x: float
    N_xp: float
    exchange: float = None

    def __post_init__(self):
        if self.exchange is None:
            F = np.asarray(self.F, dtype=np.float64)
            value = np.asarray(self.N_x) * np.asarray(self.N_xp) - F * F
            object.__setattr__(self, "exchange", _unwrap(value))

    def check(self, rtol=1e-12):
        F, nx, nxp = (np.asarray(v) for v in (self.F, self.N_x, self.N_xp))
        if np.any(nx < 0) or np.any(nxp < 0):
            raise DomainError("densities must be nonnegative")
        if np.any(F * F > nx * nxp * (1 + rtol) + 1e-300):
            raise DomainError("kernels violate F**2 <= N(x) N(x')")
        return self


def pair_kernels(cfg, xi, xi_p):
    """``PairKernels`` for the filled sea of ``cfg`` (extra odd atom excluded)."""
    cfg = _as_config(cfg)
    xi = _check_position(xi)
    xi_p = _check_position(xi_p)
    F, nx, nxp, _ = _backend.overlap_sums(cfg.M, xi, xi_p)
    hole = _backend.exchange_sums(cfg.M, xi, xi_p)
    return PairKernels(_unwrap(F), _unwrap(nx), _unwrap(nxp), _unwrap(hole))


def kernel_F(cfg, xi, xi_p):
    return pair_kernels(cfg, xi, xi_p).F


def density_N(cfg, xi):
    """Number density per spin component, ``sum_{n<M} phi_n(xi)**2``."""
    cfg = _as_config(cfg)
    xi = _check_position(xi)
    _, nx, _, _ = _backend.overlap_sums(cfg.M, xi, xi)
    return _unwrap(nx)


@dataclass(frozen=True)
class OddCorrection:
    """Unnormalized contribution of the extra atom to the spin matrix.

    Entries are indexed in the ``(uu, ud, du, dd)`` basis (1-based, as in
    ``sigma23`` for the ``ud``/``du`` coherence).  Exactly one of
    ``sigma11``/``sigma44`` is nonzero, selected by the extra atom's spin.
    """

    sigma11: float
    sigma22: float
    sigma33: float
    sigma44: float
    sigma23: float
    phi_extra_x: float
    phi_extra_xp: float
    extra_spin: str = "up"

    def matrix(self):
        s = np.zeros((4, 4))
        s[0, 0] = self.sigma11
        s[1, 1] = self.sigma22
        s[2, 2] = self.sigma33
        s[3, 3] = self.sigma44
        s[1, 2] = s[2, 1] = self.sigma23
        return s


def odd_correction(cfg, xi, xi_p):
    """Extra-atom correction for odd N at a single point pair.

    With the extra atom in mode M and spin e, the spin-e one-body kernel
    gains ``p(x) p(x')`` where ``p = phi_M``.  Expanding the two-point
    expectation to first order in that term (it is exact: the quadratic
    pieces cancel) gives, for e = up,

        sigma11 = N(x) p(x')**2 + N(x') p(x)**2 - 2 F p(x) p(x')
        sigma22 = N(x') p(x)**2
        sigma33 = N(x) p(x')**2
        sigma23 = -F p(x) p(x')

    and the spin-flipped assignment for e = down.  ``sigma11`` is the growth
    of the exchange term from M to M+1 levels and is taken from the
    cancellation-free sums.
    """
    cfg = _as_config(cfg)
    if cfg.parity != "odd":
        raise DomainError(f"odd correction needs odd N, got N={cfg.N}")
    xi = float(_check_position(xi))
    xi_p = float(_check_position(xi_p))
    k = pair_kernels(cfg, xi, xi_p)
    extra = _backend.ladder(cfg.M, np.array([xi, xi_p]))[cfg.M]
    p, pp = float(extra[0]), float(extra[1])
    at_x = k.N_xp * p * p
    at_xp = k.N_x * pp * pp
    same_spin = float(_backend.exchange_sums(cfg.M + 1, xi, xi_p)) - k.exchange
    coherence = -k.F * p * pp
    if cfg.extra_spin == "up":
        return OddCorrection(same_spin, at_x, at_xp, 0.0, coherence, p, pp, "up")
    return OddCorrection(0.0, at_xp, at_x, same_spin, coherence, p, pp, "down")
