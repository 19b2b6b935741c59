"""Brute-force cross-checks built from first principles.

``fock_rho`` builds the trap ground state as an explicit fermionic Fock
vector, applies field operators mode by mode and reads off the two-point
spin matrix.  ``xstate_concurrence_bruteforce`` recomputes the Wootters
concurrence with a hand-written Jacobi eigensolver instead of LAPACK.
Both are slow and only meant for small systems.
"""

from dataclasses import dataclass, field

import numpy as np

from .density import TRAP_BASIS, TwoSpinDensityMatrix, _check_normalizer
from .errors import DomainError, InvalidStateError
from .oscillator import eval_ladder
from .pairs import _as_config

MAX_LEVELS = 4
SPIN_INDEX = {"up": 0, "down": 1}


@dataclass(frozen=True)
class FockState:
    """Sparse fermionic Fock vector.

    ``modes`` fixes the ordering used for anticommutation signs; each entry
    is ``(oscillator mode, spin)`` with spin 0 = up, 1 = down.  Bit ``i`` of
    an occupation key refers to ``modes[i]``.
    """

    modes: tuple
    amplitudes: dict = field(default_factory=dict)

    @classmethod
    def vacuum(cls, modes):
        return cls(tuple(modes), {0: 1.0})

    def _bit(self, mode):
        try:
            return self.modes.index(mode)
        except ValueError:
            raise DomainError(f"mode {mode!r} not in the truncated basis") from None

    def _apply(self, mode, create, coeff=1.0):
        bit = self._bit(mode)
        mask = 1 << bit
        below = mask - 1
        out = {}
        for occ, amp in self.amplitudes.items():
            if bool(occ & mask) == create:
                continue
            sign = -1.0 if bin(occ & below).count("1") % 2 else 1.0
            key = occ ^ mask
            out[key] = out.get(key, 0.0) + sign * coeff * amp
        return FockState(self.modes, out)

    def create(self, mode, coeff=1.0):
        return self._apply(mode, True, coeff)

    def annihilate(self, mode, coeff=1.0):
        return self._apply(mode, False, coeff)

    def __add__(self, other):
        out = dict(self.amplitudes)
        for key, amp in other.amplitudes.items():
            out[key] = out.get(key, 0.0) + amp
        return FockState(self.modes, out)

    def inner(self, other):
        """<self|other> (real amplitudes)."""
        return sum(amp * other.amplitudes.get(key, 0.0)
                   for key, amp in self.amplitudes.items())

    def particle_counts(self):
        return {bin(occ).count("1") for occ, amp in self.amplitudes.items() if amp != 0.0}

    def field_annihilate(self, spin, weights):
        """psi_spin(x)|self> with ``weights[n] = phi_n(x)``."""
        out = FockState(self.modes, {})
        for n, w in enumerate(weights):
            if (n, spin) in self.modes:
                out = out + self.annihilate((n, spin), w)
        return out


def default_modes(cfg, extra_levels=0):
    """Modes 0..M-1 (plus mode M for odd N), both spins, level-major order."""
    top = cfg.M + (1 if cfg.parity == "odd" else 0) + extra_levels
    return tuple((n, s) for n in range(top) for s in (0, 1))


def ground_state(cfg, modes=None):
    """prod_n b+_{n up} b+_{n down} |vac>, then b+_{M, e} for odd N."""
    cfg = _as_config(cfg)
    modes = default_modes(cfg) if modes is None else tuple(modes)
    state = FockState.vacuum(modes)
    if cfg.parity == "odd":
        state = state.create((cfg.M, SPIN_INDEX[cfg.extra_spin]))
    for n in reversed(range(cfg.M)):
        state = state.create((n, 1)).create((n, 0))
    if state.particle_counts() != {cfg.N}:
        raise AssertionError("ground state has the wrong particle number")
    return state


@dataclass(frozen=True, eq=False)
class FockRho:
    unnormalized: np.ndarray
    rho: TwoSpinDensityMatrix


def fock_rho(cfg, xi, xi_p, modes=None, extra_levels=0):
    """Two-point spin matrix from explicit Fock-space expectations.

    Entry ``[(s,s'), (t,t')]`` is
    ``<psi+_{t'}(x') psi+_t(x) psi_s(x) psi_{s'}(x')>``, i.e. the overlap of
    ``psi_t(x) psi_{t'}(x')|G>`` with ``psi_s(x) psi_{s'}(x')|G>``.
    """
    cfg = _as_config(cfg)
    if cfg.M > MAX_LEVELS:
        raise DomainError(f"Fock oracle limited to M <= {MAX_LEVELS}; got M={cfg.M}")
    if modes is None:
        modes = default_modes(cfg, extra_levels)
    gs = ground_state(cfg, modes)
    top = max(n for n, _ in modes)
    phi_x = eval_ladder(top, float(xi))
    phi_xp = eval_ladder(top, float(xi_p))

    pairs = [(s, sp) for s in (0, 1) for sp in (0, 1)]
    reduced = {}
    for s, sp in pairs:
        reduced[s, sp] = gs.field_annihilate(sp, phi_xp).field_annihilate(s, phi_x)
    raw = np.array([[reduced[t].inner(reduced[s]) for t in pairs] for s in pairs])
    norm = float(np.trace(raw))
    _check_normalizer(norm, 0.0)
    return FockRho(raw, TwoSpinDensityMatrix(raw / norm, TRAP_BASIS))


def _jacobi_eigh(a, sweeps=100):
    """Eigenvalues and eigenvectors of a real symmetric matrix (cyclic Jacobi)."""
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    for _ in range(sweeps):
        off = sum(a[p, q] ** 2 for p in range(n) for q in range(p + 1, n))
        if off == 0.0:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    a[p, q] = a[q, p] = 0.0
                    continue
                diff = a[q, q] - a[p, p]
                if abs(diff) > 1e150 * abs(apq):
                    t = apq / diff  # theta^2 would overflow; t ~ 1/(2 theta)
                else:
                    theta = diff / (2.0 * apq)
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = a[k, p], a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p, k], a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                for k in range(n):
                    vkp, vkq = v[k, p], v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    return np.diag(a).copy(), v


def _realify(h):
    """Real symmetric 2n x 2n image of a Hermitian matrix; spectrum doubles."""
    h = np.asarray(h, dtype=np.complex128)
    re, im = h.real, h.imag
    return np.block([[re, -im], [im, re]])


def xstate_concurrence_bruteforce(rho):
    """Wootters concurrence via Jacobi diagonalization.

    The spectrum of rho (YY) rho* (YY) equals that of the Hermitian
    sqrt(rho) (YY) rho* (YY) sqrt(rho); both square roots and the final
    spectrum come from ``_jacobi_eigh`` on real embeddings.
    """
    m = rho.matrix if isinstance(rho, TwoSpinDensityMatrix) else np.asarray(rho)
    m = np.asarray(m, dtype=np.complex128)
    w, vecs = _jacobi_eigh(_realify(m))
    if w.min() < -1e-12:
        raise InvalidStateError("state is not positive semidefinite")
    root = vecs @ np.diag(np.sqrt(np.clip(w, 0.0, None))) @ vecs.T
    # Y x Y is real: [[0,0,0,-1],[0,0,1,0],[0,1,0,0],[-1,0,0,0]]
    yy = np.fliplr(np.diag([-1.0, 1.0, 1.0, -1.0]))
    flip = _realify(yy @ m.conj() @ yy)
    herm = root @ flip @ root
    herm = 0.5 * (herm + herm.T)
    ev, _ = _jacobi_eigh(herm)
    ev = np.sort(ev)[::-1][::2]
    lam = np.sqrt(np.clip(ev, 0.0, None))
    return float(min(max(lam[0] - lam[1] - lam[2] - lam[3], 0.0), 1.0))
