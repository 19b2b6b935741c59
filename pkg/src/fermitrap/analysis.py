"""Grid sweeps, entanglement-distance search and BCS scans, emitted as CSV."""

import csv
import io
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .bcs import build_model, gap_residual, uniform_overlap_re_fv2
from .density import DEGENERACY_FLOOR, rho_bcs, rho_odd
from .errors import (DegeneratePointError, DistanceNotFoundError, DomainError,
                     InfiniteDistanceError)
from .measures import (concurrence_bcs_uniform, concurrence_pair, ppt_min_eigenvalue,
                       wootters_concurrence)
from .pairs import PairKernels, TrapConfiguration, _as_config

MODES = ("pair-surface", "line", "bcs-y-scan", "bcs-gap-scan", "distance")
DEFAULT_RESOLUTION = 0.01
DEFAULT_TOL = 1e-10
SEARCH_CEILING = 20.0


@dataclass(frozen=True)
class Grid:
    lo: float
    hi: float
    points: int

    def __post_init__(self):
        if int(self.points) != self.points or self.points < 2:
            raise DomainError(f"grid needs at least 2 points, got {self.points!r}")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)) or not self.lo < self.hi:
            raise DomainError(f"grid needs finite min < max, got {self.lo!r}:{self.hi!r}")

    @classmethod
    def parse(cls, text):
        """``"min:max:points"``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"grid must look like min:max:points, got {text!r}")
        try:
            return cls(float(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError:
            raise DomainError(f"grid must look like min:max:points, got {text!r}") from None

    def values(self):
        return np.linspace(self.lo, self.hi, int(self.points))


@dataclass(frozen=True)
class BcsParams:
    M: int
    d: float = 1.0
    lam: float = 1.0


@dataclass(frozen=True)
class SweepSpec:
    mode: str
    N: int = 20
    grid: Grid = None
    fixed_x: float = None
    bcs: BcsParams = None
    output: str = None
    resolution: float = DEFAULT_RESOLUTION
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"unknown sweep mode {self.mode!r}")
        if self.mode in ("pair-surface", "line", "distance"):
            TrapConfiguration(self.N)
        if self.mode == "line" and self.fixed_x is None:
            raise DomainError("line sweep needs fixed_x")
        if self.mode.startswith("bcs") and self.bcs is None:
            raise DomainError(f"{self.mode} needs BCS parameters")


@dataclass
class Table:
    columns: tuple
    rows: list = field(default_factory=list)

    def column(self, name):
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def __len__(self):
        return len(self.rows)


def _format(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.16e}"
    return str(value)


def emit_csv(table, destination=None):
    """Write ``table`` as CSV to a path, an open text file, or stdout (``None``/``"-"``)."""
    if not table.rows:
        raise DomainError("refusing to write an empty table")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_format(v) for v in row])
    text = buf.getvalue()
    if destination is None or destination == "-":
        sys.stdout.write(text)
        return
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write CSV to {destination}: {exc.strerror}") from exc


def _trap_concurrence(cfg, x, xp):
    """Concurrence on broadcast arrays of positions."""
    x, xp = np.broadcast_arrays(np.asarray(x, float), np.asarray(xp, float))
    if cfg.parity == "even":
        F, nx, nxp, _ = _backend.overlap_sums(cfg.M, x, xp)
        return concurrence_pair(PairKernels(F, nx, nxp))
    out = np.empty(x.shape)
    for idx in np.ndindex(x.shape):
        out[idx] = wootters_concurrence(rho_odd(cfg, x[idx], xp[idx]))
    return out


def sweep_pair_surface(spec):
    """Concurrence of two atoms at (x, x') over a square grid, row-major in x."""
    if spec.mode != "pair-surface":
        raise DomainError(f"expected a pair-surface spec, got {spec.mode!r}")
    cfg = TrapConfiguration(spec.N)
    grid = (spec.grid or Grid(-4.0, 4.0, 81)).values()
    xs, xps = np.meshgrid(grid, grid, indexing="ij")
    c = _trap_concurrence(cfg, xs, xps)
    rows = [(float(a), float(b), float(v)) for a, b, v in zip(xs.ravel(), xps.ravel(), c.ravel())]
    return Table(("x", "x_prime", "concurrence"), rows)


def sweep_line(spec):
    """Concurrence as a function of the second position with the first held at ``fixed_x``."""
    if spec.mode != "line":
        raise DomainError(f"expected a line spec, got {spec.mode!r}")
    cfg = TrapConfiguration(spec.N)
    grid = (spec.grid or Grid(-4.0, 4.0, 201)).values()
    c = _trap_concurrence(cfg, float(spec.fixed_x), grid)
    return Table(("x_prime", "concurrence"), [(float(a), float(v)) for a, v in zip(grid, c)])


def entanglement_margin(cfg, x0, xp):
    """Sign function of the concurrence and the state normalizer.

    Returns ``(g, norm)``: ``g > 0`` exactly where the concurrence is positive.
    For even N, ``g = 2F^2 - N(x)N(x')``; for odd N the coherence and corner
    entries include the extra atom.
    """
    cfg = _as_config(cfg)
    x0 = np.float64(x0)
    xp = np.asarray(xp, dtype=np.float64)
    F, nx, nxp, _ = _backend.overlap_sums(cfg.M, x0, xp)
    nn = nx * nxp
    f2 = F * F
    hole = _backend.exchange_sums(cfg.M, x0, xp)
    if cfg.parity == "even":
        return f2 - hole, 2.0 * nn + 2.0 * hole
    table = _backend.ladder(cfg.M, np.append(np.atleast_1d(xp), x0))
    p = table[cfg.M, -1]
    pp = table[cfg.M, :-1].reshape(xp.shape)
    # the extra atom's spin picks which corner grows; the corner product is the same
    grown = _backend.exchange_sums(cfg.M + 1, x0, xp)
    coherence = np.abs(f2 + F * p * pp)
    g = coherence - np.sqrt(hole * grown)
    norm = hole + grown + 2.0 * nn + nxp * p * p + nx * pp * pp
    return g, norm


@dataclass(frozen=True)
class DistanceResult:
    x0: float
    N: int
    L_star: float
    bracket: tuple
    iterations: int
    revival: float = math.nan


def entanglement_distance(x0, N, resolution=DEFAULT_RESOLUTION, tol=DEFAULT_TOL,
                          ceiling=SEARCH_CEILING):
    """First separation L > 0 (towards +x) at which the concurrence vanishes.

    Marches outward from ``x0`` in steps of ``resolution`` until the sign
    function turns nonpositive, then bisects the last step down to ``tol``.
    ``revival`` is the first later grid separation where entanglement
    returns (NaN if none before the tail).
    """
    cfg = TrapConfiguration(N)
    if not resolution > 0 or not tol > 0:
        raise DomainError("resolution and tol must be positive")
    if not math.isfinite(x0):
        raise DomainError("x0 must be finite")
    if cfg.N == 2:
        raise InfiniteDistanceError("a single filled level stays maximally entangled at any distance")

    steps = np.arange(1, int(math.floor(ceiling / resolution + 1e-9)) + 1) * resolution
    g, norm = entanglement_margin(cfg, x0, x0 + steps)
    _, nx0 = _backend.overlap_sums(cfg.M, x0, x0)[:2]
    usable = norm > DEGENERACY_FLOOR * np.maximum(1.0, nx0 * nx0)
    cut = int(np.argmin(usable)) if not usable.all() else len(steps)
    crossing = np.flatnonzero(g[:cut] <= 0.0)
    if crossing.size == 0:
        raise DistanceNotFoundError(
            f"no zero of the concurrence within L <= {steps[cut - 1] if cut else 0.0:.3g} "
            f"(N={cfg.N}, x0={x0})")
    k = int(crossing[0])
    lo = float(steps[k - 1]) if k > 0 else 0.0
    hi = float(steps[k])

    def sign(L):
        return float(entanglement_margin(cfg, x0, x0 + L)[0])

    a, b = lo, hi
    iterations = 0
    while b - a > tol:
        mid = 0.5 * (a + b)
        if mid in (a, b):
            break
        iterations += 1
        if sign(mid) > 0.0:
            a = mid
        else:
            b = mid

    later = np.flatnonzero(g[k + 1:cut] > 0.0)
    revival = float(steps[k + 1 + later[0]]) if later.size else math.nan
    return DistanceResult(float(x0), cfg.N, b, (lo, hi), iterations, revival)


def distance_table(spec, positions):
    """One row per starting position; failures are recorded in ``status``."""
    rows = []
    for x0 in positions:
        try:
            r = entanglement_distance(float(x0), spec.N, spec.resolution, spec.tol)
            rows.append((spec.N, r.x0, r.L_star, r.bracket[0], r.bracket[1],
                         r.iterations, r.revival, "ok"))
        except InfiniteDistanceError:
            rows.append((spec.N, float(x0), math.inf, math.nan, math.nan, 0, math.nan, "infinite"))
        except DistanceNotFoundError:
            rows.append((spec.N, float(x0), math.nan, math.nan, math.nan, 0, math.nan, "not-found"))
    return Table(("N", "x0", "L_star", "bracket_lo", "bracket_hi", "iterations",
                  "revival", "status"), rows)


def y_scan_grid(Q, M, points=101):
    """|y|^2 from 0 up to just below min(1, 2Q/M)."""
    top = min(1.0, 2.0 * Q / M) * (1.0 - 1e-9)
    return np.linspace(0.0, top, points)


def bcs_scan(spec):
    """Uniform-overlap concurrence scan or gap-versus-coupling scan."""
    p = spec.bcs
    if spec.mode == "bcs-y-scan":
        model = build_model(p.M, p.d, p.lam)
        Q, M = model.Q, model.M
        ys = spec.grid.values() if spec.grid else y_scan_grid(Q, M)
        rows = []
        for y2 in ys:
            c = concurrence_bcs_uniform(y2, Q, M)
            try:
                rho = rho_bcs(Q, uniform_overlap_re_fv2(y2, Q, M))
            except (DegeneratePointError, ValueError):
                rows.append((float(y2), c, math.nan, math.nan, "", False))
                continue
            report = ppt_min_eigenvalue(rho)
            rows.append((float(y2), c, wootters_concurrence(rho), report.min_pt_eigenvalue,
                         report.entangled, True))
        return Table(("y_abs2", "concurrence", "wootters", "ppt_min_eigenvalue",
                      "entangled", "physical"), rows)
    if spec.mode == "bcs-gap-scan":
        lams = spec.grid.values() if spec.grid else np.array([p.lam])
        rows = []
        for lam in lams:
            model = build_model(p.M, p.d, float(lam))
            res = gap_residual(model.levels, model.lam, model.d, model.delta) if model.delta > 0 else math.nan
            rows.append((float(lam), model.delta, model.Q, res))
        return Table(("lambda", "delta", "Q", "gap_residual"), rows)
    raise DomainError(f"expected a BCS spec, got {spec.mode!r}")
