"""Command-line front end.  Every subcommand writes CSV (stdout unless --out)."""

import argparse
import sys

import numpy as np

from .analysis import (DEFAULT_RESOLUTION, DEFAULT_TOL, BcsParams, Grid, SweepSpec, Table,
                       bcs_scan, distance_table, emit_csv, entanglement_distance,
                       sweep_line, sweep_pair_surface)
from .density import rho_trap
from .errors import DistanceNotFoundError, FermitrapError, InfiniteDistanceError
from .measures import wootters_concurrence
from .oracle import fock_rho

EXIT_ERROR = 1
EXIT_INFINITE = 3
EXIT_NOT_FOUND = 4


def _grid(text):
    try:
        return Grid.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parser():
    parser = argparse.ArgumentParser(
        prog="fermitrap",
        description="Two-point spin entanglement in a harmonically trapped Fermi gas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", default=None, help="output CSV path (default: stdout)")
        return p

    p = add("surface", "concurrence over a square (x, x') grid")
    p.add_argument("--n", type=int, default=20, help="particle number")
    p.add_argument("--grid", type=_grid, default=Grid(-4.0, 4.0, 81), help="min:max:points")

    p = add("line", "concurrence versus x' with x fixed")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--x0", type=float, default=0.5, help="fixed position (units of 1/alpha)")
    p.add_argument("--grid", type=_grid, default=Grid(-4.0, 4.0, 201))

    p = add("distance", "entanglement distance from x0 towards +x")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--x0", type=float, default=0.0)
    p.add_argument("--grid", type=_grid, default=None,
                   help="sweep x0 over min:max:points instead of a single --x0")
    p.add_argument("--resolution", type=float, default=DEFAULT_RESOLUTION)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = add("bcs-y", "uniform-overlap BCS concurrence and PPT versus |y|^2")
    p.add_argument("--levels", type=int, default=8)
    p.add_argument("--spacing", type=float, default=1.0)
    p.add_argument("--coupling", type=float, default=1.0)
    p.add_argument("--grid", type=_grid, default=None, help="|y|^2 range min:max:points")

    p = add("bcs-gap", "self-consistent gap and pair number versus coupling")
    p.add_argument("--levels", type=int, default=8)
    p.add_argument("--spacing", type=float, default=1.0)
    p.add_argument("--coupling", type=float, default=None, help="single coupling")
    p.add_argument("--grid", type=_grid, default=None, help="coupling range min:max:points")
    p.add_argument("--tol", type=float, default=None, help="gap-equation residual tolerance")

    p = add("oracle-check", "compare closed-form matrices with the Fock-space oracle")
    p.add_argument("--n", type=int, default=None, help="particle number (default: 2..8)")
    p.add_argument("--grid", type=_grid, default=Grid(-1.5, 1.5, 5))
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    return parser


def _oracle_table(ns, grid):
    rows = []
    for n in ns:
        for x in grid:
            for xp in grid:
                closed = rho_trap(n, x, xp)
                brute = fock_rho(n, x, xp).rho
                diff = float(np.max(np.abs(closed.matrix - brute.matrix)))
                c_closed = wootters_concurrence(closed)
                c_brute = wootters_concurrence(brute)
                rows.append((n, float(x), float(xp), diff, c_closed, c_brute,
                             abs(c_closed - c_brute)))
    return Table(("N", "x", "x_prime", "max_entry_diff", "c_closed", "c_oracle", "c_diff"), rows)


def run(args):
    cmd = args.command
    if cmd == "surface":
        return sweep_pair_surface(SweepSpec("pair-surface", N=args.n, grid=args.grid)), 0
    if cmd == "line":
        return sweep_line(SweepSpec("line", N=args.n, grid=args.grid, fixed_x=args.x0)), 0
    if cmd == "distance":
        spec = SweepSpec("distance", N=args.n, resolution=args.resolution, tol=args.tol)
        if args.grid is not None:
            return distance_table(spec, args.grid.values()), 0
        r = entanglement_distance(args.x0, args.n, args.resolution, args.tol)
        return Table(("N", "x0", "L_star", "bracket_lo", "bracket_hi", "iterations", "revival"),
                     [(r.N, r.x0, r.L_star, r.bracket[0], r.bracket[1], r.iterations,
                       r.revival)]), 0
    if cmd == "bcs-y":
        spec = SweepSpec("bcs-y-scan", grid=args.grid,
                         bcs=BcsParams(args.levels, args.spacing, args.coupling))
        return bcs_scan(spec), 0
    if cmd == "bcs-gap":
        grid = args.grid
        lam = args.coupling if args.coupling is not None else 1.0
        if grid is None and args.coupling is None:
            grid = Grid(0.2, 2.0, 10)
        spec = SweepSpec("bcs-gap-scan", grid=grid, bcs=BcsParams(args.levels, args.spacing, lam))
        return bcs_scan(spec), 0
    if cmd == "oracle-check":
        ns = [args.n] if args.n is not None else list(range(2, 9))
        table = _oracle_table(ns, args.grid.values())
        worst = max(max(row[3], row[6]) for row in table.rows)
        return table, (0 if worst <= args.tol else EXIT_ERROR)
    raise AssertionError(cmd)


def _glue_values(argv):
    # "--grid -4:4:81" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


_VALUE_FLAGS = {"--grid", "--x0"}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = _parser().parse_args(_glue_values(argv))
    try:
        table, status = run(args)
        emit_csv(table, args.out)
    except InfiniteDistanceError as exc:
        print(f"fermitrap: infinite entanglement distance: {exc}", file=sys.stderr)
        return EXIT_INFINITE
    except DistanceNotFoundError as exc:
        print(f"fermitrap: entanglement distance not found: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except (FermitrapError, OSError) as exc:
        print(f"fermitrap: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if status:
        print("fermitrap: oracle mismatch above tolerance", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
