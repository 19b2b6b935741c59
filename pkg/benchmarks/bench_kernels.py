"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from fermitrap import _backend
from fermitrap.analysis import entanglement_distance


def _cases():
    grid = np.linspace(-4.0, 4.0, 81)
    X, XP = np.meshgrid(grid, grid, indexing="ij")
    line = np.linspace(-4.0, 4.0, 2001)
    return {
        "ladder n=500, 2001 points": lambda: _backend.ladder(500, line),
        "overlap_sums M=10, 81x81": lambda: _backend.overlap_sums(10, X, XP),
        "overlap_sums M=250, 81x81": lambda: _backend.overlap_sums(250, X, XP),
        "exchange_sums M=10, 81x81": lambda: _backend.exchange_sums(10, X, XP),
        "exchange_sums M=50, 81x81": lambda: _backend.exchange_sums(50, X, XP),
        "distance N=20 and N=21, x0=0.5": lambda: (entanglement_distance(0.5, 20),
                                                   entanglement_distance(0.5, 21)),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    names = [n for n in ("compiled", "python") if n in _backend.BACKENDS]
    if names == ["python"]:
        print("compiled extension not built; only the fallback is timed")
    results = {}
    original = _backend.active()
    try:
        for backend in names:
            _backend.select(backend)
            for label, fn in _cases().items():
                fn()
                best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
                results[label, backend] = best
    finally:
        _backend.select(original)

    print(f"{'case':36s}" + "".join(f"{n:>14s}" for n in names) + "   speedup")
    for label in _cases():
        times = [results[label, n] for n in names]
        line = f"{label:36s}" + "".join(f"{t * 1e3:12.3f}ms" for t in times)
        if len(times) == 2:
            line += f"   {times[1] / times[0]:6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
