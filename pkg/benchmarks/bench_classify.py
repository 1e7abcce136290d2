"""Compare the numba and numpy classification kernels.

    python benchmarks/bench_classify.py [--points N] [--repeat R]

Both backends see the same float64 arrays; the script checks that their
state arrays are identical before reporting timings.
"""

import argparse
import time
from pathlib import Path

import numpy as np

from qlinset import _kernels
from qlinset.fileio import load_system
from qlinset.raster import _float_data

CORPUS = Path(__file__).resolve().parent.parent / "tests" / "data"


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=1_000_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels.classify_numba is None:
        raise SystemExit("numba is not installed")
    pts = np.random.default_rng(0).uniform(-2, 2, size=(args.points, 2))
    print(f"{'system':<22}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    for path in sorted(CORPUS.glob("*.json")):
        data = _float_data(load_system(path))
        _kernels.classify(*data, pts[:10], backend="numba")  # compile
        t_np, a = best_of(lambda: _kernels.classify(*data, pts, backend="numpy"), args.repeat)
        t_nb, b = best_of(lambda: _kernels.classify(*data, pts, backend="numba"), args.repeat)
        assert np.array_equal(a, b), "backends disagree"
        print(f"{path.stem:<22}{t_np:>10.4f}{t_nb:>10.4f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
