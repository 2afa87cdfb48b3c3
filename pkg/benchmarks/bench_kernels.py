"""Compare the numba and numpy backends of the closure determinant kernel.

Usage: python benchmarks/bench_kernels.py [--max-period 12] [--repeat 3]

Workloads are the braids of every Lorenz orbit up to the given period plus a
batch of long random positive braids.  Results are checked for equality
before timings are reported.
"""

import argparse
import random
import time

from posknots._accel import HAVE_NUMBA
from posknots.kernels import closure_determinant
from posknots.orbits import enumerate_orbits, orbit_braid
from posknots.template import load_template


def workloads(max_period, seed=1):
    t = load_template("preset:lorenz")
    orbit = [orbit_braid(t, o) for o in enumerate_orbits(t, max_period)]
    rng = random.Random(seed)
    rand = []
    for _ in range(200):
        n = rng.randint(4, 10)
        rand.append((n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(30, 80)))))
    return {"lorenz orbits": [(b.strands, b.letters) for b in orbit], "random long": rand}


def run(batch, backend):
    return [closure_determinant(w, n, backend) for n, w in batch]


def best_of(batch, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = run(batch, backend)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-period", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    if not HAVE_NUMBA:
        print("numba unavailable or disabled; timing numpy only")

    for name, batch in workloads(args.max_period).items():
        if HAVE_NUMBA:
            run(batch[:3], "numba")  # JIT warm-up
        results = {b: best_of(batch, b, args.repeat) for b in backends}
        if len({tuple(map(tuple, r[1])) for r in results.values()}) != 1:
            raise SystemExit(f"{name}: backends disagree")
        line = f"{name:14s} n={len(batch):4d}"
        for b in backends:
            line += f"  {b}={results[b][0] * 1e3:8.1f} ms"
        if HAVE_NUMBA:
            line += f"  speedup={results['numpy'][0] / results['numba'][0]:5.1f}x"
        print(line)


if __name__ == "__main__":
    main()
