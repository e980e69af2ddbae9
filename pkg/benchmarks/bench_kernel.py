"""Time the window kernel on both backends.

    python benchmarks/bench_kernel.py [--radius 50] [--repeat 5]
"""

import argparse
import random
import time
from fractions import Fraction

from jrworms.exactnum import GoldenNum
from jrworms.kernel import available_backends, scan_window
from jrworms.partition import default_partition


def sample_points(n, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        out.append(tuple(GoldenNum(Fraction(rng.randint(-999, 999), 97), Fraction(rng.randint(-999, 999), 89))
                         for _ in range(2)))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--radius", type=int, default=50)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    part = default_partition()
    r = args.radius
    win = (-r, -r, r, r)
    pts = sample_points(args.repeat)
    cells = (2 * r + 1) ** 2
    results = {}
    for backend in available_backends():
        t = time.perf_counter()
        for p in pts:
            results.setdefault(backend, []).append(scan_window(part, p, (1, -1), win, backend=backend))
        dt = (time.perf_counter() - t) / len(pts)
        print(f"{backend:7s} {dt * 1e3:9.2f} ms/window  {cells / dt / 1e6:8.3f} Mcells/s  ({cells} cells)")
    outs = list(results.values())
    print("backends agree:", all(o == outs[0] for o in outs))


if __name__ == "__main__":
    main()
