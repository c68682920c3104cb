"""Compare the compiled and pure-Python row-lookup kernels.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from weightbench.cli import default_corpus_dir
from weightbench.kernels import available_backends
from weightbench.permgroup import load_group

GROUPS = ("s4", "a5", "s5", "gl32", "a6")


def _queries(group, rng, count):
    """Random products of group elements (all present) plus shuffled non-members."""
    idx = rng.integers(0, group.order, size=(count, 2))
    hits = group.images[idx[:, 0]][np.arange(count)[:, None], group.images[idx[:, 1]]]
    misses = rng.permuted(np.tile(np.arange(group.degree), (count // 4, 1)), axis=1)
    return np.ascontiguousarray(np.vstack([hits, misses]), dtype=np.int32)


def bench(repeat=5, count=20000, seed=0):
    rng = np.random.default_rng(seed)
    backends = available_backends()
    rows = []
    for name in GROUPS:
        G = load_group(default_corpus_dir() / f"{name}.grp")
        q = _queries(G, rng, count)
        results = {}
        timings = {}
        for bname, cls in backends.items():
            t0 = time.perf_counter()
            index = cls(G.images)
            build = time.perf_counter() - t0
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                out = index.find(q)
                best = min(best, time.perf_counter() - t0)
            results[bname] = out
            timings[bname] = (build, best)
        ref = results["python"]
        agree = all(np.array_equal(ref, r) for r in results.values())
        rows.append((name, G.order, len(q), timings, agree))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--count", type=int, default=20000)
    args = ap.parse_args()
    rows = bench(args.repeat, args.count)
    names = list(rows[0][3])
    print(f"{'group':6} {'|G|':>5} {'queries':>8} " +
          " ".join(f"{n + ' build/find ms':>26}" for n in names) + "  speedup  agree")
    for name, order, nq, timings, agree in rows:
        cells = " ".join(f"{1e3 * b:12.2f} {1e3 * f:12.2f} " for b, f in timings.values())
        speed = (timings["python"][1] / timings["compiled"][1]) if "compiled" in timings else float("nan")
        print(f"{name:6} {order:5d} {nq:8d} {cells} {speed:7.1f}x  {agree}")


if __name__ == "__main__":
    main()
