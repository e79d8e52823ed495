"""Timing comparison of the compiled and pure-python engine backends.

Measures the three hot operations of the dynamics loop (pair_deltas on the
current graph, apply_toggle, full stability_scan) plus engine construction,
on random graphs of increasing size.  Run:

    python3 benchmarks/bench_core.py --sizes 20 50 100 200
"""
import argparse
import time

import numpy as np

from netgame import _core_py

try:
    from netgame import _core
except ImportError:
    _core = None


def random_instance(n, rng):
    p = 3.0 / max(n - 1, 1)  # sparse, like the stable regimes
    adj = (rng.random((n, n)) < p).astype(np.uint8)
    adj = np.triu(adj, 1)
    adj = adj + adj.T
    rewards = np.ones(n)
    costs = np.full(n, 0.25)
    return adj, 0.75 / (n - 1), rewards, costs


def time_op(fn, repeats, inner):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for _ in range(inner):
            fn()
        best = min(best, (time.perf_counter() - t0) / inner)
    return best


def bench_backend(mod, adj, alpha, rewards, costs, repeats):
    n = adj.shape[0]
    rng = np.random.default_rng(7)
    pairs = [(int(a), int(b)) for a, b in
             zip(rng.integers(0, n, 400), rng.integers(0, n, 400)) if a != b]

    make = lambda: mod.Engine(adj, alpha, rewards, costs)
    t_init = time_op(make, repeats, 3)

    eng = make()
    it = iter(pairs * 50)
    t_delta = time_op(lambda: eng.pair_deltas(*next(it)), repeats, 200)

    eng = make()
    it2 = iter(pairs * 50)
    t_toggle = time_op(lambda: eng.apply_toggle(*next(it2)), repeats, 200)

    eng = make()
    t_scan = time_op(eng.stability_scan, repeats, 2)
    return t_init, t_delta, t_toggle, t_scan


def fmt(seconds):
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f}us"
    return f"{seconds * 1e3:8.2f}ms"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 50, 100, 200])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()

    backends = [("pure-python", _core_py)]
    if _core is not None:
        backends.insert(0, ("cython", _core))
    else:
        print("compiled extension not available; timing pure-python only\n")

    rng = np.random.default_rng(args.seed)
    header = f"{'n':>5} {'backend':>12} {'init':>10} {'pair_deltas':>11} {'toggle':>10} {'scan':>10}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        inst = random_instance(n, rng)
        rows = {}
        for name, mod in backends:
            rows[name] = bench_backend(mod, *inst, args.repeats)
            t = rows[name]
            print(f"{n:>5} {name:>12} {fmt(t[0])} {fmt(t[1]):>11} {fmt(t[2])} {fmt(t[3])}")
        if len(rows) == 2:
            ratio = [p / c if c > 0 else float("inf")
                     for c, p in zip(rows["cython"], rows["pure-python"])]
            print(f"{'':>5} {'speedup':>12} {ratio[0]:>9.1f}x {ratio[1]:>10.1f}x "
                  f"{ratio[2]:>9.1f}x {ratio[3]:>9.1f}x")
    print("\ntimings are best-of-{} means; pair_deltas/toggle are per call".format(args.repeats))


if __name__ == "__main__":
    main()
