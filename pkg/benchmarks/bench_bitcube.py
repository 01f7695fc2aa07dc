#!/usr/bin/env python3
"""Compare the compiled and pure-Python cube kernels.

Times the orbit partition of {0,1}^n and the cone-membership sweep for two
workloads: a product of disjoint 3-cycles (many small orbits) and the full
symmetric group (one orbit per popcount).  Run after ``pip install -e .``:

    python benchmarks/bench_bitcube.py [--n 18] [--repeat 3]
"""

import argparse
import time

from fundom.bitcube import backends


def cyclic_triple_maps(n):
    maps = []
    for i in range(n // 3):
        img = list(range(n))
        img[3 * i], img[3 * i + 1], img[3 * i + 2] = 3 * i + 1, 3 * i + 2, 3 * i
        maps.append(img)
    return maps


def symmetric_maps(n):
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    rot = [(i + 1) % n for i in range(n)]
    return [swap, rot]


def triple_normals(n):
    out = []
    for i in range(n // 3):
        normal = [0] * n
        normal[3 * i], normal[3 * i + 1], normal[3 * i + 2] = 2, 1, -3
        out.append(tuple(normal))
    return out


def chain_normals(n):
    out = []
    for i in range(n - 1):
        normal = [0] * n
        normal[i], normal[i + 1] = 1, -1
        out.append(tuple(normal))
    return out


def best_of(repeat, fn, *args):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=18,
                        help="cube dimension (divisible by 3; default 18)")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    n = args.n - args.n % 3

    impls = backends()
    if "compiled" not in impls:
        print("note: compiled kernel not built; timing the pure backend only")

    workloads = [
        ("3-cycle product orbits", "orbit_reps", (n, cyclic_triple_maps(n))),
        ("symmetric group orbits", "orbit_reps", (n, symmetric_maps(n))),
        ("triple-cone membership", "cone_members", (n, triple_normals(n))),
        ("chain-cone membership", "cone_members", (n, chain_normals(n))),
    ]

    print("cube dimension n=%d (%d masks)\n" % (n, 1 << n))
    print("%-26s %12s %12s %9s" % ("workload", "python", "compiled", "speedup"))
    for label, fname, fargs in workloads:
        times = {}
        results = {}
        for name, impl in impls.items():
            times[name], results[name] = best_of(args.repeat, getattr(impl, fname), *fargs)
        if len(results) == 2:
            a, b = results["python"], results["compiled"]
            assert bytes(a) == bytes(b) if isinstance(a, (bytes, bytearray)) \
                else list(a) == list(b), "backend outputs differ on %s" % label
            print("%-26s %10.3fs %10.3fs %8.1fx"
                  % (label, times["python"], times["compiled"],
                     times["python"] / times["compiled"]))
        else:
            print("%-26s %10.3fs %12s" % (label, times["python"], "-"))


if __name__ == "__main__":
    main()
