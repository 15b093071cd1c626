#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Two granularities:
  * micro: raw normal-form rewrites against a packed basis;
  * macro: full verification workloads (Groebner bases of the inner-minor
    ideal and the elimination-order toric ideal).

Usage: python benchmarks/bench_kernel.py [--quick]
"""

import argparse
import time

from polyprime import kernel
from polyprime.algebra import default_grid_order, ideal_equal_paths, toric_ideal_elimination
from polyprime.binomials import mono_from_indices
from polyprime import buchberger, enumerate_polyominoes, grid_variables, inner_minors, parse_grid

SHAPES = {
    "2x2 square": "##\n##",
    "one-hole annulus": "###\n#.#\n###",
    "7-cell line": "#######",
    "staircase hexomino": "#..\n##.\n.##\n..#",
}


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def micro(kern, rewrites):
    n = 24
    basis = kern.Basis(n)
    # chain x_i^2 -> x_{i+1} * x_i-ish rules so rewriting walks down the chain
    for i in range(n - 1):
        lead = mono_from_indices(n, (i, i))
        tail = mono_from_indices(n, (i + 1,))
        basis.append(lead, tail)
    start = mono_from_indices(n, (0,) * 8)

    def run():
        for _ in range(rewrites):
            basis.normal_form(start, 10 ** 6)

    return run


def macro(kern, texts):
    polys = [parse_grid(t) for t in texts]

    def run():
        for poly in polys:
            gvars = grid_variables(poly)
            order = default_grid_order(gvars)
            gens = inner_minors(poly, gvars)
            ideal_equal_paths(gens, toric_ideal_elimination(poly, order, kern=kern), order, kern=kern)

    return run


def sweep_workload(kern, n_max):
    def run():
        for n in range(1, n_max + 1):
            for poly in enumerate_polyominoes(n):
                gvars = grid_variables(poly)
                order = default_grid_order(gvars)
                buchberger(inner_minors(poly, gvars), order, kern=kern)

    return run


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    backends = kernel.available_backends()
    print(f"available kernels: {', '.join(backends)}")
    if "c" not in backends:
        print("compiled kernel not built; showing pure-Python numbers only")

    repeat = 2 if args.quick else 3
    rewrites = 2000 if args.quick else 10000
    sweep_n = 4 if args.quick else 5
    shape_texts = list(SHAPES.values())

    rows = []
    for name, make in (
        (f"micro: {rewrites} chained normal forms", lambda k: micro(k, rewrites)),
        ("macro: ideal equality on 4 shapes", lambda k: macro(k, shape_texts)),
        (f"macro: inner-minor bases, all shapes <= {sweep_n}", lambda k: sweep_workload(k, sweep_n)),
    ):
        timings = {}
        for backend in backends:
            kern = kernel.get_kernel(backend)
            timings[backend] = timed(make(kern), repeat)
        rows.append((name, timings))

    width = max(len(r[0]) for r in rows) + 2
    header = f"{'workload':<{width}}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, timings in rows:
        line = f"{name:<{width}}" + "".join(f"{timings[b]:>11.3f}s" for b in backends)
        if len(backends) == 2:
            line += f"{timings['python'] / timings['c']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
