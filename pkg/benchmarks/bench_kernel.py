#!/usr/bin/env python3
"""Benchmark the compiled simplex kernel against the pure-Python fallback.

Two workloads:

* raw kernel calls on identical pre-scaled integer systems, at three sizes;
* end-to-end base extraction (the dominant library operation), by swapping
  the kernel behind csl.feasibility.

Run:  python benchmarks/bench_kernel.py
"""

import time
from fractions import Fraction
from random import Random

from csl import _simplex_py
from csl import feasibility
from csl.convexsets import unique_base
from csl.distributions import dist_make

try:
    from csl import _simplex
except ImportError:
    _simplex = None


def random_system(rng, nvars, nrows, max_entry):
    return [
        [rng.randint(0, max_entry) for _ in range(nvars)] + [rng.randint(0, max_entry)]
        for _ in range(nrows)
    ]


def time_kernel(kernel, systems, nvars):
    start = time.perf_counter()
    answers = [kernel.hull_witness(rows, nvars) for rows in systems]
    return time.perf_counter() - start, answers


def bench_raw():
    print("raw kernel: phase-one simplex on integer systems")
    print(f"{'size':>18} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for nvars, nrows, max_entry, count in [
        (4, 5, 12, 4000),
        (8, 7, 99, 2000),
        (16, 11, 999, 600),
    ]:
        rng = Random(1000 + nvars)
        systems = [random_system(rng, nvars, nrows, max_entry) for _ in range(count)]
        t_py, a_py = time_kernel(_simplex_py, systems, nvars)
        label = f"{nvars}v x {nrows}r x{count}"
        if _simplex is None:
            print(f"{label:>18} {t_py*1e6/count:>8.1f}us {'n/a':>10} {'n/a':>8}")
            continue
        t_c, a_c = time_kernel(_simplex, systems, nvars)
        assert a_py == a_c, "kernels disagree"
        print(
            f"{label:>18} {t_py*1e6/count:>8.1f}us {t_c*1e6/count:>8.1f}us"
            f" {t_py/t_c:>7.2f}x"
        )


def random_generators(rng, natoms, ngens, max_den):
    atoms = [f"a{i}" for i in range(natoms)]
    gens = []
    for _ in range(ngens):
        support = rng.sample(atoms, rng.randint(1, natoms))
        den = rng.randint(len(support), max_den)
        cuts = sorted(rng.sample(range(1, den), len(support) - 1))
        weights, prev = [], 0
        for c in cuts + [den]:
            weights.append(Fraction(c - prev, den))
            prev = c
        gens.append(dist_make(list(zip(support, weights))))
    return gens


def time_extraction(kernel, gensets):
    original = feasibility._kernel
    feasibility._kernel = kernel
    try:
        start = time.perf_counter()
        bases = [unique_base(gens) for gens in gensets]
        return time.perf_counter() - start, bases
    finally:
        feasibility._kernel = original


def bench_extraction():
    print()
    print("end to end: unique-base extraction of random generator sets")
    print(f"{'size':>18} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for natoms, ngens, max_den, count in [
        (4, 6, 12, 400),
        (6, 10, 99, 150),
    ]:
        rng = Random(2000 + natoms)
        gensets = [random_generators(rng, natoms, ngens, max_den) for _ in range(count)]
        t_py, b_py = time_extraction(_simplex_py, gensets)
        label = f"{natoms}at x {ngens}g x{count}"
        if _simplex is None:
            print(f"{label:>18} {t_py*1e3/count:>8.2f}ms {'n/a':>10} {'n/a':>8}")
            continue
        t_c, b_c = time_extraction(_simplex, gensets)
        assert b_py == b_c, "kernels disagree"
        print(
            f"{label:>18} {t_py*1e3/count:>8.2f}ms {t_c*1e3/count:>8.2f}ms"
            f" {t_py/t_c:>7.2f}x"
        )


if __name__ == "__main__":
    print(f"active kernel at import: {feasibility.kernel_name()}")
    if _simplex is None:
        print("compiled kernel not built; showing pure-Python timings only")
    bench_raw()
    bench_extraction()
