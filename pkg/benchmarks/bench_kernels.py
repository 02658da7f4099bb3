#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure-Python fallback.

Runs the two hot loops (normalizer minimum-weight scan, best-splitter scan)
on identical inputs through both backends, checks the results agree, and
prints the timings.  Use --heavy for larger instances.
"""

from __future__ import annotations

import argparse
import random
import time

from twep import _kernels_py
from twep.errorspace import enumerate_errors
from twep.pauli import PauliVec
from twep.stabilizer import StabilizerSet, normalizer_complement_basis

try:
    from twep import _speedups
except ImportError:
    _speedups = None


def random_stabilizer(rng: random.Random, n: int, r: int) -> StabilizerSet:
    s = StabilizerSet(2, n)
    while len(s) < r:
        cand = PauliVec(
            2,
            n,
            tuple(rng.randint(0, 1) for _ in range(n)),
            tuple(rng.randint(0, 1) for _ in range(n)),
        )
        if cand.is_identity:
            continue
        try:
            s = s.extend(cand)
        except ValueError:
            continue
    return s


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def bench_min_weight(rng: random.Random, n: int, r: int):
    s = random_stabilizer(rng, n, r)
    comp = normalizer_complement_basis(s)
    args = (
        [g.x_bits for g in s.gens],
        [g.z_bits for g in s.gens],
        [c.x_bits for c in comp],
        [c.z_bits for c in comp],
    )
    label = f"min-weight scan n={n} rank={r} ({2 ** (2 * n - r) - 2 ** r} operators)"
    return label, args, _kernels_py.min_weight_excluding_span


def bench_best_splitter(rng: random.Random, n: int, r: int, t: int):
    s = random_stabilizer(rng, n, r)
    comp = normalizer_complement_basis(s)
    errors = enumerate_errors(n, t, 2)
    args = (
        [g.x_bits for g in s.gens],
        [g.z_bits for g in s.gens],
        [c.x_bits for c in comp],
        [c.z_bits for c in comp],
        [e.x_bits for e in errors.members],
        [e.z_bits for e in errors.members],
        n,
    )
    label = (
        f"best-splitter scan n={n} rank={r} "
        f"({2 ** (2 * n - r) - 2 ** r} candidates x {len(errors.members)} errors)"
    )
    return label, args, _kernels_py.best_splitter


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true", help="larger instances")
    parser.add_argument("--seed", type=int, default=11)
    options = parser.parse_args()

    rng = random.Random(options.seed)
    if options.heavy:
        instances = [
            bench_min_weight(rng, 12, 3),
            bench_best_splitter(rng, 10, 1, 2),
        ]
    else:
        instances = [
            bench_min_weight(rng, 10, 2),
            bench_best_splitter(rng, 9, 1, 1),
        ]

    print(f"{'instance':66} {'python':>9} {'compiled':>9} {'speedup':>8}")
    for label, args, py_fn in instances:
        py_result, py_time = timed(py_fn, *args)
        if _speedups is None:
            print(f"{label:66} {py_time:8.3f}s {'n/a':>9} {'n/a':>8}")
            continue
        cy_fn = getattr(_speedups, py_fn.__name__)
        cy_result, cy_time = timed(cy_fn, *args)
        if py_result != cy_result:
            raise SystemExit(
                f"backend mismatch on {label}: {py_result} vs {cy_result}"
            )
        print(
            f"{label:66} {py_time:8.3f}s {cy_time:8.3f}s {py_time / cy_time:7.1f}x"
        )
    if _speedups is None:
        print("compiled extension not built; showing fallback timings only")


if __name__ == "__main__":
    main()
