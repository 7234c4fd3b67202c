#!/usr/bin/env python3
"""Compare the numba and numpy backends of the automaton kernels.

Workloads:
  * graded counting to a fixed degree (int64 path, then exact continuation)
  * strongly connected components of the full transition table
  * reachability from the start state

Inputs are the normal-word automata of a few presets plus random tables.
Results are checked for equality before timings are reported.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--degree 200]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from tlgrowth import _kernels
from tlgrowth.coxeter import relations
from tlgrowth.groebner import complete
from tlgrowth.growth import build_automaton
from tlgrowth.presets import parse_preset

PRESETS = ["E 8", "tilde-E7", "fig 4.4", "star 6"]


def automaton_table(name: str) -> np.ndarray:
    g = parse_preset(name)
    gb = complete(relations(g))
    return build_automaton(gb.leading_words(), g.n).trans


def random_table(states: int, letters: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    t = rng.integers(0, states, size=(states, letters), dtype=np.int32)
    t[rng.random((states, letters)) < 0.3] = -1
    return t


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(label: str, trans: np.ndarray, degree: int, repeat: int) -> None:
    active = np.ones(trans.shape[0], dtype=bool)
    jobs = {
        "counts": lambda: _kernels.graded_counts(trans, 0, degree),
        "scc": lambda: _kernels.scc(trans, active),
        "reach": lambda: _kernels.reachable(trans, 0),
    }
    for job, fn in jobs.items():
        times, results = {}, {}
        for backend in ("numpy", "numba"):
            _kernels.set_backend(backend)
            results[backend] = fn()  # warm-up, includes jit compilation
            times[backend] = best_of(fn, repeat)
        a, b = results["numpy"], results["numba"]
        same = a == b if isinstance(a, list) else np.array_equal(a, b)
        if not same:
            raise SystemExit(f"backend mismatch on {label}/{job}")
        speedup = times["numpy"] / times["numba"] if times["numba"] > 0 else float("inf")
        print(f"{label:<14} {trans.shape[0]:>7} {job:<7} {times['numpy'] * 1e3:>10.2f} {times['numba'] * 1e3:>10.2f} {speedup:>8.1f}x")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--degree", type=int, default=200)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    before = _kernels.backend()
    print(f"{'input':<14} {'states':>7} {'kernel':<7} {'numpy ms':>10} {'numba ms':>10} {'speedup':>9}")
    try:
        for name in PRESETS:
            bench(name, automaton_table(name), args.degree, args.repeat)
        for states in (1_000, 20_000):
            bench(f"random {states}", random_table(states, 6, seed=states), args.degree, args.repeat)
    finally:
        _kernels.set_backend(before)


if __name__ == "__main__":
    main()
