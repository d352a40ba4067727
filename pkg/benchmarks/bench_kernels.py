#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernel backends.

Runs the three hot paths on both implementations, checks they return
identical results, and prints a timing table:

    python benchmarks/bench_kernels.py [--limit 200000]
"""

import argparse
import time

from divdelta.graphs import _vertex_layout
from divdelta.kernels import _pure
from divdelta.realize import realization_params, realize_graph

try:
    from divdelta.kernels import _fast
except ImportError:
    _fast = None


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=200_000, help="range bound for the scans")
    args = ap.parse_args()

    census_args = _vertex_layout(realize_graph(realization_params((385, 5, 7, 11), 11)))
    tasks = [
        ("membership scan", "scan_member_flags", (args.limit,)),
        ("triple scan", "scan_triples", (args.limit,)),
        ("2-switch census (K=95)", "two_switch_census", census_args),
    ]

    print(f"{'task':<26} {'pure':>10} {'fast':>10} {'speedup':>9}")
    for label, name, fnargs in tasks:
        t_pure, ref = timed(getattr(_pure, name), *fnargs)
        if _fast is None:
            print(f"{label:<26} {t_pure:>9.3f}s {'n/a':>10} {'n/a':>9}")
            continue
        t_fast, out = timed(getattr(_fast, name), *fnargs)
        if out != ref:
            raise SystemExit(f"backend mismatch on {label}")
        print(f"{label:<26} {t_pure:>9.3f}s {t_fast:>9.3f}s {t_pure / t_fast:>8.1f}x")
    if _fast is None:
        print("compiled backend not built; showing pure timings only")


if __name__ == "__main__":
    main()
