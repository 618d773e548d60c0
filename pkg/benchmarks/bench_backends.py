#!/usr/bin/env python3
"""Benchmark the fraction-free elimination backends.

Workloads are the differential matrices of a mid-size cohomogeneity-one
model (the rank-gap-three diagonal diagram) plus dense random integer
matrices; both backends must return identical output, and the table
reports per-backend timings.

Run:  python benchmarks/bench_backends.py
"""

import random
import time

from sullivan import _elim_py
from sullivan.catalog import DIAGRAM_PRESETS
from sullivan.documents import load_diagram
from sullivan.models import cohomogeneity_one_model

try:
    from sullivan import _elim_cy
except ImportError:
    _elim_cy = None


def model_matrices():
    model = cohomogeneity_one_model(load_diagram(DIAGRAM_PRESETS["gap-three-diagonal"]))
    matrices = []
    for degree in range(model.cutoff + 1):
        rows = []
        target = {m: i for i, m in enumerate(model._basis(degree + 1))}
        for mono in model._basis(degree):
            row = [0] * len(target)
            for m, c in model._d_monomial(mono).terms.items():
                row[target[m]] = int(c)
            rows.append(row)
        if rows and rows[0]:
            matrices.append((f"model d_{degree} ({len(rows)}x{len(rows[0])})", rows))
    # keep the five largest
    matrices.sort(key=lambda item: -len(item[1]) * len(item[1][0]))
    return matrices[:5]


def random_matrices():
    rng = random.Random(20240)
    out = []
    for size in (40, 80, 120):
        rows = [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
        out.append((f"dense random {size}x{size}", rows))
    return out


def timed(backend, rows, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = backend.ff_row_echelon(rows)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    backends = [_elim_py] + ([_elim_cy] if _elim_cy is not None else [])
    if _elim_cy is None:
        print("compiled backend not built; timing the pure backend only")
    workloads = model_matrices() + random_matrices()
    header = f"{'workload':34s}" + "".join(f"{b.BACKEND:>12s}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for name, rows in workloads:
        times = []
        results = []
        for backend in backends:
            best, result = timed(backend, rows, repeats=3)
            times.append(best)
            results.append(result)
        assert all(r == results[0] for r in results), "backends disagree"
        line = f"{name:34s}" + "".join(f"{t * 1000:10.2f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:9.2f}x"
        print(line)


if __name__ == "__main__":
    main()
