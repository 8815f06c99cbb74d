"""Benchmark the elimination kernel: compiled extension vs pure Python.

Workloads are the engine's real systems (stacked adjoint-action matrices of
the pipeline's sl2 configurations) plus denser synthetic eliminations that
stress fill-in.  Both backends run the identical algorithm; outputs are
asserted equal before timings are reported.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from e8nogo.kernels import _pure  # noqa: E402

try:
    from e8nogo.kernels import _speed
except ImportError:
    _speed = None


def engine_workloads():
    from e8nogo.chevalley import ad_rows, build_e8_chevalley, root_triple
    from e8nogo.chevalley import triple_from_orthogonal_roots

    alg = build_e8_chevalley()
    rs = alg.root_system
    theta = rs.highest_root
    theta_e7 = max((r for r in rs.positive_roots if r[7] == 0), key=lambda r: (sum(r), r))
    cases = {}

    t = root_triple(alg, theta)
    rows = []
    for g in t.elements():
        rows.extend(ad_rows(g))
    cases["centralizer(index-1 sl2): 744x248"] = (rows, 248)

    td = triple_from_orthogonal_roots(alg, [theta, theta_e7])
    rows = []
    for g in td.elements():
        rows.extend(ad_rows(g))
    cases["centralizer(index-2 sl2): 744x248"] = (rows, 248)

    t1 = root_triple(alg, theta)
    t2 = root_triple(alg, theta_e7)
    rows = []
    for g in (t1.e, t1.f, t2.e, t2.f):
        rows.extend(ad_rows(g))
    cases["centralizer(sl2 x sl2): ~990x248"] = (rows, 248)
    return cases


def synthetic_workloads():
    rng = random.Random(42)
    cases = {}
    for n, density, name in (
        (120, 0.08, "synthetic sparse 240x120"),
        (90, 0.5, "synthetic dense 180x90"),
    ):
        rows = []
        for _ in range(2 * n):
            row = {
                j: rng.randint(-9, 9)
                for j in range(n)
                if rng.random() < density
            }
            rows.append({j: v for j, v in row.items() if v})
        cases[name] = (rows, n)
    return cases


def time_backend(impl, rows, ncols, repeat):
    best = None
    result = None
    for _ in range(repeat):
        work = [dict(r) for r in rows]
        start = time.perf_counter()
        result = impl.eliminate(work, ncols)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    cases = {}
    cases.update(engine_workloads())
    cases.update(synthetic_workloads())

    print(f"{'workload':44} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, (rows, ncols) in cases.items():
        t_pure, ref = time_backend(_pure, rows, ncols, args.repeat)
        if _speed is None:
            print(f"{name:44} {t_pure*1000:9.1f}ms {'n/a':>10} {'':>8}")
            continue
        t_fast, got = time_backend(_speed, rows, ncols, args.repeat)
        assert got == ref, f"backend mismatch on {name}"
        print(
            f"{name:44} {t_pure*1000:9.1f}ms {t_fast*1000:9.1f}ms "
            f"{t_pure/t_fast:7.2f}x"
        )
    if _speed is None:
        print("\ncompiled backend not built; run `python setup.py build_ext --inplace`")


if __name__ == "__main__":
    main()
