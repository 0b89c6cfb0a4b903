"""Compare the compiled and numpy kernel backends.

Times raw sparse-ish int64 matrix products and whole identity scans on
catalog algebras, checks that both backends return identical results,
and prints one row per case.

    python benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from homalg import catalog, kernels
from homalg import identities as ids


def matrix_cases():
    rng = np.random.default_rng(0)
    for m, k, n, density in [(64, 64, 512, 0.3), (512, 8, 4096, 0.2), (4096, 8, 512, 0.05)]:
        a = rng.integers(-2, 3, (m, k)) * (rng.random((m, k)) < density)
        b = rng.integers(-2, 3, (k, n)) * (rng.random((k, n)) < density)
        yield f"matmul {m}x{k} @ {k}x{n} (density {density})", (lambda a=a, b=b: kernels.matmul(a, b))


def scan_cases():
    for entry, name in [("oct", "hom-malcev/direct"), ("zorn8t", "right-alternative/eq42"),
                        ("dm", "loos-compatibility"), ("bol-m4", "HB7"), ("lts-sl2", "nambu")]:
        A = catalog.get(entry).payload
        s = ids.spec(name)
        yield f"scan {name} on {entry} (dim {A.dim})", (lambda s=s, A=A: ids.scan(s, A, workers=1))


def same(x, y) -> bool:
    if isinstance(x, np.ndarray):
        return x.shape == y.shape and bool((x.astype(object) == y.astype(object)).all())
    return x == y


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled backend not built; only numpy timings are shown")
    catalog.entries()
    header = f"{'case':<52}" + "".join(f"{b:>12}" for b in backends) + ("   speedup" if len(backends) > 1 else "")
    print(header)
    print("-" * len(header))
    for label, fn in list(matrix_cases()) + list(scan_cases()):
        times, results = [], []
        for b in backends:
            with kernels.use_backend(b):
                results.append(fn())
                times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        if not all(same(results[0], r) for r in results[1:]):
            raise SystemExit(f"backends disagree on {label}")
        row = f"{label:<52}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[1] / times[0]:>9.2f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
