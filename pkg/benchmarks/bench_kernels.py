"""Time the compiled and pure-Python coordinate-descent kernels.

Each case solves the L1 problem for a handful of queries against one
dictionary with both backends, checks that the solutions agree, and prints
the per-query time and speedup. Usage::

    python benchmarks/bench_kernels.py [--queries N] [--mnist]
"""
import argparse
import time
from pathlib import Path

import numpy as np

from twostage import _backend
from twostage.data import SyntheticSpec, generate_synthetic, normalize_columns
from twostage.linsolve import SolverConfig, solve_lasso

ROOT = Path(__file__).resolve().parents[1]


def synthetic_case():
    train, test = generate_synthetic(SyntheticSpec())
    return "synthetic 50x200", normalize_columns(train).features, normalize_columns(test).features


def random_case(d, m, seed=0):
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((d, m))
    X /= np.linalg.norm(X, axis=0)
    return f"random {d}x{m}", X, rng.standard_normal((d, 50))


def mnist_case():
    from twostage import bench

    cfg = bench.load_config(ROOT / "configs" / "mnist_desk.yaml")
    train, test = bench.load_datasets(cfg)
    return "mnist 196x1000", train.features, test.features


def time_backend(X, Y, backend, cfg):
    norms = np.einsum("ij,ij->j", X, X)
    out = []
    start = time.perf_counter()
    for i in range(Y.shape[1]):
        out.append(solve_lasso(X, Y[:, i], cfg, backend=backend, column_norms=norms))
    return (time.perf_counter() - start) / Y.shape[1], np.array(out)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--queries", type=int, default=5, help="queries per case")
    parser.add_argument("--mnist", action="store_true", help="include the MNIST desk subset (needs data/mnist)")
    args = parser.parse_args()

    try:
        _backend.get_kernel("cython")
    except Exception as exc:
        raise SystemExit(f"compiled kernel unavailable: {exc}")

    cases = [random_case(30, 50), synthetic_case(), random_case(196, 1000)]
    if args.mnist:
        cases.append(mnist_case())
    cfg = SolverConfig()
    print(f"{'case':<18} {'cython ms':>10} {'python ms':>10} {'speedup':>8} {'max |diff|':>11}")
    for name, X, Y in cases:
        Y = Y[:, : args.queries]
        t_c, a = time_backend(X, Y, "cython", cfg)
        t_p, b = time_backend(X, Y, "python", cfg)
        print(f"{name:<18} {1e3 * t_c:10.2f} {1e3 * t_p:10.2f} {t_p / t_c:8.1f} {np.abs(a - b).max():11.1e}")


if __name__ == "__main__":
    main()
