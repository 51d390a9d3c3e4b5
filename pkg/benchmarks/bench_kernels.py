"""Compiled vs numpy kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times q_form, q_apply, one projected-gradient step and a complete
least-eigenvalue solve with each backend, and checks that both backends agree.
"""

import argparse
import timeit

import numpy as np

from hyperspec import coalesce, complete_hypergraph, hyperpath, solve_least_eigen
from hyperspec import tensor
from hyperspec.solver import SolverConfig


def instances():
    K = complete_hypergraph(5, 4)
    yield "K5^(4)", K
    yield "K5^(4)+P6", coalesce(K, 0, hyperpath(6, 4), 0).graph
    yield "K8^(4)", complete_hypergraph(8, 4)
    yield "K6^(6)+P4", coalesce(complete_hypergraph(7, 6), 0, hyperpath(4, 6), 0).graph


def bench(G, repeat):
    rng = np.random.default_rng(0)
    x = tensor.normalize(rng.standard_normal(G.n), G.k)
    E, d = G.edge_array, G.degrees
    out = {}
    for name in ("cython", "python"):
        tensor.set_backend(name)
        kern = tensor.kernels
        row = {
            "q_form": min(timeit.repeat(lambda: kern.q_form(E, x), number=200, repeat=repeat)) / 200,
            "q_apply": min(timeit.repeat(lambda: kern.q_apply(E, d, x), number=200, repeat=repeat)) / 200,
        }
        # per accepted step: near the precision floor the two backends may
        # stop at different iterations
        run = lambda: kern.descend(E, d, x, 2000, 1e-10, 0.0, 0.5, 500.0, 1e-4, 0.5, False)
        iters = max(run()[3], 1)
        row["descend"] = min(timeit.repeat(run, number=1, repeat=repeat)) / iters
        cfg = SolverConfig(restarts=8)
        row["solve"] = min(timeit.repeat(lambda: solve_least_eigen(G, cfg), number=1, repeat=repeat))
        row["lambda"] = solve_least_eigen(G, cfg).lam
        out[name] = row
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        tensor.set_backend("cython")
    except ImportError:
        raise SystemExit("compiled kernels are not built; run `pip install -e .` first")
    print(f"{'instance':<12} {'kernel':<8} {'cython':>12} {'python':>12} {'speedup':>8}")
    for label, G in instances():
        res = bench(G, args.repeat)
        for key in ("q_form", "q_apply", "descend", "solve"):
            c, p = res["cython"][key], res["python"][key]
            print(f"{label:<12} {key:<8} {c * 1e3:>10.4f}ms {p * 1e3:>10.4f}ms {p / c:>7.1f}x")
        gap = abs(res["cython"]["lambda"] - res["python"]["lambda"])
        print(f"{label:<12} lambda   {res['cython']['lambda']:.12f}  |diff| {gap:.1e}")


if __name__ == "__main__":
    main()
