"""Compare the compiled kernels against the numpy fallback.

Usage::

    python benchmarks/bench_kernels.py [--nodes 40] [--repeat 5]

Prints one row per kernel: best-of-``repeat`` time per call for each
backend and the speedup. Results are checked for agreement first.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from tagrl.graph_core import generate_geant_like
from tagrl._kernels import _pykernels

try:
    from tagrl._kernels import _ckernels
except ImportError:
    _ckernels = None


def cases(nodes: int, seed: int = 7):
    topo = generate_geant_like(seed, n=nodes, clusters=max(2, nodes // 8))
    indptr, nbr, eid = topo.csr
    rng = np.random.default_rng(seed)
    load = rng.uniform(0, 20, topo.num_edges)
    w = topo.base_latency[eid]
    logits = rng.normal(size=(64, nodes))
    mask = rng.random((64, nodes)) < 0.3
    return {
        "bfs_all_pairs": lambda k: k.bfs_all_pairs(indptr, nbr, topo.n),
        "dijkstra": lambda k: k.dijkstra(indptr, nbr, w, 0),
        "node_features": lambda k: k.node_features(indptr, eid, load, topo.capacity,
                                                   topo.base_latency),
        "masked_softmax": lambda k: k.masked_softmax(logits, mask),
    }


def best_time(fn, repeat: int) -> float:
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the fallback is timed")
    print(f"{'kernel':<16}{'python_us':>12}{'cython_us':>12}{'speedup':>10}")
    for name, call in cases(args.nodes).items():
        py = best_time(lambda: call(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<16}{py * 1e6:>12.1f}{'-':>12}{'-':>10}")
            continue
        a, b = call(_pykernels), call(_ckernels)
        for x, y in zip(a if isinstance(a, tuple) else (a,), b if isinstance(b, tuple) else (b,)):
            np.testing.assert_allclose(x, y, atol=1e-12)
        cy = best_time(lambda: call(_ckernels), args.repeat)
        print(f"{name:<16}{py * 1e6:>12.1f}{cy * 1e6:>12.1f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
