"""Compare the compiled and pure-Python search kernels.

Both backends explore the same tree, so node counts must match; only the
wall-clock time differs.

    python benchmarks/bench_search.py --repeat 3
"""

import argparse
import random
import time

from kmonopoly import kernel
from kmonopoly.families import complete_bipartite, cycle, family_f, hypercube
from kmonopoly.graph import Graph
from kmonopoly.solver import solve


def random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    edges += [(u, v) for u in range(n) for v in range(u + 1, n)
              if rng.random() < p and (v, u) not in edges]
    return Graph(n, set((min(e), max(e)) for e in edges))


CASES = [
    ("cycle:32 monopoly k=0", cycle(32), "monopoly", 0),
    ("hypercube:4 monopoly k=1", hypercube(4), "monopoly", 1),
    ("family_f:9 monopoly k=2", family_f(9), "monopoly", 2),
    ("K_6,7 monopoly k=1", complete_bipartite(6, 7), "monopoly", 1),
    ("random n=24 total-dom", random_graph(24, 0.15, 1), "total-dom", None),
    ("random n=22 powerful k=0", random_graph(22, 0.3, 2), "powerful", 0),
    ("random n=26 alliance k=0", random_graph(26, 0.3, 4), "def-off-alliance", 0),
]


def timed(g, problem, k, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        rep = solve(g, problem, k, backend=backend, workers=1)
        best = min(best, time.perf_counter() - t0)
    return best, rep


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if not kernel.HAVE_EXTENSION:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'case':28} {'nodes':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, g, problem, k in CASES:
        py_t, py_rep = timed(g, problem, k, "python", args.repeat)
        if kernel.HAVE_EXTENSION:
            cy_t, cy_rep = timed(g, problem, k, "cython", args.repeat)
            assert cy_rep.nodes_explored == py_rep.nodes_explored
            assert cy_rep.optimum == py_rep.optimum
            print(f"{name:28} {py_rep.nodes_explored:9d} {py_t:10.4f} {cy_t:10.4f} "
                  f"{py_t / cy_t:7.1f}x")
        else:
            print(f"{name:28} {py_rep.nodes_explored:9d} {py_t:10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
