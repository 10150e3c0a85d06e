"""Compare the compiled and pure-Python max-clique kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from ramseykern._backend import available_backends
from ramseykern.compose import compose
from ramseykern.generators import paley, random_graph
from ramseykern.graph import complement
from ramseykern.harness import gen_refinement_instance


def workloads():
    rng = np.random.default_rng(0)
    yield "G(60, 0.5) x10", [random_graph(60, 0.5, rng) for _ in range(10)]
    yield "G(120, 0.5) x3", [random_graph(120, 0.5, rng) for _ in range(3)]
    yield "Paley(101)", [paley(101)]
    yield "Paley(197)", [paley(197)]
    no = [gen_refinement_instance(6, 4, "no", [0, i]) for i in range(9)]
    yield "composed t=9 k=4 (198 v)", [compose(no, "witness").result.g_prime]


def run(kernels, graphs):
    for g in graphs:
        kernels.max_clique(list(g.rows))
        kernels.max_clique(list(complement(g).rows))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    backends = available_backends()
    names = list(backends)
    print(f"{'workload':<28}" + "".join(f"{n + ' (s)':>14}" for n in names)
          + ("   speedup" if len(names) > 1 else ""))
    for label, graphs in workloads():
        best = {}
        for name in names:
            times = []
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                run(backends[name], graphs)
                times.append(time.perf_counter() - t0)
            best[name] = min(times)
        line = f"{label:<28}" + "".join(f"{best[n]:>14.4f}" for n in names)
        if "cython" in best and "python" in best:
            line += f"   {best['python'] / best['cython']:>6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
