"""Compiled vs pure-Python annealing kernel: throughput on CIRC instances.

    python benchmarks/bench_kernels.py [--iterations 5] [--sizes 6,8,10]

Both kernels run the same seeded trajectory, so the script also checks that
they agree on the best distance and the move counters.
"""
import argparse
import time

from mttp.annealer import HAVE_COMPILED, SAConfig, anneal
from mttp.instance import make_circular_instance


def timed(inst, cfg, backend):
    start = time.perf_counter()
    res = anneal(inst, cfg, backend=backend)
    return res, time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--iterations", type=int, default=5)
    ap.add_argument("--sizes", default="6,8,10,12")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    if not HAVE_COMPILED:
        raise SystemExit("compiled kernel not built; reinstall without MTTP_PURE_PYTHON")

    print(f"{'instance':<8} {'python sol/s':>13} {'compiled sol/s':>15} {'ratio':>7}  same")
    for n in (int(x) for x in args.sizes.split(",")):
        inst = make_circular_instance(n)
        cfg = SAConfig(n_iterations=args.iterations, seed=args.seed)
        py, t_py = timed(inst, cfg, "python")
        c, t_c = timed(inst, cfg, "compiled")
        same = (py.best_dist, py.solutions_explored, py.accepted) == \
            (c.best_dist, c.solutions_explored, c.accepted)
        sps_py = py.solutions_explored / t_py
        sps_c = c.solutions_explored / t_c
        print(f"{inst.name:<8} {sps_py:>13.0f} {sps_c:>15.0f} {sps_c / sps_py:>7.1f}  {same}")


if __name__ == "__main__":
    main()
