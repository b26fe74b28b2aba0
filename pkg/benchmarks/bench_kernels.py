"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--max-len 10] [--repeat 3]
"""

import argparse
import sys
import timeit
from pathlib import Path

import numpy as np

from qclift import ChainTable, expand, fsm_lift, mother_matrix, read_exponent_matrix
from qclift._kernels import _pykernels

try:
    from qclift._kernels import _ckernels
except ImportError:
    _ckernels = None

BASE = Path(__file__).resolve().parents[1] / "data" / "ieee80216e_rate12_z96.em"


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def _same(a, b):
    if isinstance(a, dict):
        return a.keys() == b.keys() and all(np.array_equal(a[k], b[k]) for k in a)
    return a == b


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--matrix", default=str(BASE))
    parser.add_argument("--max-len", type=int, default=10)
    parser.add_argument("--target", type=int, default=24)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available", file=sys.stderr)

    E = read_exponent_matrix(args.matrix)
    t = ChainTable(mother_matrix(E))
    walk_args = (t.edge_check, t.edge_var, t.check_ptr, t.check_edges, t.var_ptr, t.var_edges, args.max_len)
    H = expand(fsm_lift(E, args.target, 1))
    indptr, indices = H.tanner_csr()

    cases = [
        (f"closed_walks max_len={args.max_len}", lambda k: k.closed_walks(*walk_args)),
        (f"bfs_girth n={len(indptr) - 1}", lambda k: k.bfs_girth(indptr, indices, 12)),
    ]
    print(f"{'kernel':<28}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for name, call in cases:
        py = best_of(lambda: call(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<28}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        c = best_of(lambda: call(_ckernels), args.repeat)
        same = _same(call(_pykernels), call(_ckernels))
        print(f"{name:<28}{py:>12.4f}{c:>12.4f}{py / c:>9.1f}x" + ("" if same else "  OUTPUT DIFFERS"))


if __name__ == "__main__":
    main()
