"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload runs on both backends, checks that the results agree and
prints the best wall time of ``--repeat`` runs. Exits non-zero if the
compiled extension is not built or the backends disagree.
"""

import argparse
import sys
import time

import numpy as np

from ap3lattice import _pykernels
from ap3lattice.tableaux import enumerate_Kn, tableau_poset
from ap3lattice.triple_posets import build_Pn

try:
    from ap3lattice import _kernels
except ImportError:
    _kernels = None


def _ideal_input(n):
    p = build_Pn(n)
    order = p.linear_extension()
    pos = {v: t for t, v in enumerate(order)}
    lc = p.lower_cover_masks()
    masks = []
    for v in order:
        m = 0
        for u in range(p.size):
            if (lc[v] >> u) & 1:
                m |= 1 << pos[u]
        masks.append(m)
    return (masks,)


def _order_input(n):
    ks = enumerate_Kn(n)
    a = np.array([t.flat() for t in ks], dtype=np.int32)
    return a, np.ascontiguousarray(a[:, ::-1])


def _law_input(n):
    return tableau_poset(enumerate_Kn(n)).join_meet_tables()


WORKLOADS = [
    ("ideal_histogram", "ideals of P_7 (32768)", lambda: _ideal_input(7)),
    ("ideal_histogram", "ideals of P_8 (2097152)", lambda: _ideal_input(8)),
    ("staircase_histogram", "M_7 (32768 tableaux)", lambda: (7,)),
    ("staircase_histogram", "M_8 (2097152)", lambda: (8,)),
    ("order_mismatches", "K_8 pairs (960^2)", lambda: _order_input(8)),
    ("order_mismatches", "K_9 pairs (4096^2)", lambda: _order_input(9)),
    ("lattice_law_violations", "K_6 triples (28^3)", lambda: _law_input(6)),
    ("lattice_law_violations", "K_7 triples (64^3)", lambda: _law_input(7)),
]


def best_time(fn, args, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def _same(a, b):
    if isinstance(a, dict):
        return a == b
    return np.array_equal(np.asarray(a, dtype=object), np.asarray(b, dtype=object))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    print(f"{'kernel':24} {'workload':24} {'compiled':>10} {'python':>10} {'speedup':>8}")
    ok = True
    for name, label, make in WORKLOADS:
        inputs = make()
        tc, rc = best_time(getattr(_kernels, name), inputs, args.repeat)
        tp, rp = best_time(getattr(_pykernels, name), inputs, args.repeat)
        agree = _same(rc, rp)
        ok &= agree
        flag = "" if agree else "  MISMATCH"
        print(f"{name:24} {label:24} {tc:10.4f} {tp:10.4f} {tp / tc:7.0f}x{flag}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
