"""Pure-Python/numpy versions of the compiled kernels.

Same signatures and results as the Cython module; used when the extension
is not built or when ``AP3_PURE_PYTHON=1``.
"""

from __future__ import annotations

import numpy as np


def ideal_histogram(lower_masks):
    """Joint histogram ``h[size][width]`` over all order ideals.

    ``lower_masks[y]`` is the bitmask of lower covers of element ``y``;
    indices must form a linear extension. No size limit here.
    """
    lower = [int(m) for m in lower_masks]
    n = len(lower)
    hist = [[0] * (n + 1) for _ in range(n + 1)]
    # explicit stack: (ideal, maximal, start, depth)
    stack = [(0, 0, 0, 0)]
    while stack:
        ideal, maximal, start, depth = stack.pop()
        hist[depth][maximal.bit_count()] += 1
        for y in range(start, n):
            low = lower[y]
            if low & ~ideal == 0:
                bit = 1 << y
                stack.append((ideal | bit, (maximal & ~low) | bit, y + 1, depth + 1))
    return hist


def _staircase_cells(n):
    m = n - 1
    index = {}
    for b in range(1, m):
        for a in range(1, m - b + 1):
            index[(a, b)] = len(index)
    cells = []
    for (a, b), p in index.items():
        length = m - b
        cells.append((index.get((a, b - 1), -1), index.get((a - 1, b), -1), a, m - (length - a)))
    return cells


def staircase_histogram(n):
    """Joint histogram ``h[rank][reducible]`` over the staircase SSYT lattice."""
    if n < 2:
        raise ValueError("n must be at least 2")
    cells = _staircase_cells(n)
    npos = len(cells)
    offset = sum(c[2] for c in cells)
    nranks = sum(c[3] for c in cells) - offset + 1
    hist = [[0] * (npos + 1) for _ in range(nranks)]
    entries = [0] * npos

    def fill(p, total, red):
        if p == npos:
            hist[total - offset][red] += 1
            return
        left, up, row, upper = cells[p]
        lv = entries[left] if left >= 0 else row
        uv = entries[up] if up >= 0 else 0
        lo = lv if lv > uv + 1 else uv + 1
        for v in range(lo, upper + 1):
            entries[p] = v
            fill(p + 1, total + v, red + (1 if (v - lv >= 1 and v - uv >= 2) else 0))

    fill(0, 0, 0)
    return hist


def order_mismatches(a, b):
    """Count ordered pairs whose componentwise comparison differs between ``a`` and ``b``."""
    a = np.ascontiguousarray(a, dtype=np.int32)
    b = np.ascontiguousarray(b, dtype=np.int32)
    if a.shape[0] != b.shape[0]:
        raise ValueError("row counts differ")
    bad = 0
    for i in range(a.shape[0]):
        la = (a[i] <= a).all(axis=1)
        lb = (b[i] <= b).all(axis=1)
        bad += int(np.count_nonzero(la != lb))
    return bad


def lattice_law_violations(join, meet):
    """Count violations of each lattice/distributive law over all pairs and triples."""
    J = np.ascontiguousarray(join, dtype=np.int64)
    M = np.ascontiguousarray(meet, dtype=np.int64)
    n = J.shape[0]
    ids = np.arange(n)
    out = {
        "commutative": int(np.count_nonzero((J != J.T) | (M != M.T))),
        "idempotent": int(np.count_nonzero((J[ids, ids] != ids) | (M[ids, ids] != ids))),
        "absorption": 0,
        "associative_join": 0,
        "associative_meet": 0,
        "distributive_join_over_meet": 0,
        "distributive_meet_over_join": 0,
    }
    for x in range(n):
        jx, mx = J[x], M[x]
        out["absorption"] += int(np.count_nonzero((jx[mx] != x) | (mx[jx] != x)))
        out["associative_join"] += int(np.count_nonzero(J[jx] != jx[J]))
        out["associative_meet"] += int(np.count_nonzero(M[mx] != mx[M]))
        out["distributive_join_over_meet"] += int(
            np.count_nonzero(jx[M] != M[jx[:, None], jx[None, :]])
        )
        out["distributive_meet_over_join"] += int(
            np.count_nonzero(mx[J] != J[mx[:, None], mx[None, :]])
        )
    return out
