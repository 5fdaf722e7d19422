# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Signatures mirror :mod:`ap3lattice._pykernels`."""

from libc.stdint cimport uint64_t, int32_t
from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef void _ideal_walk(const uint64_t* lower, int size_n, uint64_t ideal,
                      uint64_t maximal, int start, int depth,
                      uint64_t* hist, int stride) noexcept nogil:
    cdef int y
    cdef uint64_t bit
    hist[depth * stride + __builtin_popcountll(maximal)] += 1
    for y in range(start, size_n):
        if (lower[y] & ~ideal) == 0:
            bit = (<uint64_t>1) << y
            _ideal_walk(lower, size_n, ideal | bit, (maximal & ~lower[y]) | bit,
                        y + 1, depth + 1, hist, stride)


def ideal_histogram(lower_masks):
    """Joint histogram ``h[size][width]`` over all order ideals.

    ``lower_masks[y]`` is the bitmask of lower covers of element ``y``; indices
    must form a linear extension and there may be at most 64 elements.
    """
    cdef int n = len(lower_masks)
    if n > 64:
        raise ValueError("compiled ideal walk supports at most 64 elements")
    cdef int stride = n + 1
    cdef uint64_t* lower = <uint64_t*>malloc((n + 1) * sizeof(uint64_t))
    cdef uint64_t* hist = <uint64_t*>calloc(stride * stride, sizeof(uint64_t))
    if lower == NULL or hist == NULL:
        free(lower)
        free(hist)
        raise MemoryError()
    cdef int i
    try:
        for i in range(n):
            lower[i] = <uint64_t>lower_masks[i]
        with nogil:
            _ideal_walk(lower, n, 0, 0, 0, 0, hist, stride)
        return [[hist[r * stride + w] for w in range(stride)] for r in range(stride)]
    finally:
        free(lower)
        free(hist)


cdef struct Cells:
    int npos
    int* left
    int* up
    int* row
    int* upper
    int* entries


cdef void _fill(Cells* c, int p, int total, int red, uint64_t* hist,
                int stride, int offset) noexcept nogil:
    cdef int lo, hi, v, lv, uv, r
    if p == c.npos:
        hist[(total - offset) * stride + red] += 1
        return
    lv = c.entries[c.left[p]] if c.left[p] >= 0 else c.row[p]
    uv = c.entries[c.up[p]] if c.up[p] >= 0 else 0
    lo = lv
    if uv + 1 > lo:
        lo = uv + 1
    hi = c.upper[p]
    for v in range(lo, hi + 1):
        c.entries[p] = v
        r = red
        if v - lv >= 1 and v - uv >= 2:
            r += 1
        _fill(c, p + 1, total + v, r, hist, stride, offset)


def staircase_histogram(int n):
    """Joint histogram ``h[rank][reducible]`` over the staircase SSYT lattice.

    Rank is the entry sum minus the entry sum of the minimum tableau.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    cdef int m = n - 1
    cdef int npos = (m - 1) * m // 2
    cdef int a, b, p, length
    cdef Cells c
    c.npos = npos
    c.left = <int*>malloc((npos + 1) * sizeof(int))
    c.up = <int*>malloc((npos + 1) * sizeof(int))
    c.row = <int*>malloc((npos + 1) * sizeof(int))
    c.upper = <int*>malloc((npos + 1) * sizeof(int))
    c.entries = <int*>malloc((npos + 1) * sizeof(int))
    index = {}
    p = 0
    for b in range(1, m):
        length = m - b
        for a in range(1, length + 1):
            index[(a, b)] = p
            p += 1
    offset = 0
    max_total = 0
    for (a, b), p in index.items():
        length = m - b
        c.left[p] = index.get((a, b - 1), -1)
        c.up[p] = index.get((a - 1, b), -1)
        c.row[p] = a
        c.upper[p] = m - (length - a)
        offset += a
        max_total += c.upper[p]
    cdef int stride = npos + 1
    cdef int nranks = max_total - offset + 1
    cdef uint64_t* hist = <uint64_t*>calloc(nranks * stride, sizeof(uint64_t))
    cdef int off = offset
    try:
        with nogil:
            _fill(&c, 0, 0, 0, hist, stride, off)
        return [[hist[r * stride + k] for k in range(stride)] for r in range(nranks)]
    finally:
        free(c.left)
        free(c.up)
        free(c.row)
        free(c.upper)
        free(c.entries)
        free(hist)


def order_mismatches(const int32_t[:, ::1] a, const int32_t[:, ::1] b):
    """Count ordered pairs whose componentwise comparison differs between ``a`` and ``b``."""
    cdef Py_ssize_t n = a.shape[0]
    if b.shape[0] != n:
        raise ValueError("row counts differ")
    cdef Py_ssize_t da = a.shape[1], db = b.shape[1]
    cdef Py_ssize_t i, j, t
    cdef bint la, lb
    cdef uint64_t bad = 0
    with nogil:
        for i in range(n):
            for j in range(n):
                la = True
                for t in range(da):
                    if a[i, t] > a[j, t]:
                        la = False
                        break
                lb = True
                for t in range(db):
                    if b[i, t] > b[j, t]:
                        lb = False
                        break
                if la != lb:
                    bad += 1
    return bad


def lattice_law_violations(const int32_t[:, ::1] join, const int32_t[:, ::1] meet):
    """Count violations of each lattice/distributive law over all pairs and triples."""
    cdef Py_ssize_t n = join.shape[0]
    cdef Py_ssize_t x, y, z
    cdef uint64_t comm = 0, idem = 0, absorb = 0
    cdef uint64_t assoc_j = 0, assoc_m = 0, dist_jm = 0, dist_mj = 0
    with nogil:
        for x in range(n):
            if join[x, x] != x or meet[x, x] != x:
                idem += 1
            for y in range(n):
                if join[x, y] != join[y, x] or meet[x, y] != meet[y, x]:
                    comm += 1
                if join[x, meet[x, y]] != x or meet[x, join[x, y]] != x:
                    absorb += 1
                for z in range(n):
                    if join[join[x, y], z] != join[x, join[y, z]]:
                        assoc_j += 1
                    if meet[meet[x, y], z] != meet[x, meet[y, z]]:
                        assoc_m += 1
                    if join[x, meet[y, z]] != meet[join[x, y], join[x, z]]:
                        dist_jm += 1
                    if meet[x, join[y, z]] != join[meet[x, y], meet[x, z]]:
                        dist_mj += 1
    return {
        "commutative": comm,
        "idempotent": idem,
        "absorption": absorb,
        "associative_join": assoc_j,
        "associative_meet": assoc_m,
        "distributive_join_over_meet": dist_jm,
        "distributive_meet_over_join": dist_mj,
    }
