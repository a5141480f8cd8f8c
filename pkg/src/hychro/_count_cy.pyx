# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled coloring counter.

Same contract as _count_py.count_weak_colorings: depth-first enumeration of
vertex colorings with an edge checked as soon as its highest vertex is
colored.  The guard upstream keeps k**n <= 1e9, so the count fits in 64 bits.
"""

from libc.stdlib cimport calloc, free

__all__ = ["count_weak_colorings"]


cdef long long _rec(int v, int n, int k,
                    int* color,
                    int* ce_off, int* ed_off, int* ed_dat) noexcept:
    cdef long long total = 0
    cdef int c, j, t, u, mono
    if v == n:
        return 1
    for c in range(k):
        color[v] = c
        mono = 0
        for j in range(ce_off[v], ce_off[v + 1]):
            mono = 1
            for t in range(ed_off[j], ed_off[j + 1]):
                u = ed_dat[t]
                if color[u] != c:
                    mono = 0
                    break
            if mono:
                break
        if not mono:
            total += _rec(v + 1, n, k, color, ce_off, ed_off, ed_dat)
    return total


def count_weak_colorings(n, edges, k):
    """Number of k-colorings of vertices 1..n leaving no edge single-colored."""
    if n == 0:
        return 1
    if k <= 0:
        return 0
    edges = [tuple(e) for e in edges]
    # group edges by their highest vertex (0-based), CSR layout
    by_top = [[] for _ in range(n)]
    for e in edges:
        vs = [v - 1 for v in e]
        top = max(vs)
        by_top[top].append([u for u in vs if u != top])
    cdef int m = len(edges)
    cdef int total_verts = 0
    for row in by_top:
        for others in row:
            total_verts += len(others)

    cdef int* color = <int*> calloc(n, sizeof(int))
    cdef int* ce_off = <int*> calloc(n + 1, sizeof(int))
    cdef int* ed_off = <int*> calloc(m + 1, sizeof(int))
    cdef int* ed_dat = <int*> calloc(total_verts if total_verts else 1, sizeof(int))
    if not color or not ce_off or not ed_off or not ed_dat:
        free(color); free(ce_off); free(ed_off); free(ed_dat)
        raise MemoryError()

    cdef int j = 0, t = 0, v
    try:
        for v in range(n):
            ce_off[v] = j
            for others in by_top[v]:
                ed_off[j] = t
                for u in others:
                    ed_dat[t] = u
                    t += 1
                j += 1
        ce_off[n] = j
        ed_off[j] = t
        return int(_rec(0, n, k, color, ce_off, ed_off, ed_dat))
    finally:
        free(color); free(ce_off); free(ed_off); free(ed_dat)
