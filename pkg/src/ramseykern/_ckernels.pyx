# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics identical to ``_pykernels``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free

from ._pykernels import degree_order, subset_edge_masks

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef struct Search:
    int n
    int W
    uint64_t* adj       # n * W
    uint64_t* pstack    # (n + 2) * W, candidate set per depth
    uint64_t* scratch_u
    uint64_t* scratch_q
    int* verts          # (n + 2) * n
    int* cols           # (n + 2) * n
    int* current
    int depth
    int* best
    int best_size
    int target
    bint done


cdef inline bint _empty(const uint64_t* s, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if s[w]:
            return False
    return True


cdef void _expand(Search* S, int d) noexcept nogil:
    cdef int W = S.W
    cdef uint64_t* P = S.pstack + d * W
    cdef uint64_t* NP = S.pstack + (d + 1) * W
    cdef uint64_t* U = S.scratch_u
    cdef uint64_t* Q = S.scratch_q
    cdef int* verts = S.verts + d * S.n
    cdef int* cols = S.cols + d * S.n
    cdef int cnt = 0
    cdef int color = 0
    cdef int w, wq, v, i
    cdef uint64_t* av
    cdef bint any_np

    for w in range(W):
        U[w] = P[w]
    while not _empty(U, W):
        color += 1
        for w in range(W):
            Q[w] = U[w]
        wq = 0
        while True:
            while wq < W and Q[wq] == 0:
                wq += 1
            if wq == W:
                break
            v = wq * 64 + __builtin_ctzll(Q[wq])
            U[wq] &= ~((<uint64_t>1) << (v & 63))
            Q[wq] &= ~((<uint64_t>1) << (v & 63))
            av = S.adj + v * W
            for w in range(wq, W):
                Q[w] &= ~av[w]
            verts[cnt] = v
            cols[cnt] = color
            cnt += 1

    for i in range(cnt - 1, -1, -1):
        if S.done or S.depth + cols[i] <= S.best_size:
            return
        v = verts[i]
        S.current[S.depth] = v
        S.depth += 1
        av = S.adj + v * W
        any_np = False
        for w in range(W):
            NP[w] = P[w] & av[w]
            if NP[w]:
                any_np = True
        if any_np:
            _expand(S, d + 1)
        elif S.depth > S.best_size:
            for w in range(S.depth):
                S.best[w] = S.current[w]
            S.best_size = S.depth
            if S.target > 0 and S.best_size >= S.target:
                S.done = True
        S.depth -= 1
        P[v >> 6] &= ~((<uint64_t>1) << (v & 63))


def max_clique(rows, int lower=0, int target=-1):
    """Search for a clique strictly larger than ``lower``; see ``_pykernels``."""
    cdef int n = len(rows)
    if n == 0:
        return []
    cdef Search S
    cdef int W = (n + 63) >> 6
    cdef int i, w, p
    order = degree_order(rows)
    pos = [0] * n
    for i in range(n):
        pos[order[i]] = i
    S.n = n
    S.W = W
    S.adj = <uint64_t*>calloc(n * W, sizeof(uint64_t))
    S.pstack = <uint64_t*>calloc((n + 2) * W, sizeof(uint64_t))
    S.scratch_u = <uint64_t*>calloc(W, sizeof(uint64_t))
    S.scratch_q = <uint64_t*>calloc(W, sizeof(uint64_t))
    S.verts = <int*>malloc((n + 2) * n * sizeof(int))
    S.cols = <int*>malloc((n + 2) * n * sizeof(int))
    S.current = <int*>malloc((n + 1) * sizeof(int))
    S.best = <int*>malloc((n + 1) * sizeof(int))
    if (S.adj == NULL or S.pstack == NULL or S.scratch_u == NULL or S.scratch_q == NULL
            or S.verts == NULL or S.cols == NULL or S.current == NULL or S.best == NULL):
        free(S.adj); free(S.pstack); free(S.scratch_u); free(S.scratch_q)
        free(S.verts); free(S.cols); free(S.current); free(S.best)
        raise MemoryError()
    try:
        for i in range(n):
            r = rows[order[i]]
            while r:
                b = r & -r
                p = pos[b.bit_length() - 1]
                S.adj[i * W + (p >> 6)] |= (<uint64_t>1) << (p & 63)
                r ^= b
        for i in range(n):
            S.pstack[i >> 6] |= (<uint64_t>1) << (i & 63)
        S.depth = 0
        S.best_size = lower
        S.target = target
        S.done = False
        with nogil:
            _expand(&S, 0)
        if S.best_size > lower:
            return sorted(order[S.best[i]] for i in range(S.best_size))
        return []
    finally:
        free(S.adj); free(S.pstack); free(S.scratch_u); free(S.scratch_q)
        free(S.verts); free(S.cols); free(S.current); free(S.best)


def count_ramsey_witnesses(int n, int k, long long limit=-1):
    """Count labeled n-vertex graphs with no homogeneous k-set; see ``_pykernels``."""
    cdef int total_bits = n * (n - 1) // 2
    if total_bits > 62:
        raise OverflowError("edge mask wider than 62 bits")
    if k > n:
        total = 1 << total_bits
        return (total if limit <= 0 else min(total, limit)), 0
    py_masks = subset_edge_masks(n, k)
    cdef int nm = len(py_masks)
    cdef unsigned long long* masks = <unsigned long long*>malloc(max(nm, 1) * sizeof(unsigned long long))
    if masks == NULL:
        raise MemoryError()
    cdef int j
    cdef unsigned long long g, x, m, end = (<unsigned long long>1) << total_bits
    cdef long long count = 0
    cdef long long first = -1
    cdef bint ok
    try:
        for j in range(nm):
            masks[j] = py_masks[j]
        with nogil:
            g = 0
            while g < end:
                ok = True
                for j in range(nm):
                    m = masks[j]
                    x = g & m
                    if x == 0 or x == m:
                        ok = False
                        break
                if ok:
                    if first < 0:
                        first = <long long>g
                    count += 1
                    if limit > 0 and count >= limit:
                        break
                g += 1
        return count, first
    finally:
        free(masks)
