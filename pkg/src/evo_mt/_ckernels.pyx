# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled EA kernels; mirrors evo_mt._kernels draw for draw."""
from libc.stdint cimport uint32_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

cdef uint64_t LCG_MULTIPLIER = 6364136223846793005ULL
cdef uint64_t LCG_INCREMENT = 1442695040888963407ULL
cdef uint64_t SPAN32 = 4294967296ULL


cdef inline uint32_t _next_u32(uint64_t* state) noexcept nogil:
    state[0] = state[0] * LCG_MULTIPLIER + LCG_INCREMENT
    return <uint32_t>(state[0] >> 32)


cdef inline uint32_t _below(uint64_t* state, uint32_t bound) noexcept nogil:
    cdef uint64_t limit = SPAN32 - SPAN32 % bound
    cdef uint32_t r
    while True:
        r = _next_u32(state)
        if r < limit:
            return r % bound


cdef int _lev(const int* a, int na, const int* b, int nb, int* prev, int* cur) noexcept nogil:
    cdef int i, j, best, v
    cdef int* tmp
    for j in range(nb + 1):
        prev[j] = j
    for i in range(1, na + 1):
        cur[0] = i
        for j in range(1, nb + 1):
            best = prev[j] + 1
            v = cur[j - 1] + 1
            if v < best:
                best = v
            v = prev[j - 1] + (a[i - 1] != b[j - 1])
            if v < best:
                best = v
            cur[j] = best
        tmp = prev
        prev = cur
        cur = tmp
    return prev[nb]


cdef void _paste(int* out, int movable, uint64_t* state) noexcept nogil:
    cdef int i, d, p, k, moved
    if movable <= 1:
        return
    i = <int>_below(state, <uint32_t>movable)
    d = 1 + <int>_below(state, <uint32_t>(movable - 1))
    p = (i + d) % movable
    moved = out[i]
    if p > i:
        for k in range(i, p):
            out[k] = out[k + 1]
    else:
        for k in range(i, p, -1):
            out[k] = out[k - 1]
    out[p] = moved


cdef int _score(const int* order, const int* seq, int n, int* buf,
                const int* target, int nt, int* prev, int* cur) noexcept nogil:
    cdef int k
    for k in range(n):
        buf[k] = seq[order[k]]
    return _lev(buf, n, target, nt, prev, cur)


def levenshtein(a, b):
    cdef int na = len(a), nb = len(b), k, result
    cdef int* xa = <int*>malloc((na + 1) * sizeof(int))
    cdef int* xb = <int*>malloc((nb + 1) * sizeof(int))
    cdef int* prev = <int*>malloc((nb + 1) * sizeof(int))
    cdef int* cur = <int*>malloc((nb + 1) * sizeof(int))
    try:
        if not xa or not xb or not prev or not cur:
            raise MemoryError()
        # intern arbitrary hashables as small ints
        codes = {}
        for k in range(na):
            xa[k] = codes.setdefault(a[k], len(codes))
        for k in range(nb):
            xb[k] = codes.setdefault(b[k], len(codes))
        result = _lev(xa, na, xb, nb, prev, cur)
    finally:
        free(xa)
        free(xb)
        free(prev)
        free(cur)
    return result


def evolve_core(seq, target, int children, int max_generations, seed, bint anchored, bint sideways):
    cdef int n = len(seq), nt = len(target), k, c, gen = 0
    cdef int movable = n - 1 if anchored else n
    cdef uint64_t state = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef int parent_fit, fit, best_fit
    cdef int width = (n if n > nt else nt) + 1
    cdef int* xseq = <int*>malloc(width * sizeof(int))
    cdef int* xtarget = <int*>malloc(width * sizeof(int))
    cdef int* parent = <int*>malloc(width * sizeof(int))
    cdef int* child = <int*>malloc(width * sizeof(int))
    cdef int* best = <int*>malloc(width * sizeof(int))
    cdef int* buf = <int*>malloc(width * sizeof(int))
    cdef int* prev = <int*>malloc(width * sizeof(int))
    cdef int* cur = <int*>malloc(width * sizeof(int))
    trace = []
    try:
        if not (xseq and xtarget and parent and child and best and buf and prev and cur):
            raise MemoryError()
        for k in range(n):
            xseq[k] = seq[k]
            parent[k] = k
        for k in range(nt):
            xtarget[k] = target[k]
        parent_fit = _score(parent, xseq, n, buf, xtarget, nt, prev, cur)
        while parent_fit > 0 and gen < max_generations:
            best_fit = -1
            with nogil:
                for c in range(children):
                    memcpy(child, parent, n * sizeof(int))
                    _paste(child, movable, &state)
                    fit = _score(child, xseq, n, buf, xtarget, nt, prev, cur)
                    if best_fit < 0 or fit < best_fit:
                        best_fit = fit
                        memcpy(best, child, n * sizeof(int))
                if best_fit >= 0 and (best_fit < parent_fit or (sideways and best_fit == parent_fit)):
                    memcpy(parent, best, n * sizeof(int))
                    parent_fit = best_fit
            gen += 1
            trace.append((parent_fit, tuple([parent[k] for k in range(n)])))
        order = [parent[k] for k in range(n)]
    finally:
        free(xseq)
        free(xtarget)
        free(parent)
        free(child)
        free(best)
        free(buf)
        free(prev)
        free(cur)
    return order, parent_fit, trace
