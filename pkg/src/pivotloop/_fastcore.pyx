# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bit kernels; same contract as ``_pycore``.

Rows are packed into ``uint64_t`` words, so matrices are limited to 32
vertices (the augmented PPT rows need 2n bits).
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef enum:
    MAXN = 32


cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef int _load(rows, uint64_t* out, int n) except -1:
    cdef int i
    if n > MAXN:
        raise ValueError("matrices are limited to 32 vertices")
    for i in range(n):
        out[i] = <uint64_t>rows[i]
    return 0


cdef inline int _det_masked(const uint64_t* a, uint64_t mask) nogil:
    cdef uint64_t basis[MAXN]
    cdef uint64_t m = mask, v, low
    cdef int i, h
    for i in range(MAXN):
        basis[i] = 0
    while m:
        low = m & (~m + 1)
        m ^= low
        v = a[__builtin_ctzll(low)] & mask
        while v:
            h = 63 - __builtin_clzll(v)
            if basis[h] == 0:
                basis[h] = v
                break
            v ^= basis[h]
        if v == 0:
            return 0
    return 1


def det_masked(rows, mask):
    cdef uint64_t a[MAXN]
    n = len(rows)
    _load(rows, a, n)
    return _det_masked(a, <uint64_t>mask)


def det(rows, int n):
    cdef uint64_t a[MAXN]
    _load(rows, a, n)
    return _det_masked(a, (<uint64_t>1 << n) - 1)


def rank(rows, int n):
    cdef uint64_t a[MAXN]
    cdef uint64_t basis[MAXN]
    cdef uint64_t v
    cdef int i, h, r = 0
    _load(rows, a, n)
    for i in range(MAXN):
        basis[i] = 0
    for i in range(n):
        v = a[i] & ((<uint64_t>1 << n) - 1)
        while v:
            h = 63 - __builtin_clzll(v)
            if basis[h] == 0:
                basis[h] = v
                r += 1
                break
            v ^= basis[h]
    return r


def kernel(rows, int n):
    cdef uint64_t work[MAXN]
    cdef int pivots[MAXN]
    cdef int ispivot[MAXN]
    cdef int col, k, r = 0, free_, npiv = 0
    cdef uint64_t bit, tmp, v
    _load(rows, work, n)
    for k in range(n):
        work[k] &= (<uint64_t>1 << n) - 1
        ispivot[k] = 0
    for col in range(n):
        bit = <uint64_t>1 << col
        k = r
        while k < n and not (work[k] & bit):
            k += 1
        if k == n:
            continue
        tmp = work[r]; work[r] = work[k]; work[k] = tmp
        for k in range(n):
            if k != r and work[k] & bit:
                work[k] ^= work[r]
        pivots[npiv] = col
        ispivot[col] = 1
        npiv += 1
        r += 1
    out = []
    for free_ in range(n):
        if ispivot[free_]:
            continue
        v = <uint64_t>1 << free_
        for k in range(npiv):
            if (work[k] >> free_) & 1:
                v |= <uint64_t>1 << pivots[k]
        out.append(v)
    return out


def ppt(rows, int n, xmask):
    cdef uint64_t aug[MAXN]
    cdef uint64_t a[MAXN]
    cdef uint64_t X = <uint64_t>xmask
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    cdef uint64_t outer = full & ~X
    cdef uint64_t r, bit, p, tmp
    cdef int i, col, k
    _load(rows, a, n)
    for i in range(n):
        r = a[i]
        bit = <uint64_t>1 << i
        if X & bit:
            aug[i] = (r & X) | (((r & outer) | bit) << n)
        else:
            aug[i] = (r & X) | bit | ((r & outer) << n)
    for col in range(n):
        bit = <uint64_t>1 << col
        k = col
        while k < n and not (aug[k] & bit):
            k += 1
        if k == n:
            return None
        if k != col:
            tmp = aug[col]; aug[col] = aug[k]; aug[k] = tmp
        p = aug[col]
        for k in range(n):
            if k != col and aug[k] & bit:
                aug[k] ^= p
    return [aug[i] >> n for i in range(n)]


def principal_minors(rows, int n):
    cdef uint64_t a[MAXN]
    cdef uint64_t mask, total
    if n > 24:
        raise ValueError("principal_minors is limited to 24 vertices")
    _load(rows, a, n)
    total = <uint64_t>1 << n
    out = bytearray(max(1, total // 8))
    cdef unsigned char[:] buf = out
    with nogil:
        for mask in range(total):
            if _det_masked(a, mask):
                buf[mask >> 3] |= <unsigned char>(1 << (mask & 7))
    return int.from_bytes(out, "little")


cdef list _tolist(const uint64_t* a, int n):
    return [a[i] for i in range(n)]


cdef void _local(uint64_t* a, int u, int keep_diag) nogil:
    cdef uint64_t nb = a[u] & ~(<uint64_t>1 << u)
    cdef uint64_t m = nb, low
    while m:
        low = m & (~m + 1)
        m ^= low
        if keep_diag:
            a[__builtin_ctzll(low)] ^= nb & ~low
        else:
            a[__builtin_ctzll(low)] ^= nb


cdef void _edge(uint64_t* a, int u, int v) nogil:
    cdef uint64_t nu = a[u] | (<uint64_t>1 << u)
    cdef uint64_t nv = a[v] | (<uint64_t>1 << v)
    cdef uint64_t v1 = nu & ~nv, v2 = nv & ~nu, v3 = nu & nv
    cdef uint64_t m, low
    m = v1
    while m:
        low = m & (~m + 1); m ^= low
        a[__builtin_ctzll(low)] ^= v2 | v3
    m = v2
    while m:
        low = m & (~m + 1); m ^= low
        a[__builtin_ctzll(low)] ^= v1 | v3
    m = v3
    while m:
        low = m & (~m + 1); m ^= low
        a[__builtin_ctzll(low)] ^= v1 | v2


def local_complement(rows, int u):
    cdef uint64_t a[MAXN]
    n = len(rows)
    _load(rows, a, n)
    _local(a, u, 0)
    return _tolist(a, n)


def simple_local_complement(rows, int u):
    cdef uint64_t a[MAXN]
    n = len(rows)
    _load(rows, a, n)
    _local(a, u, 1)
    return _tolist(a, n)


def edge_complement(rows, int u, int v):
    cdef uint64_t a[MAXN]
    n = len(rows)
    _load(rows, a, n)
    _edge(a, u, v)
    return _tolist(a, n)


def elementary_moves(rows, int n):
    cdef uint64_t a[MAXN]
    cdef uint64_t b[MAXN]
    cdef int u, v, i
    _load(rows, a, n)
    moves = []
    for u in range(n):
        if (a[u] >> u) & 1:
            for i in range(n):
                b[i] = a[i]
            _local(b, u, 0)
            moves.append((u, -1, _tolist(b, n)))
    for u in range(n):
        if (a[u] >> u) & 1:
            continue
        for v in range(u + 1, n):
            if (a[u] >> v) & 1 and not ((a[v] >> v) & 1):
                for i in range(n):
                    b[i] = a[i]
                _edge(b, u, v)
                moves.append((u, v, _tolist(b, n)))
    return moves


cdef inline int _member(const unsigned char* fam, uint64_t z) nogil:
    return (fam[z >> 3] >> (z & 7)) & 1


def delta_matroid_witness(family, int n):
    if n > 20:
        raise ValueError("delta_matroid_witness is limited to 20 vertices")
    cdef uint64_t total = <uint64_t>1 << n
    raw = family.to_bytes(max(1, total // 8), "little")
    cdef const unsigned char* fam = raw
    members = [z for z in range(total) if (family >> z) & 1]
    members.sort(key=lambda z: (z.bit_count(), z))
    cdef Py_ssize_t count = len(members)
    cdef uint64_t* mem = <uint64_t*>malloc(max(1, count) * sizeof(uint64_t))
    cdef uint64_t pair[MAXN]
    cdef uint64_t X, Y, d, low, xb, g, single
    cdef Py_ssize_t i, j
    cdef int x, y
    cdef int found = 0
    cdef uint64_t wX = 0, wY = 0
    cdef int wx = 0
    if mem == NULL:
        raise MemoryError()
    try:
        for i in range(count):
            mem[i] = members[i]
        with nogil:
            for i in range(count):
                X = mem[i]
                single = 0
                for x in range(n):
                    xb = <uint64_t>1 << x
                    if _member(fam, X ^ xb):
                        single |= xb
                    g = 0
                    for y in range(n):
                        if y != x and _member(fam, X ^ xb ^ (<uint64_t>1 << y)):
                            g |= <uint64_t>1 << y
                    pair[x] = g
                for j in range(count):
                    Y = mem[j]
                    d = (X ^ Y) & ~single
                    while d:
                        low = d & (~d + 1)
                        d ^= low
                        x = __builtin_ctzll(low)
                        if not (pair[x] & (X ^ Y)):
                            found = 1
                            wX = X; wY = Y; wx = x
                            break
                    if found:
                        break
                if found:
                    break
    finally:
        free(mem)
    if found:
        return int(wX), int(wY), wx
    return None
