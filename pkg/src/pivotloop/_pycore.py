"""Pure-Python bit kernels.

Matrices are sequences of row ints: bit ``j`` of ``rows[i]`` is entry
``(i, j)``.  Families of subsets are ints with bit ``Z`` set iff the subset
with bitmask ``Z`` is a member.  ``_fastcore`` implements the same functions
in Cython; ``_core`` selects between the two.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def det_masked(rows: Sequence[int], mask: int) -> int:
    """det A[mask] over F2, without compressing the submatrix."""
    basis: dict[int, int] = {}
    m = mask
    while m:
        low = m & -m
        m ^= low
        v = rows[low.bit_length() - 1] & mask
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = v
                break
            v ^= b
        else:
            return 0
    return 1


def det(rows: Sequence[int], n: int) -> int:
    return det_masked(rows, (1 << n) - 1)


def rank(rows: Sequence[int], n: int) -> int:
    basis: dict[int, int] = {}
    full = (1 << n) - 1
    for r in rows:
        v = r & full
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = v
                break
            v ^= b
    return len(basis)


def kernel(rows: Sequence[int], n: int) -> list[int]:
    """Null-space basis of A (vectors v with A v = 0), one per free column."""
    work = [r & ((1 << n) - 1) for r in rows]
    pivots: list[int] = []  # pivot column of work[k]
    r = 0
    for col in range(n):
        bit = 1 << col
        for k in range(r, n):
            if work[k] & bit:
                work[r], work[k] = work[k], work[r]
                break
        else:
            continue
        for k in range(n):
            if k != r and work[k] & bit:
                work[k] ^= work[r]
        pivots.append(col)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = 1 << free
        for k, p in enumerate(pivots):
            if work[k] >> free & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def ppt(rows: Sequence[int], n: int, xmask: int) -> list[int] | None:
    """Principal pivot transform on ``xmask``; ``None`` when det A[X] = 0.

    Writes ``A x = y`` as ``[A | I] (x, y) = 0`` and solves for the outputs
    ``(x_X, y_rest)`` in terms of the inputs ``(y_X, x_rest)`` by Gauss-Jordan
    elimination on 2n-bit rows: low half output coefficients, high half
    input coefficients.
    """
    full = (1 << n) - 1
    outer = full & ~xmask
    aug = []
    for i in range(n):
        r = rows[i]
        bit = 1 << i
        if xmask & bit:
            aug.append((r & xmask) | (((r & outer) | bit) << n))
        else:
            aug.append((r & xmask) | bit | ((r & outer) << n))
    for col in range(n):
        bit = 1 << col
        for k in range(col, n):
            if aug[k] & bit:
                break
        else:
            return None
        if k != col:
            aug[col], aug[k] = aug[k], aug[col]
        p = aug[col]
        for k in range(n):
            if k != col and aug[k] & bit:
                aug[k] ^= p
    return [a >> n for a in aug]


def principal_minors(rows: Sequence[int], n: int) -> int:
    """Family bitset of all X with det A[X] = 1."""
    out = bytearray(max(1, (1 << n) // 8))
    for mask in range(1 << n):
        if det_masked(rows, mask):
            out[mask >> 3] |= 1 << (mask & 7)
    return int.from_bytes(out, "little")


def local_complement(rows: Sequence[int], u: int) -> list[int]:
    """Toggle every pair (loops included) inside the open neighbourhood of u."""
    nb = rows[u] & ~(1 << u)
    out = list(rows)
    m = nb
    while m:
        low = m & -m
        m ^= low
        out[low.bit_length() - 1] ^= nb
    return out


def simple_local_complement(rows: Sequence[int], u: int) -> list[int]:
    """As :func:`local_complement` but never touches the diagonal."""
    nb = rows[u] & ~(1 << u)
    out = list(rows)
    m = nb
    while m:
        low = m & -m
        m ^= low
        out[low.bit_length() - 1] ^= nb & ~low
    return out


def edge_complement(rows: Sequence[int], u: int, v: int) -> list[int]:
    """Toggle all pairs across the classes N'(u)-N'(v), N'(v)-N'(u), N'(u)&N'(v)."""
    nu = rows[u] | (1 << u)
    nv = rows[v] | (1 << v)
    v1 = nu & ~nv
    v2 = nv & ~nu
    v3 = nu & nv
    out = list(rows)
    for cls, other in ((v1, v2 | v3), (v2, v1 | v3), (v3, v1 | v2)):
        m = cls
        while m:
            low = m & -m
            m ^= low
            out[low.bit_length() - 1] ^= other
    return out


def elementary_moves(rows: Sequence[int], n: int) -> list[tuple[int, int, list[int]]]:
    """All applicable elementary pivots as ``(u, v, result)``; ``v = -1`` for loops.

    Loops come first in vertex order, then edges ``u < v`` between
    loopless vertices in lexicographic order.
    """
    moves = []
    for u in range(n):
        if rows[u] >> u & 1:
            moves.append((u, -1, local_complement(rows, u)))
    for u in range(n):
        if rows[u] >> u & 1:
            continue
        for v in range(u + 1, n):
            if rows[u] >> v & 1 and not rows[v] >> v & 1:
                moves.append((u, v, edge_complement(rows, u, v)))
    return moves


def delta_matroid_witness(family: int, n: int) -> tuple[int, int, int] | None:
    """Least ``(X, Y, x)`` violating the symmetric exchange axiom, or ``None``.

    Members are scanned by (size, mask); ``x`` by increasing index.  For a
    fixed ``X`` the per-``x`` data is precomputed: whether ``X^{x}`` is a
    member and the mask of ``y != x`` with ``X^{x,y}`` a member.
    """
    members = [z for z in range(1 << n) if family >> z & 1]
    members.sort(key=lambda z: (z.bit_count(), z))
    for X in members:
        single = 0
        pair = [0] * n
        for x in range(n):
            xb = 1 << x
            if family >> (X ^ xb) & 1:
                single |= xb
            g = 0
            for y in range(n):
                if y != x and family >> (X ^ xb ^ (1 << y)) & 1:
                    g |= 1 << y
            pair[x] = g
        for Y in members:
            d = (X ^ Y) & ~single
            while d:
                low = d & -d
                d ^= low
                x = low.bit_length() - 1
                if not pair[x] & (X ^ Y):
                    return X, Y, x
    return None
