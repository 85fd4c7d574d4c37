"""Slow, obviously-correct reference implementations used as test oracles.

Matrices here are plain ``list[list[int]]`` so nothing is shared with the
bit-packed code under test.
"""

from __future__ import annotations

from itertools import permutations


def to_lists(rows, n):
    return [[rows[i] >> j & 1 for j in range(n)] for i in range(n)]


def from_lists(m):
    return [sum(b << j for j, b in enumerate(row)) for row in m]


def det_leibniz(m):
    """Permutation expansion; over F2 the sign is irrelevant."""
    n = len(m)
    acc = 0
    for perm in permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            prod &= m[i][j]
            if not prod:
                break
        acc ^= prod
    return acc


def submatrix(m, rows, cols):
    return [[m[i][j] for j in cols] for i in rows]


def mul(a, b):
    n, k, p = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][t] & b[t][j] for t in range(k)) & 1 for j in range(p)] for i in range(n)]


def add(a, b):
    return [[x ^ y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def inverse(m):
    """Gauss-Jordan on an explicit augmented table; ``None`` if singular."""
    n = len(m)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c]), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        for r in range(n):
            if r != c and aug[r][c]:
                aug[r] = [x ^ y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def ppt_block(m, xs):
    """Principal pivot transform by the 2x2 block formula."""
    n = len(m)
    X = sorted(xs)
    R = [i for i in range(n) if i not in xs]
    P = submatrix(m, X, X)
    Q = submatrix(m, X, R)
    Rm = submatrix(m, R, X)
    S = submatrix(m, R, R)
    Pi = inverse(P) if X else []
    if Pi is None:
        return None
    out = [[0] * n for _ in range(n)]
    blocks = {}
    if X:
        blocks["P"] = Pi
        blocks["Q"] = mul(Pi, Q) if R else []
        blocks["R"] = mul(Rm, Pi) if R else []
        blocks["S"] = add(S, mul(mul(Rm, Pi), Q)) if R else []
    else:
        blocks = {"P": [], "Q": [], "R": [], "S": S}
    for a, i in enumerate(X):
        for b, j in enumerate(X):
            out[i][j] = blocks["P"][a][b]
        for b, j in enumerate(R):
            out[i][j] = blocks["Q"][a][b]
    for a, i in enumerate(R):
        for b, j in enumerate(X):
            out[i][j] = blocks["R"][a][b]
        for b, j in enumerate(R):
            out[i][j] = blocks["S"][a][b]
    return out


def rank(m):
    m = [list(r) for r in m]
    rk = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rk, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(len(m)):
            if r != rk and m[r][c]:
                m[r] = [x ^ y for x, y in zip(m[r], m[rk])]
        rk += 1
    return rk


def principal_minor_family(m):
    n = len(m)
    fam = 0
    for x in range(1 << n):
        idx = [i for i in range(n) if x >> i & 1]
        fam |= det_leibniz(submatrix(m, idx, idx)) << x
    return fam


def local_complement_lists(m, u):
    """Toggle every pair (loops included) among the neighbours of u other than u."""
    n = len(m)
    nb = [i for i in range(n) if m[u][i] and i != u]
    out = [list(r) for r in m]
    for i in nb:
        for j in nb:
            out[i][j] ^= 1
    return out


def exchange_axiom(fam, n):
    sets = [z for z in range(1 << n) if fam >> z & 1]
    for X in sets:
        for Y in sets:
            for x in range(n):
                if not (X ^ Y) >> x & 1:
                    continue
                # {x, y} collapses to {x} when y == x
                ok = any((X ^ Y) >> y & 1 and fam >> (X ^ ((1 << x) | (1 << y))) & 1 for y in range(n))
                if not ok:
                    return False
    return True
