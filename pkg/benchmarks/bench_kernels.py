"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import timeit

from pivotloop import _pycore

try:
    from pivotloop import _fastcore
except ImportError:  # pragma: no cover
    _fastcore = None


def cases(seed: int = 1):
    rng = random.Random(seed)

    def mat(n):
        return [rng.getrandbits(n) for _ in range(n)]

    def sym(n):
        rows = [0] * n
        for i in range(n):
            for j in range(i, n):
                if rng.getrandbits(1):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return rows

    A12, A14, A16 = mat(12), mat(14), mat(16)
    A32 = mat(32)
    pivots = [(mat(16), rng.getrandbits(16)) for _ in range(200)]
    G10 = sym(10)
    dm = [(_pycore.principal_minors(sym(6), 6), 6) for _ in range(20)]
    return [
        ("principal_minors n=12", lambda c: c.principal_minors(A12, 12), 1),
        ("principal_minors n=14", lambda c: c.principal_minors(A14, 14), 1),
        ("principal_minors n=16", lambda c: c.principal_minors(A16, 16), 1),
        ("det n=32 x200", lambda c: [c.det(A32, 32) for _ in range(200)], 1),
        ("ppt n=16 x200", lambda c: [c.ppt(r, 16, x) for r, x in pivots], 1),
        ("elementary_moves n=10 x100", lambda c: [c.elementary_moves(G10, 10) for _ in range(100)], 1),
        ("delta_matroid_witness n=6 x20", lambda c: [c.delta_matroid_witness(f, n) for f, n in dm], 1),
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _fastcore is None:
        print("compiled extension not available; only the Python kernels run")
    print(f"{'kernel':34s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn, number in cases():
        py = min(timeit.repeat(lambda: fn(_pycore), number=number, repeat=args.repeat))
        if _fastcore is None:
            print(f"{name:34s} {py * 1e3:9.2f}ms")
            continue
        assert fn(_pycore) == fn(_fastcore), name
        cy = min(timeit.repeat(lambda: fn(_fastcore), number=number, repeat=args.repeat))
        print(f"{name:34s} {py * 1e3:9.2f}ms {cy * 1e3:9.2f}ms {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
