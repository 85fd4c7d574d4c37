"""Square matrices over F2 indexed by a ground set.

Each row is an int whose bit ``j`` holds entry ``(i, j)`` in ground order.
All values are immutable; every operation returns a fresh object.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import _core
from .errors import ParseError, SingularPrincipalMinor
from .vertexset import Ground, VertexSet, check_same_ground

MAX_MATRIX_VERTICES = 32


def _as_ground(ground: Ground | Iterable[str]) -> Ground:
    return ground if isinstance(ground, Ground) else Ground(ground)


class F2Vector:
    """A vector over F2 with one bit per ground vertex."""

    __slots__ = ("ground", "bits")

    def __init__(self, ground: Ground, bits: int):
        if bits < 0 or bits >> len(ground):
            raise ValueError("vector has bits outside its ground")
        self.ground = ground
        self.bits = bits

    def __eq__(self, other: object) -> bool:
        return isinstance(other, F2Vector) and (self.ground, self.bits) == (other.ground, other.bits)

    def __hash__(self) -> int:
        return hash((self.ground, self.bits))

    def __add__(self, other: "F2Vector") -> "F2Vector":
        check_same_ground(self.ground, other.ground)
        return F2Vector(self.ground, self.bits ^ other.bits)

    def __getitem__(self, label: str) -> int:
        return self.bits >> self.ground.index(label) & 1

    def __repr__(self) -> str:
        return "F2Vector(" + "".join(str(self.bits >> i & 1) for i in range(len(self.ground))) + ")"


class F2Matrix:
    """A ``V x V`` matrix over F2."""

    __slots__ = ("ground", "rows")

    def __init__(self, ground: Ground | Iterable[str], rows: Sequence[int]):
        ground = _as_ground(ground)
        n = len(ground)
        if n > MAX_MATRIX_VERTICES:
            raise ValueError(f"matrices are limited to {MAX_MATRIX_VERTICES} vertices, got {n}")
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        for r in rows:
            if r < 0 or r >> n:
                raise ValueError("row has bits outside the ground")
        self.ground = ground
        self.rows = rows
        self._validate()

    def _validate(self) -> None:
        pass

    @classmethod
    def _unchecked(cls, ground: Ground, rows: Sequence[int]):
        obj = object.__new__(cls)
        obj.ground = ground
        obj.rows = tuple(rows)
        return obj

    def _derive(self, rows: Sequence[int]) -> "F2Matrix":
        """Wrap rows of a result that keeps this matrix's structural class."""
        return type(self)._unchecked(self.ground, rows)

    @classmethod
    def from_lists(cls, ground: Ground | Iterable[str], entries: Sequence[Sequence[int]]):
        ground = _as_ground(ground)
        rows = []
        for line in entries:
            if len(line) != len(ground):
                raise ValueError("matrix is not square over its ground")
            rows.append(sum((int(b) & 1) << j for j, b in enumerate(line)))
        return cls(ground, rows)

    @classmethod
    def identity(cls, ground: Ground | Iterable[str]):
        ground = _as_ground(ground)
        return cls(ground, [1 << i for i in range(len(ground))])

    @classmethod
    def zeros(cls, ground: Ground | Iterable[str]):
        ground = _as_ground(ground)
        return cls(ground, [0] * len(ground))

    @property
    def n(self) -> int:
        return len(self.ground)

    def __getitem__(self, key: tuple[str, str]) -> int:
        u, v = key
        return self.rows[self.ground.index(u)] >> self.ground.index(v) & 1

    def to_lists(self) -> list[list[int]]:
        n = self.n
        return [[r >> j & 1 for j in range(n)] for r in self.rows]

    def transpose(self) -> "F2Matrix":
        n = self.n
        cols = [0] * n
        for i, r in enumerate(self.rows):
            for j in range(n):
                if r >> j & 1:
                    cols[j] |= 1 << i
        return F2Matrix._unchecked(self.ground, cols)

    def is_symmetric(self) -> bool:
        return self.transpose().rows == self.rows

    def __matmul__(self, other):
        if isinstance(other, F2Vector):
            return self.apply(other)
        if not isinstance(other, F2Matrix):
            return NotImplemented
        check_same_ground(self.ground, other.ground)
        out = []
        for r in self.rows:
            acc = 0
            m = r
            while m:
                low = m & -m
                m ^= low
                acc ^= other.rows[low.bit_length() - 1]
            out.append(acc)
        return F2Matrix._unchecked(self.ground, out)

    def apply(self, vec: F2Vector | int) -> F2Vector:
        """Matrix-vector product ``A v``."""
        if isinstance(vec, F2Vector):
            check_same_ground(self.ground, vec.ground)
            bits = vec.bits
        else:
            bits = vec
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r & bits).bit_count() & 1) << i
        return F2Vector(self.ground, out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, F2Matrix) and self.ground == other.ground and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ground, self.rows))

    def key(self) -> int:
        """Row-major adjacency bitmask (row ``i`` occupies bits ``i*n .. i*n+n-1``)."""
        n = self.n
        k = 0
        for i, r in enumerate(self.rows):
            k |= r << (i * n)
        return k

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.ground.labels)]
        lines += [" ".join(str(b) for b in row) for row in self.to_lists()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("vertices:"):
            raise ParseError("expected header 'vertices: ...'", 0)
        ground = Ground(lines[0][len("vertices:"):].split())
        body = lines[1:]
        if len(body) != len(ground):
            raise ParseError(f"expected {len(ground)} matrix rows, got {len(body)}")
        entries = []
        for ln in body:
            parts = ln.split()
            if any(p not in ("0", "1") for p in parts) or len(parts) != len(ground):
                raise ParseError(f"bad matrix row {ln!r}")
            entries.append([int(p) for p in parts])
        return cls.from_lists(ground, entries)

    def __repr__(self) -> str:
        body = "; ".join("".join(str(b) for b in row) for row in self.to_lists())
        return f"{type(self).__name__}({' '.join(self.ground.labels)}: {body})"


def _mask(A: F2Matrix, X: VertexSet | None) -> int:
    if X is None:
        return 0
    check_same_ground(A.ground, X.ground)
    return X.mask


def f2_det(A: F2Matrix) -> int:
    """Determinant over F2; the empty matrix has determinant 1."""
    return _core.det(A.rows, A.n)


def minor(A: F2Matrix, X: VertexSet) -> int:
    """``det A[X]`` without materialising the submatrix."""
    return _core.det_masked(A.rows, _mask(A, X))


def principal_submatrix(A: F2Matrix, X: VertexSet) -> F2Matrix:
    """Restriction of ``A`` to rows and columns in ``X``, ground order kept."""
    mask = _mask(A, X)
    idx = [i for i in range(A.n) if mask >> i & 1]
    rows = []
    for i in idx:
        r = A.rows[i]
        rows.append(sum((r >> j & 1) << k for k, j in enumerate(idx)))
    return type(A)._unchecked(A.ground.restrict(mask), rows)


def ppt(A: F2Matrix, X: VertexSet) -> F2Matrix:
    """Principal pivot transform ``A*X``.

    Raises:
        SingularPrincipalMinor: if ``det A[X] = 0``.
    """
    rows = _core.ppt(A.rows, A.n, _mask(A, X))
    if rows is None:
        raise SingularPrincipalMinor(X)
    return A._derive(rows)


def inverse(A: F2Matrix) -> F2Matrix:
    return ppt(A, A.ground.full())


def diag_add(A: F2Matrix, X: VertexSet) -> F2Matrix:
    """``A+X``: add 1 to every diagonal entry indexed by ``X``."""
    mask = _mask(A, X)
    return A._derive([r ^ (mask & (1 << i)) for i, r in enumerate(A.rows)])


def dual_ppt(A: F2Matrix, X: VertexSet) -> F2Matrix:
    """Dual pivot ``A+X*X+X``, defined when ``det (A+X)[X] = 1``."""
    shifted = diag_add(A, X)
    rows = _core.ppt(shifted.rows, A.n, X.mask)
    if rows is None:
        raise SingularPrincipalMinor(X, f"det (A+{X})[{X}] = 0; dual pivot on {X} undefined")
    mask = X.mask
    return A._derive([r ^ (mask & (1 << i)) for i, r in enumerate(rows)])


def f2_rank(A: F2Matrix) -> int:
    return _core.rank(A.rows, A.n)


def kernel_basis(A: F2Matrix) -> list[F2Vector]:
    """A basis of ``{v : A v = 0}``, one vector per non-pivot column."""
    return [F2Vector(A.ground, v) for v in _core.kernel(A.rows, A.n)]
