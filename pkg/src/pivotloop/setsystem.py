"""Set systems ``(V, D)`` and the vertex flips acting on them.

A family is a single int with one bit per subset of the ground: bit ``Z``
is set iff the subset with bitmask ``Z`` belongs to ``D``.  A flip on vertex
``j`` pairs every ``Z`` containing ``j`` with ``Z - {j}``; those pairs sit
``2**j`` bit positions apart, so a flip is a handful of shifts and masks on
the whole family at once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from . import _core
from .errors import NonInvertibleFlip, NotGraphic, ParseError, UnknownVertex
from .linalg import F2Matrix
from .vertexset import LABEL_RE, Ground, VertexSet, check_same_ground

MAX_FAMILY_VERTICES = 16


@dataclass(frozen=True)
class Flip2x2:
    """A 2x2 matrix over F2 acting on ``(Z in D, Z-{j} in D)``."""

    a11: int
    a12: int
    a21: int
    a22: int

    def __post_init__(self):
        for v in (self.a11, self.a12, self.a21, self.a22):
            if v not in (0, 1):
                raise ValueError("Flip2x2 entries must be 0 or 1")

    def __matmul__(self, other: "Flip2x2") -> "Flip2x2":
        return Flip2x2(
            (self.a11 & other.a11) ^ (self.a12 & other.a21),
            (self.a11 & other.a12) ^ (self.a12 & other.a22),
            (self.a21 & other.a11) ^ (self.a22 & other.a21),
            (self.a21 & other.a12) ^ (self.a22 & other.a22),
        )

    def __pow__(self, k: int) -> "Flip2x2":
        out = IDENTITY
        for _ in range(k):
            out = out @ self
        return out

    @property
    def det(self) -> int:
        return (self.a11 & self.a22) ^ (self.a12 & self.a21)

    def is_invertible(self) -> bool:
        return self.det == 1

    def require_invertible(self) -> "Flip2x2":
        if not self.is_invertible():
            raise NonInvertibleFlip(f"{self} is singular")
        return self

    def classify(self) -> str | None:
        """S3 name of an invertible matrix, ``None`` for the 10 singular ones.

        Binding: ``a`` loop complementation, ``b`` pivot, ``c`` dual pivot,
        ``f = b a`` and ``g = a b`` (products as matrices).
        """
        return _S3_NAMES.get(self)

    def order(self) -> int:
        self.require_invertible()
        k, m = 1, self
        while m != IDENTITY:
            m = m @ self
            k += 1
        return k

    def __str__(self) -> str:
        return f"[[{self.a11},{self.a12}],[{self.a21},{self.a22}]]"


IDENTITY = Flip2x2(1, 0, 0, 1)
ALPHA_PLUS = Flip2x2(1, 1, 0, 1)
ALPHA_STAR = Flip2x2(0, 1, 1, 0)
ALPHA_DUAL = ALPHA_PLUS @ ALPHA_STAR @ ALPHA_PLUS

_S3_NAMES = {
    IDENTITY: "1",
    ALPHA_PLUS: "a",
    ALPHA_STAR: "b",
    ALPHA_DUAL: "c",
    ALPHA_STAR @ ALPHA_PLUS: "f",
    ALPHA_PLUS @ ALPHA_STAR: "g",
}

ALL_FLIPS = tuple(Flip2x2(a, b, c, d) for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1))
GL2 = tuple(f for f in ALL_FLIPS if f.is_invertible())


@lru_cache(maxsize=None)
def _low_mask(n: int, j: int) -> int:
    """Bits at every subset of an n-set that does not contain ``j``."""
    s = 1 << j
    m = (1 << s) - 1
    width = 2 * s
    while width < (1 << n):
        m |= m << width
        width *= 2
    return m


def _flip_bits(family: int, n: int, j: int, a: Flip2x2) -> int:
    s = 1 << j
    m0 = _low_mask(n, j)
    lo = family & m0  # membership of Z - {j}
    hi = (family >> s) & m0  # membership of Z, aligned with Z - {j}
    new_hi = (hi if a.a11 else 0) ^ (lo if a.a12 else 0)
    new_lo = (hi if a.a21 else 0) ^ (lo if a.a22 else 0)
    return (new_hi << s) | new_lo


def _popcount_order(z: int) -> tuple[int, int]:
    return z.bit_count(), z


class SetSystem:
    """A ground set together with a family of its subsets."""

    __slots__ = ("ground", "family")

    def __init__(self, ground: Ground | Iterable[str], family: int = 0):
        ground = ground if isinstance(ground, Ground) else Ground(ground)
        if len(ground) > MAX_FAMILY_VERTICES:
            raise ValueError(f"set systems are limited to {MAX_FAMILY_VERTICES} vertices")
        if family < 0 or family >> (1 << len(ground)):
            raise ValueError("family has bits outside the power set")
        self.ground = ground
        self.family = family

    @classmethod
    def from_sets(cls, ground: Ground | Iterable[str], sets: Iterable[Iterable[str]]) -> "SetSystem":
        ground = ground if isinstance(ground, Ground) else Ground(ground)
        family = 0
        for s in sets:
            if isinstance(s, str):
                s = (s,)
            family |= 1 << ground.mask_of(s)
        return cls(ground, family)

    @classmethod
    def from_masks(cls, ground: Ground, masks: Iterable[int]) -> "SetSystem":
        family = 0
        for m in masks:
            family |= 1 << m
        return cls(ground, family)

    @property
    def n(self) -> int:
        return len(self.ground)

    def masks(self) -> list[int]:
        """Member bitmasks ordered by (size, mask)."""
        fam = self.family
        out = []
        while fam:
            low = fam & -fam
            fam ^= low
            out.append(low.bit_length() - 1)
        out.sort(key=_popcount_order)
        return out

    def __iter__(self) -> Iterator[VertexSet]:
        return (VertexSet(self.ground, m) for m in self.masks())

    def __len__(self) -> int:
        return self.family.bit_count()

    def __contains__(self, item: VertexSet | int | Iterable[str]) -> bool:
        if isinstance(item, VertexSet):
            check_same_ground(self.ground, item.ground)
            mask = item.mask
        elif isinstance(item, int):
            mask = item
        else:
            mask = self.ground.mask_of(item)
        return bool(self.family >> mask & 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SetSystem) and self.ground == other.ground and self.family == other.family

    def __hash__(self) -> int:
        return hash((self.ground, self.family))

    def __repr__(self) -> str:
        return f"SetSystem({format_family(self.ground, self.masks())})"

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.ground.labels)]
        lines += [self.ground.format_mask(m) for m in sorted(self.masks(), key=lambda m: _lex_key(m))]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SetSystem":
        return parse_set_system(text)


def _lex_key(mask: int) -> tuple[int, list[int]]:
    return mask.bit_count(), [i for i in range(mask.bit_length()) if mask >> i & 1]


def format_family(ground: Ground, masks: Iterable[int]) -> str:
    return "{" + ", ".join(ground.format_mask(m) for m in sorted(masks, key=_lex_key)) + "}"


_SET_LINE = re.compile(r"\{([^{}]*)\}\Z")


def parse_set_system(text: str) -> SetSystem:
    """Read the ``vertices:`` header followed by one ``{a,b}`` subset per line."""
    offset = 0
    ground = None
    family = 0
    for raw in text.splitlines(keepends=True):
        line = raw.strip()
        start = offset
        offset += len(raw.encode())
        if not line or line.startswith("#"):
            continue
        if ground is None:
            if not line.startswith("vertices:"):
                raise ParseError("expected header 'vertices: ...'", start)
            try:
                ground = Ground(line[len("vertices:"):].split())
            except ValueError as exc:
                raise ParseError(str(exc), start) from None
            if len(ground) > MAX_FAMILY_VERTICES:
                raise ParseError(f"set systems are limited to {MAX_FAMILY_VERTICES} vertices", start)
            continue
        m = _SET_LINE.match(line)
        if not m:
            raise ParseError(f"expected a subset like {{a,b}}, got {line!r}", start)
        body = m.group(1).strip()
        labels = [p.strip() for p in body.split(",")] if body else []
        mask = 0
        for lab in labels:
            if not LABEL_RE.match(lab):
                raise ParseError(f"bad vertex label {lab!r}", start)
            if lab not in ground:
                raise UnknownVertex(lab, start)
            bit = 1 << ground.index(lab)
            if mask & bit:
                raise ParseError(f"vertex {lab!r} repeated in one subset", start)
            mask |= bit
        if family >> mask & 1:
            raise ParseError(f"duplicate subset {ground.format_mask(mask)}", start)
        family |= 1 << mask
    if ground is None:
        raise ParseError("missing 'vertices:' header", 0)
    return SetSystem(ground, family)


# --- flips ---------------------------------------------------------------


def _subset_mask(M: SetSystem, X: VertexSet) -> int:
    check_same_ground(M.ground, X.ground)
    return X.mask


def _flip_set(M: SetSystem, mask: int, a: Flip2x2) -> SetSystem:
    fam = M.family
    n = M.n
    while mask:
        low = mask & -mask
        mask ^= low
        fam = _flip_bits(fam, n, low.bit_length() - 1, a)
    return SetSystem(M.ground, fam)


def vertex_flip(M: SetSystem, alpha: Flip2x2, j: str) -> SetSystem:
    """Apply the 2x2 matrix ``alpha`` to every pair ``(Z, Z-{j})`` with ``j in Z``.

    Singular matrices are allowed here.
    """
    return SetSystem(M.ground, _flip_bits(M.family, M.n, M.ground.index(j), alpha))


def flip_all(M: SetSystem, alpha: Flip2x2, X: VertexSet) -> SetSystem:
    """``alpha`` applied on every vertex of ``X`` (order is irrelevant)."""
    return _flip_set(M, _subset_mask(M, X), alpha)


def ss_pivot(M: SetSystem, X: VertexSet) -> SetSystem:
    """Twist: ``D*X = {Y ^ X : Y in D}``."""
    return _flip_set(M, _subset_mask(M, X), ALPHA_STAR)


def ss_loop_complement(M: SetSystem, X: VertexSet) -> SetSystem:
    return _flip_set(M, _subset_mask(M, X), ALPHA_PLUS)


def ss_dual_pivot(M: SetSystem, X: VertexSet) -> SetSystem:
    return _flip_set(M, _subset_mask(M, X), ALPHA_DUAL)


# --- extremal members ----------------------------------------------------


def _down_closure(family: int, n: int) -> int:
    for j in range(n):
        family |= (family >> (1 << j)) & _low_mask(n, j)
    return family


def _up_closure(family: int, n: int) -> int:
    for j in range(n):
        family |= (family & _low_mask(n, j)) << (1 << j)
    return family


def ss_max(M: SetSystem) -> SetSystem:
    """Members with no strict superset in the family."""
    n = M.n
    below = _down_closure(M.family, n)
    covered = 0
    for j in range(n):
        covered |= (below >> (1 << j)) & _low_mask(n, j)
    return SetSystem(M.ground, M.family & ~covered)


def ss_min(M: SetSystem) -> SetSystem:
    """Members with no strict subset in the family."""
    n = M.n
    above = _up_closure(M.family, n)
    covered = 0
    for j in range(n):
        covered |= (above & _low_mask(n, j)) << (1 << j)
    return SetSystem(M.ground, M.family & ~covered)


# --- delta-matroids ------------------------------------------------------


@dataclass(frozen=True)
class DeltaMatroidCheck:
    is_delta_matroid: bool
    witness: tuple[VertexSet, VertexSet, str] | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.is_delta_matroid

    def render(self) -> str:
        if self.is_delta_matroid:
            return "delta-matroid"
        if self.witness is None:
            return f"not a delta-matroid; {self.reason}"
        X, Y, x = self.witness
        return f"not a delta-matroid; witness X={X} Y={Y} x={x}"


def is_delta_matroid(M: SetSystem) -> DeltaMatroidCheck:
    """Check the symmetric exchange axiom (with the explicit ``X^{x}`` case).

    On failure the witness is the least ``(X, Y, x)``: ``X`` and ``Y`` by
    (size, bitmask), ``x`` by ground order.
    """
    if M.family == 0:
        return DeltaMatroidCheck(False, None, "empty family")
    hit = _core.delta_matroid_witness(M.family, M.n)
    if hit is None:
        return DeltaMatroidCheck(True)
    X, Y, x = hit
    g = M.ground
    return DeltaMatroidCheck(False, (g.from_mask(X), g.from_mask(Y), g.labels[x]), "exchange axiom fails")


# --- bridges to matrices -------------------------------------------------


def ss_of_matrix(A: F2Matrix) -> SetSystem:
    """``M_A``: all ``X`` with ``det A[X] = 1`` (``{}`` always included)."""
    if A.n > MAX_FAMILY_VERTICES:
        raise ValueError(f"set systems are limited to {MAX_FAMILY_VERTICES} vertices")
    return SetSystem(A.ground, _core.principal_minors(A.rows, A.n))


def graph_of_ss(M: SetSystem):
    """Reconstruct the graph ``G`` with ``M_G = M``.

    Loops are the singletons in ``D``; ``{u,v}`` is an edge iff
    ``({u,v} in D) xor ({u} in D and {v} in D)``.  The candidate is verified
    by recomputing its full set system.

    Raises:
        NotGraphic: if ``{}`` is missing or the round trip differs.
    """
    from .graphs import Graph

    if not M.family & 1:
        raise NotGraphic("the empty set is not a member, so no graph represents this set system")
    n = M.n
    fam = M.family
    rows = [0] * n
    for u in range(n):
        if fam >> (1 << u) & 1:
            rows[u] |= 1 << u
    for u in range(n):
        lu = fam >> (1 << u) & 1
        for v in range(u + 1, n):
            lv = fam >> (1 << v) & 1
            if (fam >> ((1 << u) | (1 << v)) & 1) ^ (lu & lv):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    G = Graph(M.ground, rows)
    if ss_of_matrix(G) != M:
        raise NotGraphic("set system is not M_G for any graph G")
    return G
