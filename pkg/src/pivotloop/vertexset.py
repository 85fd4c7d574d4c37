"""Ordered ground sets and bitmask subsets of them."""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .errors import GroundMismatch, UnknownVertex

LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class Ground:
    """An ordered sequence of distinct vertex labels.

    The order fixed here is the row/column order of every matrix and the
    bit order of every subset mask built over this ground.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        index: dict[str, int] = {}
        for i, lab in enumerate(labels):
            if not isinstance(lab, str) or not LABEL_RE.match(lab):
                raise ValueError(f"invalid vertex label {lab!r}")
            if lab in index:
                raise ValueError(f"duplicate vertex label {lab!r}")
            index[lab] = i
        self.labels = labels
        self._index = index

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ground) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Ground({' '.join(self.labels)!r})"

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(label) from None

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return mask

    def subset(self, labels: Iterable[str] = ()) -> "VertexSet":
        if isinstance(labels, str):
            labels = (labels,)
        return VertexSet(self, self.mask_of(labels))

    def from_mask(self, mask: int) -> "VertexSet":
        return VertexSet(self, mask)

    def empty(self) -> "VertexSet":
        return VertexSet(self, 0)

    def full(self) -> "VertexSet":
        return VertexSet(self, self.full_mask)

    def restrict(self, mask: int) -> "Ground":
        """The sub-ground of the members of ``mask``, order inherited."""
        return Ground(lab for i, lab in enumerate(self.labels) if mask >> i & 1)

    def labels_of(self, mask: int) -> list[str]:
        return [lab for i, lab in enumerate(self.labels) if mask >> i & 1]

    def format_mask(self, mask: int) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"


def check_same_ground(a: Ground, b: Ground) -> None:
    if a != b:
        raise GroundMismatch(f"ground sets differ: {a.labels} vs {b.labels}")


class VertexSet:
    """A subset of a :class:`Ground`, stored as a bitmask."""

    __slots__ = ("ground", "mask")

    def __init__(self, ground: Ground, mask: int):
        if mask < 0 or mask >> len(ground):
            raise ValueError(f"mask {mask:#x} is not a subset of {ground!r}")
        self.ground = ground
        self.mask = mask

    def _other_mask(self, other: "VertexSet") -> int:
        if not isinstance(other, VertexSet):
            return NotImplemented  # type: ignore[return-value]
        check_same_ground(self.ground, other.ground)
        return other.mask

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.ground, self.mask ^ self._other_mask(other))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.ground, self.mask | self._other_mask(other))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.ground, self.mask & self._other_mask(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.ground, self.mask & ~self._other_mask(other))

    def __invert__(self) -> "VertexSet":
        return VertexSet(self.ground, self.ground.full_mask & ~self.mask)

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask & ~self._other_mask(other) == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "VertexSet") -> bool:
        return other <= self

    def __gt__(self, other: "VertexSet") -> bool:
        return other < self

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.mask == other.mask
            and self.ground == other.ground
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self) -> Iterator[str]:
        return iter(self.ground.labels_of(self.mask))

    def __contains__(self, label: object) -> bool:
        if label not in self.ground:
            return False
        return bool(self.mask >> self.ground.index(label) & 1)  # type: ignore[arg-type]

    def indices(self) -> list[int]:
        return [i for i in range(len(self.ground)) if self.mask >> i & 1]

    def __str__(self) -> str:
        return self.ground.format_mask(self.mask)

    def __repr__(self) -> str:
        return f"VertexSet({self})"
