"""Operation words, their image in (S3)^V, and the normal form ``+X *Y +Z``.

Composition convention: a flip ``alpha`` followed by ``beta`` on the same
vertex equals the single flip ``beta @ alpha``, so each new token's matrix
multiplies the running product on the left.  Worked trace on one vertex
for the word ``+{a} *{a} +{a}``::

    start            I
    after +{a}       ALPHA_PLUS @ I
    after *{a}       ALPHA_STAR @ ALPHA_PLUS
    after +{a}       ALPHA_PLUS @ ALPHA_STAR @ ALPHA_PLUS  == ALPHA_DUAL

The normal form triple ``(x, y, z)`` stands for the word ``+X *Y +Z``
restricted to one vertex, i.e. the matrix ``PLUS^z @ STAR^y @ PLUS^x``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .errors import InapplicableOperation, ParseError, UnknownVertex
from .setsystem import (
    ALPHA_DUAL,
    ALPHA_PLUS,
    ALPHA_STAR,
    IDENTITY,
    Flip2x2,
    SetSystem,
    _flip_bits,
    ss_dual_pivot,
    ss_loop_complement,
    ss_pivot,
)
from .vertexset import Ground, VertexSet, check_same_ground


class OpKind(enum.Enum):
    PIVOT = "*"
    LOOP = "+"
    DUAL = "!"
    LOCAL = "loc"
    EDGE = "edge"


_FLIP_OF = {
    OpKind.PIVOT: ALPHA_STAR,
    OpKind.LOCAL: ALPHA_STAR,
    OpKind.EDGE: ALPHA_STAR,
    OpKind.LOOP: ALPHA_PLUS,
    OpKind.DUAL: ALPHA_DUAL,
}


@dataclass(frozen=True)
class OpToken:
    kind: OpKind
    args: VertexSet

    def __post_init__(self):
        if self.kind is OpKind.LOCAL and len(self.args) != 1:
            raise ValueError("loc{...} takes exactly one vertex")
        if self.kind is OpKind.EDGE and len(self.args) != 2:
            raise ValueError("edge{...} takes exactly two vertices")

    @property
    def flip(self) -> Flip2x2:
        return _FLIP_OF[self.kind]

    def __str__(self) -> str:
        return f"{self.kind.value}{self.args}"


def render_word(word: Iterable[OpToken]) -> str:
    return " ".join(str(t) for t in word)


# --- parsing -------------------------------------------------------------

_TOKEN = re.compile(r"(\*|\+|!|loc|edge)\{")
_LABEL = re.compile(r"[A-Za-z0-9_]+")
_SPACE = re.compile(r"\s+")


def parse_word(text: str, ground: Ground) -> list[OpToken]:
    """Parse whitespace-separated tokens such as ``*{p,q} +{r} loc{s}``.

    Raises:
        ParseError: on malformed input; ``offset`` is a byte offset.
        UnknownVertex: for a label outside ``ground``.
    """

    def off(pos: int) -> int:
        return len(text[:pos].encode())

    tokens: list[OpToken] = []
    pos = 0
    end = len(text)
    m = _SPACE.match(text, pos)
    if m:
        pos = m.end()
    while pos < end:
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"expected an operation token at {text[pos:pos + 10]!r}", off(pos))
        kind = OpKind(m.group(1))
        pos = m.end()
        labels = []
        if pos < end and text[pos] == "}":
            pos += 1
        else:
            while True:
                lm = _LABEL.match(text, pos)
                if not lm:
                    raise ParseError("expected a vertex label", off(pos))
                labels.append((lm.group(), pos))
                pos = lm.end()
                if pos < end and text[pos] == ",":
                    pos += 1
                    continue
                if pos < end and text[pos] == "}":
                    pos += 1
                    break
                raise ParseError("expected ',' or '}'", off(pos))
        mask = 0
        for lab, lpos in labels:
            if lab not in ground:
                raise UnknownVertex(lab, off(lpos))
            bit = 1 << ground.index(lab)
            if mask & bit:
                raise ParseError(f"vertex {lab!r} repeated in one token", off(lpos))
            mask |= bit
        arity = {OpKind.LOCAL: 1, OpKind.EDGE: 2}.get(kind)
        if arity is not None and len(labels) != arity:
            raise ParseError(f"{kind.value}{{...}} takes exactly {arity} vertex(es)", off(m.start()))
        tokens.append(OpToken(kind, VertexSet(ground, mask)))
        if pos < end:
            sm = _SPACE.match(text, pos)
            if not sm:
                raise ParseError("tokens must be separated by whitespace", off(pos))
            pos = sm.end()
    return tokens


# --- group elements ------------------------------------------------------


class GroupElement:
    """A map from vertices to invertible 2x2 matrices, i.e. an element of (S3)^V."""

    __slots__ = ("ground", "entries")

    def __init__(self, ground: Ground, entries: Sequence[Flip2x2]):
        entries = tuple(entries)
        if len(entries) != len(ground):
            raise ValueError("one matrix per vertex required")
        for e in entries:
            e.require_invertible()
        self.ground = ground
        self.entries = entries

    @classmethod
    def identity(cls, ground: Ground) -> "GroupElement":
        return cls(ground, [IDENTITY] * len(ground))

    @classmethod
    def on_set(cls, X: VertexSet, flip: Flip2x2) -> "GroupElement":
        return cls(X.ground, [flip if X.mask >> i & 1 else IDENTITY for i in range(len(X.ground))])

    def __getitem__(self, label: str) -> Flip2x2:
        return self.entries[self.ground.index(label)]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """Pointwise product ``(f g)(j) = f(j) g(j)``."""
        check_same_ground(self.ground, other.ground)
        return GroupElement(self.ground, [a @ b for a, b in zip(self.entries, other.entries)])

    def then(self, other: "GroupElement") -> "GroupElement":
        """The element acting as ``self`` followed by ``other``."""
        return other * self

    def __pow__(self, k: int) -> "GroupElement":
        out = GroupElement.identity(self.ground)
        for _ in range(k):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return all(e == IDENTITY for e in self.entries)

    def order(self) -> int:
        return lcm(1, *(e.order() for e in self.entries))

    def names(self) -> dict[str, str]:
        return {lab: e.classify() for lab, e in zip(self.ground.labels, self.entries)}

    def apply_ss(self, M: SetSystem) -> SetSystem:
        check_same_ground(self.ground, M.ground)
        fam = M.family
        for j, e in enumerate(self.entries):
            if e != IDENTITY:
                fam = _flip_bits(fam, M.n, j, e)
        return SetSystem(M.ground, fam)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupElement) and (self.ground, self.entries) == (other.ground, other.entries)

    def __hash__(self) -> int:
        return hash((self.ground, self.entries))

    def __repr__(self) -> str:
        body = " ".join(f"{lab}:{e.classify()}" for lab, e in zip(self.ground.labels, self.entries))
        return f"GroupElement({body})"


def word_to_element(word: Sequence[OpToken], ground: Ground) -> GroupElement:
    entries = [IDENTITY] * len(ground)
    for tok in word:
        check_same_ground(ground, tok.args.ground)
        f = tok.flip
        for i in tok.args.indices():
            entries[i] = f @ entries[i]
    return GroupElement(ground, entries)


# --- normal form ---------------------------------------------------------

TRIPLES = ((0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1))


def triple_matrix(x: int, y: int, z: int) -> Flip2x2:
    return (ALPHA_PLUS if z else IDENTITY) @ (ALPHA_STAR if y else IDENTITY) @ (ALPHA_PLUS if x else IDENTITY)


_TRIPLE_OF = {triple_matrix(*t): t for t in TRIPLES}


@dataclass(frozen=True)
class NormalForm:
    """The word ``+X *Y +Z`` with ``X <= Y``."""

    X: VertexSet
    Y: VertexSet
    Z: VertexSet

    def __post_init__(self):
        if not self.X <= self.Y:
            raise ValueError("normal form requires X <= Y")

    def to_word(self) -> list[OpToken]:
        parts = [(OpKind.LOOP, self.X), (OpKind.PIVOT, self.Y), (OpKind.LOOP, self.Z)]
        return [OpToken(k, s) for k, s in parts if s]

    def __str__(self) -> str:
        return render_word(self.to_word())

    def apply_ss(self, M: SetSystem) -> SetSystem:
        return ss_loop_complement(ss_pivot(ss_loop_complement(M, self.X), self.Y), self.Z)

    def apply_graph(self, G):
        from .graphs import g_loop_complement, g_pivot

        return g_loop_complement(g_pivot(g_loop_complement(G, self.X), self.Y), self.Z)


def normal_form(e: GroupElement) -> NormalForm:
    x = y = z = 0
    for i, m in enumerate(e.entries):
        tx, ty, tz = _TRIPLE_OF[m]
        x |= tx << i
        y |= ty << i
        z |= tz << i
    g = e.ground
    return NormalForm(g.from_mask(x), g.from_mask(y), g.from_mask(z))


def normalize(word: Sequence[OpToken], ground: Ground) -> NormalForm:
    return normal_form(word_to_element(word, ground))


# --- application ---------------------------------------------------------


def apply_word_ss(M: SetSystem, word: Sequence[OpToken]) -> SetSystem:
    """Apply tokens left to right; every word is total on set systems."""
    for tok in word:
        if tok.kind is OpKind.LOOP:
            M = ss_loop_complement(M, tok.args)
        elif tok.kind is OpKind.DUAL:
            M = ss_dual_pivot(M, tok.args)
        else:
            M = ss_pivot(M, tok.args)
    return M


def apply_token_graph(G, tok: OpToken):
    from .graphs import edge_complement, g_dual_pivot, g_loop_complement, g_pivot, local_complement

    if tok.kind is OpKind.PIVOT:
        return g_pivot(G, tok.args)
    if tok.kind is OpKind.LOOP:
        return g_loop_complement(G, tok.args)
    if tok.kind is OpKind.DUAL:
        return g_dual_pivot(G, tok.args)
    if tok.kind is OpKind.LOCAL:
        return local_complement(G, next(iter(tok.args)))
    return edge_complement(G, *tok.args)


def apply_word_graph(G, word: Sequence[OpToken]):
    """Apply tokens left to right, checking applicability at each step.

    Raises:
        InapplicableOperation: ``UndefinedPivot``, ``NotALoop`` or
            ``NotAValidEdge`` with ``step`` set to the failing token index.
    """
    for step, tok in enumerate(word):
        try:
            G = apply_token_graph(G, tok)
        except InapplicableOperation as exc:
            raise exc.at_step(step)
    return G


def apply_word_simple(S, word: Sequence[OpToken]):
    """Simple-graph semantics: ``*{u}``/``loc{u}`` and ``*{u,v}``/``edge{u,v}``.

    Loop and dual tokens have no simple-graph meaning and are rejected.
    """
    from .graphs import simple_edge_complement, simple_local_complement

    for step, tok in enumerate(word):
        labels = list(tok.args)
        try:
            if tok.kind in (OpKind.LOCAL, OpKind.PIVOT) and len(labels) == 1:
                S = simple_local_complement(S, labels[0])
            elif tok.kind in (OpKind.EDGE, OpKind.PIVOT) and len(labels) == 2:
                S = simple_edge_complement(S, *labels)
            elif tok.kind is OpKind.PIVOT and not labels:
                continue
            else:
                raise InapplicableOperation(f"{tok} has no simple-graph meaning")
        except InapplicableOperation as exc:
            raise exc.at_step(step)
    return S
