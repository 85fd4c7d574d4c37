"""Graphs with loops as symmetric F2 matrices, and simple graphs.

Local and edge complementation are implemented by neighbourhood toggling,
independently of :func:`pivotloop.linalg.ppt`; the test suite checks that
the two agree.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import _core
from .errors import NotALoop, NotAValidEdge, ParseError, UndefinedPivot, UnknownVertex
from .linalg import F2Matrix, diag_add, minor
from .vertexset import Ground, VertexSet, check_same_ground


class Graph(F2Matrix):
    """Undirected graph with loops allowed; the diagonal bit is the loop."""

    __slots__ = ()

    def _validate(self) -> None:
        if not self.is_symmetric():
            raise ValueError("graph adjacency matrix must be symmetric")

    def _derive(self, rows: Sequence[int]) -> "Graph":
        return Graph._unchecked(self.ground, rows)

    @classmethod
    def from_edges(
        cls,
        ground: Ground | Iterable[str],
        edges: Iterable[tuple[str, str]] = (),
        loops: Iterable[str] = (),
    ):
        ground = ground if isinstance(ground, Ground) else Ground(ground)
        rows = [0] * len(ground)
        for u, v in edges:
            i, j = ground.index(u), ground.index(v)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        for u in loops:
            i = ground.index(u)
            rows[i] |= 1 << i
        return cls(ground, rows)

    def has_loop(self, u: str) -> bool:
        i = self.ground.index(u)
        return bool(self.rows[i] >> i & 1)

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.rows[self.ground.index(u)] >> self.ground.index(v) & 1)

    def loops(self) -> VertexSet:
        return self.ground.from_mask(sum(r & (1 << i) for i, r in enumerate(self.rows)))

    def edges(self) -> list[tuple[str, str]]:
        """Non-loop edges ``(u, v)`` with ``u`` before ``v`` in ground order."""
        labs = self.ground.labels
        return [
            (labs[i], labs[j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.rows[i] >> j & 1
        ]

    def neighbourhood(self, u: str) -> VertexSet:
        """``N_G(u)``: adjacent vertices other than ``u`` itself."""
        i = self.ground.index(u)
        return self.ground.from_mask(self.rows[i] & ~(1 << i))

    def closed_neighbourhood(self, u: str) -> VertexSet:
        i = self.ground.index(u)
        return self.ground.from_mask(self.rows[i] | (1 << i))

    def is_simple(self) -> bool:
        return not any(r >> i & 1 for i, r in enumerate(self.rows))

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.ground.labels)]
        lines += [f"loop {u}" for u in self.loops()]
        lines += [f"edge {u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str):
        return cls(*_parse_graph_rows(text))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {u};" for u in self.ground.labels]
        lines += [f"  {u} -- {u};" for u in self.loops()]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


class SimpleGraph(Graph):
    """A graph whose diagonal is identically zero."""

    __slots__ = ()

    def _validate(self) -> None:
        super()._validate()
        if not self.is_simple():
            raise ValueError("simple graphs have no loops")


_GRAPH_LINE = re.compile(r"(edge|loop)\s+(.*)\Z")


def _parse_graph_rows(text: str) -> tuple[Ground, list[int]]:
    ground = None
    rows: list[int] = []
    seen: set[tuple[int, int]] = set()
    offset = 0
    for raw in text.splitlines(keepends=True):
        start = offset
        offset += len(raw.encode())
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ground is None:
            if not line.startswith("vertices:"):
                raise ParseError("expected header 'vertices: ...'", start)
            try:
                ground = Ground(line[len("vertices:"):].split())
            except ValueError as exc:
                raise ParseError(str(exc), start) from None
            rows = [0] * len(ground)
            continue
        m = _GRAPH_LINE.match(line)
        if not m:
            raise ParseError(f"expected 'edge u v' or 'loop u', got {line!r}", start)
        kind, rest = m.group(1), m.group(2).split()
        if (kind == "edge" and len(rest) != 2) or (kind == "loop" and len(rest) != 1):
            raise ParseError(f"wrong number of vertices in {line!r}", start)
        try:
            idx = [ground.index(x) for x in rest]
        except UnknownVertex as exc:
            raise UnknownVertex(exc.label, start) from None
        if kind == "loop":
            i = j = idx[0]
        else:
            i, j = sorted(idx)
            if i == j:
                raise ParseError(f"edge endpoints must differ; use 'loop {rest[0]}'", start)
        if (i, j) in seen:
            raise ParseError(f"duplicate declaration {line!r}", start)
        seen.add((i, j))
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    if ground is None:
        raise ParseError("missing 'vertices:' header", 0)
    return ground, rows


def parse_graph(text: str) -> Graph:
    return Graph.from_text(text)


def all_graphs(ground: Ground | Iterable[str], loops: bool = True) -> Iterator[Graph]:
    """Every graph over ``ground`` (every simple graph when ``loops=False``)."""
    ground = ground if isinstance(ground, Ground) else Ground(ground)
    n = len(ground)
    slots = [(i, j) for i in range(n) for j in range(i, n) if loops or i != j]
    cls = Graph if loops else SimpleGraph
    for code in range(1 << len(slots)):
        rows = [0] * n
        for k, (i, j) in enumerate(slots):
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield cls._unchecked(ground, rows)


# --- pivots on graphs ----------------------------------------------------


def _check(G: Graph, X: VertexSet) -> int:
    check_same_ground(G.ground, X.ground)
    return X.mask


def g_pivot(G: Graph, X: VertexSet) -> Graph:
    """``G*X``, defined precisely when ``det G[X] = 1``."""
    rows = _core.ppt(G.rows, G.n, _check(G, X))
    if rows is None:
        raise UndefinedPivot(X)
    return Graph._unchecked(G.ground, rows)


def g_loop_complement(G: Graph, X: VertexSet) -> Graph:
    return Graph._unchecked(G.ground, diag_add(G, X).rows)


def g_dual_pivot(G: Graph, X: VertexSet) -> Graph:
    """``G+X*X+X``, defined when ``det (G+X)[X] = 1``."""
    mask = _check(G, X)
    shifted = [r ^ (mask & (1 << i)) for i, r in enumerate(G.rows)]
    rows = _core.ppt(shifted, G.n, mask)
    if rows is None:
        raise UndefinedPivot(X, dual=True)
    return Graph._unchecked(G.ground, [r ^ (mask & (1 << i)) for i, r in enumerate(rows)])


def local_complement(G: Graph, u: str) -> Graph:
    """Elementary pivot ``*{u}`` on a looped vertex.

    Every pair ``v, w`` in ``N_G(u)`` is toggled, including ``v = w``.
    """
    i = G.ground.index(u)
    if not G.rows[i] >> i & 1:
        raise NotALoop(u)
    return Graph._unchecked(G.ground, _core.local_complement(G.rows, i))


def edge_complement(G: Graph, u: str, v: str) -> Graph:
    """Elementary pivot ``*{u,v}`` on an edge between two loopless vertices."""
    i, j = G.ground.index(u), G.ground.index(v)
    if i == j:
        raise NotAValidEdge(u, v, "endpoints must be distinct")
    if not G.rows[i] >> j & 1:
        raise NotAValidEdge(u, v, "not an edge")
    if G.rows[i] >> i & 1 or G.rows[j] >> j & 1:
        raise NotAValidEdge(u, v, "an endpoint has a loop")
    return Graph._unchecked(G.ground, _core.edge_complement(G.rows, i, j))


def elementary_decomposition(G: Graph, Y: VertexSet) -> list[VertexSet]:
    """Split ``Y`` into successive elementary pivots whose composition is ``G*Y``.

    At each step the least looped vertex of the remaining set is taken;
    failing that, the least edge ``(u, v)`` inside it in ground order.
    """
    mask = _check(G, Y)
    if not minor(G, Y):
        raise UndefinedPivot(Y)
    rows = list(G.rows)
    steps = []
    remaining = mask
    while remaining:
        pick = None
        for i in range(G.n):
            if remaining >> i & 1 and rows[i] >> i & 1:
                pick = 1 << i
                rows = _core.local_complement(rows, i)
                break
        if pick is None:
            for i in range(G.n):
                if not remaining >> i & 1:
                    continue
                nb = rows[i] & remaining & ~(1 << i)
                if nb:
                    j = (nb & -nb).bit_length() - 1
                    pick = (1 << i) | (1 << j)
                    rows = _core.edge_complement(rows, i, j)
                    break
        if pick is None:  # unreachable when det G[Y] = 1
            raise UndefinedPivot(Y)
        steps.append(G.ground.from_mask(pick))
        remaining &= ~pick
    return steps


def apply_elementary(G: Graph, X: VertexSet) -> Graph:
    """Dispatch a one- or two-element set to local or edge complementation."""
    labels = list(X)
    if len(labels) == 1:
        return local_complement(G, labels[0])
    if len(labels) == 2:
        return edge_complement(G, *labels)
    raise ValueError(f"{X} is not an elementary pivot set")


# --- simple graphs -------------------------------------------------------


def strip_loops(G: Graph) -> SimpleGraph:
    """pi: drop every loop."""
    return SimpleGraph._unchecked(G.ground, [r & ~(1 << i) for i, r in enumerate(G.rows)])


def inject(S: SimpleGraph) -> Graph:
    """i: the simple graph regarded as a graph without loops."""
    return Graph._unchecked(S.ground, S.rows)


def as_simple(G: Graph) -> SimpleGraph:
    if isinstance(G, SimpleGraph):
        return G
    return SimpleGraph(G.ground, G.rows)


def simple_local_complement(S: SimpleGraph, u: str) -> SimpleGraph:
    """Complement the edges among ``N(u)``; always applicable, never adds loops."""
    i = S.ground.index(u)
    return SimpleGraph._unchecked(S.ground, _core.simple_local_complement(S.rows, i))


def simple_edge_complement(S: SimpleGraph, u: str, v: str) -> SimpleGraph:
    i, j = S.ground.index(u), S.ground.index(v)
    if i == j or not S.rows[i] >> j & 1:
        raise NotAValidEdge(u, v, "not an edge")
    return SimpleGraph._unchecked(S.ground, _core.edge_complement(S.rows, i, j))


def simple_local_sequence(S: SimpleGraph, vertices: Iterable[str]) -> SimpleGraph:
    for u in vertices:
        S = simple_local_complement(S, u)
    return S


def lift_local_sequence(S: SimpleGraph, vertices: Sequence[str]):
    """Lift simple local complementations to an applicable graph word.

    Each ``v`` becomes ``*{v}`` when the running graph has a loop on ``v``
    and ``+{v} *{v}`` otherwise (exactly one of the two is applicable).
    Returns the token list and the final graph.
    """
    from .words import OpKind, OpToken

    F = inject(S)
    tokens = []
    for v in vertices:
        one = S.ground.subset(v)
        if not F.has_loop(v):
            tokens.append(OpToken(OpKind.LOOP, one))
            F = g_loop_complement(F, one)
        tokens.append(OpToken(OpKind.PIVOT, one))
        F = local_complement(F, v)
    return tokens, F


def simple_sequence_as_pivot(S: SimpleGraph, vertices: Sequence[str]) -> tuple[VertexSet, VertexSet]:
    """``(X, Y)`` with ``X <= Y`` and ``S phi = pi(i(S)+X*Y)`` for ``phi`` the
    given local complementations.

    The sequence is lifted to graphs (see :func:`lift_local_sequence`) and
    reduced to its normal form ``+X *Y +Z``; ``Z`` only touches loops.
    """
    from .words import normal_form, word_to_element

    tokens, _ = lift_local_sequence(S, vertices)
    nf = normal_form(word_to_element(tokens, S.ground))
    return nf.X, nf.Y


def pivot_as_simple_sequence(F: Graph, X: VertexSet, Y: VertexSet) -> list[str]:
    """Local complementations ``phi`` with ``pi(F) phi = pi(F+X*Y)``.

    ``Y`` is split into elementary pivots of ``F+X``; a loop ``{u}`` becomes
    ``u`` and an edge ``{u,v}`` becomes ``u, v, u``.

    Raises:
        UndefinedPivot: if ``F+X*Y`` is undefined.
    """
    out: list[str] = []
    for step in elementary_decomposition(g_loop_complement(F, X), Y):
        labels = list(step)
        if len(labels) == 1:
            out.append(labels[0])
        else:
            u, v = labels
            out += [u, v, u]
    return out


def induced_triangles(S: Graph) -> list[tuple[str, str, str]]:
    labs = S.ground.labels
    out = []
    for i, j, k in combinations(range(S.n), 3):
        r = S.rows
        if r[i] >> j & 1 and r[i] >> k & 1 and r[j] >> k & 1:
            out.append((labs[i], labs[j], labs[k]))
    return out
