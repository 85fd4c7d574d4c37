"""Orbits of labelled graphs under elementary pivots and loop complementation."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import _core
from .errors import OrbitTooLarge
from .graphs import Graph
from .words import OpKind, OpToken

DEFAULT_MAX_NODES = 1 << 20


@dataclass(frozen=True)
class Transition:
    source: int
    target: int
    token: OpToken

    @property
    def is_self_loop(self) -> bool:
        return self.source == self.target


@dataclass
class OrbitGraph:
    """Nodes keyed by row-major adjacency bitmask, plus labelled transitions."""

    nodes: dict[int, Graph] = field(default_factory=dict)
    transitions: list[Transition] = field(default_factory=list)

    @property
    def self_loops(self) -> list[Transition]:
        return [t for t in self.transitions if t.is_self_loop]

    def summary(self) -> str:
        return (
            f"nodes: {len(self.nodes)}\n"
            f"transitions: {len(self.transitions)}\n"
            f"self-loops: {len(self.self_loops)}\n"
        )

    def __contains__(self, G: Graph) -> bool:
        return G.key() in self.nodes and self.nodes[G.key()] == G


def _moves(G: Graph, loops: bool, all_pivots: bool) -> list[tuple[OpToken, Graph]]:
    ground = G.ground
    out = []
    for u, v, rows in _core.elementary_moves(G.rows, G.n):
        mask = (1 << u) | (0 if v < 0 else 1 << v)
        out.append((OpToken(OpKind.PIVOT, ground.from_mask(mask)), Graph._unchecked(ground, rows)))
    if all_pivots:
        seen = {t.args.mask for t, _ in out}
        for mask in range(1, 1 << G.n):
            if mask in seen:
                continue
            rows = _core.ppt(G.rows, G.n, mask)
            if rows is not None:
                out.append((OpToken(OpKind.PIVOT, ground.from_mask(mask)), Graph._unchecked(ground, rows)))
    if loops:
        for u in range(G.n):
            rows = list(G.rows)
            rows[u] ^= 1 << u
            out.append((OpToken(OpKind.LOOP, ground.from_mask(1 << u)), Graph._unchecked(ground, rows)))
    return out


def _explore(
    G: Graph,
    loops: bool,
    all_pivots: bool,
    max_nodes: int,
    workers: int,
) -> OrbitGraph:
    orbit = OrbitGraph()
    orbit.nodes[G.key()] = Graph._unchecked(G.ground, G.rows)
    frontier = [G]
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        while frontier:
            if pool is None:
                expanded = [_moves(F, loops, all_pivots) for F in frontier]
            else:
                expanded = list(pool.map(lambda F: _moves(F, loops, all_pivots), frontier))
            nxt = []
            # single merging writer, frontier order, so results are schedule-independent
            for F, moves in zip(frontier, expanded):
                src = F.key()
                for tok, H in moves:
                    dst = H.key()
                    orbit.transitions.append(Transition(src, dst, tok))
                    if dst not in orbit.nodes:
                        if len(orbit.nodes) >= max_nodes:
                            raise OrbitTooLarge(max_nodes)
                        orbit.nodes[dst] = H
                        nxt.append(H)
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    orbit.nodes = dict(sorted(orbit.nodes.items()))
    orbit.transitions.sort(key=lambda t: (t.source, t.target, str(t.token)))
    return orbit


def pivot_orbit(
    G: Graph,
    *,
    all_pivots: bool = False,
    max_nodes: int = DEFAULT_MAX_NODES,
    workers: int = 1,
) -> OrbitGraph:
    """Closure of ``G`` under applicable local and edge complementations.

    With ``all_pivots`` every applicable non-elementary pivot is recorded as
    a transition too (the node set does not change).
    """
    return _explore(G, False, all_pivots, max_nodes, workers)


def full_orbit(
    G: Graph,
    *,
    all_pivots: bool = False,
    max_nodes: int = DEFAULT_MAX_NODES,
    workers: int = 1,
) -> OrbitGraph:
    """Closure under elementary pivots and single-vertex loop complementation."""
    return _explore(G, True, all_pivots, max_nodes, workers)


def pivot_images(G: Graph) -> dict[int, Graph]:
    """``{G*Y : Y in M_G}`` by direct pivoting, keyed like orbit nodes."""
    out = {}
    for mask in range(1 << G.n):
        rows = _core.ppt(G.rows, G.n, mask)
        if rows is not None:
            H = Graph._unchecked(G.ground, rows)
            out[H.key()] = H
    return dict(sorted(out.items()))


def node_name(key: int, n: int) -> str:
    width = max(1, (n * n + 3) // 4)
    return f"0x{key:0{width}x}"


def export_dot(orbit: OrbitGraph, name: str = "orbit") -> str:
    """Deterministic DOT text; nodes are named by adjacency bitmask in hex."""
    n = next(iter(orbit.nodes.values())).n if orbit.nodes else 0
    lines = [f"digraph {name} {{"]
    for key, G in orbit.nodes.items():
        label = "; ".join([f"loop {u}" for u in G.loops()] + [f"{u}-{v}" for u, v in G.edges()])
        lines.append(f'  "{node_name(key, n)}" [label="{label}"];')
    for t in orbit.transitions:
        lines.append(f'  "{node_name(t.source, n)}" -> "{node_name(t.target, n)}" [label="{t.token}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

