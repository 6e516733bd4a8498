"""Weighted graphs with a node / internal-vertex partition.

Vertices are dense 0-based indices.  ``node_flags[v]`` is True for nodes
(boundary vertices) and False for internal vertices.  Edge weights are
IntPolys; when ``oriented`` is set each edge ``(u, v, w)`` is the arc u -> v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError
from .polynomial import IntPoly

__all__ = [
    "Edge",
    "WeightedGraph",
    "build_cycle",
    "build_sunlet",
    "build_oriented_sunlet",
    "collapse_nodes",
    "DomainError",
]

Edge = tuple[int, int, IntPoly]


@dataclass(frozen=True)
class WeightedGraph:
    vertex_count: int
    node_flags: tuple[bool, ...]
    edges: tuple[Edge, ...]
    oriented: bool = False
    # edge indices of the cycle in a sunlet; enables the per-k histogram
    cycle_edges: Optional[tuple[int, ...]] = None
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "node_flags", tuple(bool(f) for f in self.node_flags))
        object.__setattr__(self, "edges", tuple((int(u), int(v), w) for u, v, w in self.edges))
        if self.vertex_count < 0:
            raise DomainError("vertex_count must be nonnegative")
        if len(self.node_flags) != self.vertex_count:
            raise DomainError(
                f"node_flags has {len(self.node_flags)} entries for {self.vertex_count} vertices"
            )
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise DomainError("labels must match vertex_count")
        seen = set()
        for i, (u, v, w) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise DomainError(f"edge {i} ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise DomainError(f"edge {i} is a self loop at vertex {u}")
            if not isinstance(w, IntPoly):
                raise DomainError(f"edge {i} weight is not an IntPoly")
            key = (u, v) if self.oriented else (min(u, v), max(u, v))
            if key in seen:
                raise DomainError(f"duplicate edge {key}")
            seen.add(key)
        if self.cycle_edges is not None:
            object.__setattr__(self, "cycle_edges", tuple(self.cycle_edges))
            if any(not 0 <= i < len(self.edges) for i in self.cycle_edges):
                raise DomainError("cycle_edges index out of range")

    @property
    def nodes(self) -> list[int]:
        return [v for v, f in enumerate(self.node_flags) if f]

    @property
    def internal(self) -> list[int]:
        return [v for v, f in enumerate(self.node_flags) if not f]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b, _ in self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def _check_n(n: int) -> None:
    if n < 3:
        raise DomainError(f"n must be at least 3 for a simple cycle, got {n}")


def _cycle_edges(n: int, weight: IntPoly) -> list[Edge]:
    return [(i, (i + 1) % n, weight) for i in range(n)]


def build_cycle(n: int, weight: IntPoly) -> WeightedGraph:
    """C_n on vertices 0..n-1 with edges i -- i+1 (mod n), no nodes."""
    _check_n(n)
    return WeightedGraph(n, (False,) * n, tuple(_cycle_edges(n, weight)))


def build_sunlet(n: int, a: IntPoly, b: IntPoly) -> WeightedGraph:
    """Cycle with n pendant edges.

    Vertices 0..n-1 are the cycle (internal), n..2n-1 the pendant nodes with
    n + i attached to i.  Edges 0..n-1 are the cycle edges (weight b), edges
    n..2n-1 the pendant edges (weight a).
    """
    _check_n(n)
    edges = _cycle_edges(n, b) + [(i, n + i, a) for i in range(n)]
    return WeightedGraph(
        2 * n,
        (False,) * n + (True,) * n,
        tuple(edges),
        cycle_edges=tuple(range(n)),
        labels=tuple([f"v{i + 1}" for i in range(n)] + [f"v{i + 1}'" for i in range(n)]),
    )


def build_oriented_sunlet(n: int, a: IntPoly, b: IntPoly) -> WeightedGraph:
    """Sunlet with cycle arcs i -> i+1 and pendant arcs n+i -> i."""
    _check_n(n)
    edges = _cycle_edges(n, b) + [(n + i, i, a) for i in range(n)]
    return WeightedGraph(
        2 * n,
        (False,) * n + (True,) * n,
        tuple(edges),
        oriented=True,
        cycle_edges=tuple(range(n)),
        labels=tuple([f"v{i + 1}" for i in range(n)] + [f"v{i + 1}'" for i in range(n)]),
    )


def collapse_nodes(g: WeightedGraph) -> WeightedGraph:
    """Identify all nodes of g into a single node at index 0.

    Internal vertices keep their relative order at indices 1..|I|.  Edges
    that become parallel are merged by summing weights; node-node edges
    would become self loops and are dropped.
    """
    if not any(g.node_flags):
        raise DomainError("graph has no nodes")
    index = {}
    for v in g.internal:
        index[v] = len(index) + 1
    for v in g.nodes:
        index[v] = 0

    merged: dict[tuple[int, int], int] = {}
    edges: list[list] = []
    remap: dict[int, int] = {}
    for i, (u, v, w) in enumerate(g.edges):
        cu, cv = index[u], index[v]
        if cu == cv:
            continue
        key = (cu, cv) if g.oriented else (min(cu, cv), max(cu, cv))
        if key in merged:
            edges[merged[key]][2] = edges[merged[key]][2] + w
            remap[i] = merged[key]
        else:
            merged[key] = len(edges)
            remap[i] = len(edges)
            edges.append([cu, cv, w])

    cycle = None
    if g.cycle_edges is not None:
        cycle = tuple(remap[i] for i in g.cycle_edges if i in remap)
    labels = None
    if g.labels is not None:
        labels = ("v0",) + tuple(g.labels[v] for v in g.internal)
    return WeightedGraph(
        len(g.internal) + 1,
        (True,) + (False,) * len(g.internal),
        tuple((u, v, w) for u, v, w in edges),
        oriented=g.oriented,
        cycle_edges=cycle,
        labels=labels,
    )
