"""Brute-force enumeration of rooted spanning forests.

This is the independent ground truth for the determinant pipeline: every
edge subset is tested directly against the definition, with no linear
algebra involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import CapExceeded
from .graph import WeightedGraph
from .polynomial import ONE, ZERO, IntPoly

__all__ = [
    "DEFAULT_CAP",
    "ForestReport",
    "is_rsf",
    "is_oriented_rsf",
    "enumerate_rsf",
    "enumerate_oriented_rsf",
    "CapExceeded",
]

DEFAULT_CAP = 22


@dataclass(frozen=True)
class ForestReport:
    forest_count: int
    weighted_sum: IntPoly
    # forests by number of cycle edges used; sunlet inputs only
    histogram: Optional[dict[int, int]] = None


def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _rsf_mask(g: WeightedGraph, mask: int) -> bool:
    parent = list(range(g.vertex_count))
    edges = g.edges
    i = 0
    while mask:
        if mask & 1:
            u, v, _ = edges[i]
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                return False
            parent[ru] = rv
        mask >>= 1
        i += 1
    node_roots = set()
    for v, is_node in enumerate(g.node_flags):
        if is_node:
            r = _find(parent, v)
            if r in node_roots:
                return False
            node_roots.add(r)
    # every component must hold a node
    return all(_find(parent, v) in node_roots for v in range(g.vertex_count))


def _in_degrees_ok(g: WeightedGraph, mask: int) -> bool:
    indeg = [0] * g.vertex_count
    i = 0
    while mask:
        if mask & 1:
            indeg[g.edges[i][1]] += 1
        mask >>= 1
        i += 1
    return all(
        d == (0 if is_node else 1) for d, is_node in zip(indeg, g.node_flags)
    )


def _to_mask(g: WeightedGraph, subset: Iterable[int]) -> int:
    mask = 0
    for i in subset:
        if not 0 <= i < len(g.edges):
            raise IndexError(f"edge index {i} out of range")
        mask |= 1 << i
    return mask


def is_rsf(g: WeightedGraph, subset: Iterable[int]) -> bool:
    """True iff the chosen edges form an acyclic spanning subgraph in which
    every component contains exactly one node (orientation ignored)."""
    return _rsf_mask(g, _to_mask(g, subset))


def is_oriented_rsf(g: WeightedGraph, subset: Iterable[int]) -> bool:
    """Rooted spanning forest whose arcs all point away from the root node.

    Within a tree this is the same as: nodes have in-degree 0 and every
    internal vertex has in-degree exactly 1 among the chosen arcs.
    """
    if not g.oriented:
        raise ValueError("is_oriented_rsf() needs an oriented graph")
    mask = _to_mask(g, subset)
    return _rsf_mask(g, mask) and _in_degrees_ok(g, mask)


def _enumerate(g: WeightedGraph, cap: int, oriented: bool) -> ForestReport:
    m = len(g.edges)
    if m > cap:
        raise CapExceeded(m, cap)
    # a forest with one node per component has exactly |internal| edges
    want = g.vertex_count - sum(g.node_flags)
    cycle_mask = None
    hist: Optional[dict[int, int]] = None
    if g.cycle_edges is not None:
        cycle_mask = _to_mask(g, g.cycle_edges)
        hist = {k: 0 for k in range(len(g.cycle_edges) + 1)}

    count = 0
    total = ZERO
    if any(g.node_flags):
        for mask in range(1 << m):
            if mask.bit_count() != want:
                continue
            if not _rsf_mask(g, mask):
                continue
            if oriented and not _in_degrees_ok(g, mask):
                continue
            count += 1
            term = ONE
            bits, i = mask, 0
            while bits:
                if bits & 1:
                    term = term * g.edges[i][2]
                bits >>= 1
                i += 1
            total = total + term
            if hist is not None:
                hist[(mask & cycle_mask).bit_count()] += 1
    return ForestReport(count, total, hist)


def enumerate_rsf(g: WeightedGraph, cap: int = DEFAULT_CAP) -> ForestReport:
    """Sum edge-weight products over every rooted spanning forest of g."""
    return _enumerate(g, cap, oriented=False)


def enumerate_oriented_rsf(g: WeightedGraph, cap: int = DEFAULT_CAP) -> ForestReport:
    if not g.oriented:
        raise ValueError("enumerate_oriented_rsf() needs an oriented graph")
    return _enumerate(g, cap, oriented=True)
