"""Polynomial matrices, Laplacians and the matrix-tree pipeline.

Determinants are taken with Bareiss fraction-free elimination so that every
intermediate stays in Z[x]; the Sylvester identity makes each division exact.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivisionError, DomainError
from .graph import WeightedGraph, collapse_nodes
from .polynomial import ONE, ZERO, IntPoly, exact_div

__all__ = [
    "PolyMatrix",
    "laplacian",
    "oriented_laplacian",
    "internal_submatrix",
    "det",
    "cofactor_det",
    "forest_sum",
    "oriented_forest_sum",
    "circulant_internal_matrix",
    "oriented_circulant_internal_matrix",
]


class PolyMatrix:
    """Square, immutable matrix of IntPoly entries (row-major)."""

    __slots__ = ("size", "rows")

    def __init__(self, rows: Iterable[Sequence[IntPoly | int]]):
        rows = tuple(
            tuple(e if isinstance(e, IntPoly) else IntPoly((e,)) for e in row) for row in rows
        )
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("PolyMatrix must be square")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "size", len(rows))

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def zeros(cls, n: int) -> "PolyMatrix":
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> IntPoly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows)
        return f"PolyMatrix([{body}])"

    def submatrix(self, keep_rows: Sequence[int], keep_cols: Sequence[int]) -> "PolyMatrix":
        if len(keep_rows) != len(keep_cols):
            raise ValueError("submatrix must be square")
        return PolyMatrix([[self.rows[i][j] for j in keep_cols] for i in keep_rows])

    def to_lists(self) -> list[list[IntPoly]]:
        return [list(r) for r in self.rows]


def _accumulate(n: int, entries: Iterable[tuple[int, int, IntPoly]]) -> PolyMatrix:
    m = [[ZERO] * n for _ in range(n)]
    for i, j, w in entries:
        m[i][j] = m[i][j] + w
    return PolyMatrix(m)


def laplacian(g: WeightedGraph) -> PolyMatrix:
    if g.oriented:
        raise DomainError("laplacian() needs a non-oriented graph")

    def entries():
        for u, v, w in g.edges:
            yield u, v, -w
            yield v, u, -w
            yield u, u, w
            yield v, v, w

    return _accumulate(g.vertex_count, entries())


def oriented_laplacian(g: WeightedGraph) -> PolyMatrix:
    """Entry (u, v) is -w(u -> v); the diagonal holds total in-arc weight."""
    if not g.oriented:
        raise DomainError("oriented_laplacian() needs an oriented graph")

    def entries():
        for u, v, w in g.edges:
            yield u, v, -w
            yield v, v, w

    return _accumulate(g.vertex_count, entries())


def internal_submatrix(m: PolyMatrix, g: WeightedGraph) -> PolyMatrix:
    idx = g.internal
    return m.submatrix(idx, idx)


def det(m: PolyMatrix) -> IntPoly:
    """Determinant by Bareiss elimination with lowest-degree pivoting."""
    n = m.size
    if n == 0:
        return ONE
    a = m.to_lists()
    sign = 1
    prev = ONE
    for k in range(n - 1):
        pivot_row = None
        for i in range(k, n):
            e = a[i][k]
            if e and (pivot_row is None or e.degree < a[pivot_row][k].degree):
                pivot_row = i
        if pivot_row is None:
            return ZERO
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        piv = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                e = row_i[j]
                if lead:
                    kj = row_k[j]
                    num = piv * e - lead * kj if kj else piv * e
                elif e:
                    num = piv * e
                else:
                    continue
                try:
                    row_i[j] = exact_div(num, prev) if prev != ONE else num
                except DivisionError as exc:  # pragma: no cover
                    raise AssertionError("Bareiss division was not exact") from exc
            row_i[k] = ZERO
        prev = piv
    result = a[n - 1][n - 1]
    return -result if sign < 0 else result


def cofactor_det(m: PolyMatrix, i: int, j: int) -> IntPoly:
    """(-1)^(i+j) times the minor of m with row i and column j removed."""
    n = m.size
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"cofactor ({i}, {j}) out of range for size {n}")
    rows = [r for r in range(n) if r != i]
    cols = [c for c in range(n) if c != j]
    minor = det(m.submatrix(rows, cols))
    return -minor if (i + j) % 2 else minor


def _require_nodes(g: WeightedGraph) -> None:
    if not any(g.node_flags):
        raise DomainError("graph has no nodes")


def forest_sum(g: WeightedGraph) -> IntPoly:
    """Weighted sum of rooted spanning forests: det of the internal block of L(g)."""
    if g.oriented:
        raise DomainError("forest_sum() needs a non-oriented graph")
    _require_nodes(g)
    return det(internal_submatrix(laplacian(g), g))


def oriented_forest_sum(g: WeightedGraph) -> IntPoly:
    """Weighted sum of oriented rooted spanning forests.

    Nodes are collapsed to one root first, then the principal minor on the
    internal vertices of the oriented Laplacian is taken.
    """
    if not g.oriented:
        raise DomainError("oriented_forest_sum() needs an oriented graph")
    _require_nodes(g)
    h = collapse_nodes(g)
    return det(internal_submatrix(oriented_laplacian(h), h))


def circulant_internal_matrix(n: int, a: IntPoly, b: IntPoly) -> PolyMatrix:
    """b*L(C_n) + a*I as a circulant.

    Neighbour contributions are summed, so n = 2 gives off-diagonal -2b and
    n = 1 collapses to [a].
    """
    if n < 1:
        raise ValueError("n must be positive")

    def entries():
        for i in range(n):
            yield i, i, a + 2 * b
            yield i, (i + 1) % n, -b
            yield i, (i - 1) % n, -b

    return _accumulate(n, entries())


def oriented_circulant_internal_matrix(n: int, a: IntPoly, b: IntPoly) -> PolyMatrix:
    """Diagonal a+b with -b one step to the right, cyclically (n = 1 gives [a])."""
    if n < 1:
        raise ValueError("n must be positive")

    def entries():
        for i in range(n):
            yield i, i, a + b
            yield i, (i + 1) % n, -b

    return _accumulate(n, entries())
