import cmath
import math
import random
import sys
from itertools import combinations

import pytest
from hypothesis import strategies as st

from sunforest.graph import WeightedGraph
from sunforest.lintree import PolyMatrix
from sunforest.polynomial import ONE, ZERO, IntPoly


def int_polys(max_degree=6, max_coeff=10**6):
    return st.lists(
        st.integers(-max_coeff, max_coeff), min_size=0, max_size=max_degree + 1
    ).map(IntPoly)


def random_poly(rng, max_degree=4, max_coeff=20):
    return IntPoly(rng.randint(-max_coeff, max_coeff) for _ in range(rng.randint(0, max_degree + 1)))


def naive_det(m: PolyMatrix) -> IntPoly:
    """Laplace expansion along the first row.  Test oracle only."""
    n = m.size
    if n == 0:
        return ONE
    total = ZERO
    for j in range(n):
        e = m[0, j]
        if not e:
            continue
        minor = m.submatrix(list(range(1, n)), [c for c in range(n) if c != j])
        term = e * naive_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def random_matrix(rng, n, max_degree=2, max_coeff=9, density=0.8):
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            row.append(random_poly(rng, max_degree, max_coeff) if rng.random() < density else ZERO)
        rows.append(row)
    return PolyMatrix(rows)


_WEIGHTS = ["1", "2", "x", "x + 1", "2*x + 3", "x^2 + 1", "3*x"]


def random_graph(rng, max_edges=12, nodes=(1, 3), vertices=(3, 8), oriented=False):
    """A random simple graph with 1-3 nodes and at most max_edges edges."""
    from sunforest.polynomial import parse_poly

    nv = rng.randint(*vertices)
    k = rng.randint(nodes[0], min(nodes[1], nv))
    node_set = set(rng.sample(range(nv), k))
    pairs = list(combinations(range(nv), 2))
    if oriented:
        pairs = pairs + [(v, u) for u, v in pairs]
    rng.shuffle(pairs)
    m = rng.randint(1, min(max_edges, len(pairs)))
    chosen = []
    seen = set()
    for u, v in pairs:
        if len(chosen) == m:
            break
        key = (u, v) if oriented else (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        chosen.append((u, v, parse_poly(rng.choice(_WEIGHTS))))
    flags = tuple(v in node_set for v in range(nv))
    return WeightedGraph(nv, flags, tuple(chosen), oriented=oriented)


def poly_from_roots(roots):
    """Expand prod (x - r) over complex roots; returns complex coefficients."""
    coeffs = [1 + 0j]
    for r in roots:
        nxt = [0j] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    return coeffs


def round_to_intpoly(coeffs, tol=1e-6):
    out = []
    for c in coeffs:
        r = round(c.real)
        assert abs(c.real - r) < tol and abs(c.imag) < tol, c
        out.append(r)
    return IntPoly(out)


def cyclotomic_by_roots(n):
    roots = [cmath.exp(2j * math.pi * k / n) for k in range(1, n + 1) if math.gcd(k, n) == 1]
    return round_to_intpoly(poly_from_roots(roots))


def psi_by_roots(n):
    roots = [2 * math.cos(2 * math.pi * k / n) for k in range(1, n // 2 + 1) if math.gcd(k, n) == 1]
    if n in (1, 2):
        roots = [2 * math.cos(2 * math.pi / n)]
    return round_to_intpoly(poly_from_roots(roots))


@pytest.fixture
def rng():
    return random.Random(20240613)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
