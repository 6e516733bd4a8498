"""Weighted sums of rooted spanning forests of cycles with pendant edges.

Exact arithmetic throughout: polynomials live in Z[x] (:mod:`.polynomial`),
forest sums come either from Bareiss determinants of Laplacian minors
(:mod:`.lintree`) or from brute-force enumeration (:mod:`.oracle`), and
:mod:`.closedforms` builds the Chebyshev / cyclotomic closed forms they are
checked against.
"""

from .closedforms import (
    c_poly,
    chebyshev_t,
    cyclotomic,
    factored_forest_poly,
    factored_oriented_poly,
    forest_poly,
    oriented_forest_poly,
    psi,
    shifted_cheb_g,
)
from .errors import CapExceeded, DivisionError, DomainError, ParseError
from .graph import WeightedGraph, build_cycle, build_oriented_sunlet, build_sunlet, collapse_nodes
from .lintree import PolyMatrix, det, forest_sum, oriented_forest_sum
from .oracle import ForestReport, enumerate_oriented_rsf, enumerate_rsf
from .polynomial import IntPoly, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "parse_poly",
    "format_poly",
    "chebyshev_t",
    "shifted_cheb_g",
    "forest_poly",
    "oriented_forest_poly",
    "cyclotomic",
    "psi",
    "c_poly",
    "factored_forest_poly",
    "factored_oriented_poly",
    "WeightedGraph",
    "build_cycle",
    "build_sunlet",
    "build_oriented_sunlet",
    "collapse_nodes",
    "PolyMatrix",
    "det",
    "forest_sum",
    "oriented_forest_sum",
    "ForestReport",
    "enumerate_rsf",
    "enumerate_oriented_rsf",
    "CapExceeded",
    "DivisionError",
    "DomainError",
    "ParseError",
]
