"""Command-line front end.

    sunforest compute N [--oriented] [--homogeneous]
    sunforest forest-sum GRAPH.json [--oriented] [--oracle] [--cap E]
    sunforest enumerate GRAPH.json [--oriented] [--cap E]
    sunforest factor N [--oriented]
    sunforest verify [--nmax N] [--check NAME] [--format text|structured]
    sunforest roots N

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 failed verification, 2 bad input, 3 enumeration cap exceeded,
4 determinant / enumeration mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import closedforms, verify
from .errors import CapExceeded, DomainError, ParseError
from .graph import WeightedGraph
from .lintree import forest_sum, oriented_forest_sum
from .oracle import DEFAULT_CAP, ForestReport, enumerate_oriented_rsf, enumerate_rsf
from .polynomial import ONE, IntPoly, format_poly, homogenize, parse_poly

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4


class GraphFileError(ValueError):
    """Malformed graph file; the message carries the location."""


def load_graph(text: str, oriented: bool = False) -> WeightedGraph:
    """Build a WeightedGraph from GraphFile JSON text.

    Vertex ids map to dense indices in file order, which fixes the
    Laplacian row order.  ``oriented`` forces arc semantics regardless of
    the file's own flag.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFileError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise GraphFileError("top level must be an object")
    vertices = data.get("vertices")
    edges = data.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphFileError("'vertices' and 'edges' must be lists")
    is_oriented = bool(data.get("oriented", False)) or oriented

    index: dict[str, int] = {}
    flags = []
    for i, v in enumerate(vertices):
        if not isinstance(v, dict) or "id" not in v:
            raise GraphFileError(f"vertices[{i}]: expected an object with an 'id'")
        vid = str(v["id"])
        if vid in index:
            raise GraphFileError(f"vertices[{i}]: duplicate id {vid!r}")
        index[vid] = i
        flags.append(bool(v.get("node", False)))

    parsed = []
    for i, e in enumerate(edges):
        if not isinstance(e, dict):
            raise GraphFileError(f"edges[{i}]: expected an object")
        ends = []
        for key in ("u", "v"):
            if key not in e:
                raise GraphFileError(f"edges[{i}]: missing {key!r}")
            if str(e[key]) not in index:
                raise GraphFileError(f"edges[{i}].{key}: unknown vertex id {e[key]!r}")
            ends.append(index[str(e[key])])
        weight = e.get("weight", "1")
        try:
            w = parse_poly(str(weight))
        except ParseError as exc:
            raise GraphFileError(f"edges[{i}].weight: {exc}") from exc
        parsed.append((ends[0], ends[1], w))

    try:
        return WeightedGraph(
            len(vertices), tuple(flags), tuple(parsed), oriented=is_oriented, labels=tuple(index)
        )
    except DomainError as exc:
        raise GraphFileError(str(exc)) from exc


def dump_graph(g: WeightedGraph) -> str:
    """Serialize a WeightedGraph to GraphFile JSON."""
    data = {
        "oriented": g.oriented,
        "vertices": [{"id": g.label(v), "node": g.node_flags[v]} for v in range(g.vertex_count)],
        "edges": [
            {"u": g.label(u), "v": g.label(v), "weight": format_poly(w)} for u, v, w in g.edges
        ],
    }
    return json.dumps(data, indent=2)


def _err(msg: str) -> None:
    print(f"sunforest: {msg}", file=sys.stderr)


def _read_graph(args) -> WeightedGraph:
    text = Path(args.graph).read_text()
    g = load_graph(text, oriented=args.oriented)
    if not any(g.node_flags):
        raise GraphFileError("graph has no nodes")
    return g


def _enumerate(g: WeightedGraph, cap: int) -> ForestReport:
    return enumerate_oriented_rsf(g, cap) if g.oriented else enumerate_rsf(g, cap)


def cmd_compute(args) -> int:
    p = closedforms.oriented_forest_poly(args.n) if args.oriented else closedforms.forest_poly(args.n)
    print(homogenize(p, args.n) if args.homogeneous else format_poly(p))
    return EXIT_OK


def cmd_forest_sum(args) -> int:
    g = _read_graph(args)
    z = oriented_forest_sum(g) if g.oriented else forest_sum(g)
    print(format_poly(z))
    if not args.oracle:
        return EXIT_OK
    report = _enumerate(g, args.cap)
    if report.weighted_sum == z:
        print(f"oracle: MATCH ({report.forest_count} forests)")
        return EXIT_OK
    print(f"oracle: MISMATCH ({report.forest_count} forests)")
    print(f"enumerated: {format_poly(report.weighted_sum)}")
    return EXIT_MISMATCH


def cmd_enumerate(args) -> int:
    g = _read_graph(args)
    report = _enumerate(g, args.cap)
    print(format_poly(report.weighted_sum))
    print(f"forests: {report.forest_count}")
    return EXIT_OK


def _factor_line(p: IntPoly, mult: int) -> str:
    text = format_poly(p)
    if sum(1 for c in p.coeffs if c) > 1:
        text = f"({text})"
    return f"{text}^{mult}" if mult > 1 else text


def cmd_factor(args) -> int:
    n = args.n
    if args.oriented:
        factors, expansion = closedforms.oriented_factors(n), closedforms.oriented_forest_poly(n)
    else:
        factors, expansion = closedforms.forest_factors(n), closedforms.forest_poly(n)
    product = ONE
    for p, mult in factors:
        print(_factor_line(p, mult))
        product = product * p**mult
    if product != expansion:
        _err(f"product {format_poly(product)} != expansion {format_poly(expansion)}")
        print("verified: FAILED")
        return EXIT_FAIL
    print("verified: product equals expansion")
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = None
    if args.check is not None:
        if args.check not in verify.CHECKS:
            _err(f"unknown check {args.check!r}; choose from {', '.join(verify.CHECKS)}")
            return EXIT_INPUT
        checks = [args.check]
    reports = verify.run_suite(args.nmax, checks)
    if args.no_timing:
        for r in reports:
            r.elapsed_ms = 0
    if args.format == "structured":
        print(verify.format_structured(reports))
    else:
        print(verify.format_text(reports))
    failed = [r for r in reports if not r.passed]
    if failed:
        _err(f"{len(failed)} of {len(reports)} checks failed")
        return EXIT_FAIL
    return EXIT_OK


def _exact_root(k: int, n: int) -> Optional[int]:
    # 2(cos(2 pi t) - 1) is an integer exactly when t has denominator 1, 2, 3, 4 or 6
    t = Fraction(k, n)
    exact = {1: 0, 2: -4, 3: -3, 4: -2, 6: -1}
    return exact.get(t.denominator)


def format_decimal(value: float, places: int = 6) -> str:
    q = Decimal(value).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)
    if q.is_zero():
        q = abs(q)
    return f"{q:.{places}f}"


def cmd_roots(args) -> int:
    for k, omega, residual in verify.root_table(args.n):
        exact = _exact_root(k, args.n)
        if exact is not None:
            print(exact)
        else:
            print(f"{format_decimal(omega)}\t{residual:.3e}")
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sunforest", description="Rooted spanning forest sums of sunlet graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print F_n (or (x+1)^n - 1 with --oriented)")
    p.add_argument("n", type=_positive)
    p.add_argument("--oriented", action="store_true")
    p.add_argument("--homogeneous", action="store_true", help="print the form in a and b")
    p.set_defaults(func=cmd_compute)

    for name, func, helptext in (
        ("forest-sum", cmd_forest_sum, "forest sum of a graph file via the matrix tree theorem"),
        ("enumerate", cmd_enumerate, "forest sum of a graph file by brute-force enumeration"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("graph", help="graph file (JSON)")
        p.add_argument("--oriented", action="store_true", help="treat edges as arcs u -> v")
        p.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="max edges to enumerate")
        if name == "forest-sum":
            p.add_argument("--oracle", action="store_true", help="cross-check by enumeration")
        p.set_defaults(func=func)

    p = sub.add_parser("factor", help="print the factorization of F_n")
    p.add_argument("n", type=_positive)
    p.add_argument("--oriented", action="store_true")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--nmax", type=_positive, default=12)
    p.add_argument("--check", default=None, help=f"one of: {', '.join(verify.CHECKS)}")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roots", help="dump the roots 2(cos(2 pi k/n) - 1) of F_n")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_roots)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFileError, OSError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except CapExceeded as exc:
        _err(str(exc))
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
