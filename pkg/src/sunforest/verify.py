"""Executable checks for the forest-sum identities over finite ranges.

Each check returns a VerifyReport.  All checks except the floating-point
root residuals use exact integer arithmetic only, so a PASS is a proof for
that particular instance.  Universally quantified statements are only ever
checked on the stated range.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional

from .closedforms import (
    c_poly,
    factored_forest_poly,
    factored_oriented_poly,
    forest_poly,
    oriented_forest_poly,
)
from .graph import build_oriented_sunlet, build_sunlet
from .lintree import (
    circulant_internal_matrix,
    det,
    forest_sum,
    oriented_circulant_internal_matrix,
    oriented_forest_sum,
)
from .oracle import enumerate_oriented_rsf
from .polynomial import ONE, X, IntPoly, divides, eval_float, eval_int, format_poly, parse_poly

__all__ = [
    "VerifyReport",
    "GOLDEN_FOREST_POLYS",
    "GOLDEN_FOREST_FACTORS",
    "CHECKS",
    "check_golden",
    "check_main_theorem",
    "check_oriented_theorem",
    "check_c_divisor",
    "check_factorization",
    "check_characterization",
    "check_log_concavity",
    "check_roots",
    "check_oriented_real_roots",
    "root_table",
    "default_root_tol",
    "run_suite",
    "format_text",
    "format_structured",
]

PolyFamily = Callable[[int], IntPoly]

# F_1 .. F_12 as printed, expanded and factored
GOLDEN_FOREST_POLYS = {
    1: "x",
    2: "x^2 + 4*x",
    3: "x^3 + 6*x^2 + 9*x",
    4: "x^4 + 8*x^3 + 20*x^2 + 16*x",
    5: "x^5 + 10*x^4 + 35*x^3 + 50*x^2 + 25*x",
    6: "x^6 + 12*x^5 + 54*x^4 + 112*x^3 + 105*x^2 + 36*x",
    7: "x^7 + 14*x^6 + 77*x^5 + 210*x^4 + 294*x^3 + 196*x^2 + 49*x",
    8: "x^8 + 16*x^7 + 104*x^6 + 352*x^5 + 660*x^4 + 672*x^3 + 336*x^2 + 64*x",
    9: "x^9 + 18*x^8 + 135*x^7 + 546*x^6 + 1287*x^5 + 1782*x^4 + 1386*x^3 + 540*x^2 + 81*x",
    10: "x^10 + 20*x^9 + 170*x^8 + 800*x^7 + 2275*x^6 + 4004*x^5 + 4290*x^4 + 2640*x^3"
    " + 825*x^2 + 100*x",
    11: "x^11 + 22*x^10 + 209*x^9 + 1122*x^8 + 3740*x^7 + 8008*x^6 + 11011*x^5 + 9438*x^4"
    " + 4719*x^3 + 1210*x^2 + 121*x",
    12: "x^12 + 24*x^11 + 252*x^10 + 1520*x^9 + 5814*x^8 + 14688*x^7 + 24752*x^6"
    " + 27456*x^5 + 19305*x^4 + 8008*x^3 + 1716*x^2 + 144*x",
}

GOLDEN_FOREST_FACTORS = {
    1: [("x", 1)],
    2: [("x", 1), ("x + 4", 1)],
    3: [("x", 1), ("x + 3", 2)],
    4: [("x", 1), ("x + 2", 2), ("x + 4", 1)],
    5: [("x", 1), ("x^2 + 5*x + 5", 2)],
    6: [("x", 1), ("x + 1", 2), ("x + 3", 2), ("x + 4", 1)],
    7: [("x", 1), ("x^3 + 7*x^2 + 14*x + 7", 2)],
    8: [("x", 1), ("x + 2", 2), ("x + 4", 1), ("x^2 + 4*x + 2", 2)],
    9: [("x", 1), ("x + 3", 2), ("x^3 + 6*x^2 + 9*x + 3", 2)],
    10: [("x", 1), ("x + 4", 1), ("x^2 + 3*x + 1", 2), ("x^2 + 5*x + 5", 2)],
    11: [("x", 1), ("x^5 + 11*x^4 + 44*x^3 + 77*x^2 + 55*x + 11", 2)],
    12: [
        ("x", 1),
        ("x + 1", 2),
        ("x + 2", 2),
        ("x + 3", 2),
        ("x + 4", 1),
        ("x^2 + 4*x + 1", 2),
    ],
}


@dataclass
class VerifyReport:
    check_name: str
    params: list[int]
    passed: bool
    counterexample: Optional[str] = None
    elapsed_ms: int = 0
    skipped: bool = False
    note: str = ""

    def __post_init__(self):
        if not self.passed and not self.counterexample:
            self.counterexample = "(no detail recorded)"

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def sort_key(self):
        return (self.check_name, self.params)


class _Check:
    """Collects failures for one report and times it."""

    def __init__(self, name: str, params: Iterable[int], note: str = ""):
        self.name = name
        self.params = list(params)
        self.note = note
        self.failures: list[str] = []
        self.start = time.perf_counter()

    def expect(self, ok: bool, message: Callable[[], str] | str) -> bool:
        if not ok:
            self.failures.append(message() if callable(message) else message)
        return ok

    def report(self) -> VerifyReport:
        elapsed = int((time.perf_counter() - self.start) * 1000)
        return VerifyReport(
            self.name,
            self.params,
            not self.failures,
            "\n".join(self.failures) if self.failures else None,
            elapsed,
            note=self.note,
        )


def _mismatch(label: str, got: IntPoly, want: IntPoly) -> Callable[[], str]:
    return lambda: f"{label}: {format_poly(got)} != {format_poly(want)}"


def check_golden(n: int, forest: PolyFamily = forest_poly) -> VerifyReport:
    """Compare F_n against the embedded table of printed values (n <= 12)."""
    chk = _Check("golden", [n])
    text = GOLDEN_FOREST_POLYS[n]
    parsed = parse_poly(text)
    chk.expect(format_poly(parsed) == text, lambda: f"golden text not canonical: {text}")
    got = forest(n)
    chk.expect(got == parsed, _mismatch(f"F_{n}", got, parsed))
    product = ONE
    for factor, mult in GOLDEN_FOREST_FACTORS[n]:
        product = product * parse_poly(factor) ** mult
    chk.expect(product == parsed, _mismatch(f"factored F_{n}", product, parsed))
    return chk.report()


def check_main_theorem(n: int, forest: PolyFamily = forest_poly) -> VerifyReport:
    """Circulant determinant, closed form and (n >= 3) sunlet forest sum agree."""
    chk = _Check("main-theorem", [n])
    ref = forest(n)
    circ = det(circulant_internal_matrix(n, X, ONE))
    chk.expect(circ == ref, _mismatch(f"det circulant n={n} vs closed form", circ, ref))
    if n >= 3:
        s = forest_sum(build_sunlet(n, X, ONE))
        chk.expect(s == ref, _mismatch(f"sunlet forest sum n={n} vs closed form", s, ref))
    return chk.report()


def check_oriented_theorem(
    n: int, oriented: PolyFamily = oriented_forest_poly, oracle_max: int = 8
) -> VerifyReport:
    """(x+1)^n - 1 against the cyclic bidiagonal determinant, the oriented
    sunlet pipeline (n >= 3) and brute-force enumeration (3 <= n <= oracle_max)."""
    chk = _Check("oriented-theorem", [n])
    ref = oriented(n)
    bidiag = det(oriented_circulant_internal_matrix(n, X, ONE))
    chk.expect(bidiag == ref, _mismatch(f"det bidiagonal n={n}", bidiag, ref))
    if n >= 3:
        g = build_oriented_sunlet(n, X, ONE)
        s = oriented_forest_sum(g)
        chk.expect(s == ref, _mismatch(f"oriented sunlet sum n={n}", s, ref))
        if n <= oracle_max:
            e = enumerate_oriented_rsf(g).weighted_sum
            chk.expect(e == ref, _mismatch(f"oriented enumeration n={n}", e, ref))
    return chk.report()


def check_c_divisor(n: int, forest: PolyFamily = forest_poly) -> VerifyReport:
    chk = _Check("c-divisor", [n])
    f = forest(n)
    c = c_poly(n)
    chk.expect(divides(c, f), lambda: f"{format_poly(c)} does not divide F_{n} = {format_poly(f)}")
    chk.expect(eval_int(f, 0) == 0, lambda: f"F_{n}(0) = {eval_int(f, 0)}")
    if n % 2 == 0:
        chk.expect(eval_int(f, -4) == 0, lambda: f"F_{n}(-4) = {eval_int(f, -4)}")
    return chk.report()


def check_factorization(
    n: int, forest: PolyFamily = forest_poly, oriented: PolyFamily = oriented_forest_poly
) -> VerifyReport:
    chk = _Check("factorization", [n])
    f, ff = forest(n), factored_forest_poly(n)
    chk.expect(ff == f, _mismatch(f"c_n * prod Psi_k(x+2)^2 at n={n}", ff, f))
    g, gf = oriented(n), factored_oriented_poly(n)
    chk.expect(gf == g, _mismatch(f"prod Phi_k(x+1) at n={n}", gf, g))
    return chk.report()


def check_characterization(
    family: str,
    n_max: int,
    div_max: Optional[int] = None,
    forest: PolyFamily = forest_poly,
    oriented: PolyFamily = oriented_forest_poly,
) -> VerifyReport:
    """Degree, monicity, commuting composition and divisibility-iff-n|m.

    Degree/monicity for n <= n_max, composition for n*m <= n_max in both
    orders, divisibility for n, m <= div_max (defaults to n_max).
    """
    if family not in ("plain", "oriented"):
        raise ValueError(f"unknown family {family!r}")
    div_max = n_max if div_max is None else div_max
    fam = forest if family == "plain" else oriented
    name = f"characterization-{family}"
    params = [n_max] if div_max == n_max else [n_max, div_max]
    note = f"n <= {n_max}; compositions n*m <= {n_max}; divisibility n,m <= {div_max}"
    if n_max < 2:
        return VerifyReport(name, params, True, skipped=True, note="needs n_max >= 2")
    chk = _Check(name, params, note)
    polys = {n: fam(n) for n in range(1, max(n_max, div_max) + 1)}
    for n in range(1, n_max + 1):
        p = polys[n]
        chk.expect(p.degree == n, lambda: f"deg P_{n} = {p.degree}")
        chk.expect(p.is_monic(), lambda: f"P_{n} not monic: {format_poly(p)}")
    for n in range(1, n_max + 1):
        for m in range(n, n_max // n + 1):
            nm = polys[n * m]
            a, b = polys[n](polys[m]), polys[m](polys[n])
            chk.expect(a == nm, _mismatch(f"P_{n}(P_{m})", a, nm))
            chk.expect(b == nm, _mismatch(f"P_{m}(P_{n})", b, nm))
    for n in range(1, div_max + 1):
        for m in range(1, div_max + 1):
            got = divides(polys[n], polys[m])
            chk.expect(got == (m % n == 0), lambda: f"P_{n} | P_{m} is {got}, {n} | {m} is {m % n == 0}")
    return chk.report()


def check_log_concavity(n: int, forest: PolyFamily = forest_poly) -> VerifyReport:
    chk = _Check("log-concavity", [n])
    alpha = forest(n).coeffs  # alpha[j] is the x^j coefficient; alpha[0] == 0
    chk.expect(len(alpha) == n + 1, lambda: f"F_{n} has degree {len(alpha) - 1}")
    chk.expect(all(a > 0 for a in alpha[1:]), lambda: f"F_{n} has a nonpositive coefficient")
    for j in range(2, n):
        lhs, rhs = alpha[j] ** 2, alpha[j - 1] * alpha[j + 1]
        if not chk.expect(lhs >= rhs, lambda: f"alpha_{j}^2 = {lhs} < {rhs}"):
            break
    # unimodality: once the sequence drops it never rises again
    dropped = False
    for j in range(2, n + 1):
        if alpha[j] < alpha[j - 1]:
            dropped = True
        elif alpha[j] > alpha[j - 1] and dropped:
            chk.expect(False, f"not unimodal: rises again at j={j}")
            break
    return chk.report()


def default_root_tol(n: int) -> float:
    return 1e-9 if n <= 20 else 1e-6


def root_table(n: int, forest: PolyFamily = forest_poly) -> list[tuple[int, float, float]]:
    """(k, omega_k, |F_n(omega_k)|) for omega_k = 2(cos(2 pi k / n) - 1)."""
    f = forest(n)
    rows = []
    for k in range(n):
        omega = 2.0 * (math.cos(2.0 * math.pi * k / n) - 1.0)
        rows.append((k, omega, abs(eval_float(f, omega))))
    return rows


def check_roots(n: int, tol: Optional[float] = None, forest: PolyFamily = forest_poly) -> VerifyReport:
    """Float residuals at every omega_k, scaled by the absolute coefficient sum.

    The rational roots 0 (all n) and -4 (even n) are confirmed exactly.
    """
    tol = default_root_tol(n) if tol is None else tol
    chk = _Check("roots", [n], note=f"tol={tol:g} relative to sum |coeff|")
    f = forest(n)
    chk.expect(eval_int(f, 0) == 0, lambda: f"F_{n}(0) = {eval_int(f, 0)} exactly")
    if n % 2 == 0:
        chk.expect(eval_int(f, -4) == 0, lambda: f"F_{n}(-4) = {eval_int(f, -4)} exactly")
    scale = float(sum(abs(c) for c in f.coeffs))
    for k, omega, res in root_table(n, forest):
        chk.expect(
            res <= tol * scale,
            lambda: f"k={k} omega={omega!r} residual {res:.3e} > {tol:g} * {scale:.3e}",
        )
    return chk.report()


def check_oriented_real_roots(n: int, oriented: PolyFamily = oriented_forest_poly) -> VerifyReport:
    chk = _Check("oriented-real-roots", [n])
    g = oriented(n)
    chk.expect(eval_int(g, 0) == 0, lambda: f"oriented F_{n}(0) = {eval_int(g, 0)}")
    at_minus_two = eval_int(g, -2)
    chk.expect(
        (at_minus_two == 0) == (n % 2 == 0),
        lambda: f"oriented F_{n}(-2) = {at_minus_two} for {'even' if n % 2 == 0 else 'odd'} n",
    )
    return chk.report()


def _skip(name: str, params: list[int], why: str) -> VerifyReport:
    return VerifyReport(name, params, True, skipped=True, note=why)


def _suite_golden(n_max, forest, oriented):
    return [check_golden(n, forest) for n in range(1, min(n_max, 12) + 1)]


def _suite_main(n_max, forest, oriented):
    return [check_main_theorem(n, forest) for n in range(1, n_max + 1)]


def _suite_oriented(n_max, forest, oriented):
    return [check_oriented_theorem(n, oriented) for n in range(1, n_max + 1)]


def _suite_c_divisor(n_max, forest, oriented):
    return [check_c_divisor(n, forest) for n in range(1, n_max + 1)]


def _suite_factorization(n_max, forest, oriented):
    return [check_factorization(n, forest, oriented) for n in range(1, n_max + 1)]


def _suite_characterization(n_max, forest, oriented):
    return [
        check_characterization(fam, n_max, forest=forest, oriented=oriented)
        for fam in ("plain", "oriented")
    ]


def _suite_log_concavity(n_max, forest, oriented):
    if n_max < 3:
        return [_skip("log-concavity", [n_max], "needs n >= 3")]
    return [check_log_concavity(n, forest) for n in range(3, n_max + 1)]


def _suite_roots(n_max, forest, oriented):
    return [check_roots(n, forest=forest) for n in range(1, n_max + 1)]


def _suite_oriented_real_roots(n_max, forest, oriented):
    return [check_oriented_real_roots(n, oriented) for n in range(1, n_max + 1)]


CHECKS = {
    "golden": _suite_golden,
    "main-theorem": _suite_main,
    "oriented-theorem": _suite_oriented,
    "c-divisor": _suite_c_divisor,
    "factorization": _suite_factorization,
    "characterization": _suite_characterization,
    "log-concavity": _suite_log_concavity,
    "roots": _suite_roots,
    "oriented-real-roots": _suite_oriented_real_roots,
}


def run_suite(
    n_max: int,
    checks: Optional[Iterable[str]] = None,
    forest: PolyFamily = forest_poly,
    oriented: PolyFamily = oriented_forest_poly,
) -> list[VerifyReport]:
    """Run the named checks (all by default) for parameters up to n_max.

    ``forest`` and ``oriented`` replace the closed forms under test, which is
    how the harness is exercised against deliberately broken inputs.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    names = list(CHECKS) if checks is None else list(checks)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    reports = []
    for name in names:
        reports.extend(CHECKS[name](n_max, forest, oriented))
    return sorted(reports, key=VerifyReport.sort_key)


def format_text(reports: Iterable[VerifyReport]) -> str:
    lines = []
    for r in reports:
        params = ",".join(str(p) for p in r.params)
        lines.append(f"{r.check_name}\t{params}\t{r.status}\t{r.elapsed_ms}")
        if r.counterexample and not r.passed:
            lines.extend("    " + line for line in r.counterexample.splitlines())
    return "\n".join(lines)


def format_structured(reports: Iterable[VerifyReport]) -> str:
    return json.dumps(
        [dict(asdict(r), status=r.status) for r in reports], indent=2, sort_keys=True
    )
