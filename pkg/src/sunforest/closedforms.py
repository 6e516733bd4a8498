"""Closed-form polynomial families for the sunlet forest sums.

Everything here is built over the integers: Chebyshev polynomials of the
first kind, the forest polynomial F_n(x) = 2(T_n(x/2 + 1) - 1), its oriented
analogue (x + 1)^n - 1, cyclotomic polynomials Phi_n, the minimal
polynomials Psi_n of 2cos(2pi/n), and the factored forms assembled from them.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .polynomial import ONE, X, IntPoly, exact_div, shift

__all__ = [
    "divisors",
    "totient",
    "chebyshev_t",
    "shifted_cheb_g",
    "forest_poly",
    "oriented_forest_poly",
    "cyclotomic",
    "psi",
    "c_poly",
    "forest_factors",
    "oriented_factors",
    "factored_forest_poly",
    "factored_oriented_poly",
]


def divisors(n: int) -> list[int]:
    """Positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")


def chebyshev_t(n: int) -> IntPoly:
    """T_n with T_1 = x, T_2 = 2x^2 - 1, T_{n+2} = 2x T_{n+1} - T_n."""
    _require_positive(n)
    prev, cur = X, IntPoly((-1, 0, 2))
    if n == 1:
        return prev
    two_x = IntPoly((0, 2))
    for _ in range(n - 2):
        prev, cur = cur, two_x * cur - prev
    return cur


_G_LOCK = threading.Lock()
# _G_SEQ[k] is G_k(x) = 2 T_k((x + 2)/2); index 0 holds the constant 2
_G_SEQ: list[IntPoly] = [IntPoly((2,)), IntPoly((2, 1))]
_X_PLUS_2 = IntPoly((2, 1))


def shifted_cheb_g(n: int) -> IntPoly:
    """G_n(x) = 2 T_n((x + 2)/2), via G_{n+2} = (x + 2) G_{n+1} - G_n.

    Monic of degree n.  G_0 = 2 seeds the recurrence so that G_2 comes out
    as (x + 2)^2 - 2.
    """
    _require_positive(n)
    with _G_LOCK:
        while len(_G_SEQ) <= n:
            _G_SEQ.append(_X_PLUS_2 * _G_SEQ[-1] - _G_SEQ[-2])
        return _G_SEQ[n]


def forest_poly(n: int) -> IntPoly:
    """F_n(x) = G_n(x) - 2, the rooted-forest sum of the sunlet at a=x, b=1."""
    return shifted_cheb_g(n) - 2


def oriented_forest_poly(n: int) -> IntPoly:
    """(x + 1)^n - 1."""
    _require_positive(n)
    return IntPoly((1, 1)) ** n - 1


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    _require_positive(n)
    num = IntPoly.monomial(n) - 1
    den = ONE
    for d in divisors(n)[:-1]:
        den = den * cyclotomic(d)
    return exact_div(num, den)


def _chebyshev_v(m: int) -> list[IntPoly]:
    # V_k(y) = x^k + x^-k written in y = x + 1/x
    v = [IntPoly((2,)), X]
    for _ in range(1, m):
        v.append(X * v[-1] - v[-2])
    return v[: m + 1]


@lru_cache(maxsize=None)
def psi(n: int) -> IntPoly:
    """Minimal polynomial of 2cos(2pi/n).

    For n >= 3 this uses Phi_n(x) = x^m Psi_n(x + 1/x) with m = phi(n)/2:
    the palindromic coefficients of Phi_n are rewritten in the basis
    x^k + x^-k = V_k(x + 1/x).
    """
    _require_positive(n)
    if n == 1:
        return IntPoly((-2, 1))
    if n == 2:
        return IntPoly((2, 1))
    c = cyclotomic(n).coeffs
    d = len(c) - 1
    if d % 2 or c != c[::-1]:
        raise AssertionError(f"cyclotomic({n}) is not palindromic of even degree")
    m = d // 2
    v = _chebyshev_v(m)
    result = IntPoly((c[m],))
    for k in range(1, m + 1):
        result = result + v[k] * c[m + k]
    return result


def c_poly(n: int) -> IntPoly:
    """x for odd n, x(x + 4) for even n."""
    _require_positive(n)
    return X if n % 2 else IntPoly((0, 4, 1))


def _factor_key(item: tuple[IntPoly, int]):
    p, _ = item
    return (p.degree, p.coeffs)


def forest_factors(n: int) -> list[tuple[IntPoly, int]]:
    """Factors of F_n with multiplicity: c_n split into linear pieces, then
    Psi_k(x + 2)^2 for every divisor k > 2, ordered by degree."""
    _require_positive(n)
    factors = [(X, 1)]
    if n % 2 == 0:
        factors.append((IntPoly((4, 1)), 1))
    for k in divisors(n):
        if k > 2:
            factors.append((shift(psi(k), 2), 2))
    return sorted(factors, key=_factor_key)


def oriented_factors(n: int) -> list[tuple[IntPoly, int]]:
    """Phi_k(x + 1) for every divisor k of n, ordered by degree."""
    _require_positive(n)
    return sorted(((shift(cyclotomic(k), 1), 1) for k in divisors(n)), key=_factor_key)


def factored_forest_poly(n: int) -> IntPoly:
    """c_n(x) * prod_{k | n, k > 2} Psi_k(x + 2)^2, expanded."""
    result = c_poly(n)
    for k in divisors(n):
        if k > 2:
            result = result * shift(psi(k), 2) ** 2
    return result


def factored_oriented_poly(n: int) -> IntPoly:
    """prod_{k | n} Phi_k(x + 1), expanded."""
    _require_positive(n)
    result = ONE
    for k in divisors(n):
        result = result * shift(cyclotomic(k), 1)
    return result
