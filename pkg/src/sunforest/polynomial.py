"""Dense univariate polynomials over the integers.

A polynomial is stored as a tuple of Python ints, index k holding the
coefficient of x^k.  Trailing zeros are always stripped, so the zero
polynomial is the empty tuple and structural equality is mathematical
equality.  Nothing in this module touches floating point except
:func:`eval_float`, which exists only for root-residual checks.
"""

from __future__ import annotations

import operator
from typing import Iterable

from .errors import DivisionError, ParseError

__all__ = [
    "IntPoly",
    "ZERO",
    "ONE",
    "X",
    "ZERO_DEGREE",
    "add",
    "mul",
    "compose",
    "exact_div",
    "divides",
    "eval_int",
    "eval_float",
    "parse_poly",
    "format_poly",
    "homogenize",
    "shift",
    "DivisionError",
    "ParseError",
]

# degree of the zero polynomial; below every natural number
ZERO_DEGREE = -1


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [operator.index(v) for v in coeffs]
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    res = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                res[i + j] += ai * bj
    return tuple(res)


class IntPoly:
    """Immutable polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "IntPoly":
        # caller guarantees normalized int tuple
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree, or ``ZERO_DEGREE`` (-1) for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __neg__(self) -> "IntPoly":
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "IntPoly":
        q = _coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return IntPoly(res)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        q = _coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "IntPoly":
        q = _coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly._raw(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return exact_div(self, _coerce(other))

    def __call__(self, v):
        """Evaluate at an int, or compose with an IntPoly."""
        if isinstance(v, IntPoly):
            return compose(self, v)
        return eval_int(self, v)


def _coerce(v) -> IntPoly | None:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly((v,))
    return None


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def compose(p: IntPoly, q: IntPoly) -> IntPoly:
    """Return p(q(x)) by Horner's scheme."""
    result = ZERO
    for c in reversed(p.coeffs):
        result = result * q + c
    return result


def shift(p: IntPoly, c: int) -> IntPoly:
    """p(x + c)."""
    return compose(p, IntPoly((c, 1)))


def exact_div(p: IntPoly, d: IntPoly) -> IntPoly:
    """Quotient q with p == d*q over the integers.

    Raises DivisionError as soon as a leading-coefficient step is inexact or
    a nonzero remainder is left over.
    """
    if not d.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    if not p.coeffs:
        return ZERO
    dc = d.coeffs
    dd = len(dc) - 1
    lc = dc[-1]
    r = list(p.coeffs)
    if len(r) < len(dc):
        raise DivisionError(f"{format_poly(d)} does not divide {format_poly(p)}")
    q = [0] * (len(r) - dd)
    for i in range(len(q) - 1, -1, -1):
        c = r[i + dd]
        if not c:
            continue
        qi, rem = divmod(c, lc)
        if rem:
            raise DivisionError(
                f"inexact leading coefficient step: {c} / {lc}"
            )
        q[i] = qi
        for j, dj in enumerate(dc):
            if dj:
                r[i + j] -= qi * dj
    if any(r[:dd]):
        raise DivisionError(f"{format_poly(d)} does not divide {format_poly(p)}")
    return IntPoly._raw(tuple(q))


def divides(d: IntPoly, p: IntPoly) -> bool:
    try:
        exact_div(p, d)
    except DivisionError:
        return False
    return True


def eval_int(p: IntPoly, v: int) -> int:
    v = operator.index(v)
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def eval_float(p: IntPoly, v: float) -> float:
    """Double-precision Horner evaluation.  Not for exact results."""
    v = float(v)
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * v + float(c)
    return acc


# --------------------------------------------------------------------------
# text form


def _term_text(mag: int, atoms: list[str]) -> str:
    if not atoms:
        return str(mag)
    body = "*".join(atoms)
    return body if mag == 1 else f"{mag}*{body}"


def _join_terms(terms: list[tuple[int, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for i, (c, body) in enumerate(terms):
        if i == 0:
            out.append("-" + body if c < 0 else body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _power(name: str, k: int) -> list[str]:
    if k == 0:
        return []
    return [name] if k == 1 else [f"{name}^{k}"]


def format_poly(p: IntPoly) -> str:
    """Canonical descending-degree text, e.g. ``x^3 + 6*x^2 + 9*x``."""
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c:
            terms.append((c, _term_text(abs(c), _power("x", k))))
    return _join_terms(terms)


def homogenize(p: IntPoly, n: int, var_a: str = "a", var_b: str = "b") -> str:
    """Render b^n * p(a/b) as a homogeneous two-variable form of degree n."""
    if p.degree > n:
        raise ValueError(f"degree {p.degree} exceeds homogenizing degree {n}")
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c:
            atoms = _power(var_a, k) + _power(var_b, n - k)
            terms.append((c, _term_text(abs(c), atoms)))
    return _join_terms(terms)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        pos = self.pos if pos is None else pos
        return ParseError(len(self.text[:pos].encode("utf-8")), message)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def digits(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        return int(self.text[start:self.pos])

    def atom(self) -> int:
        if self.peek() != "x":
            raise self.error("expected 'x'")
        self.pos += 1
        if self.peek() != "^":
            return 1
        self.pos += 1
        if not self.peek().isdigit():
            raise self.error("expected exponent after '^'")
        return self.digits()

    def term(self) -> tuple[int, int]:
        sign = 1
        ch = self.peek()
        if ch in ("+", "-"):
            sign = -1 if ch == "-" else 1
            self.pos += 1
            ch = self.peek()
        if ch.isdigit():
            coeff = self.digits()
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                return sign * coeff, self.atom()
            if ch == "x":
                return sign * coeff, self.atom()
            return sign * coeff, 0
        if ch == "x":
            return sign, self.atom()
        if not ch:
            raise self.error("expected a term, found end of input")
        raise self.error(f"unexpected character {ch!r}")

    def poly(self) -> IntPoly:
        acc: dict[int, int] = {}
        c, k = self.term()
        acc[k] = acc.get(k, 0) + c
        while True:
            ch = self.peek()
            if not ch:
                break
            if ch not in ("+", "-"):
                raise self.error(f"unexpected character {ch!r}")
            self.pos += 1
            c, k = self.term()
            if ch == "-":
                c = -c
            acc[k] = acc.get(k, 0) + c
        coeffs = [0] * (max(acc) + 1)
        for k, c in acc.items():
            coeffs[k] += c
        return IntPoly(coeffs)


def parse_poly(text: str) -> IntPoly:
    """Parse ``poly := term (("+"|"-") term)*`` into an IntPoly.

    Terms are an integer, an integer times ``x^k`` (``*`` optional), or a bare
    ``x^k``.  Whitespace is ignored.  Raises ParseError with a byte offset.
    """
    return _Parser(text).poly()
