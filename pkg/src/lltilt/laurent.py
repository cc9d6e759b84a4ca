"""Sparse Laurent polynomials in q with integer coefficients.

A polynomial is stored as a frozen ``{exponent: coefficient}`` mapping with
zero coefficients stripped, so structural equality is polynomial equality.
Python ints give arbitrary precision for free.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Mapping


class NotDivisibleError(ArithmeticError):
    """Raised by :func:`exact_divide` when the quotient is not a Laurent polynomial."""


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        c: dict[int, int] = {}
        for e, v in items:
            e = int(e)
            c[e] = c.get(e, 0) + int(v)
        self._c = {e: v for e, v in c.items() if v}
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls({0: x})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # read access
    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def min_exp(self) -> int | None:
        return min(self._c) if self._c else None

    @property
    def max_exp(self) -> int | None:
        return max(self._c) if self._c else None

    def in_qZq(self) -> bool:
        """True when every exponent is strictly positive (0 counts)."""
        return all(e >= 1 for e in self._c)

    def in_Zq(self) -> bool:
        return all(e >= 0 for e in self._c)

    def at_one(self) -> int:
        return sum(self._c.values())

    # ring operations
    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        other = LaurentPoly.coerce(other)
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q**k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def bar(self) -> LaurentPoly:
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # serialization
    def to_json(self) -> list[list[int]]:
        return [[e, self._c[e]] for e in sorted(self._c, reverse=True)]

    @classmethod
    def from_json(cls, data) -> LaurentPoly:
        return cls((e, c) for e, c in data)

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^{{{e}}}"
                body = mono if a == 1 else f"{a}*{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``: accepts terms like ``2*q^3``, ``-q^{-1}``, ``5``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        c: dict[int, int] = {}
        for t in re.sub(r"(?<=[^\^{])([+-])", r"|\1", s).split("|"):
            m = re.fullmatch(r"([+-]?)(\d+)?\*?(q(?:\^\{?(-?\d+)\}?)?)?", t)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"bad Laurent term {t!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            e = (int(m.group(4)) if m.group(4) is not None else 1) if m.group(3) else 0
            c[e] = c.get(e, 0) + sign * coef
        return cls(c)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


def add(a, b) -> LaurentPoly:
    return LaurentPoly.coerce(a) + b


def mul(a, b) -> LaurentPoly:
    return LaurentPoly.coerce(a) * b


def bar(a) -> LaurentPoly:
    return LaurentPoly.coerce(a).bar()


def q_int(n: int) -> LaurentPoly:
    """Balanced quantum integer q^(n-1) + q^(n-3) + ... + q^(1-n).

    Negative n gives -[−n]; [0] = 0.
    """
    if n < 0:
        return -q_int(-n)
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def q_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = ONE
    for k in range(2, n + 1):
        out = out * q_int(k)
    return out


def exact_divide(a, b) -> LaurentPoly:
    """Quotient c with b*c == a; raises NotDivisibleError otherwise."""
    a, b = LaurentPoly.coerce(a), LaurentPoly.coerce(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    bmax = b.max_exp
    lead = b[bmax]
    rem = dict(a.coeffs)
    quot: dict[int, int] = {}
    lo = a.min_exp - b.min_exp
    while rem:
        top = max(rem)
        e = top - bmax
        if e < lo:
            raise NotDivisibleError(f"{a} is not divisible by {b}")
        v, r = divmod(rem[top], lead)
        if r:
            raise NotDivisibleError(f"{a} is not divisible by {b}")
        quot[e] = v
        for be, bv in b.coeffs.items():
            k = be + e
            rem[k] = rem.get(k, 0) - v * bv
            if rem[k] == 0:
                del rem[k]
    return LaurentPoly(quot)


def symmetric_completion(c) -> LaurentPoly:
    """The bar-invariant γ with c − γ ∈ qZ[q].

    Built from the non-positive part of c: γ = c_0 + Σ_{j≥1} c_{-j}(q^j + q^{-j}).
    """
    c = LaurentPoly.coerce(c)
    g: dict[int, int] = {}
    for e, v in c.coeffs.items():
        if e == 0:
            g[0] = g.get(0, 0) + v
        elif e < 0:
            g[e] = g.get(e, 0) + v
            g[-e] = g.get(-e, 0) + v
    return LaurentPoly(g)
