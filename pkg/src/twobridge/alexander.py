"""Integer Laurent polynomials and Alexander polynomials of two-bridge knots."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .contfrac import ContFrac, KnotId
from .errors import NotAKnot, ZeroPolynomial

__all__ = [
    "LaurentPoly",
    "seifert_matrix",
    "alexander_poly",
    "divides",
    "degree",
]


class LaurentPoly:
    """Integer Laurent polynomial in t, stored as {exponent: coefficient}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def from_list(cls, coeffs: Iterable[int], shift: int = 0) -> "LaurentPoly":
        """Polynomial with ``coeffs[i]`` at exponent ``shift + i``."""
        return cls({shift + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return min(self.coeffs)

    @property
    def high(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return max(self.coeffs)

    def to_list(self) -> list[int]:
        """Dense coefficients from the lowest to the highest exponent."""
        if not self.coeffs:
            return []
        lo = self.low
        return [self.coeffs.get(e, 0) for e in range(lo, self.high + 1)]

    def normalized(self) -> "LaurentPoly":
        """Divide by the unit ±t^k: lowest exponent 0, leading coefficient > 0."""
        if not self.coeffs:
            return LaurentPoly()
        lo = self.low
        sign = 1 if self.coeffs[self.high] > 0 else -1
        return LaurentPoly({e - lo: sign * c for e, c in self.coeffs.items()})

    def __call__(self, t):
        return sum(c * t**e for e, c in self.coeffs.items())

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def divmod_exact(self, d: "LaurentPoly") -> "LaurentPoly | None":
        """Quotient q with self = d*q over Z[t, 1/t], or None if there is none."""
        if d.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        f = self.to_list()
        g = d.to_list()
        if len(g) > len(f):
            return None
        lead = g[-1]
        quot = [0] * (len(f) - len(g) + 1)
        rem = list(f)
        for i in range(len(quot) - 1, -1, -1):
            c, r = divmod(rem[i + len(g) - 1], lead)
            if r:
                return None
            quot[i] = c
            if c:
                for j, gj in enumerate(g):
                    rem[i + j] -= c * gj
        if any(rem):
            return None
        return LaurentPoly.from_list(quot, self.low - d.low)

    def to_json(self) -> list[list[int]]:
        return [[e, self.coeffs[e]] for e in sorted(self.coeffs)]

    @classmethod
    def from_json(cls, pairs) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in pairs})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def seifert_matrix(cf: Iterable[int]) -> list[list[int]]:
    """Seifert matrix of the plumbed surface for an even CF [2b1, ..., 2bm].

    Band i contributes ``±b_i`` on the diagonal with alternating sign; adjacent
    bands are plumbed with a single +1 above the diagonal.
    """
    b = [a // 2 for a in cf]
    m = len(b)
    V = [[0] * m for _ in range(m)]
    for i in range(m):
        V[i][i] = b[i] if i % 2 == 0 else -b[i]
        if i + 1 < m:
            V[i][i + 1] = 1
    return V


def _tridiagonal_alexander(V: list[list[int]]) -> list[int]:
    # det(V - t V^T) by the three-term recurrence; polys are dense lists
    m = len(V)
    prev2: list[int] = []
    prev = [1]
    for j in range(m):
        d = V[j][j]
        # d * (1 - t) * prev
        cur = [d * x for x in prev] + [0]
        cur[1:] = [x - d * y for x, y in zip(cur[1:], prev)]
        if j > 0:
            up = V[j - 1][j]
            lo = V[j][j - 1]
            # entries of V - tV^T: (j-1, j) = up - t*lo, (j, j-1) = lo - t*up
            prod = (up * lo, -(up * up + lo * lo), up * lo)
            for k, pk in enumerate(prod):
                if pk:
                    seg = cur[k : k + len(prev2)]
                    cur[k : k + len(prev2)] = [x - pk * y for x, y in zip(seg, prev2)]
        prev2, prev = prev, cur
    return prev


@lru_cache(maxsize=1 << 14)
def _alexander_cached(cf: tuple[int, ...]) -> LaurentPoly:
    return LaurentPoly.from_list(_tridiagonal_alexander(seifert_matrix(cf))).normalized()


def alexander_poly(knot: KnotId) -> LaurentPoly:
    """Normalized Alexander polynomial, checked against the knot identities."""
    if knot.p % 2 == 0:
        raise NotAKnot(f"K({knot.p}/{knot.q}) is a link")
    cf = knot.even_cf
    poly = _alexander_cached(tuple(cf))
    coeffs = poly.to_list()
    if abs(poly(1)) != 1 or coeffs != coeffs[::-1] or poly.high != len(cf):
        raise AssertionError(f"Alexander polynomial self-check failed for K({knot})")
    return poly


def divides(d: LaurentPoly, f: LaurentPoly) -> bool:
    """True when f = d*q for an integer Laurent polynomial q."""
    return f.normalized().divmod_exact(d.normalized()) is not None


def degree(p: LaurentPoly) -> int:
    if p.is_zero():
        raise ZeroPolynomial("degree of the zero polynomial")
    return p.high - p.low
