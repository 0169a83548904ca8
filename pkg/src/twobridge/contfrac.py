"""Continued fractions and two-bridge knot fractions.

Continued fractions use the convention

    [a1, a2, ..., am] = 1 / (a1 + 1 / (a2 + ... + 1 / am))

so the value of a reduced even expansion always lies strictly inside (-1, 1).
A two-bridge knot K(p/q) has p odd and corresponds to the value q/p.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable

from .errors import DivisionUndefined, NotAKnot, ParseError, UnreducibleZero

__all__ = [
    "ContFrac",
    "KnotId",
    "eval_cf",
    "delete_zeros",
    "delete_zeros_counted",
    "even_expansion",
    "positive_expansion",
    "normalize",
    "knot_from_cf",
    "genus",
    "crossing_number",
    "symmetry_orbit",
    "parse_cf",
    "parse_knot",
]


class ContFrac(tuple):
    """An immutable sequence of integer partial quotients."""

    def __new__(cls, entries: Iterable[int] = ()):
        return super().__new__(cls, (int(a) for a in entries))

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def is_even(self) -> bool:
        return all(a % 2 == 0 for a in self)

    @property
    def is_reduced(self) -> bool:
        return all(a != 0 for a in self)

    @property
    def is_even_reduced(self) -> bool:
        return all(a != 0 and a % 2 == 0 for a in self)

    def reversed(self) -> "ContFrac":
        return ContFrac(self[::-1])

    def negated(self) -> "ContFrac":
        return ContFrac(-a for a in self)

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self) + "]"

    def __repr__(self) -> str:
        return f"ContFrac({list(self)})"


_CF_RE = re.compile(r"^\[\s*([+-]?\d+(\s*,\s*[+-]?\d+)*)?\s*\]$")


def parse_cf(text: str) -> ContFrac:
    """Parse ``"[a1,a2,...]"``; entries may carry a sign."""
    s = text.strip().replace("−", "-")
    if not _CF_RE.match(s):
        raise ParseError(f"not a continued fraction literal: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ContFrac()
    return ContFrac(int(tok) for tok in body.split(","))


def eval_cf(cf: Iterable[int]) -> Fraction:
    """Exact value of a continued fraction.

    Evaluation runs from the tail; the empty tail contributes 0 (the reciprocal
    of the formal infinity). Raises DivisionUndefined at the first index whose
    partial denominator ``a_i + [a_{i+1}, ...]`` vanishes.
    """
    entries = tuple(cf)
    num, den = 0, 1
    for i in range(len(entries) - 1, -1, -1):
        num, den = den, entries[i] * den + num
        if den == 0:
            raise DivisionUndefined(i, entries)
        if den < 0:
            num, den = -num, -den
    if not entries:
        raise DivisionUndefined(0, entries)
    return Fraction(num, den)


def delete_zeros_counted(cf: Iterable[int]) -> tuple[ContFrac, int]:
    """Remove interior zeros via ``[..., x, 0, y, ...] = [..., x + y, ...]``.

    Returns the reduced expansion and the number of deletions performed.
    """
    out: list[int] = []
    deletions = 0
    pending_zero = False
    entries = list(cf)
    if not entries:
        raise UnreducibleZero("empty continued fraction")
    for a in entries:
        if pending_zero:
            if not out:
                raise UnreducibleZero(f"leading zero in {entries}")
            merged = out.pop() + a
            deletions += 1
            pending_zero = False
            if merged == 0:
                # the merge produced a new zero; it is deleted in turn
                pending_zero = True
            else:
                out.append(merged)
            continue
        if a == 0:
            pending_zero = True
        else:
            out.append(a)
    if pending_zero:
        raise UnreducibleZero(f"trailing zero survives reduction of {entries}")
    return ContFrac(out), deletions


def delete_zeros(cf: Iterable[int]) -> ContFrac:
    return delete_zeros_counted(cf)[0]


def _knot_pair(f: Fraction) -> tuple[int, int]:
    q, p = f.numerator, f.denominator
    if p % 2 == 0:
        raise NotAKnot(f"{q}/{p}: even denominator is a two-bridge link")
    if not 0 < abs(q) < p:
        raise NotAKnot(f"{q}/{p}: need 0 < |q| < p")
    return q, p


@lru_cache(maxsize=1 << 16)
def _even_entries(q: int, p: int) -> tuple[int, ...]:
    # q even, p odd, 0 < |q| < p; expand 1/(q/p) = p/q by nearest-even division
    num, den = p, q
    if den < 0:
        num, den = -num, -den
    out = []
    while True:
        a = 2 * ((num + den) // (2 * den))
        out.append(a)
        rem = num - a * den
        if rem == 0:
            return tuple(out)
        num, den = den, rem
        if den < 0:
            num, den = -num, -den


def even_expansion(f: Fraction) -> ContFrac:
    """Even reduced continued fraction of the knot fraction ``f = q/p``.

    An odd numerator is first shifted by p toward zero, which swaps to the
    mirror image representative; the result then evaluates to the shifted value.
    """
    q, p = _knot_pair(Fraction(f))
    if q % 2:
        q = q - p if q > 0 else q + p
    return ContFrac(_even_entries(q, p))


def positive_expansion(f: Fraction) -> ContFrac:
    """Regular continued fraction of ``q/p`` with ``0 < q < p``."""
    q, p = _knot_pair(Fraction(f))
    if q < 0:
        raise NotAKnot(f"{q}/{p}: positive expansion needs 0 < q < p")
    num, den = p, q
    out = []
    while den:
        a, rem = divmod(num, den)
        out.append(a)
        num, den = den, rem
    return ContFrac(out)


@dataclass(frozen=True, order=True)
class KnotId:
    """Canonical two-bridge knot K(p/q).

    ``q`` is the least positive residue in its equivalence class: ``{q, 1/q}``
    modulo p, together with their negatives when ``mirror_fixed`` is set
    (mirror images identified).
    """

    p: int
    q: int
    mirror_fixed: bool = True

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.q, self.p)

    @property
    def even_cf(self) -> ContFrac:
        return even_expansion(self.fraction)

    @property
    def genus(self) -> int:
        return genus(self)

    @property
    def crossing_number(self) -> int:
        return crossing_number(self)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def _orbit_min(p: int, q: int, mirror_fixed: bool) -> int:
    q %= p
    qi = pow(q, -1, p)
    best = min(q, qi)
    if mirror_fixed:
        best = min(best, p - q, p - qi)
    return best


def normalize(p: int, q: int, mirror_fixed: bool = True) -> KnotId:
    """Canonical KnotId for the knot K(p/q)."""
    p, q = int(p), int(q)
    if p < 0:
        p, q = -p, -q
    if p % 2 == 0:
        raise NotAKnot(f"K({p}/{q}): p even gives a two-bridge link")
    if p < 3:
        raise NotAKnot(f"K({p}/{q}): trivial knot has no two-bridge fraction")
    if gcd(p, q) != 1:
        raise NotAKnot(f"K({p}/{q}): p and q must be coprime")
    return KnotId(p, _orbit_min(p, q, mirror_fixed), mirror_fixed)


def knot_from_cf(cf: Iterable[int], mirror_fixed: bool = True) -> KnotId:
    f = eval_cf(cf)
    return normalize(f.denominator, f.numerator, mirror_fixed)


def genus(knot: KnotId) -> int:
    return len(_even_entries(*_even_rep(knot.p, knot.q))) // 2


def _even_rep(p: int, q: int) -> tuple[int, int]:
    return (q if q % 2 == 0 else q - p), p


def crossing_number(knot: KnotId) -> int:
    return sum(positive_expansion(knot.fraction))


def symmetry_orbit(cf: Iterable[int]) -> list[ContFrac]:
    """Distinct members of ``{x, reverse(x), -x, -reverse(x)}``, x first."""
    x = ContFrac(cf)
    out = []
    for y in (x, x.reversed(), x.negated(), x.reversed().negated()):
        if y not in out:
            out.append(y)
    return out


_KNOT_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


def parse_knot(text: str, mirror_fixed: bool = True) -> KnotId:
    """Parse ``"p/q"`` into a KnotId.

    Malformed or non-reduced input raises ParseError; a reduced fraction that
    is not a knot raises NotAKnot.
    """
    m = _KNOT_RE.match(text.replace("−", "-"))
    if not m:
        raise ParseError(f"expected p/q, got {text!r}")
    p, q = int(m.group(1)), int(m.group(2))
    if p == 0 or q == 0 or gcd(p, q) != 1:
        raise ParseError(f"{text!r} is not a reduced fraction")
    return normalize(p, q, mirror_fixed)
