"""Epimorphisms between two-bridge knot groups from block patterns.

A source expansion has the shape

    [e1 a, 2c1, e2 a^-1, 2c2, ..., e(2r+1) a]

over the even reduced expansion ``a`` of the target, with a^-1 the reversal of
``a``. Recognition parses the source's even reduced expansion into such blocks;
a block boundary with c_i = 0 shows up fused, as a single entry equal to twice
the shared end entry.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .alexander import alexander_poly, divides
from .contfrac import (
    ContFrac,
    KnotId,
    delete_zeros,
    knot_from_cf,
    normalize,
    parse_cf,
    symmetry_orbit,
)
from .errors import InvalidPattern, ParseError
from .spectrum import admissible

__all__ = [
    "OrsPattern",
    "EpiWitness",
    "Expansion",
    "expand_pattern",
    "feasible_repetitions",
    "parse_blocks",
    "find_epimorphism",
    "targets",
    "parse_pattern",
    "same_knot",
    "random_pattern",
]


@dataclass(frozen=True)
class OrsPattern:
    """Witness datum: base expansion, 2r+1 signs and 2r separators c_i."""

    base: ContFrac
    eps: tuple[int, ...]
    cs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", ContFrac(self.base))
        object.__setattr__(self, "eps", tuple(int(e) for e in self.eps))
        object.__setattr__(self, "cs", tuple(int(c) for c in self.cs))

    @property
    def reps(self) -> int:
        return len(self.cs) // 2

    @property
    def zero_count(self) -> int:
        return sum(1 for c in self.cs if c == 0)

    def validate(self) -> None:
        b = self.base
        if not b or len(b) % 2 or not b.is_even_reduced:
            raise InvalidPattern(f"base {b} must be even, reduced, of even length")
        if len(self.cs) < 2 or len(self.cs) % 2:
            raise InvalidPattern(f"need 2r >= 2 separators, got {len(self.cs)}")
        if len(self.eps) != len(self.cs) + 1:
            raise InvalidPattern("need exactly one more sign than separators")
        if any(e not in (1, -1) for e in self.eps):
            raise InvalidPattern(f"signs must be +1 or -1: {self.eps}")
        if self.eps[0] != 1:
            raise InvalidPattern("the first sign is fixed to +1")
        for i, c in enumerate(self.cs):
            if c == 0 and self.eps[i] != self.eps[i + 1]:
                raise InvalidPattern(
                    f"c_{i + 1} = 0 between blocks of opposite sign is excluded"
                )

    def unreduced(self) -> ContFrac:
        fwd, rev = tuple(self.base), tuple(self.base[::-1])
        out: list[int] = []
        for i, e in enumerate(self.eps):
            out.extend(e * a for a in (fwd if i % 2 == 0 else rev))
            if i < len(self.cs):
                out.append(2 * self.cs[i])
        return ContFrac(out)

    def to_text(self) -> str:
        eps = ",".join("+" if e > 0 else "-" for e in self.eps)
        cs = ",".join(str(c) for c in self.cs)
        return f"base={self.base};eps={eps};c={cs}"

    def to_json(self) -> dict:
        return {"base": list(self.base), "eps": list(self.eps), "c": list(self.cs)}


def parse_pattern(text: str) -> OrsPattern:
    """Parse ``base=[2,2];eps=+,+,+;c=0,0``."""
    fields: dict[str, str] = {}
    for part in text.strip().split(";"):
        if not part.strip():
            continue
        key, sep, val = part.partition("=")
        if not sep:
            raise ParseError(f"pattern field without '=': {part!r}")
        fields[key.strip().lower()] = val.strip()
    if set(fields) != {"base", "eps", "c"}:
        raise ParseError(f"pattern needs base, eps and c fields: {text!r}")
    base = parse_cf(fields["base"])
    eps = []
    for tok in fields["eps"].replace("−", "-").split(","):
        tok = tok.strip()
        if tok in ("+", "+1", "1"):
            eps.append(1)
        elif tok in ("-", "-1"):
            eps.append(-1)
        else:
            raise ParseError(f"bad sign {tok!r}")
    try:
        cs = [int(tok) for tok in re.split(r"\s*,\s*", fields["c"].replace("−", "-"))]
    except ValueError:
        raise ParseError(f"bad separator list {fields['c']!r}") from None
    return OrsPattern(base, tuple(eps), tuple(cs))


class Expansion(NamedTuple):
    unreduced: ContFrac
    reduced: ContFrac
    knot: KnotId


def expand_pattern(pattern: OrsPattern, mirror_fixed: bool = True) -> Expansion:
    pattern.validate()
    raw = pattern.unreduced()
    reduced = delete_zeros(raw)
    return Expansion(raw, reduced, knot_from_cf(reduced, mirror_fixed))


def feasible_repetitions(n: int, k: int) -> list[tuple[int, int]]:
    """All (r, zero_count) with (2r+1)k - r <= n <= (2r+1)k + r, r >= 1."""
    out = []
    r = 1
    while (2 * r + 1) * k - r <= n:
        zeros = (2 * r + 1) * k + r - n
        if 0 <= zeros <= 2 * r:
            out.append((r, zeros))
        r += 1
    return out


def same_knot(a: KnotId, b: KnotId) -> bool:
    """Equality up to mirror image (mirror images have isomorphic groups)."""
    return normalize(a.p, a.q) == normalize(b.p, b.q)


@dataclass(frozen=True)
class EpiWitness:
    pattern: OrsPattern | None
    source: KnotId
    target: KnotId
    zero_count: int
    reflexive: bool = field(default=False)

    def to_json(self) -> dict:
        d = {
            "base": None,
            "eps": None,
            "c": None,
            "source": str(self.source),
            "target": str(self.target),
            "zero_count": self.zero_count,
            "reflexive": self.reflexive,
        }
        if self.pattern is not None:
            d.update(self.pattern.to_json())
        return d

    @classmethod
    def from_json(cls, d: dict) -> "EpiWitness":
        from .contfrac import parse_knot

        pattern = None
        if d.get("base") is not None:
            pattern = OrsPattern(ContFrac(d["base"]), tuple(d["eps"]), tuple(d["c"]))
        return cls(
            pattern,
            parse_knot(d["source"]),
            parse_knot(d["target"]),
            int(d["zero_count"]),
            bool(d.get("reflexive", False)),
        )


def parse_blocks(x: Sequence[int], base: Sequence[int]):
    """Split x into blocks e_i*base / e_i*reversed(base) with r >= 1.

    Returns ``(eps, cs)`` for the first parse found, else None. The search runs
    over states (position, block class, sign, fused-in) so each is visited once.
    """
    x = tuple(x)
    n, m = len(x), len(base)
    if m < 2:
        return None
    blocks = (tuple(base), tuple(base[::-1]))
    # block class: index i for i < 2, then 2 + i % 2 so that termination knows r >= 1
    start = (0, 0, 1, False)
    parent: dict = {start: None}
    stack = [start]
    while stack:
        st = stack.pop()
        pos, cls, eps, fused = st
        blk = blocks[cls & 1]
        s = 1 if fused else 0
        end = pos + m - 1 - s
        if end >= n:
            continue
        ok = True
        for j in range(s, m - 1):
            if x[pos + j - s] != eps * blk[j]:
                ok = False
                break
        if not ok:
            continue
        last = eps * blk[m - 1]
        ncls = cls + 1 if cls < 2 else 5 - cls
        if x[end] == last:
            if end == n - 1:
                if cls == 2:
                    return _unwind(parent, st)
                continue
            if end + 2 < n:
                sep = x[end + 1]
                for e in (1, -1):
                    child = (end + 2, ncls, e, False)
                    if child not in parent:
                        parent[child] = (st, sep // 2)
                        stack.append(child)
        elif x[end] == 2 * last and end + 1 < n:
            child = (end + 1, ncls, eps, True)
            if child not in parent:
                parent[child] = (st, 0)
                stack.append(child)
    return None


def _unwind(parent, st):
    eps, cs = [st[2]], []
    link = parent[st]
    while link is not None:
        prev, c = link
        eps.append(prev[2])
        cs.append(c)
        link = parent[prev]
    return tuple(reversed(eps)), tuple(reversed(cs))


def _reflexive(source: KnotId, target: KnotId) -> EpiWitness:
    return EpiWitness(None, source, target, 0, reflexive=True)


def find_epimorphism(
    source: KnotId, target: KnotId, prune: bool = True
) -> EpiWitness | None:
    """Witness for an epimorphism G(source) -> G(target), or None.

    With ``prune`` the genus gate and Alexander divisibility run before the
    parse; both are necessary conditions only.
    """
    if same_knot(source, target):
        return _reflexive(source, target)
    x = source.even_cf
    a = target.even_cf
    if prune:
        if not admissible(len(a) // 2, len(x) // 2):
            return None
        if not divides(alexander_poly(target), alexander_poly(source)):
            return None
    for b in symmetry_orbit(a):
        res = parse_blocks(x, b)
        if res is not None:
            eps, cs = res
            pat = OrsPattern(b, eps, cs)
            return EpiWitness(pat, source, target, pat.zero_count)
    return None


def targets(source: KnotId) -> list[EpiWitness]:
    """Every two-bridge target (up to mirror) receiving an epimorphism.

    The first block of any parse is ``+base``, possibly fused at its last
    entry, so candidate bases are read off the prefixes of each symmetry
    variant of the source expansion.
    """
    found: dict[KnotId, EpiWitness] = {}
    for x in symmetry_orbit(source.even_cf):
        n2 = len(x)
        k = 1
        # at least three blocks of 2k entries with at most two fusions
        while 6 * k - 4 <= n2:
            cands = [x[: 2 * k]]
            if x[2 * k - 1] % 4 == 0:
                cands.append(x[: 2 * k - 1] + (x[2 * k - 1] // 2,))
            for b in cands:
                res = parse_blocks(x, b)
                if res is None:
                    continue
                tgt = knot_from_cf(b)
                if tgt in found:
                    continue
                eps, cs = res
                pat = OrsPattern(ContFrac(b), eps, cs)
                found[tgt] = EpiWitness(pat, source, tgt, pat.zero_count)
            k += 1
    return sorted(found.values(), key=lambda w: (len(w.target.even_cf), w.target.p, w.target.q))


def random_pattern(rng: random.Random, max_k=3, max_r=3, max_entry=6, max_c=2) -> OrsPattern:
    """A valid pattern with even nonzero base entries and small separators."""
    k = rng.randint(1, max_k)
    r = rng.randint(1, max_r)
    evens = [a for a in range(-max_entry, max_entry + 1) if a and a % 2 == 0]
    base = [rng.choice(evens) for _ in range(2 * k)]
    eps = [1]
    cs = []
    for _ in range(2 * r):
        c = rng.randint(-max_c, max_c)
        cs.append(c)
        eps.append(eps[-1] if c == 0 else rng.choice((1, -1)))
    return OrsPattern(tuple(base), tuple(eps), tuple(cs))
