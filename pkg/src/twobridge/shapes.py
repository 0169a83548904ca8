"""Symbolic continued-fraction shapes such as ``[2a, 4b, 2a, 2c2, 2e3 a, 2e3 b]``.

An entry is either a base term ``coef * sign * var`` (``var`` one of the target
parameters a, b, c, d; ``sign`` a free +-1 symbol or None for +1) or a free
separator ``2 c_i``. Shapes compare up to renaming of symbols, mirror image and
reversal via :func:`orbit_key`.
"""
from __future__ import annotations

import re
from itertools import combinations
from typing import NamedTuple, Sequence

__all__ = [
    "Term",
    "Shape",
    "parse_shape",
    "format_shape",
    "canonical",
    "orbit_key",
    "symbolic_shapes",
    "solve_shape",
]

BASE_VARS = "abcd"


class Term(NamedTuple):
    kind: str  # "B" base term, "S" separator
    coef: int
    var: str
    sign: str | None = None


Shape = tuple[Term, ...]

_BASE_RE = re.compile(r"^(\d+)\s*(?:e_?(\d+)\s*\*?\s*)?([abcd])$")
_SEP_RE = re.compile(r"^2\s*c_?(\d+)$")


def parse_shape(text: str) -> Shape:
    """Parse ``"[2a, 4b, 2c2, 2e3 a]"``; ``e<i>`` is the sign symbol epsilon_i."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    out = []
    for tok in body.split(","):
        tok = tok.strip()
        m = _SEP_RE.match(tok)
        if m:
            out.append(Term("S", 2, f"c{m.group(1)}"))
            continue
        m = _BASE_RE.match(tok)
        if not m:
            raise ValueError(f"bad shape token {tok!r}")
        sign = f"e{m.group(2)}" if m.group(2) else None
        out.append(Term("B", int(m.group(1)), m.group(3), sign))
    return tuple(out)


def format_shape(shape: Sequence[Term]) -> str:
    parts = []
    for t in shape:
        if t.kind == "S":
            parts.append(f"2{t.var}")
        elif t.sign:
            parts.append(f"{t.coef}{t.sign} {t.var}")
        else:
            parts.append(f"{t.coef}{t.var}")
    return "[" + ", ".join(parts) + "]"


def canonical(shape: Sequence[Term]) -> tuple:
    """Relabel symbols by first appearance.

    The sign class met first becomes the fixed +1 class; that is exactly the
    identification of a family with its mirror image.
    """
    var_map: dict[str, str] = {}
    sep_map: dict[str, int] = {}
    sign_map: dict = {}
    out = []
    for t in shape:
        if t.kind == "S":
            sep_map.setdefault(t.var, len(sep_map))
            out.append(("S", sep_map[t.var]))
        else:
            if t.var not in var_map:
                var_map[t.var] = BASE_VARS[len(var_map)]
            sign_map.setdefault(t.sign, len(sign_map))
            out.append(("B", t.coef, var_map[t.var], sign_map[t.sign]))
    return tuple(out)


def orbit_key(shape: Sequence[Term]) -> tuple:
    """Canonical form shared by a shape and its reversal."""
    return min(canonical(shape), canonical(tuple(shape)[::-1]))


def symbolic_shapes(n: int, k: int) -> list[Shape]:
    """Reduced shapes of all patterns with a genus-k base and genus-n result.

    Every feasible r and every placement of the forced zero separators is
    expanded with free parameters; fused boundaries share their sign.
    """
    from .ors import feasible_repetitions

    base = BASE_VARS[: 2 * k]
    out = []
    for r, zeros in feasible_repetitions(n, k):
        for zero_set in combinations(range(2 * r), zeros):
            out.append(_expand_symbolic(base, r, set(zero_set)))
    return out


def _expand_symbolic(base: str, r: int, zero_set: set[int]) -> Shape:
    entries: list[Term] = []
    sign: str | None = None
    fused_in = False
    for i in range(2 * r + 1):
        block = base if i % 2 == 0 else base[::-1]
        for j, var in enumerate(block):
            if j == 0 and fused_in:
                prev = entries.pop()
                entries.append(Term("B", prev.coef + 2, var, sign))
            else:
                entries.append(Term("B", 2, var, sign))
        if i == 2 * r:
            break
        if i in zero_set:
            fused_in = True
        else:
            fused_in = False
            entries.append(Term("S", 2, f"c{i + 1}"))
            sign = f"e{i + 2}"
    return tuple(entries)


def solve_shape(shape: Sequence[Term], cf: Sequence[int]) -> dict | None:
    """Integer parameters instantiating ``shape`` to ``cf``, or None.

    Base parameters and separators must be nonzero; sign symbols are +-1.
    """
    if len(shape) != len(cf):
        return None
    return _solve(tuple(shape), tuple(cf), 0, {})


def _solve(shape, cf, i, env):
    if i == len(shape):
        return dict(env)
    t, v = shape[i], cf[i]
    if v % t.coef:
        return None
    u = v // t.coef
    if u == 0:
        return None
    if t.kind == "S":
        if t.var in env:
            return _solve(shape, cf, i + 1, env) if env[t.var] == u else None
        env[t.var] = u
        res = _solve(shape, cf, i + 1, env)
        del env[t.var]
        return res
    signs = [env[t.sign]] if t.sign in env else ([1] if t.sign is None else [1, -1])
    for s in signs:
        val = u * s
        added = []
        if t.var in env:
            if env[t.var] != val:
                continue
        else:
            env[t.var] = val
            added.append(t.var)
        if t.sign is not None and t.sign not in env:
            env[t.sign] = s
            added.append(t.sign)
        res = _solve(shape, cf, i + 1, env)
        for key in added:
            del env[key]
        if res is not None:
            return res
    return None
