"""Enumeration of two-bridge knots and minimality classification."""
from __future__ import annotations

import csv
import io
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, Sequence

from .alexander import LaurentPoly, alexander_poly
from .contfrac import ContFrac, KnotId, _orbit_min, genus, symmetry_orbit
from .errors import NotEvenReduced
from .ors import EpiWitness, targets
from .shapes import Shape, format_shape, parse_shape, solve_shape

__all__ = [
    "FAMILIES",
    "CASE_FAMILIES",
    "PatternFamily",
    "KnotReport",
    "ScanSummary",
    "enumerate_knots",
    "match_genus5_family",
    "is_minimal",
    "scan_minimality",
]

# Non-minimal shapes for genus <= 5, in the published order; e<i> is a sign.
_FAMILY_TEXT = (
    "[2a, 4b, 4a, 2b]",
    "[2a, 4b, 2a, 2c2, 2e3 a, 2e3 b]",
    "[2a, 4b, 4a, 4b, 4a, 2b]",
    "[2a, 2b, 2c1, 2e2 b, 2e2 a, 2c2, 2e3 a, 2e3 b]",
    "[2a, 4b, 4a, 4b, 2a, 2c4, 2e5 a, 2e5 b]",
    "[2a, 4b, 4a, 2b, 2c3, 2e4 b, 4e4 a, 2e4 b]",
    "[2a, 4b, 4a, 4b, 4a, 4b, 4a, 2b]",
    "[2a, 4b, 4a, 2b, 2c3, 2e4 b, 2e4 a, 2c4, 2e5 a, 2e5 b]",
    "[2a, 4b, 2a, 2c2, 2e3 a, 4e3 b, 2e3 a, 2c4, 2e5 a, 2e5 b]",
    "[2a, 2b, 2c1, 2e2 b, 4e2 a, 4e2 b, 2e2 a, 2c4, 2e5 a, 2e5 b]",
    "[2a, 4b, 2a, 2c2, 2e3 a, 2e3 b, 2c3, 2e4 b, 4e4 a, 2e4 b]",
    "[2a, 4b, 4a, 4b, 4a, 4b, 2a, 2c6, 2e7 a, 2e7 b]",
    "[2a, 4b, 4a, 4b, 4a, 2b, 2c5, 2e6 b, 4e6 a, 2e6 b]",
    "[2a, 4b, 4a, 4b, 2a, 2c4, 2e5 a, 4e5 b, 4e5 a, 2e5 b]",
    "[2a, 4b, 4a, 4b, 4a, 4b, 4a, 4b, 4a, 2b]",
    "[2a, 2b, 2c, 4d, 2c, 2b, 4a, 2b, 2c, 2d]",
)

FAMILIES: tuple[Shape, ...] = tuple(parse_shape(t) for t in _FAMILY_TEXT)

# (source genus n, target genus k) -> 1-based family indices listed for that case
CASE_FAMILIES: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1,),
    (3, 1): (2, 3),
    (4, 1): (4, 5, 6, 7),
    (5, 1): tuple(range(8, 16)),
    (5, 2): (16,),
}

_SYMMETRY_NAMES = ("identity", "reverse", "mirror", "mirror-reverse")


@dataclass(frozen=True)
class PatternFamily:
    index: int
    params: tuple[tuple[str, int], ...]
    symmetry: str = "identity"

    @property
    def shape(self) -> Shape:
        return FAMILIES[self.index - 1]

    @property
    def family_id(self) -> str:
        return "[" + ",".join(format_shape(self.shape)[1:-1].split(", ")) + "]"

    def instantiate(self) -> ContFrac:
        env = dict(self.params)
        out = []
        for t in self.shape:
            if t.kind == "S":
                out.append(2 * env[t.var])
            else:
                s = 1 if t.sign is None else env[t.sign]
                out.append(t.coef * s * env[t.var])
        return ContFrac(out)

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "family": self.family_id,
            "params": dict(self.params),
            "symmetry": self.symmetry,
        }


def _variants(cf: ContFrac):
    x = ContFrac(cf)
    return zip(
        _SYMMETRY_NAMES, (x, x.reversed(), x.negated(), x.reversed().negated())
    )


def match_genus5_family(cf: Sequence[int]) -> PatternFamily | None:
    """First listed family matching some symmetry variant of ``cf``."""
    cf = ContFrac(cf)
    if not cf.is_even_reduced:
        raise NotEvenReduced(f"{cf} is not an even reduced continued fraction")
    if len(cf) > 10:
        return None
    for idx, shape in enumerate(FAMILIES, start=1):
        if len(shape) != len(cf):
            continue
        for name, y in _variants(cf):
            params = solve_shape(shape, y)
            if params is not None:
                return PatternFamily(idx, tuple(sorted(params.items())), name)
    return None


def enumerate_knots(max_p: int, mirror_fixed: bool = True, min_p: int = 3) -> Iterator[KnotId]:
    """Every two-bridge knot with odd p in [min_p, max_p], once per class."""
    start = max(3, min_p)
    if start % 2 == 0:
        start += 1
    for p in range(start, max_p + 1, 2):
        for q in range(1, p):
            if gcd(p, q) == 1 and _orbit_min(p, q, mirror_fixed) == q:
                yield KnotId(p, q, mirror_fixed)


@dataclass
class KnotReport:
    knot: KnotId
    even_cf: ContFrac
    genus: int
    crossing: int
    alexander: LaurentPoly | None
    minimal: bool
    witnesses: list[EpiWitness]
    family: PatternFamily | None = None
    agrees: bool | None = None

    def to_json(self) -> dict:
        return {
            "knot": str(self.knot),
            "even_cf": list(self.even_cf),
            "genus": self.genus,
            "crossing": self.crossing,
            "alexander": None if self.alexander is None else str(self.alexander),
            "minimal": self.minimal,
            "witnesses": [w.to_json() for w in self.witnesses],
            "family": None if self.family is None else self.family.to_json(),
            "agrees": self.agrees,
        }


class CrossCheckFailure(AssertionError):
    pass


def is_minimal(knot: KnotId, check: bool = True, with_alexander: bool = True) -> KnotReport:
    """Search-based minimality verdict; for genus <= 5 also the family verdict.

    With ``check`` a disagreement between the two verdicts raises.
    """
    cf = knot.even_cf
    g = len(cf) // 2
    wits = [w for w in targets(knot) if not w.reflexive]
    minimal = not wits
    family = None
    agrees = None
    if g <= 5:
        family = match_genus5_family(cf)
        agrees = (family is None) == minimal
        if check and not agrees:
            raise CrossCheckFailure(
                f"K({knot}): search says minimal={minimal}, family match={family}"
            )
    return KnotReport(
        knot=knot,
        even_cf=cf,
        genus=g,
        crossing=knot.crossing_number,
        alexander=alexander_poly(knot) if with_alexander else None,
        minimal=minimal,
        witnesses=wits,
        family=family,
        agrees=agrees,
    )


@dataclass
class ScanSummary:
    total: Counter = field(default_factory=Counter)
    non_minimal: Counter = field(default_factory=Counter)
    disagreements: list[KnotId] = field(default_factory=list)

    def add(self, report: KnotReport) -> None:
        self.total[report.genus] += 1
        if not report.minimal:
            self.non_minimal[report.genus] += 1
        if report.agrees is False:
            self.disagreements.append(report.knot)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def rows(self) -> list[dict]:
        return [
            {
                "genus": g,
                "knots": self.total[g],
                "minimal": self.total[g] - self.non_minimal[g],
                "non_minimal": self.non_minimal[g],
            }
            for g in sorted(self.total)
        ]

    def to_json(self) -> dict:
        return {
            "knots": sum(self.total.values()),
            "non_minimal": sum(self.non_minimal.values()),
            "disagreements": [str(k) for k in self.disagreements],
            "by_genus": self.rows(),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(
            buf, fieldnames=["genus", "knots", "minimal", "non_minimal"], lineterminator="\n"
        )
        w.writeheader()
        w.writerows(self.rows())
        return buf.getvalue()


def _scan_chunk(args) -> list[KnotReport]:
    lo, hi, max_genus, mirror_fixed, with_alexander = args
    out = []
    for knot in enumerate_knots(hi, mirror_fixed, min_p=lo):
        if max_genus is not None and genus(knot) > max_genus:
            continue
        out.append(is_minimal(knot, check=False, with_alexander=with_alexander))
    return out


def scan_minimality(
    max_p: int,
    max_genus: int | None = None,
    workers: int = 1,
    mirror_fixed: bool = True,
    with_alexander: bool = True,
    summary: ScanSummary | None = None,
) -> Iterator[KnotReport]:
    """Reports for every enumerated knot in (p, q) order.

    Pass a ScanSummary to collect per-genus counts and cross-check failures.
    Work is split by ranges of p; with ``workers > 1`` the ranges run in
    separate processes and are merged back in order.
    """
    step = 64
    chunks = [
        (lo, min(lo + step - 1, max_p), max_genus, mirror_fixed, with_alexander)
        for lo in range(3, max_p + 1, step)
    ]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results: Iterable[list[KnotReport]] = pool.map(_scan_chunk, chunks)
            yield from _drain(results, summary)
    else:
        yield from _drain(map(_scan_chunk, chunks), summary)


def _drain(results, summary):
    for chunk in results:
        for rep in chunk:
            if summary is not None:
                summary.add(rep)
            yield rep
