"""Which source genera admit an epimorphism onto a genus-k two-bridge knot.

For a target of genus k, a source genus n is realised exactly when
n >= 3k - 1 and n avoids the gap set S_k, the union over r = 1..k-2 of the
integer ranges [(2r+1)k + r + 1, (2r+3)k - r - 2].
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAdmissible

__all__ = ["GenusSpectrum", "s_k", "admissible", "construct_source"]


@dataclass(frozen=True)
class GenusSpectrum:
    k: int
    forbidden_low: tuple[int, int]
    gaps: tuple[tuple[int, int], ...]

    @property
    def min_genus(self) -> int:
        return 3 * self.k - 1

    def members(self) -> list[int]:
        """Elements of S_k in ascending order."""
        return [n for lo, hi in self.gaps for n in range(lo, hi + 1)]

    def __contains__(self, n: int) -> bool:
        return any(lo <= n <= hi for lo, hi in self.gaps)

    def __len__(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.gaps)

    def excluded_count(self) -> int:
        """Size of [1, 3k-2] together with S_k."""
        lo, hi = self.forbidden_low
        return max(0, hi - lo + 1) + len(self)

    def to_json(self) -> dict:
        return {"k": self.k, "min_genus": self.min_genus, "gaps": [list(g) for g in self.gaps]}


def s_k(k: int) -> GenusSpectrum:
    if k < 1:
        raise ValueError(f"target genus must be positive, got {k}")
    gaps = []
    for r in range(1, k - 1):
        lo = (2 * r + 1) * k + r + 1
        hi = (2 * r + 3) * k - r - 2
        if lo <= hi:
            gaps.append((lo, hi))
    return GenusSpectrum(k, (1, 3 * k - 2), tuple(gaps))


def admissible(k: int, n: int) -> bool:
    if n < 3 * k - 1:
        return False
    # gaps only exist below the point where consecutive ranges overlap
    if n > (2 * (k - 2) + 3) * k:
        return True
    return n not in s_k(k)


def construct_source(target, n: int):
    """Genus-n knot over ``target`` together with its witness.

    Uses the smallest feasible r, places the forced zero separators at the
    lowest indices and sets every other separator and every sign to +1.
    """
    from .contfrac import genus
    from .ors import EpiWitness, OrsPattern, expand_pattern, feasible_repetitions, find_epimorphism

    k = genus(target)
    if not admissible(k, n):
        raise NotAdmissible(f"genus {n} is not admissible over a genus-{k} target")
    r, zeros = feasible_repetitions(n, k)[0]
    cs = tuple(0 if i < zeros else 1 for i in range(2 * r))
    pattern = OrsPattern(target.even_cf, (1,) * (2 * r + 1), cs)
    source = expand_pattern(pattern).knot
    if genus(source) != n or find_epimorphism(source, target) is None:
        raise AssertionError(f"construction over K({target}) failed for genus {n}")
    return source, EpiWitness(pattern, source, target, zeros)
