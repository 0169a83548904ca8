import pytest
from hypothesis import given, settings, strategies as st

from twobridge.catalog import enumerate_knots
from twobridge.contfrac import genus, normalize, symmetry_orbit
from twobridge.errors import NotAdmissible
from twobridge.ors import expand_pattern, feasible_repetitions, find_epimorphism
from twobridge.spectrum import admissible, construct_source, s_k

from witness_checks import witness_violations

FIG8 = normalize(5, 2)


def brute_gaps(k):
    """Gap set by direct membership, no interval arithmetic."""
    out = set()
    for r in range(1, k - 1):
        out |= set(range((2 * r + 1) * k + r + 1, (2 * r + 3) * k - r - 1))
    return out


@pytest.mark.parametrize(
    "k, members",
    [
        (1, set()),
        (2, set()),
        (3, {11, 12}),
        (4, {14, 15, 16, 17, 23, 24}),
    ],
)
def test_s_k_examples(k, members):
    sp = s_k(k)
    assert set(sp.members()) == members
    assert sp.min_genus == 3 * k - 1
    assert all(n in sp for n in members)


def test_s_k_json():
    assert s_k(3).to_json() == {"k": 3, "min_genus": 8, "gaps": [[11, 12]]}
    assert s_k(2).to_json()["gaps"] == []


@pytest.mark.parametrize(
    "k, n, ok",
    [(1, 2, True), (2, 4, False), (3, 11, False), (3, 13, True), (3, 8, True), (4, 22, True)],
)
def test_admissible_examples(k, n, ok):
    assert admissible(k, n) is ok


def test_cardinalities():
    for k in range(2, 101):
        sp = s_k(k)
        assert set(sp.members()) == brute_gaps(k)
        assert len(sp) == (k - 1) * (k - 2)
        assert sp.excluded_count() == len(sp) + 3 * k - 2 == k * k


def test_admissible_iff_feasible():
    for k in range(1, 101):
        for n in range(1, 501):
            assert admissible(k, n) == bool(feasible_repetitions(n, k)), (k, n)


@settings(deadline=None)
@given(st.integers(1, 2000), st.integers(1, 20000))
def test_admissible_large_values(k, n):
    assert admissible(k, n) == bool(feasible_repetitions(n, k))


def test_construct_examples():
    src, w = construct_source(FIG8, 2)
    assert src == normalize(85, 38)
    assert w.pattern.cs == (0, 0)

    src, w = construct_source(FIG8, 3)
    assert expand_pattern(w.pattern).reduced == (2, 4, 2, 2, 2, 2)
    assert src.even_cf in symmetry_orbit([2, 4, 2, 2, 2, 2])

    src, w = construct_source(FIG8, 4)
    assert src.even_cf == (2,) * 8
    assert w.pattern.reps == 1 and w.pattern.cs == (1, 1) and set(w.pattern.eps) == {1}


def test_construct_rejects():
    with pytest.raises(NotAdmissible):
        construct_source(normalize(85, 38), 4)
    with pytest.raises(NotAdmissible):
        construct_source(normalize(85, 38), 1)


@pytest.mark.slow
def test_constructive_soundness():
    for target in enumerate_knots(99):
        k = genus(target)
        if k > 4:
            continue
        for n in range(3 * k - 1, 26):
            if not admissible(k, n):
                continue
            src, w = construct_source(target, n)
            assert genus(src) == n
            assert find_epimorphism(src, target) is not None
            assert witness_violations(w) == []


def test_negative_direction_sampled():
    tg = {k: [t for t in enumerate_knots(99) if genus(t) == k] for k in (3, 4)}
    checked = 0
    for s in enumerate_knots(299):
        g = genus(s)
        for k in (3, 4):
            if g in s_k(k):
                for t in tg[k]:
                    assert find_epimorphism(s, t, prune=False) is None
                    checked += 1
    assert checked > 0
