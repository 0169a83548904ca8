import csv
import io
from collections import Counter

import pytest

from twobridge.catalog import (
    CASE_FAMILIES,
    FAMILIES,
    CrossCheckFailure,
    PatternFamily,
    ScanSummary,
    enumerate_knots,
    is_minimal,
    match_genus5_family,
    scan_minimality,
)
from twobridge.contfrac import KnotId, genus, knot_from_cf, normalize
from twobridge.errors import NotEvenReduced
from twobridge.shapes import (
    canonical,
    format_shape,
    orbit_key,
    parse_shape,
    solve_shape,
    symbolic_shapes,
)

from oracles import fox_alexander, knot_orbits
from witness_checks import witness_violations


def test_enumerate_small():
    assert [str(k) for k in enumerate_knots(5)] == ["3/1", "5/1", "5/2"]
    assert [str(k) for k in enumerate_knots(7, mirror_fixed=False)] == [
        "3/1", "3/2", "5/1", "5/2", "5/4", "7/1", "7/2", "7/3", "7/6",
    ]


@pytest.mark.parametrize("mirror", [True, False])
def test_enumerate_counts_match_orbit_oracle(mirror):
    per_p = Counter(k.p for k in enumerate_knots(301, mirror_fixed=mirror))
    for p in range(3, 302, 2):
        assert per_p[p] == len(knot_orbits(p, mirror)), p


def test_enumerate_canonical_and_unique():
    ks = list(enumerate_knots(201))
    assert len(ks) == len(set(ks))
    assert all(normalize(k.p, k.q) == k for k in ks)
    assert all(k.mirror_fixed for k in ks)


def test_is_minimal_examples():
    rep = is_minimal(normalize(5, 2))
    assert rep.minimal and rep.witnesses == [] and rep.family is None and rep.agrees
    rep = is_minimal(normalize(7, 2))
    assert rep.minimal and rep.genus == 1
    rep = is_minimal(normalize(85, 38))
    assert not rep.minimal
    assert [w.target for w in rep.witnesses] == [normalize(5, 2)]
    assert rep.family.index == 1 and rep.agrees
    assert rep.to_json()["alexander"] == "4 - 21t + 35t^2 - 21t^3 + 4t^4"


def test_is_minimal_skips_family_above_genus_five():
    cf = [2, -2] * 6
    rep = is_minimal(knot_from_cf(cf))
    assert rep.genus == 6 and rep.family is None and rep.agrees is None


def test_cross_check_failure_is_assertion():
    assert issubclass(CrossCheckFailure, AssertionError)


@pytest.mark.parametrize(
    "cf, index, params",
    [
        ([2, 4, 4, 2], 1, {"a": 1, "b": 1}),
        ([2, 4, 4, 4, 4, 2], 3, {"a": 1, "b": 1}),
        ([2, 4, 2, 2, 2, 2], 2, {"a": 1, "b": 1, "c2": 1, "e3": 1}),
        ([2, -4, 2, 6, -2, 2], 2, {"a": 1, "b": -1, "c2": 3, "e3": -1}),
    ],
)
def test_match_family_examples(cf, index, params):
    fam = match_genus5_family(cf)
    assert fam.index == index and dict(fam.params) == params
    assert fam.instantiate() == tuple(cf)


def test_match_family_negative_and_errors():
    assert match_genus5_family([2, 2, 2, 2]) is None
    assert match_genus5_family([2, 2]) is None
    assert match_genus5_family([2, -2] * 6) is None
    with pytest.raises(NotEvenReduced):
        match_genus5_family([2, 3])
    with pytest.raises(NotEvenReduced):
        match_genus5_family([2, 0, 2, 2])


def test_match_family_symmetries():
    fam = match_genus5_family([2, 2, 2, 2, 4, 2])
    assert fam.index == 2 and fam.symmetry == "reverse"
    fam = match_genus5_family([-2, -4, -4, -2])
    assert fam.index == 1


def test_family_ids():
    assert PatternFamily(1, (("a", 1), ("b", 1))).family_id == "[2a,4b,4a,2b]"
    assert len(FAMILIES) == 16
    assert sorted(i for v in CASE_FAMILIES.values() for i in v) == list(range(1, 17))


def test_shape_text_round_trip():
    for shape in FAMILIES:
        assert parse_shape(format_shape(shape)) == shape


def test_canonical_relabels():
    s1 = parse_shape("[2b, 4a, 4b, 2a]")
    s2 = parse_shape("[2a, 4b, 4a, 2b]")
    assert canonical(s1) == canonical(s2)
    assert orbit_key(s2) == orbit_key(tuple(reversed(s2)))


def test_solve_shape():
    shape = parse_shape("[2a, 4b, 4a, 2b]")
    assert solve_shape(shape, [2, -4, 4, -2]) == {"a": 1, "b": -1}
    assert solve_shape(shape, [2, 4, 6, 2]) is None
    assert solve_shape(shape, [2, 4, 4]) is None


def test_symbolic_shapes_first_case():
    shapes = symbolic_shapes(2, 1)
    assert [format_shape(s) for s in shapes] == ["[2a, 4b, 4a, 2b]"]
    assert symbolic_shapes(4, 2) == []


@pytest.mark.parametrize("case", sorted(CASE_FAMILIES))
def test_symbolic_shapes_match_listed_forms(case):
    n, k = case
    generated = {orbit_key(s) for s in symbolic_shapes(n, k)}
    listed = {orbit_key(FAMILIES[i - 1]) for i in CASE_FAMILIES[case]}
    assert generated == listed


def test_scan_small():
    summary = ScanSummary()
    reports = list(scan_minimality(301, summary=summary))
    assert [r.knot for r in reports] == list(enumerate_knots(301))
    assert summary.ok
    assert sum(summary.total.values()) == len(reports)
    for r in reports:
        for w in r.witnesses:
            assert witness_violations(w) == []
    non_min = [r for r in reports if not r.minimal]
    assert normalize(85, 38) in {r.knot for r in non_min}
    rows = list(csv.DictReader(io.StringIO(summary.to_csv())))
    assert [int(r["genus"]) for r in rows] == sorted(summary.total)
    for r in rows:
        assert int(r["knots"]) == int(r["minimal"]) + int(r["non_minimal"])


def test_scan_genus_histogram_matches_fox_degree():
    summary = ScanSummary()
    for _ in scan_minimality(201, summary=summary, with_alexander=False):
        pass
    expected = Counter((len(fox_alexander(k.p, k.q)) - 1) // 2 for k in enumerate_knots(201))
    assert summary.total == expected


def test_scan_max_genus_and_workers():
    serial = [r.to_json() for r in scan_minimality(261, max_genus=3)]
    parallel = [r.to_json() for r in scan_minimality(261, max_genus=3, workers=2)]
    assert serial == parallel
    assert all(r["genus"] <= 3 for r in serial)


def test_keep_chirality_scan():
    reps = list(scan_minimality(101, mirror_fixed=False, with_alexander=False))
    assert all(not r.knot.mirror_fixed for r in reps)
    by_min = Counter(r.minimal for r in reps)
    assert by_min[False] > 0
    assert isinstance(reps[0].knot, KnotId) and genus(reps[0].knot) >= 1
