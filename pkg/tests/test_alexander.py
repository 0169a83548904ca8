import pytest
from hypothesis import given, strategies as st

from twobridge.alexander import LaurentPoly, alexander_poly, degree, divides, seifert_matrix
from twobridge.catalog import enumerate_knots
from twobridge.contfrac import genus, normalize
from twobridge.errors import ZeroPolynomial

from oracles import fox_alexander

TREFOIL = LaurentPoly.from_list([1, -1, 1])
FIGURE_EIGHT = LaurentPoly.from_list([1, -3, 1])


def test_examples():
    assert alexander_poly(normalize(3, 1)) == TREFOIL
    assert alexander_poly(normalize(5, 2)) == FIGURE_EIGHT
    d = alexander_poly(normalize(85, 38))
    assert degree(d) == 4
    assert divides(FIGURE_EIGHT, d)


def test_fox_oracle_desk_examples():
    assert fox_alexander(3, 1) == [1, -1, 1]
    assert fox_alexander(5, 2) == [1, -3, 1]


def test_matches_fox_calculus():
    for k in enumerate_knots(251):
        assert alexander_poly(k).to_list() == fox_alexander(k.p, k.q), k


def test_seifert_matrix_shape():
    V = seifert_matrix([2, -4, 6, 2])
    assert V == [[1, 1, 0, 0], [0, 2, 1, 0], [0, 0, 3, 1], [0, 0, 0, -1]]
    # V - V^T is the unimodular intersection form
    S = [[V[i][j] - V[j][i] for j in range(4)] for i in range(4)]
    assert S[0][1] == 1 and S[1][0] == -1


def test_knot_identities_up_to_500():
    for k in enumerate_knots(499):
        d = alexander_poly(k)
        c = d.to_list()
        assert abs(d(1)) == 1
        assert c == c[::-1]
        assert abs(d(-1)) == k.p
        assert degree(d) == 2 * genus(k)


def test_divides_examples():
    assert divides(FIGURE_EIGHT, FIGURE_EIGHT)
    assert not divides(TREFOIL, FIGURE_EIGHT)
    assert divides(TREFOIL, TREFOIL * FIGURE_EIGHT)
    # units are ignored
    assert divides(TREFOIL * LaurentPoly.monomial(-1, 3), TREFOIL * FIGURE_EIGHT)


def test_degree():
    assert degree(TREFOIL) == 2
    assert degree(LaurentPoly.from_list([1])) == 0
    with pytest.raises(ZeroPolynomial):
        degree(LaurentPoly())


def test_rendering_and_json():
    assert str(FIGURE_EIGHT) == "1 - 3t + t^2"
    assert str(LaurentPoly.from_list([-2, 0, 5], shift=-1)) == "-2t^-1 + 5t"
    assert LaurentPoly.from_json(FIGURE_EIGHT.to_json()) == FIGURE_EIGHT
    assert FIGURE_EIGHT.to_json() == [[0, 1], [1, -3], [2, 1]]


def test_normalized():
    p = LaurentPoly({-3: -1, -2: 3, -1: -1})
    assert p.normalized() == FIGURE_EIGHT


polys = st.lists(st.integers(-5, 5), min_size=1, max_size=6).map(LaurentPoly.from_list).filter(
    lambda p: not p.is_zero()
)


@given(polys, polys, polys)
def test_divides_reflexive_transitive(a, b, c):
    ab = a * b
    abc = ab * c
    assert divides(a, a)
    assert divides(a, ab)
    assert divides(ab, abc)
    assert divides(a, abc)
    assert (ab.normalized().divmod_exact(a.normalized()) * a.normalized()) == ab.normalized()


@given(polys, polys)
def test_divides_agrees_with_product(a, b):
    q = (a * b).divmod_exact(a)
    assert q is not None and q * a == a * b
