"""The main closed forms, the Ext assembly, dimensions and top supports."""

import pytest

from loccoh.characters import SKEW, SYMM, SimpleLabel
from loccoh.cohomology import (
    GENERAL,
    ambient_dimension,
    lcd,
    lcd_closed_form,
    support_poly,
    support_poly_from_ext,
    top_support,
)
from loccoh.qseries import LaurentPoly


def test_symm_rank_one_locus():
    hp = support_poly(SYMM, 3, 1)
    assert set(hp.terms) == {1}
    assert hp.terms[1] == LaurentPoly.q(3)


def test_skew_rank_two_locus():
    hp = support_poly(SKEW, 5, 1)
    assert hp.terms == {0: LaurentPoly.q(5), 1: LaurentPoly.q(3)}


@pytest.mark.parametrize(
    "space,n,m",
    [(GENERAL, 3, 5), (GENERAL, 4, 4), (SKEW, 6, None), (SKEW, 7, None), (SYMM, 5, None)],
)
def test_codimension_forced_single_term_at_p_zero(space, n, m):
    hp = support_poly(space, n, 0, m)
    assert set(hp.terms) == {0}
    assert hp.terms[0] == LaurentPoly.q(ambient_dimension(space, n, m))


def test_assembly_route_agreement_examples():
    assert support_poly_from_ext(SKEW, 5, 1).terms == support_poly(SKEW, 5, 1).terms
    assert support_poly_from_ext(SYMM, 4, 2).terms == support_poly(SYMM, 4, 2).terms
    assert support_poly_from_ext(SYMM, 3, 1).terms == support_poly(SYMM, 3, 1).terms
    for route in ("enum", "bott"):
        assert support_poly_from_ext(SKEW, 7, 2, route).terms == support_poly(SKEW, 7, 2).terms


def test_assembly_rejects_general_matrices():
    with pytest.raises(ValueError):
        support_poly_from_ext(GENERAL, 3, 1)


def test_symm_label_resolution():
    # the class D_1 for n=3 is the flavor-2 simple with index 2
    hp = support_poly_from_ext(SYMM, 3, 1)
    assert hp.simple_label(1) == SimpleLabel(SYMM, 3, 2, 2)
    assert hp.simple_label(0) == SimpleLabel(SYMM, 3, 3)
    sk = support_poly(SKEW, 6, 1)
    assert sk.simple_label(1) == SimpleLabel(SKEW, 6, 2)


def test_lcd_examples():
    assert lcd(SYMM, 3, 1) == 3 == lcd_closed_form(SYMM, 3, 1)
    assert lcd(SKEW, 5, 1) == 5 == lcd_closed_form(SKEW, 5, 1)
    assert lcd(GENERAL, 2, 1, 2) == 1 == lcd_closed_form(GENERAL, 2, 1, 2)
    assert lcd(GENERAL, 3, 1, 4) == 9


def test_lcd_closed_forms_sweep():
    for n in range(1, 8):
        for m in range(n, 8):
            for p in range(n):
                assert lcd(GENERAL, n, p, m) == lcd_closed_form(GENERAL, n, p, m)
    for n in range(2, 9):
        for p in range(n // 2):
            assert lcd(SKEW, n, p) == lcd_closed_form(SKEW, n, p)
    for n in range(1, 9):
        for p in range(n):
            assert lcd(SYMM, n, p) == lcd_closed_form(SYMM, n, p)


def test_top_support():
    assert top_support(SYMM, 5, 1) == [1]
    assert top_support(SYMM, 4, 2) == [0]
    assert top_support(SKEW, 6, 1) == [0]
    assert top_support(GENERAL, 3, 1, 5) == [0]


def test_top_support_ties_on_hypersurfaces():
    # the determinant hypersurface: several classes share the top degree
    assert top_support(SYMM, 3, 2) == [0, 2]
    assert top_support(GENERAL, 2, 1, 2) == [0, 1]
    # and index 0 attains the top whenever it occurs at all (even p)
    for n in range(1, 7):
        for p in range(0, n, 2):
            assert 0 in top_support(SYMM, n, p)


def test_bottom_degree_is_codimension():
    # local cohomology starts exactly in the codimension of the rank locus
    from math import comb

    for n in range(1, 9):
        for p in range(n):
            hp = support_poly(SYMM, n, p)
            assert min(t.bottom_degree() for t in hp.terms.values()) == comb(n - p + 1, 2)
    for n in range(2, 9):
        for p in range(n // 2):
            hp = support_poly(SKEW, n, p)
            assert min(t.bottom_degree() for t in hp.terms.values()) == comb(n - 2 * p, 2)
    for n in range(1, 7):
        for m in range(n, 8):
            for p in range(n):
                hp = support_poly(GENERAL, n, p, m)
                bottom = min(t.bottom_degree() for t in hp.terms.values())
                assert bottom == (n - p) * (m - p)


def test_submaximal_pfaffian_shape():
    # odd n = 2m+1 at p = m-1: exactly m single-monomial terms with
    # exponents 3, 5, ..., 2m+1
    for m in range(2, 5):
        n = 2 * m + 1
        hp = support_poly(SKEW, n, m - 1)
        assert sorted(hp.terms) == list(range(m))
        for s in range(m):
            assert hp.terms[s] == LaurentPoly.q(3 + 2 * (m - 1 - s))


def test_argument_validation():
    with pytest.raises(ValueError):
        support_poly(GENERAL, 3, 1)  # missing m
    with pytest.raises(ValueError):
        support_poly(GENERAL, 3, 1, 2)  # m < n
    with pytest.raises(ValueError):
        support_poly(SKEW, 5, 2)
    with pytest.raises(ValueError):
        support_poly(SYMM, 3, 3)
    with pytest.raises(ValueError):
        support_poly(SYMM, 3, 1, 4)  # m given for a square space
    with pytest.raises(ValueError):
        support_poly("hermitian", 3, 1)


def test_json_shape():
    d = support_poly(SYMM, 3, 1).to_json_dict()
    assert d == {
        "space": "symm",
        "n": 3,
        "p": 1,
        "terms": [{"label": {"s": 1, "flavor": 2}, "poly": [[3, 1]]}],
    }
    d = support_poly(GENERAL, 2, 0, 3).to_json_dict()
    assert d["m"] == 3 and d["terms"][0]["label"] == {"s": 0, "flavor": None}
