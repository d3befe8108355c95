import warnings

import pytest
from hypothesis import given, strategies as st

from xconn.formulas import (M, M1, M2, HypothesisError, HypothesisWarning, block_term,
                            cartesian_kappa1, cartesian_kappa2, ceil_sqrt, cycle_product_formula,
                            diagnosability_formula, formula_table, kappa0_strong, kappa1_strong,
                            kappa2_strong, kappa3_strong, kappa_strong, layer_path_terms)

ks = st.integers(2, 200)


@pytest.mark.parametrize("fn, cases", [
    (kappa0_strong, {(2, 2): 8, (2, 3): 11, (3, 3): 15}),
    (kappa1_strong, {(2, 2): 10, (2, 3): 14, (5, 5): 58}),
    (kappa2_strong, {(2, 2): 12, (2, 4): 22, (3, 3): 29}),
    (kappa3_strong, {(2, 2): 12, (2, 5): 32, (3, 3): 32}),
    (cartesian_kappa1, {(2, 2): 6, (3, 3): 10, (2, 3): 8}),
    (cartesian_kappa2, {(2, 2): 7, (3, 3): 13, (2, 3): 10}),
])
def test_formula_examples(fn, cases):
    for (k1, k2), v in cases.items():
        assert fn(k1, k2) == v


def test_m_examples():
    assert M(1, 2, 2) == 10
    assert M(3, 2, 2) == 12 == M2(3, 2, 2) == block_term(2, 2)
    assert M(2, 2, 4) == 22


def test_cycle_formula_examples():
    assert cycle_product_formula(3, 7, 7) == 12
    assert cycle_product_formula(1, 5, 5) == 10
    assert cycle_product_formula(8, 10, 12) == 16


def test_diagnosability_examples():
    assert diagnosability_formula(1, 2, 2) == 11
    assert diagnosability_formula(3, 2, 2) == 15
    assert diagnosability_formula(2, 3, 3) == 31


def test_ceil_sqrt():
    assert [ceil_sqrt(x) for x in range(11)] == [0, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4]
    assert ceil_sqrt(10**30) == 10**15
    assert ceil_sqrt(10**30 + 1) == 10**15 + 1
    with pytest.raises(ValueError):
        ceil_sqrt(-1)


def test_hypothesis_guards():
    with pytest.warns(HypothesisWarning):
        kappa1_strong(1, 3)
    with pytest.raises(HypothesisError):
        kappa1_strong(1, 3, strict=True)
    with pytest.raises(HypothesisError):
        kappa3_strong(2, 2, girth1=6, girth2=7, strict=True)
    with pytest.raises(HypothesisError):
        M(4, 2, 2, strict=True)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert kappa3_strong(2, 3, girth1=7, girth2=7) == 20


def test_m_identity_exhaustive():
    for k1 in range(2, 51):
        for k2 in range(2, 51):
            for g in (1, 2, 3):
                assert M(g, k1, k2) == kappa_strong(g, k1, k2)


def test_gadget_terms_reassemble_closed_forms():
    for k1 in range(2, 20):
        for k2 in range(2, 20):
            assert min(layer_path_terms(1, k1, k2)) == kappa1_strong(k1, k2)
            assert min(layer_path_terms(2, k1, k2)) == kappa2_strong(k1, k2)
            assert min(*layer_path_terms(3, k1, k2), block_term(k1, k2)) == kappa3_strong(k1, k2)


@given(ks, ks, st.integers(0, 3))
def test_symmetry(k1, k2, g):
    assert kappa_strong(g, k1, k2) == kappa_strong(g, k2, k1)
    if g:
        assert M1(g, k1, k2) == M1(g, k2, k1)
        assert M2(g, k1, k2) == M2(g, k2, k1)
        assert M(g, k1, k2) == M(g, k2, k1)


@given(ks, ks)
def test_ordering_for_k_at_least_3(k1, k2):
    if min(k1, k2) >= 3:
        assert kappa0_strong(k1, k2) < kappa1_strong(k1, k2) < kappa2_strong(k1, k2) \
            < kappa3_strong(k1, k2)
    else:
        assert kappa0_strong(k1, k2) < kappa1_strong(k1, k2) <= kappa2_strong(k1, k2) \
            <= kappa3_strong(k1, k2)


@given(st.integers(0, 3), st.integers(5, 40), st.integers(5, 40))
def test_cycle_formula_matches_strong_at_k2(g, m, n):
    if g >= 1 and min(m, n) >= g + 4:
        assert cycle_product_formula(g, m, n) == kappa_strong(g, 2, 2)


def test_formula_table():
    rows = dict(formula_table(1, 2, 2))
    assert rows["kappa_1(strong)"] == 10 and rows["M"] == 10 and rows["diagnosability"] == 11
    assert "cycle(C2,C2)" not in rows
    assert dict(formula_table(3, 7, 7, ["cycle"])) == {"cycle(C7,C7)": 12}
    assert formula_table(2, 2, 2, ["M1"]) == [("M1", 12)]
