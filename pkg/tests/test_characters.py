from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from bottsamelson.characters import (CharRequest, MinorProduct, ORACLE_MAX_BOXES,
                                     bott_samelson_char, demazure_char, enumerate_fillings,
                                     filling_to_minor_product, full_char, is_column_strict,
                                     is_flagged_filling, lambda_step, spanning_products,
                                     weyl_char_oracle)
from bottsamelson.families import (MultFamily, full_chamber_family, interval, inversion_family,
                                   is_i_free, is_strongly_separated, parse_mult_family)
from bottsamelson.poly import LaurentPoly, demazure, eval_ones, fundamental_weight, staircase
from bottsamelson.verify import ss_corpus
from bottsamelson.weyl import Permutation, all_permutations, longest, reduced_words


def X(text, n):
    return LaurentPoly.parse(text, n)


def M(text, n):
    return parse_mult_family(text, n)


# -- the Demazure formula ----------------------------------------------------

def test_demazure_char_inversion_example():
    dm = inversion_family(Permutation((2, 4, 1, 5, 3)))
    expected = X("x1*x2", 5) * X("x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4", 5)
    assert demazure_char(dm, (1, 3, 2)) == expected
    assert demazure_char(CharRequest(dm, (1, 3, 2))) == expected
    assert demazure_char(dm) == expected


def test_demazure_char_staircase():
    for n in range(2, 6):
        dm = MultFamily.from_pairs(n, [(interval(k), 1) for k in range(1, n)])
        assert demazure_char(dm, ()) == staircase(n)


def test_demazure_char_single_step():
    assert demazure_char(M("2", 2), (1,)) == X("x1 + x2", 2)


def test_demazure_char_errors():
    with pytest.raises(ValueError, match="not reduced"):
        demazure_char(M("2", 3), (1, 1))
    with pytest.raises(ValueError, match="not a chamber set"):
        demazure_char(M("3", 3), (1,))
    with pytest.raises(ValueError, match="strongly separated"):
        demazure_char(M("13,2", 3))
    with pytest.raises(ValueError):
        M("2:-1", 2)


def test_multiplicity_zero_and_empty_set_are_trivial():
    assert demazure_char(M("2:0", 2), (1,)) == 1
    dm = MultFamily.from_pairs(3, [(frozenset(), 2), (frozenset({2}), 1)])
    assert demazure_char(dm) == demazure_char(M("2", 3))


def test_bott_samelson_char_examples():
    assert bott_samelson_char((1,), (1,), 2) == X("x1 + x2", 2)
    assert bott_samelson_char((1, 1), (0, 1), 2) == X("x1 + x2", 2)
    f = bott_samelson_char((2, 1, 1, 2), (1, 1, 1, 1), 3)
    assert f.is_polynomial() and all(c > 0 for c in f.terms.values())
    with pytest.raises(ValueError):
        bott_samelson_char((1,), (-1,), 2)
    with pytest.raises(ValueError):
        bott_samelson_char((1, 2), (1,), 3)


@given(st.lists(st.integers(1, 2), max_size=6), st.data())
def test_bott_samelson_repeated_letter_with_zero(word, data):
    mult = data.draw(st.lists(st.integers(0, 2), min_size=len(word), max_size=len(word)))
    base = bott_samelson_char(word, mult, 3)
    if not word:
        return
    k = data.draw(st.integers(0, len(word) - 1))
    # a zero-multiplicity copy placed right before its twin is absorbed: L_i L_i = L_i
    longer_word = word[:k] + [word[k]] + word[k:]
    longer_mult = mult[:k] + [0] + mult[k:]
    assert bott_samelson_char(longer_word, longer_mult, 3) == base


def test_bott_samelson_agrees_with_demazure_char_on_reduced_words():
    for word in reduced_words(longest(4)):
        dplus = full_chamber_family(word, 4)
        mult = [1, 2, 0, 1, 0, 1][:len(word)]
        dm = MultFamily.from_pairs(4, zip(list(dplus.members)[4:], mult))
        assert bott_samelson_char(word, mult, 4) == demazure_char(dm, word)


def test_full_char_examples():
    assert full_char(M("1,12", 2)) == X("x1*x2", 2) * X("x1 + x2", 2)
    stair = MultFamily.from_pairs(4, [(interval(k), 1) for k in range(1, 4)])
    assert full_char(stair).is_symmetric()
    sym = M("12", 2)  # flagged char x1 x2 is already symmetric
    assert full_char(sym) == demazure_char(sym)


# -- the oracle --------------------------------------------------------------

def test_oracle_examples():
    assert weyl_char_oracle(M("2", 2), flagged=True) == X("x1 + x2", 2)
    assert weyl_char_oracle(M("1,12", 2), flagged=True) == X("x1^2*x2", 2)
    for n in (1, 2, 3, 4):
        total = sum((LaurentPoly.var(i, n) for i in range(1, n + 1)), LaurentPoly.zero(n))
        assert weyl_char_oracle(M("1", n), flagged=False) == total


def test_oracle_guards():
    with pytest.raises(ValueError):
        weyl_char_oracle(M("1234:3", 4))
    with pytest.raises(ValueError):
        weyl_char_oracle(M("1", 6))
    assert ORACLE_MAX_BOXES == 10


def test_oracle_accepts_non_separated_families():
    f = weyl_char_oracle(M("13,2", 3), flagged=True)
    assert eval_ones(f) > 0


def test_oracle_matches_formula_on_inversion_families_s4():
    for w in all_permutations(4):
        dm = inversion_family(w)
        assert weyl_char_oracle(dm, flagged=True) == demazure_char(dm)
        assert weyl_char_oracle(dm, flagged=False) == full_char(dm)


def test_oracle_matches_formula_small_corpus():
    for dm in ss_corpus((2, 3), max_members=3, max_mult=2, max_boxes=6):
        f = demazure_char(dm)
        assert weyl_char_oracle(dm, flagged=True) == f
        assert weyl_char_oracle(dm, flagged=False) == full_char(dm)
        assert all(c > 0 for c in f.terms.values())


def test_spanning_products_flag_compatible():
    dm = M("24:2,3", 4)
    prods = spanning_products(dm, flagged=True)
    assert all(p.is_flag_compatible() for p in prods)
    # rows under 24: 12, 13, 14, 23, 24; pairs with repetition: 15; rows under 3: 1, 2, 3
    assert len(prods) == 15 * 3
    assert len(spanning_products(dm, flagged=False)) == 21 * 4


def test_minor_product_validation():
    with pytest.raises(ValueError):
        MinorProduct((frozenset({1, 2}),), (frozenset({1}),))


# -- structural properties ---------------------------------------------------

def test_extension_by_zero_small():
    for dm in ss_corpus((3,), max_members=2, max_mult=2, max_boxes=5):
        base = demazure_char(dm)
        for k in range(1, 4):
            for c in combinations(range(1, 4), k):
                c = frozenset(c)
                if c in dm.members or not is_strongly_separated(list(dm.members) + [c]):
                    continue
                ext = dm.with_member(c, 0)
                assert demazure_char(ext) == base
                assert weyl_char_oracle(ext) == base


def test_word_independence_s4():
    words = reduced_words(longest(4))
    for dm in ss_corpus((4,), max_members=2, max_mult=2, max_boxes=6):
        valid = [w for w in words if set(dm.members) <= set(full_chamber_family(w, 4).members)]
        values = {demazure_char(dm, w) for w in valid}
        assert len(values) == 1, dm


def test_i_free_recursion_via_oracle():
    checked = 0
    for dm in ss_corpus((3,), max_members=2, max_mult=2, max_boxes=4):
        for i in (1, 2):
            if not is_i_free(dm.members, i):
                continue
            for m0 in (0, 1):
                lifted = lambda_step(dm, i, m0)
                if lifted.boxes() > 8:
                    continue
                lhs = weyl_char_oracle(lifted, flagged=True)
                rhs = demazure(fundamental_weight(i, 3) ** m0 * weyl_char_oracle(dm), i)
                assert lhs == rhs, (str(dm), i, m0)
                checked += 1
    assert checked > 20


def test_lambda_step():
    out = lambda_step(M("12:2", 3), 2, 1)
    assert out.as_dict() == {frozenset({1, 3}): 3}
    assert str(lambda_step(M("3", 3), 1, 0)) == "2:0, 3:1"


# -- fillings ----------------------------------------------------------------

def test_fillings_counts():
    assert len(enumerate_fillings(M("234", 4))) == 4
    for k in range(1, 5):
        dm = MultFamily.from_pairs(4, [(interval(k), 1)])
        assert enumerate_fillings(dm, flagged=True) == [(tuple(range(1, k + 1)),)]


def test_fillings_are_column_strict():
    fills = enumerate_fillings(M("24:2,3", 4))
    assert all(is_column_strict(f) for f in fills)
    flagged = enumerate_fillings(M("24:2,3", 4), flagged=True)
    columns = [frozenset({2, 4})] * 2 + [frozenset({3})]
    assert all(is_flagged_filling(columns, f) for f in flagged)
    assert len(flagged) == 5 * 5 * 3


def test_tau_fillings():
    columns = [frozenset({2, 3, 4})] * 2 + [frozenset({3})] * 3
    dm = M("234:2,3:3", 4)
    tau1 = ((2, 3, 4), (1, 2, 3), (4,), (3,), (4,))
    tau2 = ((2, 3, 4), (1, 2, 4), (3,), (2,), (3,))
    assert is_column_strict(tau1) and is_column_strict(tau2)
    assert not is_flagged_filling(columns, tau1)
    assert is_flagged_filling(columns, tau2)
    assert tau2 in enumerate_fillings(dm, flagged=True)
    assert tau1 not in enumerate_fillings(dm, flagged=True)
    p = filling_to_minor_product(dm, tau2, flagged=True)
    assert p.rows == tuple(frozenset(c) for c in tau2)
    assert p.weight(4) == (1, 3, 3, 2)
    assert p.expand(4)  # a nonzero polynomial in the matrix entries
    assert not filling_to_minor_product(dm, tau1, flagged=True).expand(4)


@settings(max_examples=20)
@given(st.sampled_from(list(ss_corpus((2, 3), max_members=2, max_mult=2, max_boxes=5))))
def test_total_dimension(dm):
    f = demazure_char(dm)
    assert eval_ones(f) == eval_ones(weyl_char_oracle(dm))
    assert eval_ones(full_char(dm)) == eval_ones(weyl_char_oracle(dm, flagged=False))
