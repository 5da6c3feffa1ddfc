import pytest
from hypothesis import given

from bottsamelson.families import interval, inversion_family, is_i_free
from bottsamelson.poly import LaurentPoly, divided_difference, eval_ones, staircase
from bottsamelson.schubert import (KP_MAX_N, first_ascent_chain, first_ascent_word, schubert,
                                   schubert_ascending, schubert_descending, verify_kp)
from bottsamelson.weyl import (Permutation, all_permutations, compose, identity, inverse,
                               longest, reduced_words, simple, word_to_perm)

from conftest import permutations_st


def X(text, n):
    return LaurentPoly.parse(text, n)


def S3_TABLE():
    s1, s2 = simple(1, 3), simple(2, 3)
    return {
        longest(3): "x1^2*x2",
        s1 * s2: "x1*x2",
        s2 * s1: "x1^2",
        s2: "x1 + x2",
        s1: "x1",
        identity(3): "1",
    }


@pytest.mark.parametrize("method", ["descending", "ascending"])
def test_s3_table(method):
    for w, text in S3_TABLE().items():
        assert schubert(w, method).poly == X(text, 3)
        assert str(schubert(w, method).poly) == text


@pytest.mark.parametrize("method", ["descending", "ascending"])
def test_24153(method):
    w = Permutation((2, 4, 1, 5, 3))
    expected = X("x1*x2", 5) * X("x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4", 5)
    assert schubert(w, method).poly == expected


def test_identity_and_longest():
    for n in range(1, 6):
        assert schubert_descending(identity(n)) == 1
        assert schubert_ascending(identity(n)) == 1
        assert schubert_ascending(longest(n)) == staircase(n)


def test_unknown_method():
    with pytest.raises(ValueError):
        schubert(identity(2), "sideways")


def test_first_ascent_word():
    assert first_ascent_word(Permutation((2, 4, 1, 5, 3))) == (1, 3, 2, 1, 4, 3)
    for w in all_permutations(4):
        word = first_ascent_word(w)
        assert compose(w, word_to_perm(word, 4)) == longest(4)
        assert len(word) == 6 - w.length()


def test_first_ascent_chain_lengths():
    # chains run upward to w0, so the chain from e has l(w0) steps
    chain = first_ascent_chain(identity(2))
    assert len(chain) == 1
    assert chain[0].lower == identity(2) and chain[0].upper == simple(1, 2)
    assert chain[0].reduced_family.boxes() == 0
    assert len(first_ascent_chain(identity(3))) == 3
    assert first_ascent_chain(longest(3)) == []


def test_first_ascent_chain_facts_s4():
    for w in all_permutations(4):
        for step in first_ascent_chain(w):  # raises on any failed fact
            i = step.index
            assert is_i_free(step.reduced_family.members, i)
            assert inversion_family(step.upper).as_dict().get(interval(i), 0) >= 1


def test_verify_kp():
    assert str(verify_kp(2)) == "2/2 agree"
    assert str(verify_kp(3)) == "6/6 agree"
    report = verify_kp(4)
    assert report.ok and report.total == 24
    with pytest.raises(ValueError):
        verify_kp(KP_MAX_N + 1)


@given(permutations_st(max_n=5))
def test_schubert_polynomial_shape(w):
    f = schubert_descending(w)
    assert f.is_polynomial()
    assert all(c > 0 for c in f.terms.values())
    assert f.degrees() == {w.length()}
    assert eval_ones(f) >= 1


def test_defining_recursion_on_ascending_side():
    for n in range(2, 5):
        for w in all_permutations(n):
            for i in range(1, n):
                if w(i) > w(i + 1):  # w s_i < w
                    assert divided_difference(schubert_ascending(w), i) == \
                        schubert_ascending(w.times_simple(i))


def test_descending_word_independent_s3():
    for w in all_permutations(3):
        target = compose(inverse(w), longest(3))
        values = {schubert_descending(w, word) for word in reduced_words(target)}
        assert values == {schubert_descending(w)}


def test_descending_rejects_wrong_word():
    with pytest.raises(ValueError):
        schubert_descending(identity(3), (1, 2))
