import random

import pytest
from hypothesis import settings, strategies as st

from bottsamelson import LaurentPoly, Permutation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def permutations_st(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def polys_st(draw, n=None, max_deg=6, max_terms=5, laurent=False):
    n = n or draw(st.integers(2, 4))
    lo = -2 if laurent else 0
    exps = st.tuples(*[st.integers(lo, max_deg)] * n)
    terms = draw(st.dictionaries(exps, st.integers(-9, 9), max_size=max_terms))
    return LaurentPoly(n, terms)


@st.composite
def words_st(draw, n, max_len=8):
    return tuple(draw(st.lists(st.integers(1, n - 1), max_size=max_len)))


@pytest.fixture
def rng():
    return random.Random(7)
