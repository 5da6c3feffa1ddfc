"""
Schubert polynomials by two recursions.

``schubert_descending`` starts from ``x_1^{n-1} ... x_{n-1}`` and applies
divided differences along the first-ascent path from ``w`` up to ``w_0``.
``schubert_ascending`` computes the flagged character of the inversion
family with the Demazure formula, building degrees up instead of down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .characters import demazure_char
from .families import MultFamily, interval, inversion_family, is_i_free
from .poly import LaurentPoly, divided_difference, staircase
from .weyl import (Permutation, all_permutations, compose, first_ascent, inverse,
                   is_reduced, longest, simple, word_to_perm)

__all__ = [
    "SchubertResult", "ChainStep", "KPReport",
    "schubert_descending", "schubert_ascending", "schubert",
    "first_ascent_word", "first_ascent_chain", "verify_kp", "KP_MAX_N",
]

KP_MAX_N = 5


@dataclass(frozen=True)
class SchubertResult:
    w: Permutation
    poly: LaurentPoly
    method: str  # "descending" | "ascending"


def first_ascent_word(w: Permutation) -> tuple[int, ...]:
    """
    Letters ``i_1, ..., i_r`` with ``w_0 = w s_{i_1} ... s_{i_r}``, each the
    first ascent of the partial product.

    >>> first_ascent_word(Permutation((2, 4, 1, 5, 3)))
    (1, 3, 2, 1, 4, 3)
    """
    word = []
    v = w
    while (i := first_ascent(v)) is not None:
        word.append(i)
        v = v.times_simple(i)
    return tuple(word)


def schubert_descending(w: Permutation, word: Sequence[int] | None = None) -> LaurentPoly:
    """
    ``S(w) = d_{i_1} ... d_{i_r} (x_1^{n-1} ... x_{n-1})``.

    ``word`` may be any reduced word of ``w^{-1} w_0``; by default the
    first-ascent word is used.
    """
    n = w.n
    if word is None:
        word = first_ascent_word(w)
    else:
        word = tuple(word)
        target = compose(inverse(w), longest(n))
        if word_to_perm(word, n) != target or not is_reduced(word, n):
            raise ValueError(f"{word} is not a reduced word of w^-1 w0")
    f = staircase(n)
    for i in reversed(word):
        f = divided_difference(f, i)
    return f


@dataclass(frozen=True)
class ChainStep:
    """
    One step ``v -> u = v s_i`` of the first-ascent chain, ``i`` the first
    ascent of ``v``, with ``I'(u) = I(u) - {[i]}``.
    """
    lower: Permutation
    index: int
    reduced_family: MultFamily  # I'(u)

    @property
    def upper(self) -> Permutation:
        return self.lower.times_simple(self.index)


def _remove_one(dm: MultFamily, c: frozenset) -> MultFamily:
    d = dm.as_dict()
    if d.get(c, 0) < 1:
        raise AssertionError(f"{sorted(c)} not in the family")
    d[c] -= 1
    return MultFamily.from_pairs(dm.n, ((k, m) for k, m in d.items() if m))


def _union(dm: MultFamily, c: frozenset) -> MultFamily:
    if not c:  # [0] is empty and dropped
        return dm
    return MultFamily.from_pairs(dm.n, list(dm.items()) + [(c, 1)])


def first_ascent_chain(w: Permutation) -> list[ChainStep]:
    """
    The chain ``w -> w s_{i_1} -> ... -> w_0`` along first ascents, each
    step checked against the three facts the ascending recursion relies on:
    ``I'(u)`` is ``i``-free, ``I(u) = I'(u) + [i]``, and
    ``I(v) = s_i I'(u) + [i-1]``.
    """
    steps = []
    v = w
    while (i := first_ascent(v)) is not None:
        u = v.times_simple(i)
        iu = inversion_family(u)
        reduced = _remove_one(iu, interval(i))
        if not is_i_free(reduced.members, i):
            raise AssertionError(f"I'({u}) is not {i}-free")
        if _union(reduced, interval(i)) != iu:
            raise AssertionError(f"I({u}) != I'({u}) + [{i}]")
        s = simple(i, w.n)
        moved = MultFamily.from_pairs(w.n, ((s.act(c), m) for c, m in reduced.items()))
        if _union(moved, interval(i - 1)) != inversion_family(v):
            raise AssertionError(f"I({v}) != s_{i} I'({u}) + [{i - 1}]")
        steps.append(ChainStep(v, i, reduced))
        v = u
    return steps


def schubert_ascending(w: Permutation) -> LaurentPoly:
    """
    Flagged character of the inversion family ``I(w)``.

    The embedding word comes from the chain itself: prepending ``i`` to a
    word for ``u = v s_i`` gives a word for ``v``, because
    ``D+_{(i, j)} = s_i D+_j + [i]``.  Starting from the empty word at
    ``w_0`` this is exactly the first-ascent word.
    """
    chain = first_ascent_chain(w)
    word = tuple(step.index for step in chain)
    return demazure_char(inversion_family(w), word)


def schubert(w: Permutation, method: str = "descending") -> SchubertResult:
    if method == "descending":
        return SchubertResult(w, schubert_descending(w), method)
    if method == "ascending":
        return SchubertResult(w, schubert_ascending(w), method)
    raise ValueError(f"unknown method {method!r}")


@dataclass
class KPReport:
    n: int
    total: int = 0
    agree: int = 0
    mismatches: list[tuple[Permutation, LaurentPoly, LaurentPoly]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.agree == self.total

    def __str__(self):
        return f"{self.agree}/{self.total} agree"


def verify_kp(n: int, max_n: int = KP_MAX_N) -> KPReport:
    """Compare both recursions on all of S_n."""
    if n > max_n:
        raise ValueError(f"verify_kp limited to n <= {max_n}, got n={n}")
    report = KPReport(n)
    for w in all_permutations(n):
        down, up = schubert_descending(w), schubert_ascending(w)
        report.total += 1
        if down == up:
            report.agree += 1
        else:
            report.mismatches.append((w, down, up))
    return report
