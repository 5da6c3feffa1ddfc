"""
Characters of flagged and unflagged Weyl modules of subset families.

Two independent routes:

* ``demazure_char`` evaluates the Demazure operator formula along a reduced
  word whose full chamber family contains the family;
* ``weyl_char_oracle`` builds the module itself as the span of products of
  minors, splits it into weight spaces, and takes exact ranks.

Both use the dual convention: the minor on rows ``R`` has weight
``prod_{r in R} x_r``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Iterable, Sequence

from .families import (MultFamily, chamber_sets, find_embedding_word, format_subset,
                       interval, separation_violation)
from .linalg import bareiss_rank
from .poly import LaurentPoly, demazure, demazure_w, fundamental_weight
from .weyl import is_reduced, longest, simple

__all__ = [
    "CharRequest", "MinorProduct",
    "demazure_char", "full_char", "bott_samelson_char", "weyl_char_oracle",
    "enumerate_fillings", "filling_to_minor_product", "is_column_strict",
    "is_flagged_filling", "spanning_products", "lambda_step",
    "ORACLE_MAX_BOXES", "ORACLE_MAX_N",
]

ORACLE_MAX_BOXES = 10
ORACLE_MAX_N = 5


@dataclass(frozen=True)
class CharRequest:
    """A multiplicity family and, optionally, the reduced word embedding it."""
    dm: MultFamily
    word: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return self.dm.n


def _request(dm, word) -> CharRequest:
    if isinstance(dm, CharRequest):
        return dm if word is None else CharRequest(dm.dm, tuple(word))
    return CharRequest(dm, None if word is None else tuple(word))


def _weight_power(i: int, m: int, n: int) -> LaurentPoly:
    return fundamental_weight(i, n) ** m


def demazure_char(dm: MultFamily | CharRequest, word: Sequence[int] | None = None) -> LaurentPoly:
    """
    Flagged character
    ``w_1^{k_1} ... w_n^{k_n} Lambda_{i_1} w_{i_1}^{m_1} ... Lambda_{i_l} w_{i_l}^{m_l}``
    (``w_i`` the fundamental weights), where ``k_i = m([i])`` and ``m_k`` is
    the multiplicity of the ``k``-th chamber set; sets outside the family get 0.

    Without a word, the shortest embedding word is searched for.  The empty
    subset counts as ``[0]`` and contributes a trivial factor.
    """
    req = _request(dm, word)
    dm, n = req.dm, req.n
    support = {c: m for c, m in dm.items() if c}
    if req.word is None:
        bad = separation_violation(support)
        if bad is not None:
            raise ValueError("family is not strongly separated: "
                             f"({format_subset(bad[0], n)}, {format_subset(bad[1], n)})")
        word = find_embedding_word(MultFamily.from_pairs(n, support.items()).family)
    else:
        word = req.word
        if not is_reduced(word, n):
            raise ValueError(f"word {word} is not reduced")
    sets = chamber_sets(word, n)
    placed = {interval(k) for k in range(1, n + 1)} | set(sets)
    missing = [c for c in support if c not in placed]
    if missing:
        raise ValueError(f"{format_subset(missing[0], n)} is not a chamber set of word {word}")
    f = LaurentPoly.one(n)
    used = set()
    for i, c in reversed(list(zip(word, sets))):
        m = support.get(c, 0) if c not in used else 0
        used.add(c)
        f = demazure(_weight_power(i, m, n) * f, i)
    for k in range(1, n + 1):
        f = _weight_power(k, support.get(interval(k), 0), n) * f
    return f


def full_char(dm: MultFamily | CharRequest, word: Sequence[int] | None = None) -> LaurentPoly:
    """``Lambda_{w_0}`` applied to the flagged character."""
    flagged = demazure_char(dm, word)
    return demazure_w(flagged, longest(flagged.n))


def bott_samelson_char(word: Sequence[int], mult: Sequence[int], n: int) -> LaurentPoly:
    """
    ``Lambda_{i_1} w_{i_1}^{m_1} ... Lambda_{i_l} w_{i_l}^{m_l}`` for any word,
    reduced or not.
    """
    if len(word) != len(mult):
        raise ValueError("one multiplicity per letter is required")
    if any(m < 0 for m in mult):
        raise ValueError("multiplicities must be nonnegative")
    f = LaurentPoly.one(n)
    for i, m in reversed(list(zip(word, mult))):
        f = demazure(_weight_power(i, m, n) * f, i)
    return f


def lambda_step(dm: MultFamily, i: int, m0: int = 0) -> MultFamily:
    """
    ``(Lambda_i D, m~)`` with ``m~(s_i C) = m(C)`` and ``m~(s_i[i]) = m0``.
    """
    s = simple(i, dm.n)
    return MultFamily.from_pairs(dm.n, [(s.prefix(i), m0)] + [(s.act(c), m) for c, m in dm.items()])


# -- the minor-product oracle ------------------------------------------------

def _comp_le(rows: Sequence[int], cols: Sequence[int]) -> bool:
    return all(r <= c for r, c in zip(sorted(rows), sorted(cols)))


@dataclass(frozen=True)
class MinorProduct:
    """``prod_k Delta^{R_k}_{C_k}``, on an upper-triangular matrix if flagged."""
    columns: tuple[frozenset[int], ...]
    rows: tuple[frozenset[int], ...]
    flagged: bool = False

    def __post_init__(self):
        if len(self.columns) != len(self.rows):
            raise ValueError("one row set per column set")
        for r, c in zip(self.rows, self.columns):
            if len(r) != len(c):
                raise ValueError("row and column sets must have equal size")

    def weight(self, n: int) -> tuple[int, ...]:
        w = [0] * n
        for r in self.rows:
            for i in r:
                w[i - 1] += 1
        return tuple(w)

    def is_flag_compatible(self) -> bool:
        return all(_comp_le(r, c) for r, c in zip(self.rows, self.columns))

    def expand(self, n: int) -> dict[tuple[int, ...], int]:
        """The product as a polynomial in the entries ``x_ij`` (flattened exponent vectors)."""
        out = {(0,) * (n * n): 1}
        for r, c in zip(self.rows, self.columns):
            out = _poly_mul(out, _minor(tuple(sorted(r)), tuple(sorted(c)), n, self.flagged))
            if not out:
                break
        return out


def _sign(perm: Sequence[int]) -> int:
    s, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, cyc = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                cyc += 1
            if cyc % 2 == 0:
                s = -s
    return s


_MINOR_CACHE: dict = {}


def _minor(rows: tuple[int, ...], cols: tuple[int, ...], n: int, flagged: bool
           ) -> dict[tuple[int, ...], int]:
    key = (rows, cols, n, flagged)
    if key in _MINOR_CACHE:
        return _MINOR_CACHE[key]
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for perm in permutations(range(len(cols))):
        entries = [(rows[k], cols[perm[k]]) for k in range(len(rows))]
        if flagged and any(i > j for i, j in entries):
            continue
        mono = [0] * (n * n)
        for i, j in entries:
            mono[(i - 1) * n + (j - 1)] += 1
        out[tuple(mono)] += _sign(perm)
    result = {m: c for m, c in out.items() if c}
    _MINOR_CACHE[key] = result
    return result


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = defaultdict(int)
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            out[tuple(x + y for x, y in zip(m1, m2))] += c1 * c2
    return {m: c for m, c in out.items() if c}


def _check_guard(dm: MultFamily):
    if dm.n > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N}, got {dm.n}")
    if dm.boxes() > ORACLE_MAX_BOXES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_BOXES} boxes, got {dm.boxes()}")


def _row_choices(c: frozenset[int], n: int, flagged: bool) -> list[frozenset[int]]:
    out = []
    for r in combinations(range(1, n + 1), len(c)):
        if not flagged or _comp_le(r, c):
            out.append(frozenset(r))
    return out


def spanning_products(dm: MultFamily, flagged: bool) -> list[MinorProduct]:
    """
    The spanning set of the module, one product per multiset of row choices
    for each repeated column (the minors commute, so order is irrelevant).
    """
    _check_guard(dm)
    n = dm.n
    per_column = []
    cols: list[frozenset[int]] = []
    for c, m in dm.items():
        if m == 0:
            continue
        per_column.append(list(combinations_with_replacement(_row_choices(c, n, flagged), m)))
        cols.extend([c] * m)
    out = []
    for choice in product(*per_column):
        rows = tuple(r for block in choice for r in block)
        out.append(MinorProduct(tuple(cols), rows, flagged))
    return out


def weyl_char_oracle(dm: MultFamily, flagged: bool = True) -> LaurentPoly:
    """
    Character of the (flagged) Weyl module by ranks of weight spaces.

    Products of minors are grouped by weight; within a weight class each
    product is expanded in the matrix entries and the rank of the
    coefficient matrix is the dimension of that weight space.
    """
    n = dm.n
    by_weight: dict[tuple[int, ...], list[dict]] = defaultdict(list)
    for p in spanning_products(dm, flagged):
        poly = p.expand(n)
        if poly:
            by_weight[p.weight(n)].append(poly)
    terms = {}
    for weight in sorted(by_weight):
        polys = by_weight[weight]
        monos = sorted({m for poly in polys for m in poly})
        col = {m: k for k, m in enumerate(monos)}
        matrix = []
        for poly in polys:
            row = [0] * len(monos)
            for m, c in poly.items():
                row[col[m]] = c
            matrix.append(row)
        r = bareiss_rank(matrix)
        if r:
            terms[weight] = r
    return LaurentPoly(n, terms)


# -- fillings ----------------------------------------------------------------

def is_column_strict(filling: Sequence[Sequence[int]]) -> bool:
    return all(all(a < b for a, b in zip(col, col[1:])) for col in filling)


def is_flagged_filling(columns: Sequence[Iterable[int]], filling: Sequence[Sequence[int]]) -> bool:
    """No value exceeds the level of its box."""
    return all(v <= level for c, col in zip(columns, filling)
               for level, v in zip(sorted(c), col))


def enumerate_fillings(dm: MultFamily, flagged: bool = False) -> list[tuple[tuple[int, ...], ...]]:
    """
    Column-strict fillings of the diagram of ``dm`` by ``1..n``, one column
    per member repeated by multiplicity; each column lists its values from
    the top box down.  Flagged fillings put no value above its own level.
    """
    _check_guard(dm)
    n = dm.n
    cols = [c for c, m in dm.items() for _ in range(m)]
    options = []
    for c in cols:
        opts = [tuple(r) for r in combinations(range(1, n + 1), len(c))]
        if flagged:
            opts = [r for r in opts if _comp_le(r, c)]
        options.append(opts)
    return [tuple(f) for f in product(*options)]


def filling_to_minor_product(dm: MultFamily, filling: Sequence[Sequence[int]],
                             flagged: bool = False) -> MinorProduct:
    cols = tuple(c for c, m in dm.items() for _ in range(m))
    if len(cols) != len(filling):
        raise ValueError("filling has the wrong number of columns")
    return MinorProduct(cols, tuple(frozenset(col) for col in filling), flagged)
