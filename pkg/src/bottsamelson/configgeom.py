"""
Configurations of rational subspaces indexed by subset families, and
membership tests for flagged inclusion varieties and Bott-Samelson images.

Every decision is a rank comparison over Q; no floating point.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .families import (SubsetFamily, chamber_sets, format_subset, full_chamber_family,
                       interval)
from .linalg import nullspace, rank, rref, to_fraction, transpose

__all__ = [
    "Subspace", "Configuration",
    "coordinate_subspace", "standard_subspace", "generating_point",
    "dim_sum", "dim_intersection", "intersection", "contains",
    "is_inclusion_point", "theta_image_conditions", "conjecture_conditions",
    "random_upper_triangular", "random_invertible", "random_subspace_between",
    "positional_config", "parse_config_text", "format_config_text", "config_from_json", "config_to_json",
    "CONJECTURE_MAX_SIZE", "SAMPLE_RANGE",
]

CONJECTURE_MAX_SIZE = 12
SAMPLE_RANGE = 9  # random entries are integers in [-9, 9]


@dataclass(frozen=True, eq=False)
class Subspace:
    """Column span of an ``n x k`` rational matrix of full column rank."""
    n: int
    basis: tuple[tuple[Fraction, ...], ...]  # n rows of k entries

    def __post_init__(self):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in self.basis)
        if len(rows) != self.n:
            raise ValueError(f"basis must have {self.n} rows, got {len(rows)}")
        k = len(rows[0]) if rows else 0
        if any(len(r) != k for r in rows):
            raise ValueError("ragged basis matrix")
        if rank(rows) != k:
            raise ValueError("basis columns are linearly dependent")
        object.__setattr__(self, "basis", rows)

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[Sequence]) -> "Subspace":
        if not columns:
            return cls(n, tuple(() for _ in range(n)))
        return cls(n, tuple(tuple(row) for row in transpose(columns)))

    @classmethod
    def span(cls, n: int, vectors: Sequence[Sequence]) -> "Subspace":
        """Span of arbitrary vectors; dependent ones are discarded."""
        if not vectors:
            return cls.from_columns(n, [])
        reduced, _ = rref(vectors)
        return cls.from_columns(n, reduced)

    @property
    def dim(self) -> int:
        return len(self.basis[0]) if self.basis else 0

    def columns(self) -> list[list[Fraction]]:
        return transpose(self.basis) if self.dim else []

    def apply(self, g: Sequence[Sequence]) -> "Subspace":
        """``g V`` for an invertible ``n x n`` matrix ``g``."""
        cols = [[sum(to_fraction(g[i][j]) * v[j] for j in range(self.n)) for i in range(self.n)]
                for v in self.columns()]
        return Subspace.from_columns(self.n, cols)

    def __le__(self, other: "Subspace") -> bool:
        return contains(other, self)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.dim == other.dim and contains(self, other)

    def __hash__(self):
        return hash((self.n, self.dim))

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def _concat_rank(spaces: Iterable[Subspace]) -> int:
    cols = [c for v in spaces for c in v.columns()]
    return rank(cols) if cols else 0


def contains(big: Subspace, small: Subspace) -> bool:
    """``small`` is a subspace of ``big``."""
    return _concat_rank([big, small]) == big.dim


def coordinate_subspace(c: Iterable[int], n: int) -> Subspace:
    """``E_C``, spanned by ``e_j`` for ``j`` in ``C``."""
    cols = []
    for j in sorted(c):
        e = [0] * n
        e[j - 1] = 1
        cols.append(e)
    return Subspace.from_columns(n, cols)


def standard_subspace(k: int, n: int) -> Subspace:
    """``Q^k = E_{[k]}``."""
    return coordinate_subspace(range(1, k + 1), n)


@dataclass(frozen=True)
class Configuration:
    """One subspace per member of a family, ``dim V_C = |C|``; members may repeat positionally."""
    members: tuple[frozenset[int], ...]
    spaces: tuple[Subspace, ...]

    def __post_init__(self):
        if len(self.members) != len(self.spaces):
            raise ValueError("one subspace per member is required")
        for c, v in zip(self.members, self.spaces):
            if v.dim != len(c):
                raise ValueError(f"V_{format_subset(c)} has dim {v.dim}, expected {len(c)}")

    @property
    def n(self) -> int:
        return self.spaces[0].n if self.spaces else 0

    def __getitem__(self, c) -> Subspace:
        return self.spaces[self.members.index(frozenset(c))]

    def __len__(self):
        return len(self.spaces)

    def apply(self, g) -> "Configuration":
        return Configuration(self.members, tuple(v.apply(g) for v in self.spaces))

    def replace(self, c, space: Subspace) -> "Configuration":
        k = self.members.index(frozenset(c))
        spaces = list(self.spaces)
        spaces[k] = space
        return Configuration(self.members, tuple(spaces))


def generating_point(family: SubsetFamily | Sequence[Iterable[int]], n: int | None = None
                     ) -> Configuration:
    """``z_D = (E_C)_{C in D}``."""
    if isinstance(family, SubsetFamily):
        n = family.n
    members = tuple(frozenset(c) for c in family)
    if n is None:
        raise ValueError("n is required")
    return Configuration(members, tuple(coordinate_subspace(c, n) for c in members))


def dim_sum(*spaces: Subspace) -> int:
    return _concat_rank(spaces)


def intersection(*spaces: Subspace) -> Subspace:
    """Intersect pairwise through the kernel of ``[U | -V]``."""
    if not spaces:
        raise ValueError("need at least one subspace")
    n = spaces[0].n
    acc = spaces[0]
    for v in spaces[1:]:
        if acc.dim == 0 or v.dim == 0:
            return Subspace.from_columns(n, [])
        ucols = acc.columns()
        block = [list(urow) + [-x for x in vrow] for urow, vrow in zip(acc.basis, v.basis)]
        kernel = nullspace(block, acc.dim + v.dim)
        vecs = [[sum(a[t] * ucols[t][i] for t in range(acc.dim)) for i in range(n)]
                for a in kernel]
        acc = Subspace.span(n, vecs)
    return acc


def dim_intersection(*spaces: Subspace) -> int:
    if len(spaces) == 2:
        u, v = spaces
        return u.dim + v.dim - dim_sum(u, v)
    return intersection(*spaces).dim


# -- inclusion variety -------------------------------------------------------

def is_inclusion_point(word: Sequence[int], config: Configuration) -> bool:
    """
    Membership of ``config`` (indexed by ``D+`` of ``word``) in the flagged
    inclusion variety: ``C < C'`` forces ``V_C <= V_C'``, and ``V_[i] = Q^i``.
    """
    n = config.n
    dplus = full_chamber_family(word, n)
    if set(config.members) != set(dplus.members) or len(config.members) != len(dplus):
        raise ValueError("configuration is not indexed by the full chamber family of the word")
    for k in range(1, n + 1):
        if config[interval(k)] != standard_subspace(k, n):
            return False
    for c, d in combinations(config.members, 2):
        if c < d and not contains(config[d], config[c]):
            return False
        if d < c and not contains(config[c], config[d]):
            return False
    return True


def theta_image_conditions(word: Sequence[int], config: Configuration | Sequence[Subspace]) -> bool:
    """
    Whether positional subspaces ``V_1, ..., V_l`` (``dim V_k = i_k``) come
    from a chain of flags ``F^(0) = standard``, ``F^(k)`` differing from
    ``F^(k-1)`` only in dimension ``i_k`` where it equals ``V_k``.

    That is, for every ``k``: ``V_k`` lies in the last earlier space of
    dimension ``i_k + 1`` (``k-``) or in ``Q^{i_k+1}`` if there is none, and
    contains the last earlier space of dimension ``i_k - 1`` or
    ``Q^{i_k-1}`` if there is none.
    """
    word = tuple(word)
    if isinstance(config, Configuration):
        if config.members and list(config.members) != chamber_sets(word, config.n):
            raise ValueError("configuration is not indexed by the chamber sets of the word")
        spaces = list(config.spaces)
    else:
        spaces = list(config)
    if len(spaces) != len(word):
        raise ValueError("one subspace per letter is required")
    if not spaces:
        return True
    n = spaces[0].n
    for k, (i, v) in enumerate(zip(word, spaces)):
        if v.dim != i:
            raise ValueError(f"position {k + 1}: dim {v.dim} != letter {i}")
        above = next((m for m in range(k - 1, -1, -1) if word[m] == i + 1), None)
        below = next((m for m in range(k - 1, -1, -1) if word[m] == i - 1), None)
        upper = spaces[above] if above is not None else standard_subspace(i + 1, n)
        lower = spaces[below] if below is not None else standard_subspace(i - 1, n)
        if not contains(upper, v) or not contains(v, lower):
            return False
    return True


def positional_config(word: Sequence[int], config: Configuration) -> list[Subspace]:
    """Read a ``D+``-indexed configuration in word order ``(V_{C_1}, ..., V_{C_l})``."""
    return [config[c] for c in chamber_sets(word, config.n)]


# -- conjecture conditions ---------------------------------------------------

def conjecture_conditions(family: SubsetFamily | Sequence[Iterable[int]], config: Configuration,
                          flagged: bool = False, max_size: int = CONJECTURE_MAX_SIZE) -> bool:
    """
    For every nonempty subfamily ``D'``:
    ``dim(cap V_C) >= |cap C|`` and ``dim(sum V_C) <= |cup C|``.

    ``flagged`` prepends ``Q^1, ..., Q^n`` indexed by ``[1], ..., [n]``.
    """
    members = [frozenset(c) for c in family]
    if tuple(members) != config.members:
        raise ValueError("configuration members do not match the family")
    if len(members) > max_size:
        raise ValueError(f"conjecture check limited to {max_size} members, got {len(members)}")
    spaces = list(config.spaces)
    n = config.n
    if flagged:
        members = [interval(k) for k in range(1, n + 1)] + members
        spaces = [standard_subspace(k, n) for k in range(1, n + 1)] + spaces
    total = len(members)

    # depth-first over subfamilies, carrying the running intersection
    def visit(start: int, cap_set, cap_space, cup_set, chosen) -> bool:
        for t in range(start, total):
            c, v = members[t], spaces[t]
            new_cap_set = c if cap_set is None else cap_set & c
            new_cap = v if cap_space is None else intersection(cap_space, v)
            new_cup = cup_set | c
            picked = chosen + [v]
            if new_cap.dim < len(new_cap_set):
                return False
            if dim_sum(*picked) > len(new_cup):
                return False
            if not visit(t + 1, new_cap_set, new_cap, new_cup, picked):
                return False
        return True

    return visit(0, None, None, frozenset(), [])


# -- sampling ----------------------------------------------------------------

def random_upper_triangular(n: int, rng: random.Random, r: int = SAMPLE_RANGE) -> list[list[int]]:
    """Integer entries in ``[-r, r]``, nonzero diagonal."""
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = rng.randint(-r, r)
        while g[i][i] == 0:
            g[i][i] = rng.randint(-r, r)
    return g


def random_invertible(n: int, rng: random.Random, r: int = SAMPLE_RANGE) -> list[list[int]]:
    while True:
        g = [[rng.randint(-r, r) for _ in range(n)] for _ in range(n)]
        if rank(g) == n:
            return g


def random_subspace_between(lower: Subspace, upper: Subspace, dim: int,
                            rng: random.Random, r: int = SAMPLE_RANGE) -> Subspace:
    """A random ``dim``-space ``V`` with ``lower <= V <= upper``."""
    n = upper.n
    if not lower.dim <= dim <= upper.dim:
        raise ValueError("dimension outside [dim lower, dim upper]")
    ucols = upper.columns()
    while True:
        vecs = list(lower.columns())
        for _ in range(dim - lower.dim):
            coeffs = [rng.randint(-r, r) for _ in ucols]
            vecs.append([sum(a * u[i] for a, u in zip(coeffs, ucols)) for i in range(n)])
        if vecs and rank(vecs) == dim:
            return Subspace.from_columns(n, vecs)
        if not vecs and dim == 0:
            return Subspace.from_columns(n, [])


# -- file formats ------------------------------------------------------------

def _parse_rational(tok: str) -> Fraction:
    return Fraction(tok)


def parse_config_text(text: str, n: int) -> list[Subspace]:
    """
    Blocks separated by blank lines; each block is the ``n x k`` basis
    matrix, one row per line of space-separated rationals (``1/2 0 3``).
    Lines starting with ``#`` are ignored.  A ``0``-dimensional space is
    written as a block of ``n`` lines containing ``-``.
    """
    blocks: list[list[str]] = [[]]
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#"):
            continue
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append(line)
    if not blocks[-1]:
        blocks.pop()
    spaces = []
    for b, block in enumerate(blocks):
        if len(block) != n:
            raise ValueError(f"block {b + 1} has {len(block)} rows, expected {n}")
        rows = [[] if line == "-" else [_parse_rational(t) for t in line.split()] for line in block]
        spaces.append(Subspace(n, tuple(tuple(r) for r in rows)))
    return spaces


def format_config_text(spaces: Sequence[Subspace]) -> str:
    blocks = []
    for v in spaces:
        blocks.append("\n".join(" ".join(str(x) for x in row) if row else "-" for row in v.basis))
    return "\n\n".join(blocks) + "\n"


def config_to_json(spaces: Sequence[Subspace]) -> str:
    n = spaces[0].n if spaces else 0
    return json.dumps({"n": n, "spaces": [[[str(x) for x in row] for row in v.basis]
                                          for v in spaces]})


def config_from_json(text: str) -> list[Subspace]:
    data = json.loads(text)
    n = data["n"]
    return [Subspace(n, tuple(tuple(Fraction(x) for x in row) for row in block))
            for block in data["spaces"]]
