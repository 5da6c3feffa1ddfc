"""
Subset families of ``[n]``: chamber families of reduced words, strong
separation and its relatives, inversion families, and the operations
``w D`` and ``Lambda_i D`` used by the character recursion.

Subsets are ``frozenset``s of ints.  A ``SubsetFamily`` keeps its members in
insertion order (chamber families remember word order) but compares as a
set of subsets.

>>> print(chamber_family((1, 2, 1), 3))
2, 23, 3
>>> is_strongly_separated(parse_family("13,2", 3))
False
"""

from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .weyl import Permutation, identity, is_reduced, simple

__all__ = [
    "SubsetFamily", "MultFamily", "COUNTERS",
    "interval", "format_subset", "parse_subset", "parse_family", "parse_mult_family",
    "chamber_sets", "chamber_family", "full_chamber_family", "family_of_list",
    "strongly_separated_pair", "separation_violation", "is_strongly_separated",
    "is_percent_avoiding", "is_northwest", "northwest_order", "find_embedding_word",
    "is_i_free", "lambda_family", "act", "inversion_family", "EmbeddingSearchError",
]

log = logging.getLogger(__name__)

# incremented when a chamber set repeats inside one word (never observed for reduced words)
COUNTERS: Counter = Counter()

NORTHWEST_MAX_SIZE = 12
EMBEDDING_MAX_N = 7

Subset = frozenset


def interval(k: int) -> frozenset[int]:
    """``[k] = {1, ..., k}``."""
    return frozenset(range(1, k + 1))


def format_subset(c: Iterable[int], n: int = 9) -> str:
    """Digit string ``"124"`` for ``n <= 9``, brace form ``"{1,2,4}"`` otherwise."""
    elems = sorted(c)
    if n <= 9:
        return "".join(map(str, elems)) if elems else "{}"
    return "{" + ",".join(map(str, elems)) + "}"


def parse_subset(text: str, n: int) -> frozenset[int]:
    text = text.strip()
    if text.startswith("{"):
        if not text.endswith("}"):
            raise ValueError(f"unbalanced braces in {text!r}")
        body = text[1:-1].strip()
        elems = [int(t) for t in body.split(",")] if body else []
    else:
        if n > 9:
            raise ValueError("digit-string subsets need n <= 9; use {a,b,...}")
        if not text.isdigit():
            raise ValueError(f"cannot parse subset {text!r}")
        elems = [int(ch) for ch in text]
    if len(set(elems)) != len(elems):
        raise ValueError(f"repeated element in subset {text!r}")
    for e in elems:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} of {text!r} outside [1, {n}]")
    return frozenset(elems)


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


@dataclass(frozen=True, eq=False)
class SubsetFamily:
    """An ordered, duplicate-free list of subsets of ``[n]``; equality ignores order."""
    n: int
    members: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        members = tuple(frozenset(c) for c in self.members)
        if len(set(members)) != len(members):
            raise ValueError("subset families may not repeat a subset")
        for c in members:
            if any(not 1 <= e <= self.n for e in c):
                raise ValueError(f"subset {sorted(c)} not contained in [1, {self.n}]")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_iter(cls, n: int, subsets: Iterable[Iterable[int]]) -> "SubsetFamily":
        """Build a family, dropping repeats but keeping first occurrences in order."""
        seen, out = set(), []
        for c in subsets:
            c = frozenset(c)
            if c not in seen:
                seen.add(c)
                out.append(c)
        return cls(n, tuple(out))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, c):
        return frozenset(c) in set(self.members)

    def __eq__(self, other):
        if not isinstance(other, SubsetFamily):
            return NotImplemented
        return self.n == other.n and set(self.members) == set(other.members)

    def __hash__(self):
        return hash((self.n, frozenset(self.members)))

    def __str__(self):
        return ", ".join(format_subset(c, self.n) for c in self.members)

    def __repr__(self):
        return f"SubsetFamily(n={self.n}, [{self}])"

    def as_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.members)

    def issubset(self, other: "SubsetFamily") -> bool:
        return set(self.members) <= set(other.members)

    def lex_sorted(self) -> list[frozenset[int]]:
        return sorted(self.members, key=lambda c: tuple(sorted(c)))

    def to_json(self) -> dict:
        return {"n": self.n, "members": [sorted(c) for c in self.members]}


@dataclass(frozen=True, eq=False)
class MultFamily:
    """A subset family with a multiplicity ``m(C) >= 0`` for each member."""
    family: SubsetFamily
    mult: tuple[int, ...]

    def __post_init__(self):
        mult = tuple(int(m) for m in self.mult)
        if len(mult) != len(self.family):
            raise ValueError("one multiplicity per member is required")
        if any(m < 0 for m in mult):
            raise ValueError("multiplicities must be nonnegative")
        object.__setattr__(self, "mult", mult)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[Iterable[int], int]]) -> "MultFamily":
        """Merge repeated subsets by adding multiplicities."""
        order: dict[frozenset, int] = {}
        for c, m in pairs:
            c = frozenset(c)
            order[c] = order.get(c, 0) + m
        return cls(SubsetFamily(n, tuple(order)), tuple(order.values()))

    @classmethod
    def ones(cls, family: SubsetFamily) -> "MultFamily":
        return cls(family, (1,) * len(family))

    @property
    def n(self) -> int:
        return self.family.n

    @property
    def members(self) -> tuple[frozenset[int], ...]:
        return self.family.members

    def items(self):
        return zip(self.family.members, self.mult)

    def as_dict(self) -> dict[frozenset[int], int]:
        return dict(self.items())

    def __getitem__(self, c) -> int:
        return self.as_dict().get(frozenset(c), 0)

    def __len__(self):
        return len(self.mult)

    def __eq__(self, other):
        if not isinstance(other, MultFamily):
            return NotImplemented
        return self.n == other.n and self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash((self.n, frozenset(self.items())))

    def __str__(self):
        return ", ".join(f"{format_subset(c, self.n)}:{m}" for c, m in self.items())

    def __repr__(self):
        return f"MultFamily(n={self.n}, [{self}])"

    def boxes(self) -> int:
        return sum(len(c) * m for c, m in self.items())

    def support(self) -> "MultFamily":
        """Drop zero-multiplicity members."""
        return MultFamily.from_pairs(self.n, ((c, m) for c, m in self.items() if m))

    def with_member(self, c: Iterable[int], m: int = 0) -> "MultFamily":
        return MultFamily.from_pairs(self.n, list(self.items()) + [(frozenset(c), m)])

    def to_json(self) -> dict:
        return {"n": self.n, "members": [sorted(c) for c in self.members],
                "mult": list(self.mult)}

    @classmethod
    def from_json(cls, data: Mapping) -> "MultFamily":
        n = data["n"]
        mult = data.get("mult") or [1] * len(data["members"])
        return cls.from_pairs(n, zip(data["members"], mult))


def parse_family(text: str, n: int) -> SubsetFamily:
    """``"2,23,3"`` or ``"{1,2},{10}"``."""
    return SubsetFamily.from_iter(n, (parse_subset(t, n) for t in _split_top_level(text)))


def parse_mult_family(text: str, n: int, mult: str | None = None) -> MultFamily:
    """
    ``"234:2,4:3"``; or a plain family with ``mult`` given as ``"2,0,3"``.

    >>> print(parse_mult_family("234,34,4", 4, "2,0,3"))
    234:2, 34:0, 4:3
    """
    parts = _split_top_level(text)
    if mult is not None:
        ms = [int(t) for t in mult.split(",") if t.strip()]
        if len(ms) != len(parts):
            raise ValueError("family and multiplicity lists differ in length")
        pairs = [(parse_subset(p, n), m) for p, m in zip(parts, ms)]
    else:
        pairs = []
        for p in parts:
            if ":" in p:
                c, m = p.rsplit(":", 1)
                pairs.append((parse_subset(c, n), int(m)))
            else:
                pairs.append((parse_subset(p, n), 1))
    return MultFamily.from_pairs(n, pairs)


# -- chamber families --------------------------------------------------------

def chamber_sets(word: Sequence[int], n: int) -> list[frozenset[int]]:
    """``C_k = s_{i_1} ... s_{i_k} [i_k]`` for every position, reduced or not."""
    w = identity(n)
    out = []
    for i in word:
        w = w.times_simple(i)
        out.append(w.prefix(i))
    return out


def chamber_family(word: Sequence[int], n: int) -> SubsetFamily:
    """
    The reduced chamber family ``D_i`` in word order.

    >>> print(chamber_family((3, 4, 6, 5), 7))
    124, 1245, 123457, 12457
    """
    if not is_reduced(word, n):
        raise ValueError(f"word {tuple(word)} is not reduced")
    sets = chamber_sets(word, n)
    if len(set(sets)) != len(sets):
        COUNTERS["duplicate_chamber_set"] += 1
        log.warning("repeated chamber set in word %s", tuple(word))
    return SubsetFamily.from_iter(n, sets)


def full_chamber_family(word: Sequence[int], n: int) -> SubsetFamily:
    """``D+_i = [1], ..., [n]`` followed by ``D_i``."""
    base = chamber_family(word, n)
    return SubsetFamily.from_iter(n, [interval(k) for k in range(1, n + 1)] + list(base))


def family_of_list(ws: Sequence[Permutation], js: Sequence[int], n: int | None = None) -> SubsetFamily:
    """``{w_1[j_1], ..., w_K[j_K]}`` with repeats removed."""
    if len(ws) != len(js):
        raise ValueError("ws and js must have equal length")
    if n is None:
        if not ws:
            raise ValueError("n is required for an empty list")
        n = ws[0].n
    return SubsetFamily.from_iter(n, (w.prefix(j) for w, j in zip(ws, js)))


# -- separation conditions ---------------------------------------------------

def _elementwise_less(s: frozenset, t: frozenset) -> bool:
    # vacuous when either side is empty
    return not s or not t or max(s) < min(t)


def strongly_separated_pair(c: Iterable[int], d: Iterable[int]) -> bool:
    c, d = frozenset(c), frozenset(d)
    return _elementwise_less(c - d, d - c) or _elementwise_less(d - c, c - d)


def separation_violation(family: Iterable[Iterable[int]]) -> tuple[frozenset, frozenset] | None:
    """The first pair (in member order) that is not strongly separated."""
    members = [frozenset(c) for c in family]
    for a, b in combinations(members, 2):
        if not strongly_separated_pair(a, b):
            return a, b
    return None


def is_strongly_separated(family: Iterable[Iterable[int]]) -> bool:
    return separation_violation(family) is None


def is_percent_avoiding(family: Iterable[Iterable[int]]) -> bool:
    """
    The lexicographic reformulation: with members sorted lexicographically,
    ``i1 in C_j1``, ``i2 in C_j2``, ``i1 > i2``, ``j1 < j2`` forces
    ``i1 in C_j2`` or ``i2 in C_j1``.
    """
    members = sorted({frozenset(c) for c in family}, key=lambda c: tuple(sorted(c)))
    for j1, c1 in enumerate(members):
        for c2 in members[j1 + 1:]:
            for i1 in c1:
                for i2 in c2:
                    if i1 > i2 and i1 not in c2 and i2 not in c1:
                        return False
    return True


def _northwest_before(c1: frozenset, c2: frozenset) -> bool:
    # placing c1 before c2: every i2 in c2 below some i1 in c1 must lie in c1
    if not c1:
        return True
    top = max(c1)
    return all(i in c1 for i in c2 if i < top)


def northwest_order(family: Iterable[Iterable[int]],
                    max_size: int = NORTHWEST_MAX_SIZE) -> list[frozenset] | None:
    """
    An ordering witnessing the northwest condition, or ``None``.

    The condition is pairwise between earlier and later members, so a
    search over placed-member bitmasks with memoized dead ends suffices.
    """
    members = list(dict.fromkeys(frozenset(c) for c in family))
    k = len(members)
    if k > max_size:
        raise ValueError(f"northwest search is limited to {max_size} members, got {k}")
    ok = [[_northwest_before(a, b) for b in members] for a in members]
    dead: set[int] = set()
    order: list[int] = []

    def extend(placed: int) -> bool:
        if placed == (1 << k) - 1:
            return True
        if placed in dead:
            return False
        for j in range(k):
            if placed >> j & 1:
                continue
            if all(ok[p][j] for p in order):
                order.append(j)
                if extend(placed | 1 << j):
                    return True
                order.pop()
        dead.add(placed)
        return False

    return [members[j] for j in order] if extend(0) else None


def is_northwest(family: Iterable[Iterable[int]], max_size: int = NORTHWEST_MAX_SIZE) -> bool:
    return northwest_order(family, max_size) is not None


class EmbeddingSearchError(RuntimeError):
    """No reduced word contains the family; impossible for strongly separated input."""


def find_embedding_word(family: SubsetFamily, max_n: int = EMBEDDING_MAX_N) -> tuple[int, ...]:
    """
    A shortest reduced word ``i`` with ``family`` contained in ``D+_i``;
    ties broken lexicographically.

    Breadth-first over (permutation, covered members) states.  Expanding
    letters in increasing order within each level makes the first path
    reaching a state the lexicographically smallest one.

    >>> find_embedding_word(parse_family("24,34,4", 4))
    (1, 2, 3, 2, 1, 2)
    """
    n = family.n
    if n > max_n:
        raise ValueError(f"embedding search is limited to n <= {max_n}, got n={n}")
    bad = separation_violation(family)
    if bad is not None:
        a, b = bad
        raise ValueError("family is not strongly separated: "
                         f"({format_subset(a, n)}, {format_subset(b, n)})")
    # [0] = {} and [k] lie in every D+
    targets = [c for c in family.members if c not in {interval(k) for k in range(0, n + 1)}]
    index = {c: t for t, c in enumerate(targets)}
    full = (1 << len(targets)) - 1
    start = (identity(n).image, 0)
    if full == 0:
        return ()
    seen = {start}
    frontier: deque = deque([(start, ())])
    while frontier:
        (img, mask), word = frontier.popleft()
        for i in range(1, n):
            if img[i - 1] > img[i]:
                continue  # would not stay reduced
            nxt = list(img)
            nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
            nxt = tuple(nxt)
            c = frozenset(nxt[:i])
            m = mask | (1 << index[c]) if c in index else mask
            state = (nxt, m)
            if state in seen:
                continue
            if m == full:
                return word + (i,)
            seen.add(state)
            frontier.append((state, word + (i,)))
    raise EmbeddingSearchError(f"no reduced word embeds {family}")


# -- group action and the Lambda_i recursion --------------------------------

def act(w: Permutation, family: SubsetFamily) -> SubsetFamily:
    """``w D = {w C : C in D}``, member order kept."""
    return SubsetFamily.from_iter(family.n, (w.act(c) for c in family.members))


def is_i_free(family: Iterable[Iterable[int]], i: int) -> bool:
    """No member meets ``{i, i+1}`` in exactly ``{i+1}``."""
    return all(frozenset(c) & {i, i + 1} != {i + 1} for c in family)


def lambda_family(family: SubsetFamily, i: int) -> SubsetFamily:
    """``Lambda_i D = {s_i[i]} u s_i D`` with ``s_i[i]`` first."""
    n = family.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"i={i} out of range 1..{n - 1}")
    s = simple(i, n)
    return SubsetFamily.from_iter(n, [s.prefix(i)] + [s.act(c) for c in family.members])


def inversion_family(w: Permutation) -> MultFamily:
    """
    ``C_j(w) = {i < j : w(i) > w(j)}``, empty sets dropped, repeats merged.

    >>> from .weyl import Permutation
    >>> print(inversion_family(Permutation((2, 4, 1, 5, 3))))
    12:1, 24:1
    """
    pairs = []
    for j in range(1, w.n + 1):
        c = frozenset(i for i in range(1, j) if w(i) > w(j))
        if c:
            pairs.append((c, 1))
    return MultFamily.from_pairs(w.n, pairs)
