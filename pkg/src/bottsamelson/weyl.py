"""
The symmetric group S_n as the Weyl group of GL(n).

Permutations are stored in one-line notation on ``1..n``.  Words are
sequences of simple-reflection indices ``i`` (standing for the transposition
``s_i = (i, i+1)``) and multiply left to right, so that the word
``(i_1, ..., i_l)`` is the permutation ``s_{i_1} s_{i_2} ... s_{i_l}`` acting
on the left of subsets: ``w[j] = {w(1), ..., w(j)}``.

>>> w = word_to_perm((1, 2, 1), 3)
>>> w
Permutation(3,2,1)
>>> w.length()
3
>>> reduced_words(w)
[(1, 2, 1), (2, 1, 2)]
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "Word", "Root",
    "compose", "inverse", "length", "longest", "identity", "simple",
    "word_to_perm", "is_reduced", "reduced_words", "lex_min_reduced_word",
    "first_ascent", "root_sequence", "min_coset_rep",
    "is_weak_order_increasing", "desing_word", "all_permutations",
    "REDUCED_WORDS_MAX_N",
]

# reduced-word enumeration blows up factorially past this
REDUCED_WORDS_MAX_N = 7


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation ``w(1), ..., w(n)``."""
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __iter__(self):
        return iter(self.image)

    def __len__(self):
        return len(self.image)

    def __repr__(self):
        return "Permutation(" + ",".join(map(str, self.image)) + ")"

    def __str__(self):
        return ",".join(map(str, self.image))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image, 1))

    def times_simple(self, i: int) -> "Permutation":
        """Right multiplication by ``s_i``: swap positions ``i`` and ``i+1``."""
        image = list(self.image)
        image[i - 1], image[i] = image[i], image[i - 1]
        return Permutation(tuple(image))

    def prefix(self, j: int) -> frozenset[int]:
        """The set ``w[j] = {w(1), ..., w(j)}``."""
        return frozenset(self.image[:j])

    def act(self, subset: Iterable[int]) -> frozenset[int]:
        """Left action on subsets, ``w C = {w(c) : c in C}``."""
        return frozenset(self.image[c - 1] for c in subset)

    def inversions(self) -> list[tuple[int, int]]:
        """Position pairs ``(a, b)``, ``a < b``, with ``w(a) > w(b)``."""
        img = self.image
        return [(a + 1, b + 1) for a in range(len(img))
                for b in range(a + 1, len(img)) if img[a] > img[b]]


@dataclass(frozen=True)
class Word:
    """A word ``(i_1, ..., i_l)`` in the simple reflections of S_n."""
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(i) for i in self.letters)
        if self.n < 1:
            raise ValueError("n must be positive")
        for i in letters:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"letter {i} out of range 1..{self.n - 1}")
        object.__setattr__(self, "letters", letters)

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    def __str__(self):
        return ",".join(map(str, self.letters))

    def perm(self) -> Permutation:
        return word_to_perm(self.letters, self.n)

    def is_reduced(self) -> bool:
        return is_reduced(self.letters, self.n)


@dataclass(frozen=True)
class Root:
    """The root ``sign * (e_a - e_b)`` with ``a < b``."""
    a: int
    b: int
    sign: int = 1

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError("roots are stored with a < b")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __repr__(self):
        return f"{'' if self.sign > 0 else '-'}({self.a},{self.b})"


def _check_n(*perms: Permutation) -> int:
    n = perms[0].n
    for p in perms[1:]:
        if p.n != n:
            raise ValueError(f"mismatched n: {n} vs {p.n}")
    return n


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``(u v)(i) = u(v(i))``."""
    _check_n(u, v)
    return Permutation(tuple(u.image[x - 1] for x in v.image))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, x in enumerate(w.image, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def length(w: Permutation) -> int:
    """Number of inversions."""
    img = w.image
    return sum(1 for a in range(len(img)) for b in range(a + 1, len(img))
               if img[a] > img[b])


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    """``w_0 = n, n-1, ..., 1``."""
    return Permutation(tuple(range(n, 0, -1)))


def simple(i: int, n: int) -> Permutation:
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} not defined for n={n}")
    return identity(n).times_simple(i)


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def word_to_perm(word: Sequence[int], n: int) -> Permutation:
    """The product ``s_{i_1} ... s_{i_l}``."""
    w = identity(n)
    for i in word:
        w = w.times_simple(i)
    return w


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(word_to_perm(word, n)) == len(word)


def reduced_words(w: Permutation, max_n: int = REDUCED_WORDS_MAX_N) -> list[tuple[int, ...]]:
    """
    All reduced words of ``w`` in lexicographic order.

    Depth-first on left descents: the first letter of a reduced word of
    ``w`` is any ``i`` with ``l(s_i w) < l(w)``.

    >>> len(reduced_words(longest(4)))
    16
    """
    if w.n > max_n:
        raise ValueError(f"reduced_words is limited to n <= {max_n}, got n={w.n}")
    memo: dict[tuple[int, ...], list[tuple[int, ...]]] = {}

    def words_of(img: tuple[int, ...]) -> list[tuple[int, ...]]:
        if img in memo:
            return memo[img]
        pos = [0] * len(img)
        for p, x in enumerate(img):
            pos[x - 1] = p
        out: list[tuple[int, ...]] = []
        any_descent = False
        for i in range(1, len(img)):
            # left descent at i: i+1 sits before i in one-line notation
            if pos[i] < pos[i - 1]:
                any_descent = True
                # s_i w swaps the values i and i+1
                nxt = tuple(i + 1 if x == i else i if x == i + 1 else x for x in img)
                out.extend((i,) + rest for rest in words_of(nxt))
        if not any_descent:
            out = [()]
        memo[img] = out
        return out

    return list(words_of(w.image))


def lex_min_reduced_word(w: Permutation) -> tuple[int, ...]:
    """The lexicographically smallest reduced word, built greedily."""
    word = []
    img = list(w.image)
    while True:
        pos = {x: p for p, x in enumerate(img)}
        for i in range(1, len(img)):
            if pos[i + 1] < pos[i]:
                word.append(i)
                img = [i + 1 if x == i else i if x == i + 1 else x for x in img]
                break
        else:
            return tuple(word)


def first_ascent(w: Permutation) -> int | None:
    """Smallest ``i`` with ``w(i+1) > w(i)``; ``None`` for ``w_0``."""
    for i in range(1, w.n):
        if w(i + 1) > w(i):
            return i
    return None


def root_sequence(word: Sequence[int], n: int) -> list[Root]:
    """
    ``beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k})`` with sign.

    >>> root_sequence((1, 2, 1), 3)
    [(1,2), (1,3), (2,3)]
    >>> root_sequence((1, 1), 2)
    [(1,2), -(1,2)]
    """
    w = identity(n)
    roots = []
    for i in word:
        a, b = w(i), w(i + 1)
        roots.append(Root(a, b, 1) if a < b else Root(b, a, -1))
        w = w.times_simple(i)
    return roots


def min_coset_rep(w: Permutation, j: int) -> Permutation:
    """
    Minimal-length element of ``w (S_j x S_{n-j})``: sort each block.

    >>> min_coset_rep(Permutation((2, 4, 1, 5, 3)), 3)
    Permutation(1,2,4,3,5)
    """
    if not 1 <= j <= w.n:
        raise ValueError(f"j={j} out of range 1..{w.n}")
    img = w.image
    return Permutation(tuple(sorted(img[:j])) + tuple(sorted(img[j:])))


def is_weak_order_increasing(ws: Sequence[Permutation]) -> bool:
    """True iff ``l(w_{k-1}) + l(w_{k-1}^{-1} w_k) = l(w_k)`` along the list (from ``e``)."""
    if not ws:
        raise ValueError("empty sequence")
    return _first_weak_order_failure(ws) is None


def _first_weak_order_failure(ws: Sequence[Permutation]) -> int | None:
    prev = identity(_check_n(*ws))
    for k, w in enumerate(ws):
        if length(prev) + length(compose(inverse(prev), w)) != length(w):
            return k
        prev = w
    return None


def desing_word(ws: Sequence[Permutation], js: Sequence[int]
                ) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Reduced word desingularizing the flagged configuration variety of ``(ws, js)``.

    The representatives are built relative to the previous one:
    ``v_k = v_{k-1} * min_coset_rep(v_{k-1}^{-1} w_k, j_k)``.  Since
    ``v_{k-1}`` is a weak-order prefix of ``w_k``, so is ``v_k``, and
    ``v_k[j_k] = w_k[j_k]``.  The word concatenates the lexicographically
    smallest reduced words of the increments.  Returns the word and the
    positions ``l(1) <= ... <= l(K)`` with
    ``s_{i_1} ... s_{i_{l(k)}} [j_k] = w_k[j_k]``.
    """
    if not ws:
        raise ValueError("desing_word needs at least one permutation")
    if len(ws) != len(js):
        raise ValueError("ws and js must have equal length")
    n = _check_n(*ws)
    bad = _first_weak_order_failure(ws)
    if bad is not None:
        raise ValueError(f"sequence is not increasing in the weak order at index {bad}")
    word: list[int] = []
    positions = []
    prev = identity(n)
    for k, (w, j) in enumerate(zip(ws, js)):
        step = min_coset_rep(compose(inverse(prev), w), j)
        rep = compose(prev, step)
        if length(rep) != length(prev) + length(step):
            raise ValueError(f"coset representatives not weak-order increasing at index {k}")
        word.extend(lex_min_reduced_word(step))
        positions.append(len(word))
        prev = rep
    return tuple(word), tuple(positions)
