"""
Integer Laurent polynomials in ``x_1, ..., x_n`` and the operators of S_n on them.

Terms are kept in a dict ``{exponent tuple: coefficient}`` with no zero
coefficients.  Coefficients are Python ints, so there is no overflow.

>>> f = LaurentPoly.monomial((2, 2, 1))
>>> print(demazure(f, 2))
x1^2*x2^2*x3 + x1^2*x2*x3^2
"""

from __future__ import annotations

import re
from collections import defaultdict
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly", "InexactDivisionError",
    "swap_vars", "divided_difference", "demazure", "demazure_w",
    "fundamental_weight", "eval_ones", "staircase",
]


class InexactDivisionError(ArithmeticError):
    """Division by ``x_i - x_{i+1}`` left a remainder.  Indicates a defect."""


Exps = tuple[int, ...]


class LaurentPoly:
    """An element of ``Z[x_1^{+-1}, ..., x_n^{+-1}]``."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exps, int] | None = None):
        self.n = n
        clean: dict[Exps, int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has length != {n}")
            if c:
                clean[exps] = int(c)
        self.terms = clean
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coef: int = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coef})

    @classmethod
    def var(cls, i: int, n: int) -> "LaurentPoly":
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): 1})

    @classmethod
    def constant(cls, c: int, n: int) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly(self.n, {tuple(a * k for a in e): c ** -k})
        result = LaurentPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial ``x^exps``."""
        exps = tuple(exps)
        return LaurentPoly(self.n, {tuple(a + b for a, b in zip(e, exps)): c
                                    for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.n)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- queries -------------------------------------------------------------

    def is_polynomial(self) -> bool:
        return all(a >= 0 for e in self.terms for a in e)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_symmetric(self) -> bool:
        return all(swap_vars(self, i) == self for i in range(1, self.n))

    def coefficients(self) -> list[int]:
        return list(self.terms.values())

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        """Graded lex, highest first, ``x_1`` heaviest."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # -- text / json ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(f"x{i}" if a == 1 else f"x{i}^{a}"
                            for i, a in enumerate(exps, 1) if a)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.n}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, n: int) -> "LaurentPoly":
        """
        Parse the printed form, e.g. ``"x1^2*x2 - 3*x1*x3^-1 + 2"``.

        >>> print(LaurentPoly.parse("x1^2*x2 + x1*x2^2", 2))
        x1^2*x2 + x1*x2^2
        """
        text = text.strip()
        if text == "0":
            return cls.zero(n)
        # split on +/- that are not part of an exponent
        tokens = re.split(r"(?<!\^)\s*([+-])\s*", text)
        sign = 1
        out = cls.zero(n)
        for tok in tokens:
            if tok == "":
                continue
            if tok in "+-":
                sign = -1 if tok == "-" else 1
                continue
            coef = sign
            exps = [0] * n
            for factor in tok.split("*"):
                factor = factor.strip()
                m = re.fullmatch(r"x(\d+)(?:\^(-?\d+))?", factor)
                if m:
                    i = int(m.group(1))
                    if not 1 <= i <= n:
                        raise ValueError(f"variable x{i} out of range for n={n}")
                    exps[i - 1] += int(m.group(2) or 1)
                elif re.fullmatch(r"\d+", factor):
                    coef *= int(factor)
                else:
                    raise ValueError(f"cannot parse factor {factor!r}")
            out = out + cls(n, {tuple(exps): coef})
            sign = 1
        return out

    def to_json(self) -> list[dict]:
        return [{"exps": list(e), "coef": c} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict], n: int) -> "LaurentPoly":
        return cls(n, {tuple(t["exps"]): t["coef"] for t in data})


def staircase(n: int) -> LaurentPoly:
    """``x_1^{n-1} x_2^{n-2} ... x_{n-1}``."""
    return LaurentPoly.monomial(tuple(n - k for k in range(1, n + 1)))


def _check_index(f: LaurentPoly, i: int):
    if not 1 <= i <= f.n - 1:
        raise ValueError(f"index {i} out of range 1..{f.n - 1}")


def swap_vars(f: LaurentPoly, i: int) -> LaurentPoly:
    """The action of ``s_i``: exchange ``x_i`` and ``x_{i+1}``."""
    _check_index(f, i)
    out = {}
    for e, c in f.terms.items():
        e = list(e)
        e[i - 1], e[i] = e[i], e[i - 1]
        out[tuple(e)] = c
    return LaurentPoly(f.n, out)


def _divide_by_root(f: LaurentPoly, i: int) -> LaurentPoly:
    """
    Exact quotient ``f / (x_i - x_{i+1})`` by long division.

    Terms are grouped by the exponents of the other variables and by
    ``a + b`` (the degree in ``x_i, x_{i+1}``); each group is a binary
    form divided from its highest power of ``x_i`` downward.
    """
    p, q = i - 1, i
    groups: dict[tuple, dict[int, int]] = defaultdict(dict)
    for e, c in f.terms.items():
        key = (e[:p], e[q + 1:], e[p] + e[q])
        groups[key][e[p]] = c
    out: dict[Exps, int] = {}
    for (head, tail, deg), coeffs in groups.items():
        lowest = min(coeffs)
        rem = dict(coeffs)
        while rem:
            a = max(rem)
            c = rem.pop(a)
            if a <= lowest:
                # leading x_i-power reached the bottom with nonzero remainder
                raise InexactDivisionError(f"nonzero remainder dividing by x{i} - x{i + 1}")
            # quotient term c x_i^{a-1} x_{i+1}^{deg-a}; subtract c x_i^{a-1} x_{i+1}^{deg-a+1}
            out[head + (a - 1, deg - a) + tail] = c
            r = rem.get(a - 1, 0) + c
            if r:
                rem[a - 1] = r
            else:
                rem.pop(a - 1, None)
    return LaurentPoly(f.n, out)


def divided_difference(f: LaurentPoly, i: int) -> LaurentPoly:
    """``(f - s_i f) / (x_i - x_{i+1})``."""
    _check_index(f, i)
    return _divide_by_root(f - swap_vars(f, i), i)


def demazure(f: LaurentPoly, i: int) -> LaurentPoly:
    """The isobaric operator ``(x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})``."""
    _check_index(f, i)
    xi = LaurentPoly.var(i, f.n)
    xj = LaurentPoly.var(i + 1, f.n)
    return _divide_by_root(xi * f - xj * swap_vars(f, i), i)


def demazure_w(f: LaurentPoly, w) -> LaurentPoly:
    """
    ``Lambda_w = Lambda_{i_1} ... Lambda_{i_l}`` along a reduced word of ``w``.

    ``w`` may be a permutation (the lexicographically smallest reduced word
    is used) or an explicit word.
    """
    from .weyl import Permutation, lex_min_reduced_word
    word = lex_min_reduced_word(w) if isinstance(w, Permutation) else tuple(w)
    for i in reversed(word):
        f = demazure(f, i)
    return f


def fundamental_weight(i: int, n: int) -> LaurentPoly:
    """``x_1 x_2 ... x_i``."""
    if not 1 <= i <= n:
        raise ValueError(f"fundamental weight {i} out of range for n={n}")
    return LaurentPoly.monomial((1,) * i + (0,) * (n - i))


def eval_ones(f: LaurentPoly) -> int:
    """Value at ``x = (1, ..., 1)``: the sum of the coefficients."""
    return sum(f.terms.values())
