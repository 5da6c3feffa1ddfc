"""
Batch checks shared by the command line and the acceptance tests.

Each sweep returns a small report with ``total``, ``failures`` and ``ok``;
nothing here raises on a mathematical mismatch.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterator

from .characters import demazure_char, full_char, weyl_char_oracle
from .configgeom import (conjecture_conditions, generating_point,
                         is_inclusion_point, positional_config, random_invertible,
                         random_upper_triangular, theta_image_conditions)
from .families import (MultFamily, SubsetFamily, full_chamber_family,
                       inversion_family, is_strongly_separated)
from .poly import LaurentPoly, demazure, divided_difference, swap_vars
from .weyl import all_permutations, longest, reduced_words

__all__ = [
    "SweepReport", "random_poly", "poly_corpus", "operator_identities",
    "ss_corpus", "oracle_sweep", "zero_extension_sweep", "config_sweep",
    "conjecture_sweep",
]


@dataclass
class SweepReport:
    name: str
    total: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, detail=None):
        self.total += 1
        if not passed:
            self.failures.append(detail)

    def __str__(self):
        return f"{self.name}: {self.total - len(self.failures)}/{self.total} pass"

    def to_json(self) -> dict:
        return {"name": self.name, "total": self.total, "failed": len(self.failures),
                "failures": [str(f) for f in self.failures[:20]]}


# -- operator identities -----------------------------------------------------

def random_poly(n: int, rng: random.Random, max_terms: int = 4, max_deg: int = 3,
                coef: int = 5) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(0, max_deg) for _ in range(n))
        terms[exps] = terms.get(exps, 0) + rng.choice([c for c in range(-coef, coef + 1) if c])
    return LaurentPoly(n, terms)


def poly_corpus(size: int = 500, seed: int = 0) -> list[LaurentPoly]:
    """Seeded random polynomials in 3 or 4 variables."""
    rng = random.Random(seed)
    return [random_poly(rng.choice((3, 4)), rng) for _ in range(size)]


def operator_identities(corpus: list[LaurentPoly] | None = None) -> SweepReport:
    """
    ``d_i^2 = 0``, ``L_i^2 = L_i``, ``L_i = d_i x_i``, and the braid relations
    for ``d`` and ``L`` on every polynomial and every index.
    """
    report = SweepReport("operators")
    for f in corpus if corpus is not None else poly_corpus():
        n = f.n
        for i in range(1, n):
            d = divided_difference(f, i)
            lam = demazure(f, i)
            report.record(not divided_difference(d, i), ("d^2", i, str(f)))
            report.record(demazure(lam, i) == lam, ("L^2", i, str(f)))
            report.record(lam == divided_difference(LaurentPoly.var(i, n) * f, i),
                          ("L=dx", i, str(f)))
            report.record(divided_difference(swap_vars(f, i), i) == -d, ("d s", i, str(f)))
        for i in range(1, n - 1):
            for op in (divided_difference, demazure):
                lhs = op(op(op(f, i), i + 1), i)
                rhs = op(op(op(f, i + 1), i), i + 1)
                report.record(lhs == rhs, (f"braid {op.__name__}", i, str(f)))
        for i in range(1, n):
            for j in range(i + 2, n):
                for op in (divided_difference, demazure):
                    report.record(op(op(f, i), j) == op(op(f, j), i),
                                  (f"commute {op.__name__}", (i, j), str(f)))
    return report


# -- character corpus --------------------------------------------------------

def ss_corpus(n_values=(2, 3, 4), max_members: int = 3, max_mult: int = 3,
              max_boxes: int = 8) -> Iterator[MultFamily]:
    """
    Strongly separated families of nonempty subsets of ``[n]`` with at most
    ``max_members`` members, every multiplicity in ``1..max_mult``, and at
    most ``max_boxes`` boxes.
    """
    for n in n_values:
        subsets = [frozenset(c) for k in range(1, n + 1)
                   for c in combinations(range(1, n + 1), k)]
        for size in range(1, max_members + 1):
            for fam in combinations(subsets, size):
                if not is_strongly_separated(fam):
                    continue
                for mult in product(range(1, max_mult + 1), repeat=size):
                    if sum(len(c) * m for c, m in zip(fam, mult)) <= max_boxes:
                        yield MultFamily.from_pairs(n, zip(fam, mult))


def _inversion_cases(n: int) -> list[MultFamily]:
    return [inversion_family(w) for w in all_permutations(n)]


def oracle_sweep(n: int = 4, max_boxes: int = 8, include_inversions: bool = True,
                 progress: Callable[[int], None] | None = None) -> SweepReport:
    """Flagged oracle vs ``demazure_char`` and unflagged oracle vs ``full_char``."""
    report = SweepReport("oracle")
    cases = _inversion_cases(n) if include_inversions else []
    cases += list(ss_corpus(tuple(range(2, n + 1)), max_boxes=max_boxes))
    for k, dm in enumerate(cases):
        if dm.boxes() > max_boxes:
            continue
        flagged = demazure_char(dm)
        report.record(weyl_char_oracle(dm, flagged=True) == flagged, ("flagged", str(dm)))
        report.record(weyl_char_oracle(dm, flagged=False) == full_char(dm), ("full", str(dm)))
        if progress:
            progress(k)
    return report


def zero_extension_sweep(n: int = 4, max_boxes: int = 8) -> SweepReport:
    """Adding a multiplicity-0 member that keeps the family separated changes nothing."""
    report = SweepReport("extension by zero")
    for dm in ss_corpus(tuple(range(2, n + 1)), max_boxes=max_boxes):
        base, base_full = demazure_char(dm), None
        m = dm.n
        for k in range(1, m + 1):
            for c in combinations(range(1, m + 1), k):
                c = frozenset(c)
                if c in dm.members or not is_strongly_separated(list(dm.members) + [c]):
                    continue
                ext = dm.with_member(c, 0)
                report.record(demazure_char(ext) == base, ("flagged", str(dm), sorted(c)))
                if base_full is None:
                    base_full = full_char(dm)
                report.record(full_char(ext) == base_full, ("full", str(dm), sorted(c)))
    return report


# -- configurations ----------------------------------------------------------

def config_sweep(n: int = 3, samples: int = 50, seed: int = 0) -> SweepReport:
    """
    For every reduced word of ``w_0``: ``b z_{D+}`` passes ``is_inclusion_point``
    and ``theta_image_conditions`` gives the same verdict.
    """
    report = SweepReport("config")
    rng = random.Random(seed)
    for word in reduced_words(longest(n)):
        dplus = full_chamber_family(word, n)
        z = generating_point(dplus)
        for _ in range(samples):
            pt = z.apply(random_upper_triangular(n, rng))
            inc = is_inclusion_point(word, pt)
            theta = theta_image_conditions(word, positional_config(word, pt))
            report.record(inc, ("inclusion", word))
            report.record(inc == theta, ("theta", word))
    return report


def conjecture_sweep(n: int = 4, max_members: int = 3, samples: int = 3,
                     seed: int = 0) -> SweepReport:
    """Necessity: ``G``- and ``B``-orbit points of ``z_D`` satisfy the conditions."""
    report = SweepReport("conjecture")
    rng = random.Random(seed)
    subsets = [frozenset(c) for k in range(1, n + 1) for c in combinations(range(1, n + 1), k)]
    for size in range(1, max_members + 1):
        for fam in combinations(subsets, size):
            if not is_strongly_separated(fam):
                continue
            family = SubsetFamily(n, fam)
            z = generating_point(family)
            for _ in range(samples):
                g = random_invertible(n, rng)
                report.record(conjecture_conditions(family, z.apply(g)), ("G", str(family)))
                b = random_upper_triangular(n, rng)
                report.record(conjecture_conditions(family, z.apply(b), flagged=True),
                              ("B", str(family)))
    return report

