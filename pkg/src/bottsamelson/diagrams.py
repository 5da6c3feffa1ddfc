"""
Text pictures of subset families: generalized Young diagrams and wiring diagrams.

>>> print(render_wiring((1, 2, 1), 3, ascii=True))
1 --   -----   - 3
     X       X
2 --   -   -   - 2
         X
3 ------   ----- 1
chambers: 1, 12, 123, 2, 23, 3
"""

from __future__ import annotations

from typing import Sequence

from .families import MultFamily, format_subset
from .weyl import is_reduced

__all__ = ["render_young", "render_wiring", "wiring_chamber_labels"]


def render_young(dm: MultFamily, ascii: bool = True) -> str:
    """
    One column per member, repeated by multiplicity; row ``r`` holds a box
    iff ``r`` is in the column's subset.  Zero multiplicity omits the column.

    >>> from .families import parse_mult_family
    >>> print(render_young(parse_mult_family("234:2,34:0,4:3", 4)))
    1
    2 [] []
    3 [] []
    4 [] [] [] [] []
    """
    columns = [c for c, m in dm.items() for _ in range(m)]
    if not columns:
        return ""
    box, blank = ("[]", "  ") if ascii else ("□", " ")
    width = len(str(dm.n))
    lines = []
    for r in range(1, dm.n + 1):
        cells = [box if r in c else blank for c in columns]
        lines.append((f"{r:>{width}} " + " ".join(cells)).rstrip())
    return "\n".join(lines)


def wiring_chamber_labels(word: Sequence[int], n: int) -> list[frozenset[int]]:
    """
    Chamber labels read left to right off the wiring diagram.

    Curves are named by their starting level.  The region under level ``r``
    at the left end is labelled by the curves above it; each crossing opens
    one new region between the two levels it swaps.
    """
    at_level = list(range(1, n + 1))  # curve currently on each level
    labels = [frozenset(at_level[:r]) for r in range(1, n + 1)]
    for i in word:
        at_level[i - 1], at_level[i] = at_level[i], at_level[i - 1]
        labels.append(frozenset(at_level[:i]))
    return labels


def render_wiring(word: Sequence[int], n: int, ascii: bool = False) -> str:
    """
    ``n`` horizontal tracks with one crossing per letter, left to right,
    followed by the chamber labels in scan order.
    """
    if not is_reduced(word, n):
        raise ValueError(f"word {tuple(word)} is not reduced")
    wire, cross = ("-", "X") if ascii else ("─", "╳")
    rows = [[] for _ in range(2 * n - 1)]  # tracks at even rows, gaps at odd rows
    for r, row in enumerate(rows):
        row.append(wire * 2 if r % 2 == 0 else "  ")
    for i in word:
        for r in range(len(rows)):
            level_row = r % 2 == 0
            if r in (2 * (i - 1), 2 * i):
                rows[r].append("   ")
            elif r == 2 * i - 1:
                rows[r].append(f" {cross} ")
            else:
                rows[r].append(wire * 3 if level_row else "   ")
            rows[r].append(wire if level_row else " ")
    at_level = list(range(1, n + 1))
    for i in word:
        at_level[i - 1], at_level[i] = at_level[i], at_level[i - 1]
    width = len(str(n))
    lines = []
    for r, row in enumerate(rows):
        body = "".join(row)
        if r % 2 == 0:
            level = r // 2
            lines.append(f"{level + 1:>{width}} {body} {at_level[level]}")
        else:
            lines.append((" " * (width + 1) + body).rstrip())
    labels = wiring_chamber_labels(word, n)
    lines.append("chambers: " + ", ".join(format_subset(c, n) for c in labels))
    return "\n".join(lines)
