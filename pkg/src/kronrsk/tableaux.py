"""Semistandard tableaux: insertion, reverse insertion and column words.

A tableau is a tuple of rows in English notation (first row on top), each
row a tuple of positive integers.  Box positions are 0-based ``(row, col)``.
"""
from __future__ import annotations

from collections import Counter
from itertools import chain
from typing import Sequence

from .core import Composition, Partition, as_partition, conjugate
from .errors import InvalidTableauError, KronRSKError

Tableau = tuple[tuple[int, ...], ...]
Box = tuple[int, int]

EMPTY: Tableau = ()


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def size(t: Tableau) -> int:
    return sum(len(row) for row in t)


def content(t: Tableau, length: int | None = None) -> Composition:
    """Multiplicities of 1, 2, ..., padded (or truncated) to ``length``."""
    counts = Counter(chain.from_iterable(t))
    if length is None:
        length = max(counts, default=0)
    return tuple(counts.get(v, 0) for v in range(1, length + 1))


def columns(t: Tableau) -> list[list[int]]:
    if not t:
        return []
    return [[row[c] for row in t if c < len(row)] for c in range(len(t[0]))]


def from_columns(cols: Sequence[Sequence[int]]) -> Tableau:
    if not cols:
        return ()
    return tuple(
        tuple(col[r] for col in cols if r < len(col)) for r in range(len(cols[0]))
    )


def conjugate_tableau(t: Tableau) -> Tableau:
    return tuple(tuple(col) for col in columns(t))


def is_semistandard(t: Sequence[Sequence[int]]) -> bool:
    """Rows weakly increase, columns strictly increase, shape is a partition."""
    if any(len(row) == 0 for row in t):
        return False
    if any(len(a) < len(b) for a, b in zip(t, t[1:])):
        return False
    for row in t:
        if any(not isinstance(x, int) or x < 1 for x in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(t, t[1:]):
        if any(a >= b for a, b in zip(upper, lower)):
            return False
    return True


def as_tableau(rows: Sequence[Sequence[int]]) -> Tableau:
    t = tuple(tuple(int(x) for x in row) for row in rows)
    if not is_semistandard(t):
        raise InvalidTableauError(f"not a semistandard tableau: {[list(r) for r in t]}")
    return t


def is_outer_corner(t: Tableau, box: Box) -> bool:
    r, c = box
    if r >= len(t) or c != len(t[r]) - 1:
        return False
    return r + 1 >= len(t) or len(t[r + 1]) <= c


def canonical(gamma: Sequence[int]) -> Tableau:
    """The unique tableau of shape and content ``gamma``: row i holds only i."""
    gamma = as_partition(gamma)
    return tuple((i + 1,) * part for i, part in enumerate(gamma))


def column_word(t: Tableau) -> tuple[int, ...]:
    """Read each column bottom to top, columns left to right."""
    return tuple(chain.from_iterable(reversed(col) for col in columns(t)))


def row_word(t: Tableau) -> tuple[int, ...]:
    """Reading word: rows left to right, from the bottom row up."""
    return tuple(chain.from_iterable(reversed(t)))


def from_column_word(gamma: Sequence[int], word: Sequence[int]) -> Tableau:
    """Inverse of :func:`column_word` for a known shape (no validity check)."""
    gamma = as_partition(gamma)
    if sum(gamma) != len(word):
        raise KronRSKError("word length does not match shape")
    cols, pos = [], 0
    for height in conjugate(gamma):
        cols.append(list(reversed(word[pos : pos + height])))
        pos += height
    return from_columns(cols)


# -- insertion ---------------------------------------------------------------


def row_insert(t: Tableau, x: int) -> tuple[Tableau, Box]:
    """Schensted row insertion; ``x`` bumps the leftmost entry greater than it."""
    rows = [list(row) for row in t]
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return tuple(map(tuple, rows)), (r, 0)
        row = rows[r]
        for c, y in enumerate(row):
            if y > x:
                row[c], x = x, y
                break
        else:
            row.append(x)
            return tuple(map(tuple, rows)), (r, len(row) - 1)
        r += 1


def column_insert(t: Tableau, x: int) -> tuple[Tableau, Box]:
    """Column insertion; ``x`` bumps the topmost entry of a column that is >= x."""
    cols = columns(t)
    c = 0
    while True:
        if c == len(cols):
            cols.append([x])
            return from_columns(cols), (0, c)
        col = cols[c]
        for r, y in enumerate(col):
            if y >= x:
                col[r], x = x, y
                break
        else:
            col.append(x)
            return from_columns(cols), (len(col) - 1, c)
        c += 1


def _check_corner(t: Tableau, box: Box) -> None:
    if not is_outer_corner(t, box):
        raise KronRSKError(f"{box} is not an outer corner of shape {list(shape(t))}")


def reverse_row_insert(t: Tableau, box: Box) -> tuple[Tableau, int]:
    """Undo :func:`row_insert` whose new box was ``box``; returns the ejected value."""
    _check_corner(t, box)
    rows = [list(row) for row in t]
    r, c = box
    y = rows[r].pop()
    if not rows[r]:
        rows.pop()
    for above in range(r - 1, -1, -1):
        row = rows[above]
        # rightmost entry strictly smaller than y
        c = max(idx for idx, v in enumerate(row) if v < y)
        row[c], y = y, row[c]
    return tuple(map(tuple, rows)), y


def reverse_column_insert(t: Tableau, box: Box) -> tuple[Tableau, int]:
    """Undo :func:`column_insert` whose new box was ``box``; returns the ejected value."""
    _check_corner(t, box)
    cols = columns(t)
    r, c = box
    y = cols[c].pop()
    if not cols[c]:
        cols.pop()
    for left in range(c - 1, -1, -1):
        col = cols[left]
        # lowest entry not exceeding y
        r = max(idx for idx, v in enumerate(col) if v <= y)
        col[r], y = y, col[r]
    return from_columns(cols), y


def insert_word(word: Sequence[int], t: Tableau = EMPTY, column: bool = False) -> Tableau:
    insert = column_insert if column else row_insert
    for x in word:
        t, _ = insert(t, x)
    return t
