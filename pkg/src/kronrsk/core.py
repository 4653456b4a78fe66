"""Partitions, compositions, dominance, Kostka numbers and matrices with fixed margins.

Partitions and compositions are plain tuples of ints.  Partitions are stored
without trailing zeros; comparisons pad with zeros implicitly.  A 2-D matrix
is a tuple of row tuples.  A 3-D matrix ``A = (a_ijk)`` is stored level-first,
``A[k][i][j] == a_ijk``, which is also its JSON layout.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import accumulate, chain, zip_longest
from typing import Iterator, Sequence

from .errors import KronRSKError, SizeMismatchError

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Matrix2 = tuple[tuple[int, ...], ...]
Matrix3 = tuple[Matrix2, ...]


# -- partitions and compositions ------------------------------------------


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def as_partition(parts: Sequence[int]) -> Partition:
    """Return ``parts`` as a canonical partition, dropping trailing zeros.

    Raises ``KronRSKError`` if the nonzero parts are not weakly decreasing
    or some part is negative.
    """
    parts = tuple(int(p) for p in parts)
    stripped = tuple(p for p in parts if p != 0)
    if any(p < 0 for p in parts) or not is_partition(stripped) or (
        parts[: len(stripped)] != stripped
    ):
        raise KronRSKError(f"not a partition: {list(parts)}")
    return stripped


def as_composition(parts: Sequence[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise KronRSKError(f"not a composition: {list(parts)}")
    return parts


def sort_partition(parts: Sequence[int]) -> Partition:
    """Sort a composition weakly decreasing and drop zeros."""
    return tuple(sorted((p for p in parts if p), reverse=True))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n: int, length: int | None = None) -> Iterator[Composition]:
    """Compositions of ``n``.

    With ``length=None`` these are the strict compositions (all parts
    positive); otherwise all weak compositions with exactly ``length`` parts.
    """
    if length is None:
        if n == 0:
            yield ()
            return
        for first in range(1, n + 1):
            for rest in compositions(n - first):
                yield (first,) + rest
        return
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, length - 1):
            yield (first,) + rest


def conjugate(lam: Sequence[int]) -> Partition:
    """Column lengths of the Young diagram of ``lam``."""
    lam = tuple(p for p in lam if p)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def _check_same_size(a: Sequence[int], b: Sequence[int]) -> None:
    if sum(a) != sum(b):
        raise SizeMismatchError("incomparable sizes")


def dominates(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """True iff every partial sum of ``alpha`` is at least that of ``beta``."""
    _check_same_size(alpha, beta)
    sums = zip_longest(accumulate(alpha), accumulate(beta), fillvalue=sum(alpha))
    return all(a >= b for a, b in sums)


def strictly_dominates(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    return dominates(alpha, beta) and as_partition(alpha) != as_partition(beta)


def pi_sequence(matrix: Sequence[Sequence[int]]) -> Partition:
    """Nonzero entries of a matrix sorted weakly decreasing."""
    return sort_partition(chain.from_iterable(matrix))


# -- semistandard tableaux of given shape and content -----------------------


def _horizontal_strips(inner: Partition, outer: Partition, k: int) -> Iterator[Partition]:
    """Partitions ``s`` with ``inner <= s <= outer`` and ``s/inner`` a horizontal strip of size k."""
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))

    def extend(i: int, left: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if left == 0:
                yield acc
            return
        cap = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for add in range(min(cap - inner[i], left), -1, -1):
            yield from extend(i + 1, left - add, acc + (inner[i] + add,))

    for s in extend(0, k, ()):
        yield tuple(p for p in s if p)


@lru_cache(maxsize=None)
def _ssyt(alpha: Partition, lam: Composition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    results = []

    def fill(value: int, shape: Partition, rows: tuple[tuple[int, ...], ...]) -> None:
        if value > len(lam):
            if shape == alpha:
                results.append(rows)
            return
        for nxt in _horizontal_strips(shape, alpha, lam[value - 1]):
            grown = list(rows) + [()] * (len(nxt) - len(rows))
            for i, length in enumerate(nxt):
                have = len(grown[i])
                grown[i] = grown[i] + (value,) * (length - have)
            fill(value + 1, nxt, tuple(grown))

    fill(1, (), ())
    results.sort(key=lambda t: tuple(chain.from_iterable(t)))
    return tuple(results)


def enumerate_ssyt(alpha: Sequence[int], lam: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """All semistandard tableaux of shape ``alpha`` and content ``lam``.

    Tableaux are tuples of rows (English notation), listed in lexicographic
    order of their row reading words.
    """
    return list(_ssyt(as_partition(alpha), as_composition(lam)))


@lru_cache(maxsize=None)
def _kostka(alpha: Partition, lam: Composition) -> int:
    return len(_ssyt(alpha, lam))


def kostka(alpha: Sequence[int], lam: Sequence[int]) -> int:
    _check_same_size(alpha, lam)
    return _kostka(as_partition(alpha), as_composition(lam))


# -- matrices with prescribed margins ---------------------------------------


def row_sums(matrix: Sequence[Sequence[int]]) -> Composition:
    return tuple(sum(row) for row in matrix)


def col_sums(matrix: Sequence[Sequence[int]]) -> Composition:
    if not matrix:
        return ()
    return tuple(sum(col) for col in zip(*matrix))


def marginals3(array: Matrix3) -> tuple[Composition, Composition, Composition]:
    """The three plane-sum vectors (lambda, mu, nu) of a level-first 3-D matrix."""
    if not array:
        return (), (), ()
    p, q = len(array[0]), len(array[0][0]) if array[0] else 0
    lam = tuple(sum(level[i][j] for level in array for j in range(q)) for i in range(p))
    mu = tuple(sum(level[i][j] for level in array for i in range(p)) for j in range(q))
    nu = tuple(sum(map(sum, level)) for level in array)
    return lam, mu, nu


def is_binary(values: Sequence) -> bool:
    """True iff every (nested) entry is 0 or 1."""
    for v in values:
        if isinstance(v, (tuple, list)):
            if not is_binary(v):
                return False
        elif v not in (0, 1):
            return False
    return True


def transpose(matrix: Sequence[Sequence[int]]) -> Matrix2:
    return tuple(zip(*matrix)) if matrix and matrix[0] else ()


def enumerate_matrices2(
    lam: Sequence[int],
    mu: Sequence[int],
    binary: bool = False,
    nu_filter: Sequence[int] | None = None,
) -> list[Matrix2]:
    """All nonnegative integer matrices with row sums ``lam`` and column sums ``mu``.

    Cells are filled row-major with entries tried in descending order, so the
    result is sorted in decreasing lexicographic order.  ``binary`` restricts
    entries to {0, 1}; ``nu_filter`` keeps only matrices whose pi-sequence is
    that partition (the set M_nu(lam, mu)).
    """
    lam, mu = as_composition(lam), as_composition(mu)
    _check_same_size(lam, mu)
    p, q = len(lam), len(mu)
    if p == 0 or q == 0:
        return [tuple((0,) * q for _ in range(p))] if sum(lam) == 0 else []
    # multiset of allowed entries when filtering by pi-sequence (zeros unlimited)
    budget: dict[int, int] | None = None
    if nu_filter is not None:
        nu = as_partition(nu_filter)
        if sum(nu) != sum(lam) or len(nu) > p * q:
            return []
        budget = {}
        for v in nu:
            budget[v] = budget.get(v, 0) + 1
        budget[0] = p * q - len(nu)
    cap = 1 if binary else None
    rows_left = list(lam)
    cols_left = list(mu)
    grid = [[0] * q for _ in range(p)]
    out: list[Matrix2] = []

    def place(cell: int) -> None:
        if cell == p * q:
            out.append(tuple(map(tuple, grid)))
            return
        i, j = divmod(cell, q)
        hi = min(rows_left[i], cols_left[j])
        if cap is not None:
            hi = min(hi, cap)
        lo = 0
        if j == q - 1:
            lo = rows_left[i]
        if i == p - 1:
            lo = max(lo, cols_left[j])
        if binary:
            # the rest of row i / column j must be able to absorb what is left
            lo = max(lo, rows_left[i] - (q - 1 - j), cols_left[j] - (p - 1 - i))
        for v in range(hi, lo - 1, -1):
            if budget is not None:
                if budget.get(v, 0) == 0:
                    continue
                budget[v] -= 1
            grid[i][j] = v
            rows_left[i] -= v
            cols_left[j] -= v
            place(cell + 1)
            rows_left[i] += v
            cols_left[j] += v
            if budget is not None:
                budget[v] += 1
        grid[i][j] = 0

    place(0)
    return out


def enumerate_matrices3(
    lam: Sequence[int],
    mu: Sequence[int],
    nu: Sequence[int],
    binary: bool = False,
) -> list[Matrix3]:
    """All level-first 3-D matrices with 1-marginals ``lam``, ``mu``, ``nu``.

    Cells are visited in (k, i, j) order with entries tried descending, so
    the output is in decreasing lexicographic order of the nested tuples.
    """
    lam, mu, nu = as_composition(lam), as_composition(mu), as_composition(nu)
    _check_same_size(lam, mu)
    _check_same_size(lam, nu)
    p, q, r = len(lam), len(mu), len(nu)
    n = sum(lam)
    if p * q * r == 0:
        if n == 0:
            return [tuple(tuple((0,) * q for _ in range(p)) for _ in range(r))]
        return []
    left_i, left_j, left_k = list(lam), list(mu), list(nu)
    # cells not yet visited in each plane, counting the current one
    free_i, free_j, free_k = [q * r] * p, [p * r] * q, [p * q] * r
    grid = [[[0] * q for _ in range(p)] for _ in range(r)]
    out: list[Matrix3] = []
    total = p * q * r

    def place(cell: int) -> None:
        if cell == total:
            out.append(tuple(tuple(map(tuple, level)) for level in grid))
            return
        k, rest = divmod(cell, p * q)
        i, j = divmod(rest, q)
        hi = min(left_i[i], left_j[j], left_k[k])
        if binary:
            hi = min(hi, 1)
        # what the remaining cells of each plane can still take
        per = 1 if binary else n
        lo = max(
            left_i[i] - per * (free_i[i] - 1),
            left_j[j] - per * (free_j[j] - 1),
            left_k[k] - per * (free_k[k] - 1),
            0,
        )
        free_i[i] -= 1
        free_j[j] -= 1
        free_k[k] -= 1
        for v in range(hi, lo - 1, -1):
            grid[k][i][j] = v
            left_i[i] -= v
            left_j[j] -= v
            left_k[k] -= v
            place(cell + 1)
            left_i[i] += v
            left_j[j] += v
            left_k[k] += v
        grid[k][i][j] = 0
        free_i[i] += 1
        free_j[j] += 1
        free_k[k] += 1

    place(0)
    return out
