"""RSK and dual RSK between 2-D matrices and pairs of semistandard tableaux.

Both directions take the two-line array of a matrix in lexicographic order:
the pair ``(i, j)`` appears ``a_ij`` times, sorted by ``i`` then ``j``.

* RSK row-inserts the ``j``'s into ``P`` and records ``i`` in ``Q`` at each new
  box, so ``sh(P) == sh(Q)``.
* Dual RSK (binary matrices) column-inserts the ``j``'s into ``P`` and records
  ``i`` in the transposed position, so ``sh(P) == sh(Q)'``.

In both cases ``cont(P) == col(M)`` and ``cont(Q) == row(M)``.
"""
from __future__ import annotations

from typing import Sequence

from .core import Matrix2, col_sums, conjugate, is_binary, row_sums
from .errors import InvalidTableauError, ModeError
from .tableaux import (
    EMPTY,
    Tableau,
    column_insert,
    content,
    from_columns,
    is_semistandard,
    reverse_column_insert,
    reverse_row_insert,
    row_insert,
    shape,
)


def _biword(matrix: Sequence[Sequence[int]]):
    for i, row in enumerate(matrix):
        for j, a in enumerate(row):
            for _ in range(a):
                yield i + 1, j + 1


def _strip(comp: Sequence[int]) -> tuple[int, ...]:
    comp = list(comp)
    while comp and comp[-1] == 0:
        comp.pop()
    return tuple(comp)


def _add_box(rows: list[list[int]], r: int, value: int) -> None:
    while len(rows) <= r:
        rows.append([])
    rows[r].append(value)


def _check_contract(matrix, p: Tableau, q: Tableau, dual: bool) -> None:
    sh_q = conjugate(shape(q)) if dual else shape(q)
    assert shape(p) == sh_q, "shape law violated"
    assert _strip(content(p)) == _strip(col_sums(matrix)), "content of P"
    assert _strip(content(q)) == _strip(row_sums(matrix)), "content of Q"


def rsk_forward(matrix: Sequence[Sequence[int]]) -> tuple[Tableau, Tableau]:
    """The RSK pair ``(P, Q)`` of a nonnegative integer matrix."""
    if any(a < 0 for row in matrix for a in row):
        raise ModeError("matrix entries must be nonnegative")
    p: Tableau = EMPTY
    q_rows: list[list[int]] = []
    for i, j in _biword(matrix):
        p, (r, _) = row_insert(p, j)
        _add_box(q_rows, r, i)
    q = tuple(map(tuple, q_rows))
    _check_contract(matrix, p, q, dual=False)
    return p, q


def dual_rsk_forward(matrix: Sequence[Sequence[int]]) -> tuple[Tableau, Tableau]:
    """The dual RSK pair ``(P, Q)`` of a binary matrix."""
    if not is_binary(matrix):
        raise ModeError("dual RSK needs a binary matrix")
    p: Tableau = EMPTY
    q_cols: list[list[int]] = []
    for i, j in _biword(matrix):
        p, (r, c) = column_insert(p, j)
        # the recording box (r, c) of P is stored transposed in Q
        _add_box(q_cols, r, i)
    q = from_columns(q_cols)
    _check_contract(matrix, p, q, dual=True)
    return p, q


def _validate_pair(p: Tableau, q: Tableau, dual: bool) -> None:
    for t in (p, q):
        if not is_semistandard(t):
            raise InvalidTableauError(f"not a semistandard tableau: {t}")
    want = conjugate(shape(q)) if dual else shape(q)
    if shape(p) != want:
        kind = "conjugate" if dual else "equal"
        raise InvalidTableauError(f"P and Q must have {kind} shapes")


def _last_box(t: Tableau) -> tuple[int, int]:
    """Position of the rightmost occurrence of the largest entry of ``t``."""
    top = max(max(row) for row in t)
    best = None
    for r, row in enumerate(t):
        for c, v in enumerate(row):
            if v == top and (best is None or c > best[1]):
                best = (r, c)
    return best


def _remove(t: Tableau, box: tuple[int, int]) -> Tableau:
    rows = [list(row) for row in t]
    rows[box[0]].pop(box[1])
    return tuple(tuple(row) for row in rows if row)


def _empty_matrix(p: int, q: int) -> list[list[int]]:
    return [[0] * q for _ in range(p)]


def rsk_inverse(
    p: Tableau, q: Tableau, size: tuple[int, int] | None = None
) -> Matrix2:
    """Recover the matrix from its RSK pair.

    ``size`` fixes the matrix dimensions; by default they are the largest
    entries of ``Q`` and ``P``.
    """
    p, q = tuple(map(tuple, p)), tuple(map(tuple, q))
    _validate_pair(p, q, dual=False)
    rows, cols = size or (max(content_len(q), 0), max(content_len(p), 0))
    if content_len(q) > rows or content_len(p) > cols:
        raise InvalidTableauError("tableau entries exceed the matrix size")
    m = _empty_matrix(rows, cols)
    while q:
        box = _last_box(q)
        i = q[box[0]][box[1]]
        q = _remove(q, box)
        p, j = reverse_row_insert(p, box)
        m[i - 1][j - 1] += 1
    return tuple(map(tuple, m))


def dual_rsk_inverse(
    p: Tableau, q: Tableau, size: tuple[int, int] | None = None
) -> Matrix2:
    """Recover the binary matrix from its dual RSK pair."""
    p, q = tuple(map(tuple, p)), tuple(map(tuple, q))
    _validate_pair(p, q, dual=True)
    rows, cols = size or (content_len(q), content_len(p))
    if content_len(q) > rows or content_len(p) > cols:
        raise InvalidTableauError("tableau entries exceed the matrix size")
    m = _empty_matrix(rows, cols)
    while q:
        r, c = _last_box(q)
        i = q[r][c]
        q = _remove(q, (r, c))
        p, j = reverse_column_insert(p, (c, r))
        if m[i - 1][j - 1]:
            raise InvalidTableauError("pair does not come from a binary matrix")
        m[i - 1][j - 1] = 1
    return tuple(map(tuple, m))


def content_len(t: Tableau) -> int:
    return max((max(row) for row in t), default=0)
