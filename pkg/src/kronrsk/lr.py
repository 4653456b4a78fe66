"""Littlewood-Richardson multitableaux and Thomas' bijection.

Thomas' bijection sends an r-tuple ``(P_1, ..., P_r)`` of semistandard
tableaux to a pair ``(P, S)``: ``P = P_r . ... . P_1`` is the tableau product
computed by column insertion, and ``S`` is an LR multitableau recording, layer
by layer, which boxes each factor added.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .core import Composition, Partition, as_composition, as_partition, conjugate
from .errors import InvalidTableauError, KronRSKError, NotInImageError, SizeMismatchError
from .tableaux import (
    EMPTY,
    Tableau,
    canonical,
    column_insert,
    column_word,
    from_column_word,
    is_outer_corner,
    is_semistandard,
    reverse_column_insert,
    shape,
)


def _pad(parts: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(parts) + (0,) * (length - len(parts))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Containment of Young diagrams, ``inner <= outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


@dataclass(frozen=True)
class SkewLRTableau:
    """A filling of ``outer/inner``; ``rows[i]`` lists row i's cells left to right."""

    inner: Partition
    outer: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def cells(self) -> dict[tuple[int, int], int]:
        inner = _pad(self.inner, len(self.outer))
        return {
            (r, inner[r] + c): v
            for r, row in enumerate(self.rows)
            for c, v in enumerate(row)
        }

    @property
    def content(self) -> Partition:
        counts = Counter(v for row in self.rows for v in row)
        return tuple(counts[v] for v in range(1, max(counts, default=0) + 1))

    def reverse_reading_word(self) -> tuple[int, ...]:
        """Rows top to bottom, each read right to left."""
        return tuple(v for row in self.rows for v in reversed(row))

    @classmethod
    def from_cells(
        cls, inner: Sequence[int], outer: Sequence[int], cells: dict[tuple[int, int], int]
    ) -> "SkewLRTableau":
        inner, outer = as_partition(inner), as_partition(outer)
        padded = _pad(inner, len(outer))
        rows = tuple(
            tuple(cells[(r, c)] for c in range(padded[r], outer[r]))
            for r in range(len(outer))
        )
        return cls(inner, outer, rows)


def is_lattice_word(word: Sequence[int]) -> bool:
    counts = Counter()
    for v in word:
        counts[v] += 1
        if v > 1 and counts[v] > counts[v - 1]:
            return False
    return True


def validate_lr(t: SkewLRTableau) -> bool:
    """Semistandard on the skew shape with a lattice reverse reading word."""
    try:
        return _validate_lr_cached(t)
    except TypeError:  # unhashable fields
        return _validate_lr(t)


def _validate_lr(t: SkewLRTableau) -> bool:
    try:
        inner, outer = as_partition(t.inner), as_partition(t.outer)
    except KronRSKError:
        return False
    if not contains(outer, inner) or len(t.rows) != len(outer):
        return False
    padded = _pad(inner, len(outer))
    if any(len(row) != outer[r] - padded[r] for r, row in enumerate(t.rows)):
        return False
    cells = t.cells()
    for (r, c), v in cells.items():
        if not isinstance(v, int) or v < 1:
            return False
        if (r, c + 1) in cells and cells[(r, c + 1)] < v:
            return False
        if (r - 1, c) in cells and cells[(r - 1, c)] >= v:
            return False
    return is_lattice_word(t.reverse_reading_word())


_validate_lr_cached = lru_cache(maxsize=1 << 16)(_validate_lr)


@dataclass(frozen=True)
class LRMultitableau:
    """A chain of skew LR tableaux ``T_1, ..., T_r`` on ``alpha(i)/alpha(i-1)``."""

    components: tuple[SkewLRTableau, ...]

    @property
    def shape(self) -> Partition:
        return self.components[-1].outer if self.components else ()

    @property
    def type(self) -> Composition:
        return tuple(t.size for t in self.components)

    @property
    def content(self) -> tuple[Partition, ...]:
        return tuple(t.content for t in self.components)

    def is_valid(self) -> bool:
        previous: Partition = ()
        for t in self.components:
            if tuple(t.inner) != previous or not validate_lr(t):
                return False
            previous = tuple(t.outer)
        return True

    def labels(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Map each box to ``(component index, entry)``."""
        out = {}
        for k, t in enumerate(self.components):
            for box, v in t.cells().items():
                out[box] = (k, v)
        return out


# -- Thomas' bijection ------------------------------------------------------


def _canonical_component(gamma: Partition) -> SkewLRTableau:
    return SkewLRTableau((), gamma, canonical(gamma))


def thomas_forward(tableaux: Sequence[Tableau]) -> tuple[Tableau, LRMultitableau]:
    """Map ``(P_1, ..., P_r)`` to ``(P, S)``.

    ``P^(1) = P_1`` and ``S_1 = C(sh P_1)``; then the column word
    ``v_m ... v_1`` of ``P_{k+1}`` is column inserted into ``P^(k)`` starting
    with ``v_1``, while the letters ``u_1, ..., u_m`` of the column word of
    ``C(sh P_{k+1})`` are written into the new boxes.  Afterwards
    ``cont(P) = sum cont(P_k)`` and ``cont(S) = (sh P_1, ..., sh P_r)``.
    """
    tableaux = [tuple(map(tuple, t)) for t in tableaux]
    for t in tableaux:
        if not is_semistandard(t):
            raise InvalidTableauError(f"not a semistandard tableau: {t}")
    if not tableaux:
        return EMPTY, LRMultitableau(())
    p = tableaux[0]
    components = [_canonical_component(shape(p))]
    for pk in tableaux[1:]:
        inner = shape(p)
        gamma = shape(pk)
        new_boxes = {}
        for v, u in zip(reversed(column_word(pk)), reversed(column_word(canonical(gamma)))):
            p, box = column_insert(p, v)
            new_boxes[box] = u
        components.append(SkewLRTableau.from_cells(inner, shape(p), new_boxes))
    s = LRMultitableau(tuple(components))
    _check_thomas_laws(tableaux, p, s)
    return p, s


def _check_thomas_laws(tableaux, p: Tableau, s: LRMultitableau) -> None:
    total = Counter()
    for t in tableaux:
        total.update(v for row in t for v in row)
    assert Counter(v for row in p for v in row) == total, "content of P"
    assert s.content == tuple(shape(t) for t in tableaux), "content of S"
    assert shape(p) == s.shape, "shape of S"
    assert s.is_valid(), "S is not an LR multitableau"


def thomas_inverse(p: Tableau, s: LRMultitableau) -> list[Tableau]:
    """Recover ``(P_1, ..., P_r)`` from ``(P, S)``.

    Component k is peeled by running through the letters of the column word
    of ``C(cont S_k)`` (u_m first): each letter names the S_k-label of the
    box to remove, and among the outer corners carrying that label the
    rightmost is taken and reverse column inserted.  The ejected values,
    in order, form the column word of ``P_k``.
    """
    p = original = tuple(map(tuple, p))
    if not is_semistandard(p):
        raise InvalidTableauError(f"not a semistandard tableau: {p}")
    if not s.is_valid():
        raise InvalidTableauError("not an LR multitableau")
    if shape(p) != s.shape:
        raise SizeMismatchError("sh(P) must equal the shape of S")
    if not s.components:
        return []
    factors: list[Tableau] = []
    for comp in reversed(s.components[1:]):
        gamma = comp.content
        remaining = dict(comp.cells())
        ejected = []
        for letter in column_word(canonical(gamma)):
            corners = [
                box
                for box, v in remaining.items()
                if v == letter and is_outer_corner(p, box)
            ]
            if not corners:
                raise NotInImageError(f"no outer corner labelled {letter}")
            box = max(corners, key=lambda b: b[1])
            del remaining[box]
            p, value = reverse_column_insert(p, box)
            ejected.append(value)
        factor = from_column_word(gamma, ejected)
        if not is_semistandard(factor) or shape(p) != comp.inner:
            raise NotInImageError("un-insertion did not produce a tableau")
        factors.append(factor)
    first = s.components[0]
    if first.rows != canonical(first.outer) or shape(p) != first.outer:
        raise NotInImageError("first component must be canonical")
    factors.append(p)
    factors.reverse()
    if thomas_forward(factors) != (original, s):
        raise NotInImageError("round trip failed")
    return factors


# -- enumeration of LR multitableaux ----------------------------------------


def _between(inner: Partition, outer: Partition, k: int) -> Iterator[Partition]:
    """Partitions ``b`` with ``inner <= b <= outer`` and ``|b| - |inner| == k``."""
    rows = len(outer)
    inner = _pad(inner, rows)

    def grow(i: int, left: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if left == 0:
                yield acc
            return
        cap = outer[i] if i == 0 else min(outer[i], acc[i - 1])
        for size in range(min(cap, inner[i] + left), inner[i] - 1, -1):
            yield from grow(i + 1, left - (size - inner[i]), acc + (size,))

    for b in grow(0, k, ()):
        yield tuple(x for x in b if x)


@lru_cache(maxsize=None)
def lr_fillings(inner: Partition, outer: Partition) -> tuple[SkewLRTableau, ...]:
    """All LR tableaux of skew shape ``outer/inner``."""
    padded = _pad(inner, len(outer))
    order = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, padded[r] - 1, -1)]
    cells: dict[tuple[int, int], int] = {}
    counts = Counter()
    found = []

    def fill(idx: int) -> None:
        if idx == len(order):
            found.append(SkewLRTableau.from_cells(inner, outer, cells))
            return
        r, c = order[idx]
        hi = cells.get((r, c + 1), r + 1)
        lo = cells[(r - 1, c)] + 1 if (r - 1, c) in cells else 1
        for v in range(lo, min(hi, r + 1) + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            cells[(r, c)] = v
            counts[v] += 1
            fill(idx + 1)
            counts[v] -= 1
            del cells[(r, c)]

    fill(0)
    return tuple(found)


@lru_cache(maxsize=None)
def _multitableaux(alpha: Partition, nu: Composition) -> tuple[LRMultitableau, ...]:
    out = []

    def chain(i: int, inner: Partition, acc: tuple[SkewLRTableau, ...]) -> None:
        if i == len(nu):
            if inner == alpha:
                out.append(LRMultitableau(acc))
            return
        for nxt in _between(inner, alpha, nu[i]):
            for t in lr_fillings(inner, nxt):
                chain(i + 1, nxt, acc + (t,))

    if sum(nu) == sum(alpha):
        chain(0, (), ())
    return tuple(out)


def enumerate_lr_multitableaux(alpha: Sequence[int], nu: Sequence[int]) -> list[LRMultitableau]:
    """All LR multitableaux of shape ``alpha`` and type ``nu``."""
    return list(_multitableaux(as_partition(alpha), as_composition(nu)))


def _by_content(alpha: Partition, nu: Composition) -> dict[tuple[Partition, ...], list[LRMultitableau]]:
    groups: dict[tuple[Partition, ...], list[LRMultitableau]] = {}
    for t in _multitableaux(alpha, nu):
        groups.setdefault(t.content, []).append(t)
    return groups


def _conjugate_content(content: tuple[Partition, ...]) -> tuple[Partition, ...]:
    return tuple(conjugate(rho) for rho in content)


def enumerate_lr_pairs(
    alpha: Sequence[int], beta: Sequence[int], nu: Sequence[int], dual: bool = False
) -> list[tuple[LRMultitableau, LRMultitableau]]:
    """The set LR(alpha, beta; nu), or LR*(alpha, beta; nu) when ``dual``.

    Pairs ``(T, S)`` with T of shape alpha, S of shape beta, both of type nu,
    and equal (respectively componentwise conjugate) contents.
    """
    alpha, beta, nu = as_partition(alpha), as_partition(beta), as_composition(nu)
    if not (sum(alpha) == sum(beta) == sum(nu)):
        raise SizeMismatchError("incomparable sizes")
    left, right = _by_content(alpha, nu), _by_content(beta, nu)
    pairs = []
    for content, ts in left.items():
        key = _conjugate_content(content) if dual else content
        for t in ts:
            for s in right.get(key, ()):
                pairs.append((t, s))
    return pairs


@lru_cache(maxsize=None)
def _lr_count(alpha: Partition, beta: Partition, nu: Composition, dual: bool) -> int:
    left, right = _by_content(alpha, nu), _by_content(beta, nu)
    total = 0
    for content, ts in left.items():
        key = _conjugate_content(content) if dual else content
        total += len(ts) * len(right.get(key, ()))
    return total


def lr_count(alpha: Sequence[int], beta: Sequence[int], nu: Sequence[int], dual: bool = False) -> int:
    """``lr(alpha, beta; nu)``, or ``lr*`` when ``dual``, without materializing pairs."""
    alpha, beta, nu = as_partition(alpha), as_partition(beta), as_composition(nu)
    if not (sum(alpha) == sum(beta) == sum(nu)):
        raise SizeMismatchError("incomparable sizes")
    return _lr_count(alpha, beta, nu, dual)
