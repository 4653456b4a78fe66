"""Brute-force symmetric group characters: the ground truth for every identity.

Irreducible characters come from the Murnaghan-Nakayama rule on beta-sets,
so nothing here shares code with the tableau bijections except
:func:`kronrsk.core.kostka` inside the permutation character (Young's rule).
All arithmetic is exact.
"""
from __future__ import annotations

import os
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .core import (
    Partition,
    as_composition,
    as_partition,
    conjugate,
    kostka,
    partitions,
    strictly_dominates,
)
from .errors import KronRSKError, OracleLimitError, SizeMismatchError

DEFAULT_MAX_N = 12


def max_n() -> int:
    """Oracle size cap, from ``KRONRSK_MAX_N`` (default 12)."""
    raw = os.environ.get("KRONRSK_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def _guard(n: int) -> None:
    cap = max_n()
    if n > cap:
        raise OracleLimitError(f"n={n} exceeds the oracle cap {cap} (KRONRSK_MAX_N)")


def _same_size(*parts: Sequence[int]) -> int:
    sizes = {sum(p) for p in parts}
    if len(sizes) != 1:
        raise SizeMismatchError("incomparable sizes")
    return sizes.pop()


def z_value(rho: Partition) -> int:
    """``z_rho = prod i^m_i m_i!``, so the class of cycle type rho has n!/z_rho elements."""
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


def class_size(rho: Sequence[int]) -> int:
    rho = as_partition(rho)
    return factorial(sum(rho)) // z_value(rho)


def sign(rho: Sequence[int]) -> int:
    return (-1) ** (sum(rho) - len([p for p in rho if p]))


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], rho: Partition) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in beta:
            height = sum(1 for x in beta if b - r < x < b)
            total += (-1) ** height * _mn((beta - {b}) | {b - r}, rest)
    return total


def _beta_set(lam: Partition) -> frozenset[int]:
    length = len(lam)
    return frozenset(part + length - 1 - i for i, part in enumerate(lam))


def char_value(lam: Sequence[int], rho: Sequence[int]) -> int:
    """``chi^lam(rho)`` by Murnaghan-Nakayama (rim hooks = bead moves on a beta-set)."""
    lam, rho = as_partition(lam), as_partition(rho)
    n = _same_size(lam, rho)
    _guard(n)
    return _mn(_beta_set(lam), rho)


class CharacterTable:
    """The full character table of S_n, rows and columns in :func:`partitions` order."""

    def __init__(self, n: int):
        _guard(n)
        self.n = n
        self.partitions = list(partitions(n))
        self.class_sizes = [class_size(rho) for rho in self.partitions]
        self.values = [
            [char_value(lam, rho) for rho in self.partitions] for lam in self.partitions
        ]

    def row(self, lam: Sequence[int]) -> list[int]:
        return self.values[self.partitions.index(as_partition(lam))]


@lru_cache(maxsize=None)
def table(n: int) -> CharacterTable:
    return CharacterTable(n)


def inner(f: Sequence[int], g: Sequence[int], n: int) -> int:
    """``<f, g>`` for real class functions given as value lists over ``partitions(n)``."""
    t = table(n)
    total = sum(c * a * b for c, a, b in zip(t.class_sizes, f, g))
    value, rem = divmod(total, factorial(n))
    if rem:
        raise KronRSKError("non-integral inner product: oracle bug")
    return value


@lru_cache(maxsize=None)
def _kron(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    n = sum(alpha)
    t = table(n)
    prods = [a * b for a, b in zip(t.row(alpha), t.row(beta))]
    value = inner(prods, t.row(gamma), n)
    if value < 0:
        raise KronRSKError("negative Kronecker coefficient: oracle bug")
    return value


def kron_coeff(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> int:
    """``k(alpha, beta, gamma) = <chi^alpha chi^beta, chi^gamma>``."""
    alpha, beta, gamma = (as_partition(x) for x in (alpha, beta, gamma))
    _guard(_same_size(alpha, beta, gamma))
    return _kron(alpha, beta, gamma)


@lru_cache(maxsize=None)
def _perm_row(nu: tuple[int, ...]) -> tuple[int, ...]:
    n = sum(nu)
    t = table(n)
    row = [0] * len(t.partitions)
    for gamma in t.partitions:
        k = kostka(gamma, nu)
        if k:
            row = [acc + k * v for acc, v in zip(row, t.row(gamma))]
    return tuple(row)


def perm_char_value(nu: Sequence[int], rho: Sequence[int]) -> int:
    """``phi^nu(rho) = sum_gamma K_{gamma nu} chi^gamma(rho)`` (Young's rule)."""
    nu, rho = as_composition(nu), as_partition(rho)
    n = _same_size(nu, rho)
    _guard(n)
    return _perm_row(nu)[table(n).partitions.index(rho)]


def triple_inner(
    alpha: Sequence[int], beta: Sequence[int], nu: Sequence[int], sign_char: bool = False
) -> int:
    """``<chi^alpha chi^beta phi^nu, chi^(n)>``, or against ``chi^(1^n)`` if ``sign_char``."""
    alpha, beta, nu = as_partition(alpha), as_partition(beta), as_composition(nu)
    n = _same_size(alpha, beta, nu)
    _guard(n)
    t = table(n)
    target = [sign(rho) for rho in t.partitions] if sign_char else [1] * len(t.partitions)
    f = [a * b * c for a, b, c in zip(t.row(alpha), t.row(beta), _perm_row(nu))]
    return inner(f, target, n)


def perm_inner(comps: Sequence[Sequence[int]], sign_char: bool = False) -> int:
    """``<phi^c1 ... phi^ck, chi^(n)>`` (or ``chi^(1^n)``) for compositions of n."""
    comps = [as_composition(c) for c in comps]
    n = _same_size(*comps)
    _guard(n)
    t = table(n)
    f = [prod(vals) for vals in zip(*(_perm_row(c) for c in comps))]
    target = [sign(rho) for rho in t.partitions] if sign_char else [1] * len(t.partitions)
    return inner(f, target, n)


def is_minimal_component(alpha: Sequence[int], beta: Sequence[int], nu: Sequence[int]) -> bool:
    """``chi^nu`` occurs in ``chi^alpha x chi^beta`` and nothing strictly below it does."""
    if kron_coeff(alpha, beta, nu) == 0:
        return False
    return all(
        kron_coeff(alpha, beta, g) == 0
        for g in partitions(sum(nu))
        if strictly_dominates(nu, g)
    )


def is_maximal_component(alpha: Sequence[int], beta: Sequence[int], nu: Sequence[int]) -> bool:
    if kron_coeff(alpha, beta, nu) == 0:
        return False
    return all(
        kron_coeff(alpha, beta, g) == 0
        for g in partitions(sum(nu))
        if strictly_dominates(g, nu)
    )


def kron_conjugate_symmetry(alpha, beta, gamma) -> bool:
    """``k(alpha, beta, gamma') == k(alpha, beta', gamma)``."""
    return kron_coeff(alpha, beta, conjugate(gamma)) == kron_coeff(alpha, conjugate(beta), gamma)
