"""Minimal matrices, the lift G and Kronecker coefficients of minimal components.

For a 2-D matrix ``A`` with pi-sequence ``nu``, the lift ``G(A)`` is the binary
3-D matrix whose ``(i, j)``-fiber carries ``a_ij`` ones in its first levels.
Composing with the binary 3-D RSK gives ``(f(A), g(A), h(A))``, and when
``nu`` is minimal for the margins, counting matrices by ``(f, g)`` computes
Kronecker coefficients.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence

from .core import (
    Matrix2,
    Matrix3,
    Partition,
    as_partition,
    col_sums,
    conjugate,
    dominates,
    enumerate_matrices2,
    enumerate_ssyt,
    marginals3,
    partitions,
    pi_sequence,
    row_sums,
    strictly_dominates,
)
from .characters import kron_coeff
from .errors import KronRSKError, NotMinimalError, SizeMismatchError
from .lr import LRMultitableau
from .rsk3d import encode
from .tableaux import Tableau


def _as_matrix(a: Sequence[Sequence[int]]) -> Matrix2:
    m = tuple(tuple(int(v) for v in row) for row in a)
    if any(len(row) != len(m[0]) for row in m) or any(v < 0 for row in m for v in row):
        raise KronRSKError("expected a rectangular matrix of nonnegative integers")
    return m


@lru_cache(maxsize=None)
def _pi_census(lam: tuple[int, ...], mu: tuple[int, ...]) -> Counter:
    """How many matrices of M(lam, mu) have each pi-sequence."""
    return Counter(pi_sequence(m) for m in enumerate_matrices2(lam, mu))


def pi_census(lam: Sequence[int], mu: Sequence[int]) -> Counter:
    return _pi_census(tuple(lam), tuple(mu))


def _nothing_below(census: Counter, nu: Partition) -> bool:
    return not any(strictly_dominates(nu, pi) for pi in census)


def is_minimal(a: Sequence[Sequence[int]]) -> bool:
    """No matrix with the same margins has a strictly dominated pi-sequence."""
    a = _as_matrix(a)
    return _nothing_below(pi_census(row_sums(a), col_sums(a)), pi_sequence(a))


def is_nu_minimal(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> bool:
    if not (sum(lam) == sum(mu) == sum(nu)):
        raise SizeMismatchError("incomparable sizes")
    nu = as_partition(nu)
    census = pi_census(lam, mu)
    return census[nu] > 0 and _nothing_below(census, nu)


def minimal_pi_sequences(lam: Sequence[int], mu: Sequence[int]) -> list[Partition]:
    census = pi_census(lam, mu)
    return [nu for nu in census if _nothing_below(census, nu)]


def is_pi_unique(a: Sequence[Sequence[int]]) -> bool:
    a = _as_matrix(a)
    return pi_census(row_sums(a), col_sums(a))[pi_sequence(a)] == 1


def is_plane_partition(a: Sequence[Sequence[int]]) -> bool:
    """Rows and columns weakly decreasing."""
    a = _as_matrix(a)
    rows_ok = all(x >= y for row in a for x, y in zip(row, row[1:]))
    cols_ok = all(x >= y for up, down in zip(a, a[1:]) for x, y in zip(up, down))
    return rows_ok and cols_ok


# -- additivity ---------------------------------------------------------------


def _fm_feasible(rows: list[tuple[tuple[Fraction, ...], Fraction]], nvars: int) -> bool:
    """Exact Fourier-Motzkin test for ``{z : c . z >= b for (c, b) in rows}``."""
    system = _normalize(rows)
    for var in range(nvars):
        if system is None:
            return False
        pos, neg, rest = [], [], []
        for c, b in system:
            (pos if c[var] > 0 else neg if c[var] < 0 else rest).append((c, b))
        combined = list(rest)
        for cp, bp in pos:
            for cn, bn in neg:
                sp, sn = -cn[var], cp[var]
                c = tuple(sp * x + sn * y for x, y in zip(cp, cn))
                combined.append((c, sp * bp + sn * bn))
        system = _normalize(combined)
    return system is not None


def _normalize(rows):
    """Scale rows by their leading coefficient, keeping the tightest bound per direction.

    Returns None as soon as a row reads ``0 >= b`` with ``b > 0``.
    """
    best: dict[tuple[Fraction, ...], Fraction] = {}
    for c, b in rows:
        lead = next((abs(x) for x in c if x), None)
        if lead is None:
            if b > 0:
                return None
            continue
        key = tuple(x / lead for x in c)
        bound = b / lead
        if key not in best or bound > best[key]:
            best[key] = bound
    return list(best.items())


def additivity_constraints(a: Matrix2) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    """Rows ``x_i + y_j - x_k - y_l >= 1`` for cells in adjacent value levels.

    By homogeneity the strict system is feasible iff this margin-1 system is,
    and comparing only consecutive distinct values suffices by transitivity.
    """
    p, q = len(a), len(a[0])
    levels: dict[int, list[tuple[int, int]]] = {}
    for i in range(p):
        for j in range(q):
            levels.setdefault(a[i][j], []).append((i, j))
    values = sorted(levels, reverse=True)
    rows = []
    for hi, lo in zip(values, values[1:]):
        for i, j in levels[hi]:
            for k, l in levels[lo]:
                c = [Fraction(0)] * (p + q)
                c[i] += 1
                c[p + j] += 1
                c[k] -= 1
                c[p + l] -= 1
                rows.append((tuple(c), Fraction(1)))
    return rows


def is_additive(a: Sequence[Sequence[int]]) -> bool:
    """Whether some reals x, y satisfy ``a_ij > a_kl => x_i + y_j > x_k + y_l``."""
    a = _as_matrix(a)
    if not a or not a[0]:
        return True
    return _fm_feasible(additivity_constraints(a), len(a) + len(a[0]))


# -- the lift G and the map (f, g, h) ------------------------------------------


def lift_g(a: Sequence[Sequence[int]], nu: Sequence[int] | None = None) -> Matrix3:
    """Binary 3-D matrix with ``a_ijk = 1`` iff ``k <= a_ij`` (levels k = 1..nu_1).

    Its 1-marginals are ``(row(A), col(A), nu')``.
    """
    a = _as_matrix(a)
    pi = pi_sequence(a)
    if nu is not None and as_partition(nu) != pi:
        raise KronRSKError(f"pi-sequence of A is {list(pi)}, not {list(nu)}")
    depth = pi[0] if pi else 0
    lifted = tuple(
        tuple(tuple(1 if k <= v else 0 for v in row) for row in a) for k in range(1, depth + 1)
    )
    if lifted:
        assert marginals3(lifted) == (row_sums(a), col_sums(a), conjugate(pi))
    return lifted


@dataclass(frozen=True)
class FGH:
    f: Tableau
    g: Tableau
    h: tuple[LRMultitableau, LRMultitableau]


def fgh(a: Sequence[Sequence[int]], nu: Sequence[int] | None = None) -> FGH:
    """``(f(A), g(A), h(A))``: the binary 3-D RSK packet of ``G(A)``."""
    a = _as_matrix(a)
    pkt = encode(lift_g(a, nu), "binary")
    return FGH(pkt.Q, pkt.P, (pkt.T, pkt.S))


def fg_census(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> Counter:
    """Multiplicity of each ``(f(A), g(A))`` over A in M_nu(lam, mu)."""
    return Counter(
        (r.f, r.g) for r in (fgh(a) for a in enumerate_matrices2(lam, mu, nu_filter=nu))
    )


def kron_from_minimal(
    lam: Sequence[int],
    mu: Sequence[int],
    nu: Sequence[int],
    alpha: Sequence[int],
    beta: Sequence[int],
    p: Tableau | None = None,
    q: Tableau | None = None,
) -> int:
    """``k(alpha, beta, nu)`` as the number of A in M_nu(lam, mu) with f(A) = P, g(A) = Q.

    ``P`` must have shape alpha and content lam, ``Q`` shape beta and content
    mu; when omitted, the first tableau of each kind is used.  Refuses with
    ``NotMinimalError`` unless nu is minimal for (lam, mu).
    """
    if not is_nu_minimal(lam, mu, nu):
        raise NotMinimalError("nu not minimal for (lambda, mu)")
    alpha, beta = as_partition(alpha), as_partition(beta)
    if p is None or q is None:
        ps, qs = enumerate_ssyt(alpha, lam), enumerate_ssyt(beta, mu)
        if not ps or not qs:
            raise KronRSKError("no tableau of the requested shape and content")
        p = ps[0] if p is None else p
        q = qs[0] if q is None else q
    p, q = tuple(map(tuple, p)), tuple(map(tuple, q))
    if p not in enumerate_ssyt(alpha, lam) or q not in enumerate_ssyt(beta, mu):
        raise KronRSKError("P or Q has the wrong shape or content")
    return fg_census(lam, mu, nu)[(p, q)]


def witnesses(lam, mu, nu, p: Tableau, q: Tableau) -> list[Matrix2]:
    """The matrices counted by :func:`kron_from_minimal`."""
    return [
        a for a in enumerate_matrices2(lam, mu, nu_filter=nu)
        if (fgh(a).f, fgh(a).g) == (p, q)
    ]


# -- the uniqueness theorem ---------------------------------------------------


@dataclass
class UniquenessReport:
    lam: Partition
    mu: Partition
    nu: Partition
    status: str  # "pass", "fail" or "hypothesis not met"
    witness: Matrix2 | None = None
    k: int | None = None
    violations: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != "fail"


def check_uniqueness_theorem(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> UniquenessReport:
    """Check k(lam, mu, nu) = 1 and vanishing below, given a minimal pi-unique witness."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if not (sum(lam) == sum(mu) == sum(nu)):
        raise SizeMismatchError("incomparable sizes")
    census = pi_census(lam, mu)
    if census[nu] != 1 or not _nothing_below(census, nu):
        return UniquenessReport(lam, mu, nu, "hypothesis not met")
    witness = enumerate_matrices2(lam, mu, nu_filter=nu)[0]
    n = sum(nu)
    violations = []
    k = kron_coeff(lam, mu, nu)
    if k != 1:
        violations.append({"alpha": lam, "beta": mu, "gamma": nu, "k": k, "expected": 1})
    for alpha in partitions(n):
        if not dominates(alpha, lam):
            continue
        for beta in partitions(n):
            if not dominates(beta, mu):
                continue
            for gamma in partitions(n):
                if not dominates(nu, gamma) or (alpha, beta, gamma) == (lam, mu, nu):
                    continue
                value = kron_coeff(alpha, beta, gamma)
                if value:
                    violations.append(
                        {"alpha": alpha, "beta": beta, "gamma": gamma, "k": value, "expected": 0}
                    )
    status = "fail" if violations else "pass"
    return UniquenessReport(lam, mu, nu, status, witness, k, violations)
