from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import matrices2_st, partitions_st
from kronrsk.core import (
    as_partition,
    col_sums,
    compositions,
    conjugate,
    dominates,
    enumerate_matrices2,
    enumerate_matrices3,
    enumerate_ssyt,
    is_partition,
    kostka,
    marginals3,
    partitions,
    pi_sequence,
    row_sums,
    sort_partition,
    strictly_dominates,
)
from kronrsk.errors import SizeMismatchError
from kronrsk.tableaux import canonical, content, is_semistandard, shape


def brute_ssyt(alpha, lam):
    """All fillings of alpha with the multiset of lam, kept if semistandard."""
    letters = [v for v, m in enumerate(lam, 1) for _ in range(m)]
    out = set()
    for perm in set(permutations(letters)):
        rows, k = [], 0
        for a in alpha:
            rows.append(tuple(perm[k : k + a]))
            k += a
        t = tuple(rows)
        if is_semistandard(t):
            out.add(t)
    return out


def brute_matrices2(lam, mu):
    p, q = len(lam), len(mu)
    for vals in product(*(range(min(a, b) + 1) for a in lam for b in mu)):
        m = tuple(tuple(vals[i * q : (i + 1) * q]) for i in range(p))
        if row_sums(m) == tuple(lam) and col_sums(m) == tuple(mu):
            yield m


# -- partitions and dominance ----------------------------------------------


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]


def test_composition_counts():
    assert all(len(list(compositions(n))) == 2 ** (n - 1) for n in range(1, 8))
    assert len(list(compositions(4, 3))) == 15  # weak, C(6, 2)


def test_as_partition_normalizes():
    assert as_partition([3, 1, 0, 0]) == (3, 1)
    assert sort_partition([0, 2, 3, 0, 1]) == (3, 2, 1)
    assert not is_partition((1, 2))


def test_dominates_examples():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))


def test_dominates_size_mismatch():
    with pytest.raises(SizeMismatchError, match="incomparable sizes"):
        dominates((3,), (2,))


@pytest.mark.parametrize("n", range(1, 9))
def test_dominance_is_partial_order(n):
    parts = list(partitions(n))
    for a in parts:
        assert dominates(a, a)
        for b in parts:
            if dominates(a, b) and dominates(b, a):
                assert a == b
            for c in parts:
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)


@pytest.mark.parametrize("n", range(1, 9))
def test_conjugation_reverses_dominance(n):
    parts = list(partitions(n))
    for a in parts:
        for b in parts:
            assert dominates(a, b) == dominates(conjugate(b), conjugate(a))


@pytest.mark.parametrize("n", range(1, 7))
def test_dominance_iff_kostka_positive(n):
    parts = list(partitions(n))
    for a in parts:
        for b in parts:
            assert dominates(a, b) == (kostka(a, b) > 0)


def test_strict_dominance():
    assert strictly_dominates((3, 1), (2, 2))
    assert not strictly_dominates((2, 2), (2, 2))


def test_conjugate_examples():
    assert conjugate((4,)) == (1, 1, 1, 1)
    assert conjugate((3, 2, 1)) == (3, 2, 1)
    assert conjugate((2, 2, 2, 2, 1, 1, 1, 1)) == (8, 4)
    assert conjugate(()) == ()


@given(partitions_st(12))
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


# -- pi-sequences --------------------------------------------------------------


def test_pi_sequence_examples():
    assert pi_sequence([[0, 3], [3, 0]]) == (3, 3)
    assert pi_sequence([[1, 2], [2, 1]]) == (2, 2, 1, 1)
    assert pi_sequence([[0, 0], [0, 0]]) == ()


@given(matrices2_st())
def test_pi_sequence_is_partition_of_total(a):
    pi = pi_sequence(a)
    assert is_partition(pi) and sum(pi) == sum(map(sum, a))


# -- Kostka numbers and SSYT enumeration -------------------------------------


def test_kostka_examples():
    # oracle: brute-force fillings
    assert len(brute_ssyt((2, 1), (1, 1, 1))) == 2
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1), (2,)) == 0
    for lam in [(3, 2), (2, 2, 1), (4,)]:
        assert kostka(lam, lam) == 1


def test_enumerate_ssyt_examples():
    assert enumerate_ssyt((2, 1), (2, 1)) == [((1, 1), (2,))]
    assert len(enumerate_ssyt((2, 1), (1, 1, 1))) == 2
    assert enumerate_ssyt((3,), (1, 2)) == [((1, 2, 2),)]
    assert enumerate_ssyt((3, 2, 1), (3, 2, 1)) == [canonical((3, 2, 1))]


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_ssyt_against_brute_force(n):
    for alpha in partitions(n):
        for lam in compositions(n):
            got = enumerate_ssyt(alpha, lam)
            assert set(got) == brute_ssyt(alpha, lam)
            assert len(set(got)) == len(got)
            words = [tuple(v for row in t for v in row) for t in got]
            assert words == sorted(words)
            assert all(shape(t) == alpha and content(t, len(lam)) == lam for t in got)


def test_kostka_size_mismatch():
    with pytest.raises(SizeMismatchError):
        kostka((2,), (1,))


# -- matrix enumeration --------------------------------------------------------


def test_enumerate_matrices2_examples():
    assert len(enumerate_matrices2((3, 3), (3, 3))) == 4
    assert len(enumerate_matrices2((6, 6), (3, 3, 3, 3), nu_filter=(2, 2, 2, 2, 1, 1, 1, 1))) == 6
    assert enumerate_matrices2((1,), (1,)) == [((1,),)]


def test_enumerate_matrices2_size_mismatch():
    with pytest.raises(SizeMismatchError):
        enumerate_matrices2((2,), (1,))


@pytest.mark.parametrize("n", range(1, 5))
def test_enumerate_matrices2_against_brute_force(n):
    for lam in compositions(n):
        for mu in compositions(n):
            if len(lam) * len(mu) > 9:
                continue
            got = enumerate_matrices2(lam, mu)
            assert set(got) == set(brute_matrices2(lam, mu))
            assert got == sorted(got, reverse=True) and len(set(got)) == len(got)
            binary = enumerate_matrices2(lam, mu, binary=True)
            assert set(binary) == {m for m in got if max(max(r) for r in m) <= 1}


def test_enumerate_matrices2_weak_margins():
    got = enumerate_matrices2((1, 0, 1), (2,))
    assert got == [((1,), (0,), (1,))]


@pytest.mark.parametrize("n", range(1, 7))
def test_matrix_counts_match_kostka_sums(n):
    parts = list(partitions(n))
    for lam in compositions(n):
        for mu in compositions(n):
            m = len(enumerate_matrices2(lam, mu))
            m_star = len(enumerate_matrices2(lam, mu, binary=True))
            assert m == sum(kostka(s, lam) * kostka(s, mu) for s in parts)
            assert m_star == sum(kostka(s, lam) * kostka(conjugate(s), mu) for s in parts)


def test_enumerate_matrices3_examples():
    # oracle: brute force over all 2^8 binary 2x2x2 arrays
    brute = 0
    for v in product((0, 1), repeat=8):
        a = tuple(
            tuple(tuple(v[4 * k + 2 * i : 4 * k + 2 * i + 2]) for i in range(2)) for k in range(2)
        )
        brute += marginals3(a) == ((1, 1), (1, 1), (1, 1))
    assert brute == 4
    assert len(enumerate_matrices3((1, 1), (1, 1), (1, 1), binary=True)) == 4
    for n in range(1, 5):
        assert enumerate_matrices3((n,), (n,), (n,)) == [(((n,),),)]
    assert len(enumerate_matrices3((2, 1), (2, 1), (3,))) == len(enumerate_matrices2((2, 1), (2, 1))) == 2


@given(st.sampled_from([(2, 1), (1, 2), (1, 1, 1), (3,)]), st.sampled_from([(2, 1), (1, 1, 1)]),
       st.sampled_from([(1, 2), (3,), (1, 1, 1)]), st.booleans())
def test_enumerate_matrices3_marginals(lam, mu, nu, binary):
    got = enumerate_matrices3(lam, mu, nu, binary)
    assert len(set(got)) == len(got)
    for a in got:
        assert marginals3(a) == (lam, mu, nu)
        if binary:
            assert all(v <= 1 for level in a for row in level for v in row)


def test_enumerate_matrices3_size_mismatch():
    with pytest.raises(SizeMismatchError):
        enumerate_matrices3((2,), (2,), (1,))
