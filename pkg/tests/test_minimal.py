from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import freeze, load_fixture, matrices2_st
from kronrsk.characters import kron_coeff
from kronrsk.core import (
    conjugate,
    enumerate_matrices2,
    enumerate_matrices3,
    marginals3,
    pi_sequence,
    strictly_dominates,
)
from kronrsk.errors import KronRSKError, NotMinimalError, SizeMismatchError
from kronrsk.minimal import (
    additivity_constraints,
    check_uniqueness_theorem,
    fg_census,
    fgh,
    is_additive,
    is_minimal,
    is_nu_minimal,
    is_pi_unique,
    is_plane_partition,
    kron_from_minimal,
    lift_g,
    minimal_pi_sequences,
    witnesses,
)
from kronrsk.tableaux import canonical, shape
from kronrsk.verify import run_suite


@pytest.fixture(scope="module")
def two_by_two():
    d = load_fixture("minimal_2x2.json")
    d["matrices"] = {k: freeze(v) for k, v in d["matrices"].items()}
    return d


@pytest.fixture(scope="module")
def two_by_four():
    d = load_fixture("minimal_2x4.json")
    for key in ("matrices", "f", "g"):
        d[key] = {k: freeze(v) for k, v in d[key].items()}
    return d


LAM, MU, NU = (6, 6), (3, 3, 3, 3), (2, 2, 2, 2, 1, 1, 1, 1)


# -- minimality and pi-uniqueness ---------------------------------------------------------------


def test_two_by_two_census(two_by_two):
    got = enumerate_matrices2((3, 3), (3, 3))
    assert set(got) == set(two_by_two["matrices"].values()) and len(got) == 4
    for name, a in two_by_two["matrices"].items():
        assert is_minimal(a) == two_by_two["minimal"][name]
    for name, unique in two_by_two["pi_unique"].items():
        assert is_pi_unique(two_by_two["matrices"][name]) == unique
    assert minimal_pi_sequences((3, 3), (3, 3)) == [(2, 2, 1, 1)]


def test_is_nu_minimal_examples():
    assert is_nu_minimal((3, 3), (3, 3), (2, 2, 1, 1))
    assert not is_nu_minimal((3, 3), (3, 3), (3, 3))
    assert is_nu_minimal(LAM, MU, NU)
    assert not is_nu_minimal((2,), (2,), (1, 1))  # no matrix has this pi-sequence
    with pytest.raises(SizeMismatchError):
        is_nu_minimal((2,), (2,), (1,))


@given(st.lists(st.integers(0, 5), min_size=1, max_size=4))
def test_single_row_is_minimal_and_unique(row):
    a = (tuple(row),)
    assert is_minimal(a) and is_pi_unique(a)


@pytest.mark.parametrize("p, q, r", [(1, 1, 3), (2, 2, 1), (2, 3, 2), (3, 3, 1)])
def test_constant_matrix(p, q, r):
    a = tuple((r,) * q for _ in range(p))
    assert is_minimal(a) and is_pi_unique(a) and is_additive(a)


@given(matrices2_st(max_dim=3, max_entry=2))
def test_minimality_against_census(a):
    pis = {pi_sequence(b) for b in enumerate_matrices2(tuple(map(sum, a)), tuple(map(sum, zip(*a))))}
    assert is_minimal(a) == (not any(strictly_dominates(pi_sequence(a), s) for s in pis))


# -- additivity --------------------------------------------------------------------------------


def lp_additive(a):
    from scipy.optimize import linprog

    rows = additivity_constraints(a)
    nvars = len(a) + len(a[0])
    if not rows:
        return True
    res = linprog(
        [0] * nvars,
        A_ub=[[-float(x) for x in c] for c, _ in rows],
        b_ub=[-float(b) for _, b in rows],
        bounds=[(None, None)] * nvars,
        method="highs",
    )
    return res.status == 0


def test_additivity_examples():
    assert is_additive([[3, 2], [2, 1]])
    assert is_additive([[5]])
    assert not is_additive([[1, 2], [2, 1]])  # x1+y2 > x1+y1 and x2+y1 > x2+y2 clash
    assert not is_additive([[2, 1], [1, 2]])


@given(st.lists(st.integers(0, 4), min_size=1, max_size=3), st.lists(st.integers(0, 4), min_size=1, max_size=3))
def test_sum_matrices_are_additive(xs, ys):
    a = tuple(tuple(x + y for y in ys) for x in xs)
    assert is_additive(a)
    assert is_minimal(a) and is_pi_unique(a)


def test_additivity_agrees_with_lp():
    pytest.importorskip("scipy")
    for p, q in ((2, 2), (2, 3), (3, 2)):
        for vals in product(range(3), repeat=p * q):
            a = tuple(tuple(vals[i * q : (i + 1) * q]) for i in range(p))
            assert is_additive(a) == lp_additive(a), a


def test_additive_implies_minimal_and_unique_exhaustive():
    result = run_suite("additivity", 2)
    assert result.passed, result.counterexample
    assert result.notes["additive_exhaustive"] > 0


# -- the lift G ------------------------------------------------------------------------------------


def test_lift_examples(two_by_two):
    assert lift_g([[2]]) == (((1,),), ((1,),))
    b = two_by_two["matrices"]["B"]
    lifted = lift_g(b, (2, 2, 1, 1))
    assert lifted == (((1, 1), (1, 1)), ((0, 1), (1, 0)))
    assert marginals3(lifted) == ((3, 3), (3, 3), (4, 2))
    with pytest.raises(KronRSKError):
        lift_g(b, (3, 3))


def test_lift_is_injective_into_binary_margins():
    lam, mu = (3, 2, 1), (2, 2, 2)
    for nu in {pi_sequence(a) for a in enumerate_matrices2(lam, mu)}:
        domain = enumerate_matrices2(lam, mu, nu_filter=nu)
        images = {lift_g(a) for a in domain}
        assert len(images) == len(domain)
        target = set(enumerate_matrices3(lam, mu, conjugate(nu), binary=True))
        assert images <= target
        assert (images == target) == (nu in minimal_pi_sequences(lam, mu))


# -- (f, g, h) and Kronecker coefficients -------------------------------------------------------------


def test_two_by_four_matrices(two_by_four):
    got = enumerate_matrices2(LAM, MU, nu_filter=NU)
    assert set(got) == set(two_by_four["matrices"].values()) and len(got) == 6
    assert all(is_minimal(a) for a in got)


def test_two_by_four_fg_pairs(two_by_four):
    for name, a in two_by_four["matrices"].items():
        r = fgh(a, NU)
        assert r.f == two_by_four["f"][name] and r.g == two_by_four["g"][name], name
    assert shape(fgh(two_by_four["matrices"]["A"]).f) == (8, 4)
    assert fgh(two_by_four["matrices"]["A"]).g == canonical(MU)


def test_two_by_four_kronecker_values(two_by_four):
    census = fg_census(LAM, MU, NU)
    nonzero = {(tuple(d["alpha"]), tuple(d["beta"])): d["k"] for d in two_by_four["nonzero_k"]}
    strata = {}
    for (f, g), count in census.items():
        strata.setdefault((shape(f), shape(g)), set()).add(count)
    assert {k: max(v) for k, v in strata.items()} == nonzero
    for (alpha, beta), k in nonzero.items():
        assert kron_coeff(alpha, beta, NU) == k
    a, b = two_by_four["matrices"]["A"], two_by_four["matrices"]["B"]
    fa, ga = fgh(a).f, fgh(a).g
    assert kron_from_minimal(LAM, MU, NU, (8, 4), MU, fa, ga) == 1
    assert kron_from_minimal(LAM, MU, NU, (7, 5), (4, 3, 3, 2), fgh(b).f, fgh(b).g) == 1
    assert kron_from_minimal(LAM, MU, NU, LAM, MU, canonical(LAM), canonical(MU)) == 0
    assert kron_coeff(LAM, MU, NU) == 0
    assert witnesses(LAM, MU, NU, fa, ga) == [a]


def test_kron_from_minimal_defaults_and_errors():
    assert kron_from_minimal((8, 4), MU, NU, (8, 4), MU) == 1
    with pytest.raises(NotMinimalError):
        kron_from_minimal((3, 3), (3, 3), (3, 3), (3, 3), (3, 3))
    with pytest.raises(KronRSKError):
        kron_from_minimal(LAM, MU, NU, (8, 4), MU, canonical(LAM), canonical(MU))


def test_fgh_trivial():
    for n in range(1, 5):
        r = fgh([[n]])
        assert r.f == r.g == ((1,) * n,)


# -- plane partitions and the uniqueness theorem -------------------------------------------------------------


def test_plane_partition_examples(two_by_two):
    assert is_plane_partition([[3, 2], [2, 1]])
    assert not is_plane_partition(two_by_two["matrices"]["B"])
    assert not is_plane_partition([[1], [2]])


def test_uniqueness_examples():
    report = check_uniqueness_theorem((2, 2), (2, 2), (1, 1, 1, 1))
    assert report.status == "pass" and report.k == 1 and report.witness == ((1, 1), (1, 1))
    report = check_uniqueness_theorem((3, 3), (3, 3), (2, 2, 1, 1))
    assert report.status == "hypothesis not met" and report.passed
    with pytest.raises(SizeMismatchError):
        check_uniqueness_theorem((2,), (2,), (1,))


@pytest.mark.slow
def test_uniqueness_sweep_six():
    result = run_suite("uniqueness", 6)
    assert result.passed, result.counterexample
