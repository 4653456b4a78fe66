"""Identity and bijection sweeps, each checked against the character oracle.

Every suite is a function ``(n, rng) -> SuiteResult``; ``n`` bounds the size
of the instances swept.  ``run_suite`` dispatches by name.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib.resources import files
from itertools import product
from typing import Any, Callable

from .characters import (
    inner,
    is_minimal_component,
    kron_coeff,
    perm_inner,
    table,
    triple_inner,
    z_value,
)
from .core import (
    compositions,
    conjugate,
    dominates,
    enumerate_matrices2,
    enumerate_matrices3,
    enumerate_ssyt,
    kostka,
    marginals3,
    partitions,
    pi_sequence,
    strictly_dominates,
    transpose,
)
from .lr import lr_count, thomas_forward, thomas_inverse
from .minimal import (
    check_uniqueness_theorem,
    fg_census,
    is_additive,
    is_minimal,
    is_pi_unique,
    is_plane_partition,
    lift_g,
    minimal_pi_sequences,
    pi_census,
)
from .rsk2d import dual_rsk_forward, dual_rsk_inverse, rsk_forward, rsk_inverse
from .rsk3d import check_transpose_symmetry, decode, encode, validate_packet
from .tableaux import content, shape


@dataclass
class SuiteResult:
    name: str
    n: int
    checks: int = 0
    failures: int = 0
    counterexample: dict[str, Any] | None = None
    seconds: float = 0.0
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, **witness: Any) -> bool:
        self.checks += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = witness
        return ok

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "n": self.n,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "counterexample": _jsonable(self.counterexample),
            "notes": _jsonable(self.notes),
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (int, float, str, bool)) or obj is None:
        return obj
    return repr(obj)


def _sizes(n: int, start: int = 1):
    return range(start, n + 1)


def _dominating(lam, n: int):
    return [a for a in partitions(n) if dominates(a, lam)]


# -- 2-D identities and bijections -----------------------------------------


def suite_matrix_counts(n: int, rng: random.Random) -> SuiteResult:
    """m(l, m) = sum K K and m*(l, m) = sum K K' over composition pairs."""
    res = SuiteResult("matrix-counts", n)
    for m in _sizes(n):
        parts = list(partitions(m))
        for lam in compositions(m):
            for mu in compositions(m):
                lhs = len(enumerate_matrices2(lam, mu))
                rhs = sum(kostka(s, lam) * kostka(s, mu) for s in parts)
                res.check(lhs == rhs, identity="integer matrix count", lam=lam, mu=mu, lhs=lhs, rhs=rhs)
                lhs = len(enumerate_matrices2(lam, mu, binary=True))
                rhs = sum(kostka(s, lam) * kostka(conjugate(s), mu) for s in parts)
                res.check(lhs == rhs, identity="binary matrix count", lam=lam, mu=mu, lhs=lhs, rhs=rhs)
    return res


def suite_rsk2d(n: int, rng: random.Random) -> SuiteResult:
    """Round trips, shape statistics and transpose symmetry of (dual) RSK."""
    res = SuiteResult("rsk2d", n)
    for m in _sizes(n):
        for lam in compositions(m):
            for mu in compositions(m):
                dims = (len(lam), len(mu))
                shapes = {}
                for a in enumerate_matrices2(lam, mu):
                    p, q = rsk_forward(a)
                    res.check(rsk_inverse(p, q, dims) == a, kind="rsk round trip", matrix=a)
                    res.check(rsk_forward(transpose(a)) == (q, p), kind="rsk symmetry", matrix=a)
                    shapes[shape(p)] = shapes.get(shape(p), 0) + 1
                for s, count in shapes.items():
                    want = kostka(s, lam) * kostka(s, mu)
                    res.check(count == want, kind="shape census", lam=lam, mu=mu, shape=s)
                if max(dims) > 3:
                    continue
                for a in enumerate_matrices2(lam, mu, binary=True):
                    p, q = dual_rsk_forward(a)
                    res.check(dual_rsk_inverse(p, q, dims) == a, kind="dual round trip", matrix=a)
    return res


# -- Thomas' bijection ----------------------------------------------------


def _ssyt_upto(size: int, max_value: int):
    out = []
    for lam in compositions(size, max_value):
        for alpha in partitions(size):
            out.extend(enumerate_ssyt(alpha, lam))
    return out


def random_ssyt(rng: random.Random, size: int, max_value: int):
    """A random semistandard tableau built by row insertion of a random word."""
    from .tableaux import insert_word

    return insert_word([rng.randint(1, max_value) for _ in range(size)])


def suite_thomas(n: int, rng: random.Random, max_value: int = 3, samples: int = 300) -> SuiteResult:
    """Exhaustive over r <= 3 tuples of total size <= n, plus random larger tuples."""
    res = SuiteResult("thomas", n)
    by_size = {s: _ssyt_upto(s, max_value) for s in range(n + 1)}

    def tuples(r: int, budget: int):
        if r == 0:
            yield ()
            return
        for s in range(budget + 1):
            for t in by_size[s]:
                for rest in tuples(r - 1, budget - s):
                    yield (t,) + rest

    for r in (1, 2, 3):
        for tup in tuples(r, n):
            p, s = thomas_forward(tup)
            res.check(thomas_inverse(p, s) == list(tup), kind="exhaustive", tableaux=tup)
    for _ in range(samples):
        r = rng.randint(2, 5)
        tup = [random_ssyt(rng, rng.randint(0, 2 * n), rng.randint(1, 6)) for _ in range(r)]
        p, s = thomas_forward(tup)
        res.check(thomas_inverse(p, s) == tup, kind="random", tableaux=tup)
    return res


# -- 3-D correspondences --------------------------------------------------


def _rsk3d_instance(res: SuiteResult, lam, mu, nu, mode: str) -> None:
    binary = mode == "binary"
    matrices = enumerate_matrices3(lam, mu, nu, binary)
    m = sum(lam)
    packets = set()
    for a in matrices:
        pkt = encode(a, mode)
        packets.add(pkt)
        res.check(decode(pkt) == a, kind="round trip", mode=mode, matrix=a)
        res.check(
            content(pkt.Q, len(lam)) == lam and content(pkt.P, len(mu)) == mu,
            kind="packet contents", mode=mode, matrix=a,
        )
        if not binary:
            res.check(check_transpose_symmetry(a, mode), kind="transpose symmetry", matrix=a)
    res.check(len(packets) == len(matrices), kind="injective", mode=mode, lam=lam, mu=mu, nu=nu)
    counted = 0
    via_oracle = 0
    for alpha in partitions(m):
        ka = kostka(alpha, lam)
        if not ka:
            continue
        for beta in partitions(m):
            kb = kostka(beta, mu)
            if kb:
                counted += ka * kb * lr_count(alpha, beta, nu, binary)
                via_oracle += ka * kb * triple_inner(alpha, beta, nu, binary)
    ident = "binary lr count" if binary else "lr count"
    res.check(counted == len(matrices) == via_oracle, identity=ident, lam=lam, mu=mu, nu=nu,
              matrices=len(matrices), lr_side=counted, oracle_side=via_oracle)


def random_matrix3(rng: random.Random, n: int, binary: bool, max_dim: int = 4):
    p, q, r = (rng.randint(1, max_dim) for _ in range(3))
    cells = [(k, i, j) for k in range(r) for i in range(p) for j in range(q)]
    grid = [[[0] * q for _ in range(p)] for _ in range(r)]
    picks = rng.sample(cells, min(n, len(cells))) if binary else [rng.choice(cells) for _ in range(n)]
    for k, i, j in picks:
        grid[k][i][j] += 1
    return tuple(tuple(map(tuple, level)) for level in grid)


def suite_rsk3d(n: int, rng: random.Random, random_n: int = 8, samples: int = 200) -> SuiteResult:
    """Exhaustive bijection checks over composition triples, plus random instances."""
    res = SuiteResult("rsk3d", n)
    for m in _sizes(n):
        for lam, mu, nu in product(list(compositions(m)), repeat=3):
            for mode in ("integer", "binary"):
                _rsk3d_instance(res, lam, mu, nu, mode)
    # weak compositions exercise empty rows, columns and levels
    for lam, mu, nu in [((1, 0, 1), (2,), (0, 2)), ((0, 2), (1, 1), (1, 0, 1)), ((2, 0), (0, 2), (2, 0))]:
        for mode in ("integer", "binary"):
            _rsk3d_instance(res, lam, mu, nu, mode)
    for _ in range(samples):
        mode = rng.choice(("integer", "binary"))
        a = random_matrix3(rng, rng.randint(1, random_n), mode == "binary")
        pkt = encode(a, mode)
        validate_packet(pkt)
        res.check(decode(pkt) == a, kind="random round trip", mode=mode, matrix=a)
        if mode == "integer":
            res.check(check_transpose_symmetry(a, mode), kind="random symmetry", matrix=a)
    return res


def suite_cube_counts(n: int, rng: random.Random) -> SuiteResult:
    """Counts of 3-D matrices against permutation and Kronecker character sums."""
    res = SuiteResult("cube-counts", n)
    for m in _sizes(n):
        parts = list(partitions(m))
        for lam, mu, nu in product(list(compositions(m)), repeat=3):
            count = len(enumerate_matrices3(lam, mu, nu))
            count_b = len(enumerate_matrices3(lam, mu, nu, binary=True))
            res.check(count == perm_inner([lam, mu, nu]), identity="permutation characters", lam=lam, mu=mu, nu=nu)
            res.check(count_b == perm_inner([lam, mu, nu], True), identity="permutation characters, sign twisted", lam=lam, mu=mu, nu=nu)
            s = s_b = 0
            for a, b, g in product(parts, repeat=3):
                k3 = kostka(a, lam) * kostka(b, mu) * kostka(g, nu)
                if k3:
                    s += k3 * kron_coeff(a, b, g)
                    s_b += k3 * kron_coeff(a, b, conjugate(g))
            res.check(count == s, identity="kostka-kronecker sum", lam=lam, mu=mu, nu=nu)
            res.check(count_b == s_b, identity="kostka-kronecker sum, conjugate", lam=lam, mu=mu, nu=nu)
    return res


# -- LR multitableaux against characters ----------------------------------


def suite_lr_characters(n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("lr-characters", n)
    for m in _sizes(n):
        parts = list(partitions(m))
        for alpha, beta, nu in product(parts, repeat=3):
            for dual in (False, True):
                lhs = lr_count(alpha, beta, nu, dual)
                rhs = triple_inner(alpha, beta, nu, dual)
                res.check(lhs == rhs, alpha=alpha, beta=beta, nu=nu, dual=dual, lr=lhs, oracle=rhs)
    return res


def suite_lr_kron_sums(n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("lr-kron-sums", n)
    for m in _sizes(n):
        parts = list(partitions(m))
        for alpha, beta, nu in product(parts, repeat=3):
            rhs = sum(kostka(g, nu) * kron_coeff(alpha, beta, g) for g in parts if dominates(g, nu))
            res.check(lr_count(alpha, beta, nu) == rhs, identity="lr as dominating kronecker sum", alpha=alpha, beta=beta, nu=nu)
            nu_c = conjugate(nu)
            rhs = sum(
                kostka(conjugate(g), nu_c) * kron_coeff(alpha, beta, g)
                for g in parts
                if dominates(nu, g)
            )
            res.check(lr_count(alpha, beta, nu_c, True) == rhs, identity="lr* as dominated kronecker sum", alpha=alpha, beta=beta, nu=nu)
    return res


def suite_extremal_components(n: int, rng: random.Random) -> SuiteResult:
    from .characters import is_maximal_component

    res = SuiteResult("extremal-components", n)
    for m in _sizes(n):
        parts = list(partitions(m))
        for alpha, beta, nu in product(parts, repeat=3):
            k = kron_coeff(alpha, beta, nu)
            if not k:
                continue
            maximal = is_maximal_component(alpha, beta, nu)
            minimal = is_minimal_component(alpha, beta, nu)
            res.check(maximal == (k == lr_count(alpha, beta, nu)), part="maximal", alpha=alpha, beta=beta, nu=nu)
            res.check(
                minimal == (k == lr_count(alpha, beta, conjugate(nu), True)),
                part="minimal", alpha=alpha, beta=beta, nu=nu,
            )
    return res


# -- minimal matrices -------------------------------------------------------


def _partition_pairs(m: int):
    parts = list(partitions(m))
    return [(lam, mu) for lam in parts for mu in parts]


def suite_minimal_vanishing(n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("minimal-vanishing", n)
    for m in _sizes(n):
        parts = list(partitions(m))
        for lam, mu in _partition_pairs(m):
            for nu in minimal_pi_sequences(lam, mu):
                for alpha in _dominating(lam, m):
                    for beta in _dominating(mu, m):
                        for gamma in parts:
                            if strictly_dominates(nu, gamma):
                                res.check(kron_coeff(alpha, beta, gamma) == 0, part="vanishing below nu",
                                          lam=lam, mu=mu, nu=nu, alpha=alpha, beta=beta, gamma=gamma)
                        res.check(
                            kron_coeff(alpha, beta, nu) == lr_count(alpha, beta, conjugate(nu), True),
                            part="value at nu", lam=lam, mu=mu, nu=nu, alpha=alpha, beta=beta,
                        )
    return res


def suite_lift_bijectivity(n: int, rng: random.Random) -> SuiteResult:
    """nu minimal for (lam, mu) iff G is a bijection onto M*(lam, mu, nu').

    Only triples with M_nu(lam, mu) nonempty are swept: for an empty domain
    G is vacuously bijective whenever M*(lam, mu, nu') is empty too.
    """
    res = SuiteResult("lift-bijectivity", n)
    for m in _sizes(n):
        for lam, mu in _partition_pairs(m):
            for nu in pi_census(lam, mu):
                domain = enumerate_matrices2(lam, mu, nu_filter=nu)
                images = [lift_g(a, nu) for a in domain]
                nu_c = conjugate(nu)
                ok_image = all(marginals3(x) == (lam, mu, nu_c) for x in images)
                res.check(ok_image and len(set(images)) == len(images), kind="injective into M*",
                          lam=lam, mu=mu, nu=nu)
                target = len(enumerate_matrices3(lam, mu, nu_c, binary=True))
                bijective = len(images) == target
                minimal = nu in minimal_pi_sequences(lam, mu)
                res.check(bijective == minimal, lam=lam, mu=mu, nu=nu, bijective=bijective, minimal=minimal)
    return res


def suite_minimal_counts(n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("minimal-counts", n)
    for m in _sizes(n):
        for lam, mu in _partition_pairs(m):
            census = pi_census(lam, mu)
            for nu in minimal_pi_sequences(lam, mu):
                kron_side = lr_side = 0
                for alpha in _dominating(lam, m):
                    for beta in _dominating(mu, m):
                        kk = kostka(alpha, lam) * kostka(beta, mu)
                        kron_side += kk * kron_coeff(alpha, beta, nu)
                        lr_side += kk * lr_count(alpha, beta, conjugate(nu), True)
                res.check(census[nu] == kron_side == lr_side, lam=lam, mu=mu, nu=nu,
                          m_nu=census[nu], kron_side=kron_side, lr_side=lr_side)
    return res


def suite_fg_counts(n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("fg-counts", n)
    for m in _sizes(n):
        for lam, mu in _partition_pairs(m):
            census = pi_census(lam, mu)
            for nu in minimal_pi_sequences(lam, mu):
                fg = fg_census(lam, mu, nu)
                res.check(sum(fg.values()) == census[nu], kind="total", lam=lam, mu=mu, nu=nu)
                for alpha in _dominating(lam, m):
                    ps = enumerate_ssyt(alpha, lam)
                    for beta in _dominating(mu, m):
                        qs = enumerate_ssyt(beta, mu)
                        k = kron_coeff(alpha, beta, nu)
                        for p in ps:
                            for q in qs:
                                res.check(fg[(p, q)] == k, lam=lam, mu=mu, nu=nu,
                                          alpha=alpha, beta=beta, P=p, Q=q, count=fg[(p, q)], k=k)
                        if k:
                            res.check(is_minimal_component(alpha, beta, nu), kind="minimal component",
                                      alpha=alpha, beta=beta, nu=nu)
    return res


def suite_uniqueness(n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("uniqueness", n)
    met = 0
    for m in _sizes(n):
        parts = list(partitions(m))
        for lam, mu in _partition_pairs(m):
            for nu in parts:
                report = check_uniqueness_theorem(lam, mu, nu)
                met += report.status != "hypothesis not met"
                res.check(report.passed, lam=lam, mu=mu, nu=nu, violations=report.violations)
    res.notes["hypothesis_met"] = met
    return res


def _matrices_upto(p: int, q: int, top: int):
    for values in product(range(top + 1), repeat=p * q):
        yield tuple(tuple(values[i * q : (i + 1) * q]) for i in range(p))


def suite_additivity(n: int, rng: random.Random, samples: int = 200) -> SuiteResult:
    """Additive implies minimal and pi-unique: 2x2 and 2x3 with entries <= n, plus random."""
    res = SuiteResult("additivity", n)
    additive_seen = 0
    for p, q in ((2, 2), (2, 3)):
        for a in _matrices_upto(p, q, n):
            if is_additive(a):
                additive_seen += 1
                res.check(is_minimal(a) and is_pi_unique(a), matrix=a)
    for _ in range(samples):
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        xs = [rng.randint(0, 3) for _ in range(p)]
        ys = [rng.randint(0, 3) for _ in range(q)]
        a = tuple(tuple(x + y for y in ys) for x in xs)
        res.check(is_additive(a), kind="a_i + b_j is additive", matrix=a)
        res.check(is_minimal(a) and is_pi_unique(a), kind="random additive", matrix=a)
    res.notes["additive_exhaustive"] = additive_seen
    return res


def suite_plane_partitions(n: int, rng: random.Random) -> SuiteResult:
    """|P_nu(lam, mu)| <= k(lam, mu, nu)."""
    res = SuiteResult("plane-partitions", n)
    for m in _sizes(n):
        for lam, mu in _partition_pairs(m):
            planes: dict = {}
            for a in enumerate_matrices2(lam, mu):
                if is_plane_partition(a):
                    nu = pi_sequence(a)
                    planes[nu] = planes.get(nu, 0) + 1
            for nu in partitions(m):
                count = planes.get(nu, 0)
                k = kron_coeff(lam, mu, nu)
                res.check(count <= k, lam=lam, mu=mu, nu=nu, plane_partitions=count, k=k)
    return res


def suite_orthogonality(n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("orthogonality", n)
    for m in _sizes(n):
        t = table(m)
        for a, ra in enumerate(t.values):
            for b, rb in enumerate(t.values):
                res.check(inner(ra, rb, m) == (a == b), kind="rows", n=m, lam=t.partitions[a], mu=t.partitions[b])
        cols = list(zip(*t.values))
        for a, ca in enumerate(cols):
            for b, cb in enumerate(cols):
                val = sum(x * y for x, y in zip(ca, cb))
                want = z_value(t.partitions[a]) if a == b else 0
                res.check(val == want, kind="columns", n=m, rho=t.partitions[a], sigma=t.partitions[b])
    return res


SUITES: dict[str, tuple[Callable[[int, random.Random], SuiteResult], int]] = {
    "rsk2d": (suite_rsk2d, 5),
    "matrix-counts": (suite_matrix_counts, 6),
    "rsk3d": (suite_rsk3d, 4),
    "cube-counts": (suite_cube_counts, 4),
    "thomas": (suite_thomas, 6),
    "lr-characters": (suite_lr_characters, 5),
    "lr-kron-sums": (suite_lr_kron_sums, 5),
    "extremal-components": (suite_extremal_components, 5),
    "minimal-vanishing": (suite_minimal_vanishing, 5),
    "lift-bijectivity": (suite_lift_bijectivity, 5),
    "minimal-counts": (suite_minimal_counts, 6),
    "fg-counts": (suite_fg_counts, 5),
    "uniqueness": (suite_uniqueness, 5),
    "additivity": (suite_additivity, 3),
    "plane-partitions": (suite_plane_partitions, 6),
    "orthogonality": (suite_orthogonality, 8),
}


@lru_cache(maxsize=1)
def suite_aliases() -> dict[str, str]:
    """Alternative suite names, shipped as data, mapped to registry names."""
    return json.loads((files("kronrsk") / "fixtures" / "suite_aliases.json").read_text())


def suite_names() -> list[str]:
    return sorted(SUITES) + sorted(suite_aliases())


def resolve_suite(name: str) -> str:
    name = suite_aliases().get(name, name)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {suite_names()}")
    return name


def run_suite(name: str, n: int | None = None, seed: int = 0) -> SuiteResult:
    fn, default_n = SUITES[resolve_suite(name)]
    start = time.perf_counter()
    result = fn(default_n if n is None else n, random.Random(seed))
    result.seconds = time.perf_counter() - start
    return result
