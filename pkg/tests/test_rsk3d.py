import random
from dataclasses import replace
from itertools import product

import pytest
from hypothesis import given

from conftest import load_fixture, matrices3_st
from kronrsk.core import compositions, enumerate_matrices3, kostka, marginals3, partitions
from kronrsk.errors import InvalidPacketError, KronRSKError, ModeError, NotInImageError
from kronrsk.lr import LRMultitableau, SkewLRTableau, lr_count
from kronrsk.rsk2d import dual_rsk_forward, rsk_forward
from kronrsk.rsk3d import (
    TriplePacket,
    check_transpose_symmetry,
    decode,
    encode,
    slice_levels,
    stack_levels,
    swap,
    transpose3,
    validate_packet,
)
from kronrsk.serialize import dumps, packet_to_json
from kronrsk.tableaux import canonical, shape
from kronrsk.verify import random_matrix3


def single(gamma):
    return LRMultitableau((SkewLRTableau((), tuple(gamma), canonical(gamma)),))


# -- the golden 4x5x3 example -------------------------------------------------------


def test_golden_encode(golden):
    pkt = encode(golden["matrix"], "binary")
    assert pkt == golden["packet"]
    assert dumps(packet_to_json(pkt)) == dumps(load_fixture("golden_packet.json"))
    assert pkt.marginals == ((9, 7, 5, 4), (7, 6, 5, 4, 3), (10, 8, 7))
    assert marginals3(golden["matrix"]) == pkt.marginals


def test_golden_decode(golden):
    assert decode(golden["packet"]) == golden["matrix"]


def test_golden_slices(golden):
    levels = slice_levels(golden["matrix"])
    assert len(levels) == 3 and all(len(lv) == 4 and len(lv[0]) == 5 for lv in levels)
    assert [dual_rsk_forward(lv) for lv in levels] == golden["levels"]
    assert stack_levels(levels) == golden["matrix"]


# -- trivial and reduced cases ------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 5))
def test_one_by_one(n):
    pkt = encode((((n,),),), "integer")
    assert pkt.Q == pkt.P == ((1,) * n,)
    assert pkt.T == pkt.S == single((n,))
    assert decode(pkt) == (((n,),),)


@given(matrices3_st(max_dim=3, max_entry=2))
def test_single_level_is_plain_rsk(a):
    level = a[0]
    for mode, forward in (("integer", rsk_forward), ("binary", dual_rsk_forward)):
        if mode == "binary":
            level = tuple(tuple(min(v, 1) for v in row) for row in level)
        n = sum(map(sum, level))
        pkt = encode((level,), mode)
        assert (pkt.P, pkt.Q) == forward(level)
        if n:
            assert pkt.T == single(shape(pkt.Q)) and pkt.S == single(shape(pkt.P))
        assert decode(pkt) == (level,)


def test_empty_levels_and_weak_margins():
    a = (((0, 0), (0, 0)), ((1, 0), (0, 0)), ((0, 0), (0, 0)))
    for mode in ("integer", "binary"):
        pkt = encode(a, mode)
        assert pkt.dims == (2, 2) and pkt.T.type == (0, 1, 0)
        assert pkt.marginals == ((1, 0), (1, 0), (0, 1, 0))
        assert decode(pkt) == a


# -- bijection ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 4))
@pytest.mark.parametrize("mode", ["integer", "binary"])
def test_bijection_exhaustive(n, mode):
    binary = mode == "binary"
    parts = list(partitions(n))
    for lam, mu, nu in product(list(compositions(n)), repeat=3):
        matrices = enumerate_matrices3(lam, mu, nu, binary)
        packets = {encode(a, mode) for a in matrices}
        assert len(packets) == len(matrices)
        for pkt in packets:
            assert encode(decode(pkt), mode) == pkt
        want = sum(
            kostka(a, lam) * kostka(b, mu) * lr_count(a, b, nu, binary) for a in parts for b in parts
        )
        assert len(matrices) == want


@given(matrices3_st(max_dim=3, max_entry=3))
def test_integer_round_trip(a):
    pkt = encode(a, "integer")
    validate_packet(pkt)
    assert decode(pkt) == a
    assert pkt.marginals == marginals3(a)


@given(matrices3_st(max_dim=3, max_entry=1))
def test_binary_round_trip(a):
    pkt = encode(a, "binary")
    assert decode(pkt) == a
    assert pkt.marginals == marginals3(a)


def test_random_larger_round_trips():
    rng = random.Random(3)
    for _ in range(60):
        mode = rng.choice(("integer", "binary"))
        a = random_matrix3(rng, rng.randint(1, 12), mode == "binary")
        assert decode(encode(a, mode)) == a


# -- transpose symmetry --------------------------------------------------------------------


@given(matrices3_st(max_dim=3, max_entry=3))
def test_integer_transpose_symmetry(a):
    assert check_transpose_symmetry(a, "integer")
    assert encode(transpose3(a)) == swap(encode(a))


def test_golden_transpose_symmetry(golden):
    assert check_transpose_symmetry(golden["matrix"], "integer")
    assert not check_transpose_symmetry(golden["matrix"], "binary")


def test_binary_swap_symmetry_is_impossible():
    # a symmetric 0/1 matrix maps to tableaux of conjugate shapes, so a plain swap cannot fix it
    a = (((0, 1), (1, 0)),)
    assert transpose3(a) == a
    pkt = encode(a, "binary")
    assert {shape(pkt.P), shape(pkt.Q)} == {(2,), (1, 1)}
    assert not check_transpose_symmetry(a, "binary")


def test_symmetric_fibres():
    for r in range(1, 4):
        a = tuple(((1,),) for _ in range(r))
        assert check_transpose_symmetry(a, "integer")
        assert check_transpose_symmetry(a, "binary")


# -- errors --------------------------------------------------------------------------------


def test_mode_errors():
    with pytest.raises(ModeError):
        encode((((2,),),), "binary")
    with pytest.raises(ModeError):
        encode((((-1,),),), "integer")
    with pytest.raises(ModeError):
        encode((((1,),),), "boolean")


def test_ragged_matrix():
    with pytest.raises(KronRSKError):
        encode((((1, 0),), ((1,),)))


def test_invalid_packets(golden):
    pkt = golden["packet"]
    with pytest.raises(InvalidPacketError):
        decode(replace(pkt, mode="integer"))  # contents are conjugate, not equal
    with pytest.raises(InvalidPacketError):
        decode(replace(pkt, T=pkt.S))  # shape of T differs from Q
    with pytest.raises(InvalidPacketError):
        decode(replace(pkt, dims=(3, 5)))  # Q has entries up to 4
    with pytest.raises(InvalidPacketError):
        decode(replace(pkt, Q=((2, 1),) + pkt.Q[1:]))


def test_decode_validates_before_inverting():
    pkt = TriplePacket("integer", ((1, 1),), ((1, 1),), single((2,)), single((2,)), (1, 1))
    assert decode(pkt) == (((2,),),)
    with pytest.raises(InvalidPacketError):
        decode(replace(pkt, Q=((1, 2),)))  # entry 2 exceeds p = 1
    with pytest.raises(InvalidPacketError):
        decode(TriplePacket("binary", ((1,), (1,)), ((1, 2),), single((1, 1)), single((2,)), (2, 2)))


def test_not_in_image_is_kronrsk_error():
    assert issubclass(NotInImageError, KronRSKError)
