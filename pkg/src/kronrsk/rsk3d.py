"""RSK and dual RSK for 3-dimensional matrices.

A matrix ``A = (a_ijk)`` is split into its level matrices ``A^(k)``; each level
goes through RSK (integer mode) or dual RSK (binary mode), giving pairs
``(P_k, Q_k)``; Thomas' bijection then folds ``(Q_1..Q_r)`` into ``(Q, T)``
and ``(P_1..P_r)`` into ``(P, S)``.  The result is the packet ``(Q, P, (T, S))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .core import Matrix2, Matrix3, conjugate, is_binary, marginals3
from .errors import (
    InvalidPacketError,
    InvalidTableauError,
    KronRSKError,
    ModeError,
    NotInImageError,
)
from .lr import LRMultitableau, thomas_forward, thomas_inverse
from .rsk2d import dual_rsk_forward, dual_rsk_inverse, rsk_forward, rsk_inverse
from .tableaux import Tableau, content, is_semistandard, shape

Mode = Literal["integer", "binary"]
MODES = ("integer", "binary")


@dataclass(frozen=True)
class TriplePacket:
    """The image ``(Q, P, (T, S))`` of a 3-D matrix.

    ``dims`` is the ``(p, q)`` size of the level matrices; it is needed to
    restore trailing zero rows or columns that no tableau entry records.
    """

    mode: Mode
    Q: Tableau
    P: Tableau
    T: LRMultitableau
    S: LRMultitableau
    dims: tuple[int, int]

    @property
    def alpha(self):
        return shape(self.Q)

    @property
    def beta(self):
        return shape(self.P)

    @property
    def marginals(self):
        p, q = self.dims
        return content(self.Q, p), content(self.P, q), self.T.type


def slice_levels(array: Matrix3) -> list[Matrix2]:
    """The level matrices ``A^(k)_ij = a_ijk``; with level-first storage this is a no-op copy."""
    return [tuple(tuple(row) for row in level) for level in array]


def stack_levels(levels: Sequence[Matrix2]) -> Matrix3:
    return tuple(tuple(tuple(row) for row in level) for level in levels)


def transpose3(array: Matrix3) -> Matrix3:
    """``A^t = (a_jik)``: transpose every level."""
    return tuple(tuple(zip(*level)) for level in array)


def check_shape3(array) -> tuple[int, int, int]:
    """Validate a rectangular nested array of nonnegative ints; return (p, q, r)."""
    r = len(array)
    if r == 0:
        return 0, 0, 0
    p = len(array[0])
    q = len(array[0][0]) if p else 0
    for level in array:
        if len(level) != p or any(len(row) != q for row in level):
            raise KronRSKError("3-D matrix levels must all be p x q")
        for row in level:
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise KronRSKError("matrix entries must be integers")
    return p, q, r


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ModeError(f"mode must be one of {MODES}")


def encode(array: Matrix3, mode: Mode = "integer") -> TriplePacket:
    _check_mode(mode)
    p, q, _ = check_shape3(array)
    if any(v < 0 for level in array for row in level for v in row):
        raise ModeError("matrix entries must be nonnegative")
    if mode == "binary" and not is_binary(array):
        raise ModeError("binary mode needs a 0/1 matrix")
    forward = rsk_forward if mode == "integer" else dual_rsk_forward
    pairs = [forward(level) for level in slice_levels(array)]
    big_p, s = thomas_forward([pk for pk, _ in pairs])
    big_q, t = thomas_forward([qk for _, qk in pairs])
    packet = TriplePacket(mode, big_q, big_p, t, s, (p, q))
    validate_packet(packet)
    assert packet.marginals == marginals3(array) or not array
    return packet


def validate_packet(pkt: TriplePacket) -> None:
    """Raise ``InvalidPacketError`` unless all packet invariants hold."""
    _check_mode(pkt.mode)
    p, q = pkt.dims
    if not (is_semistandard(pkt.Q) and is_semistandard(pkt.P)):
        raise InvalidPacketError("Q and P must be semistandard tableaux")
    if not (pkt.T.is_valid() and pkt.S.is_valid()):
        raise InvalidPacketError("T and S must be LR multitableaux")
    if pkt.T.shape != shape(pkt.Q) or pkt.S.shape != shape(pkt.P):
        raise InvalidPacketError("T must have the shape of Q and S the shape of P")
    if pkt.T.type != pkt.S.type:
        raise InvalidPacketError("T and S must have the same type")
    if len(content(pkt.Q)) > p or len(content(pkt.P)) > q:
        raise InvalidPacketError("tableau entries exceed the matrix dimensions")
    if pkt.mode == "integer":
        if pkt.T.content != pkt.S.content:
            raise InvalidPacketError("integer packets need equal contents")
    elif tuple(conjugate(rho) for rho in pkt.T.content) != pkt.S.content:
        raise InvalidPacketError("binary packets need conjugate contents")


def decode(pkt: TriplePacket) -> Matrix3:
    validate_packet(pkt)
    p, q = pkt.dims
    qs = thomas_inverse(pkt.Q, pkt.T)
    ps = thomas_inverse(pkt.P, pkt.S)
    inverse = rsk_inverse if pkt.mode == "integer" else dual_rsk_inverse
    try:
        levels = [inverse(pk, qk, (p, q)) for pk, qk in zip(ps, qs)]
    except InvalidTableauError as exc:
        raise NotInImageError(str(exc)) from exc
    array = stack_levels(levels)
    if levels:
        assert marginals3(array) == pkt.marginals
    return array


def swap(pkt: TriplePacket) -> TriplePacket:
    """``(Q, P, (T, S))`` to ``(P, Q, (S, T))``."""
    return TriplePacket(pkt.mode, pkt.P, pkt.Q, pkt.S, pkt.T, pkt.dims[::-1])


def check_transpose_symmetry(array: Matrix3, mode: Mode = "integer") -> bool:
    """True iff the transposed matrix encodes to the swapped packet."""
    return encode(transpose3(array), mode) == swap(encode(array, mode))
