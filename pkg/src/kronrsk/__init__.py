"""RSK correspondences for 3-dimensional matrices and Kronecker coefficients.

The main entry points are re-exported here; see the submodules for the rest.
"""
from .characters import char_value, kron_coeff
from .core import conjugate, dominates, kostka, partitions, pi_sequence
from .errors import KronRSKError
from .lr import LRMultitableau, SkewLRTableau, lr_count, thomas_forward, thomas_inverse
from .minimal import fgh, is_additive, is_minimal, is_pi_unique, kron_from_minimal, lift_g
from .rsk2d import dual_rsk_forward, dual_rsk_inverse, rsk_forward, rsk_inverse
from .rsk3d import TriplePacket, decode, encode

__all__ = [
    "KronRSKError",
    "LRMultitableau",
    "SkewLRTableau",
    "TriplePacket",
    "char_value",
    "conjugate",
    "decode",
    "dominates",
    "dual_rsk_forward",
    "dual_rsk_inverse",
    "encode",
    "fgh",
    "is_additive",
    "is_minimal",
    "is_pi_unique",
    "kostka",
    "kron_coeff",
    "kron_from_minimal",
    "lift_g",
    "lr_count",
    "partitions",
    "pi_sequence",
    "rsk_forward",
    "rsk_inverse",
    "thomas_forward",
    "thomas_inverse",
]
