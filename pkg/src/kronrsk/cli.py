"""``kronrsk`` command line: JSON data on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 verification failure, 2 malformed input or invalid
packet, 3 mode/entry mismatch, 4 packet not in the image, 5 nu not minimal.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import serialize as ser
from .characters import kron_coeff, max_n
from .core import as_partition, enumerate_ssyt, pi_sequence
from .errors import (
    InvalidPacketError,
    KronRSKError,
    MalformedInputError,
    ModeError,
    NotMinimalError,
)
from .minimal import (
    fgh,
    is_additive,
    is_minimal,
    is_pi_unique,
    is_plane_partition,
    kron_from_minimal,
    witnesses,
)
from .rsk3d import MODES, decode, encode
from .verify import run_suite, suite_names

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_MALFORMED = 2
EXIT_MODE = 3
EXIT_NOT_IN_IMAGE = 4
EXIT_NOT_MINIMAL = 5


class CLIError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CLIError(EXIT_MALFORMED, f"cannot read {path}: {exc.strerror}") from exc


def _emit(obj) -> None:
    sys.stdout.write(ser.dumps(obj) + "\n")


def parse_partition(text: str) -> tuple[int, ...]:
    """Accept ``8,4``, ``8 4`` or the JSON array ``[8,4]``."""
    raw = text.strip().strip("[]()")
    try:
        parts = [int(x) for x in raw.replace(",", " ").split()]
        return as_partition(parts)
    except (ValueError, KronRSKError) as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}") from exc


def _parse_tableau(text: str):
    return ser.tableau_from_json(ser.loads(text))


def cmd_encode(args) -> int:
    array = ser.matrix3_from_json(ser.loads(_read(args.file)))
    try:
        pkt = encode(array, args.mode)
    except ModeError as exc:
        raise CLIError(EXIT_MODE, str(exc)) from exc
    _emit(ser.packet_to_json(pkt))
    return EXIT_OK


def cmd_decode(args) -> int:
    pkt = ser.packet_from_json(ser.loads(_read(args.file)))
    try:
        array = decode(pkt)
    except (InvalidPacketError, MalformedInputError) as exc:
        raise CLIError(EXIT_MALFORMED, str(exc)) from exc
    except KronRSKError as exc:
        raise CLIError(EXIT_NOT_IN_IMAGE, f"not in image: {exc}") from exc
    _emit(ser.matrix_to_json(array))
    return EXIT_OK


def cmd_kron(args) -> int:
    alpha, beta, nu = args.alpha, args.beta, args.nu
    report = {"alpha": list(alpha), "beta": list(beta), "nu": list(nu), "method": args.method}
    if args.method == "oracle":
        report["value"] = kron_coeff(alpha, beta, nu)
        report["provenance"] = "character inner product <chi^alpha chi^beta, chi^nu>"
        _emit(report)
        return EXIT_OK
    lam = args.lam if args.lam is not None else alpha
    mu = args.mu if args.mu is not None else beta
    p = _parse_tableau(args.P) if args.P else None
    q = _parse_tableau(args.Q) if args.Q else None
    try:
        value = kron_from_minimal(lam, mu, nu, alpha, beta, p, q)
    except NotMinimalError as exc:
        raise CLIError(EXIT_NOT_MINIMAL, str(exc)) from exc
    p = p if p is not None else enumerate_ssyt(alpha, lam)[0]
    q = q if q is not None else enumerate_ssyt(beta, mu)[0]
    report.update(
        {
            "lambda": list(lam),
            "mu": list(mu),
            "P": ser.tableau_to_json(p),
            "Q": ser.tableau_to_json(q),
            "value": value,
            "provenance": "number of A in M_nu(lambda, mu) with f(A) = P and g(A) = Q",
            "witnesses": [ser.matrix_to_json(a) for a in witnesses(lam, mu, nu, p, q)],
        }
    )
    if sum(nu) <= max_n():
        report["oracle"] = kron_coeff(alpha, beta, nu)
    _emit(report)
    return EXIT_OK


def cmd_minimal(args) -> int:
    a = ser.matrix2_from_json(ser.loads(_read(args.file)))
    if not a or not a[0]:
        raise CLIError(EXIT_MALFORMED, "matrix must be nonempty")
    try:
        r = fgh(a)
    except KronRSKError as exc:
        raise CLIError(EXIT_MALFORMED, str(exc)) from exc
    _emit(
        {
            "matrix": ser.matrix_to_json(a),
            "pi_sequence": list(pi_sequence(a)),
            "minimal": is_minimal(a),
            "pi_unique": is_pi_unique(a),
            "additive": is_additive(a),
            "plane_partition": is_plane_partition(a),
            "fgh": {
                "f": ser.tableau_to_json(r.f),
                "g": ser.tableau_to_json(r.g),
                "T": ser.multitableau_to_json(r.h[0]),
                "S": ser.multitableau_to_json(r.h[1]),
            },
        }
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    result = run_suite(args.suite, args.n, args.seed)
    _emit(result.to_json())
    status = "pass" if result.passed else "FAIL"
    print(
        f"{args.suite}: {status} ({result.checks} checks, {result.seconds:.1f}s)",
        file=sys.stderr,
    )
    return EXIT_OK if result.passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kronrsk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="3-D matrix JSON to packet JSON")
    enc.add_argument("file", help="path, or - for stdin")
    enc.add_argument("--mode", choices=MODES, default="integer")
    enc.set_defaults(func=cmd_encode)

    dec = sub.add_parser("decode", help="packet JSON to 3-D matrix JSON")
    dec.add_argument("file", help="path, or - for stdin")
    dec.set_defaults(func=cmd_decode)

    kr = sub.add_parser("kron", help="Kronecker coefficient k(alpha, beta, nu)")
    kr.add_argument("alpha", type=parse_partition)
    kr.add_argument("beta", type=parse_partition)
    kr.add_argument("nu", type=parse_partition)
    kr.add_argument("--method", choices=("oracle", "minimal"), default="oracle")
    kr.add_argument("--lam", type=parse_partition, help="row margin (minimal method; default alpha)")
    kr.add_argument("--mu", type=parse_partition, help="column margin (minimal method; default beta)")
    kr.add_argument("--P", help="tableau JSON of shape alpha, content lam")
    kr.add_argument("--Q", help="tableau JSON of shape beta, content mu")
    kr.set_defaults(func=cmd_kron)

    mn = sub.add_parser("minimal", help="classify a 2-D matrix and print (f, g, h)")
    mn.add_argument("file", help="path, or - for stdin")
    mn.set_defaults(func=cmd_minimal)

    ve = sub.add_parser("verify", help="run an identity or bijection sweep")
    ve.add_argument("suite", choices=suite_names())
    ve.add_argument("--n", type=int, default=None, help="size bound (default per suite)")
    ve.add_argument("--seed", type=int, default=0)
    ve.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"kronrsk: {exc}", file=sys.stderr)
        return exc.code
    except KronRSKError as exc:
        print(f"kronrsk: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
