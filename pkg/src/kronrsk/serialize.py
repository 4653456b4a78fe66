"""JSON encodings of matrices, tableaux, multitableaux and packets.

* partition / composition: array of ints
* tableau: array of rows (top to bottom), each an array of ints
* 2-D matrix: array of rows; 3-D matrix: array of levels, each a 2-D matrix
* LR multitableau: array of components ``{"inner", "outer", "rows"}`` where
  ``rows[i]`` lists the entries of row i of ``outer/inner`` left to right
* packet: ``{"mode", "Q", "P", "T", "S", "dims"}`` with ``dims = [p, q]``

Output is canonical: keys sorted, no insignificant whitespace.
"""
from __future__ import annotations

import json
from typing import Any

from .errors import MalformedInputError
from .lr import LRMultitableau, SkewLRTableau
from .rsk3d import MODES, TriplePacket, check_shape3
from .tableaux import content


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON: {exc}") from exc


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        raise MalformedInputError(f"{what} must be an array of integers")
    return value


def _nested(value, depth: int, what: str):
    if depth == 1:
        return tuple(_int_list(value, what))
    if not isinstance(value, list):
        raise MalformedInputError(f"{what} must be a nested array of depth {depth}")
    return tuple(_nested(v, depth - 1, what) for v in value)


def tableau_to_json(t) -> list[list[int]]:
    return [list(row) for row in t]


def tableau_from_json(value) -> tuple[tuple[int, ...], ...]:
    return _nested(value, 2, "tableau")


def matrix2_from_json(value):
    m = _nested(value, 2, "matrix")
    if m and any(len(row) != len(m[0]) for row in m):
        raise MalformedInputError("matrix rows must have equal length")
    return m


def matrix3_from_json(value):
    m = _nested(value, 3, "3-D matrix")
    try:
        check_shape3(m)
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from exc
    return m


def matrix_to_json(m) -> list:
    if isinstance(m, (tuple, list)):
        return [matrix_to_json(x) for x in m]
    return m


def multitableau_to_json(t: LRMultitableau) -> list[dict]:
    return [
        {"inner": list(c.inner), "outer": list(c.outer), "rows": tableau_to_json(c.rows)}
        for c in t.components
    ]


def multitableau_from_json(value) -> LRMultitableau:
    if not isinstance(value, list):
        raise MalformedInputError("multitableau must be an array of components")
    comps = []
    for comp in value:
        if not isinstance(comp, dict) or set(comp) != {"inner", "outer", "rows"}:
            raise MalformedInputError("component needs exactly inner, outer, rows")
        comps.append(
            SkewLRTableau(
                tuple(_int_list(comp["inner"], "inner")),
                tuple(_int_list(comp["outer"], "outer")),
                _nested(comp["rows"], 2, "rows"),
            )
        )
    return LRMultitableau(tuple(comps))


def packet_to_json(pkt: TriplePacket) -> dict:
    return {
        "mode": pkt.mode,
        "Q": tableau_to_json(pkt.Q),
        "P": tableau_to_json(pkt.P),
        "T": multitableau_to_json(pkt.T),
        "S": multitableau_to_json(pkt.S),
        "dims": list(pkt.dims),
    }


def packet_from_json(value) -> TriplePacket:
    if not isinstance(value, dict):
        raise MalformedInputError("packet must be a JSON object")
    missing = {"mode", "Q", "P", "T", "S"} - set(value)
    if missing:
        raise MalformedInputError(f"packet is missing {sorted(missing)}")
    if value["mode"] not in MODES:
        raise MalformedInputError(f"mode must be one of {list(MODES)}")
    q, p = tableau_from_json(value["Q"]), tableau_from_json(value["P"])
    if "dims" in value:
        dims = tuple(_int_list(value["dims"], "dims"))
        if len(dims) != 2:
            raise MalformedInputError("dims must be [p, q]")
    else:
        dims = (len(content(q)), len(content(p)))
    return TriplePacket(
        value["mode"],
        q,
        p,
        multitableau_from_json(value["T"]),
        multitableau_from_json(value["S"]),
        dims,
    )
