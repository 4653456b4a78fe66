"""JSON Schemas (draft 2020-12) for every document the CLI reads or writes."""

_INTS = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_POS_INTS = {"type": "array", "items": {"type": "integer", "minimum": 1}}

PARTITION = dict(_INTS)

TABLEAU = {
    "description": "rows top to bottom (English notation), entries >= 1",
    "type": "array",
    "items": {**_POS_INTS, "minItems": 1},
}

MATRIX2 = {"type": "array", "items": _INTS}

MATRIX3 = {
    "description": "levels k = 1..r, each a p x q matrix: A[k][i][j] = a_ijk",
    "type": "array",
    "items": MATRIX2,
}

MULTITABLEAU = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["inner", "outer", "rows"],
        "additionalProperties": False,
        "properties": {
            "inner": _INTS,
            "outer": _INTS,
            "rows": {"type": "array", "items": _POS_INTS},
        },
    },
}

PACKET = {
    "type": "object",
    "required": ["mode", "Q", "P", "T", "S"],
    "additionalProperties": False,
    "properties": {
        "mode": {"enum": ["integer", "binary"]},
        "Q": TABLEAU,
        "P": TABLEAU,
        "T": MULTITABLEAU,
        "S": MULTITABLEAU,
        "dims": {**_INTS, "minItems": 2, "maxItems": 2},
    },
}

KRON_REPORT = {
    "type": "object",
    "required": ["alpha", "beta", "nu", "method", "value", "provenance"],
    "properties": {
        "alpha": _INTS,
        "beta": _INTS,
        "nu": _INTS,
        "method": {"enum": ["oracle", "minimal"]},
        "value": {"type": "integer", "minimum": 0},
        "provenance": {"type": "string"},
        "lambda": _INTS,
        "mu": _INTS,
        "P": TABLEAU,
        "Q": TABLEAU,
        "witnesses": {"type": "array", "items": MATRIX2},
        "oracle": {"type": "integer", "minimum": 0},
    },
}

MINIMAL_REPORT = {
    "type": "object",
    "required": ["matrix", "pi_sequence", "minimal", "pi_unique", "additive", "plane_partition", "fgh"],
    "properties": {
        "matrix": MATRIX2,
        "pi_sequence": _INTS,
        "minimal": {"type": "boolean"},
        "pi_unique": {"type": "boolean"},
        "additive": {"type": "boolean"},
        "plane_partition": {"type": "boolean"},
        "fgh": {
            "type": "object",
            "required": ["f", "g", "T", "S"],
            "properties": {"f": TABLEAU, "g": TABLEAU, "T": MULTITABLEAU, "S": MULTITABLEAU},
        },
    },
}

VERIFY_REPORT = {
    "type": "object",
    "required": ["suite", "n", "passed", "checks", "failures", "counterexample", "notes"],
    "properties": {
        "suite": {"type": "string"},
        "n": {"type": "integer"},
        "passed": {"type": "boolean"},
        "checks": {"type": "integer", "minimum": 0},
        "failures": {"type": "integer", "minimum": 0},
        "counterexample": {"type": ["object", "null"]},
        "notes": {"type": "object"},
    },
}

ALL = {
    "partition": PARTITION,
    "tableau": TABLEAU,
    "matrix2": MATRIX2,
    "matrix3": MATRIX3,
    "multitableau": MULTITABLEAU,
    "packet": PACKET,
    "kron-report": KRON_REPORT,
    "minimal-report": MINIMAL_REPORT,
    "verify-report": VERIFY_REPORT,
}
