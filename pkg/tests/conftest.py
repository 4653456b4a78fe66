import json
from importlib.resources import files

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kronrsk.tableaux import insert_word

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def load_fixture(name):
    return json.loads((files("kronrsk") / "fixtures" / name).read_text())


def freeze(obj):
    if isinstance(obj, list):
        return tuple(freeze(x) for x in obj)
    return obj


@pytest.fixture(scope="session")
def golden():
    from kronrsk.serialize import packet_from_json

    return {
        "matrix": freeze(load_fixture("golden_matrix.json")),
        "packet": packet_from_json(load_fixture("golden_packet.json")),
        "levels": [
            (freeze(lv["P"]), freeze(lv["Q"])) for lv in load_fixture("golden_levels.json")["levels"]
        ],
    }


@st.composite
def partitions_st(draw, max_size=8):
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        top = parts[-1] if parts else n
        p = draw(st.integers(1, min(n, top)))
        parts.append(p)
        n -= p
    return tuple(parts)


@st.composite
def tableaux_st(draw, max_size=8, max_value=4):
    word = draw(st.lists(st.integers(1, max_value), max_size=max_size))
    return insert_word(word)


@st.composite
def matrices2_st(draw, max_dim=3, max_entry=3):
    p = draw(st.integers(1, max_dim))
    q = draw(st.integers(1, max_dim))
    row = st.tuples(*[st.integers(0, max_entry)] * q)
    return tuple(draw(row) for _ in range(p))


@st.composite
def matrices3_st(draw, max_dim=3, max_entry=2):
    p, q, r = (draw(st.integers(1, max_dim)) for _ in range(3))
    entry = st.integers(0, max_entry)
    return tuple(
        tuple(tuple(draw(entry) for _ in range(q)) for _ in range(p)) for _ in range(r)
    )
