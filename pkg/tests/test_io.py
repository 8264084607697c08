import io
import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gframes import paper_catalog
from gframes.errors import ParseError, ValidationError
from gframes.frames import GFrame
from gframes.io import dumps, emit_instance, fingerprint, load_instance, loads_instance


def doc(**over):
    d = {"space_dim": 2, "index_origin": 1,
         "operators": [{"rows": 1, "cols": 2, "re": [1.0, 0.0], "im": [0.0, 0.5]}]}
    d.update(over)
    return json.dumps(d)


def test_roundtrip_bit_exact():
    g, _ = paper_catalog("tless1-iii")
    back = loads_instance(emit_instance(g, {"name": "x"}))
    assert back.metadata == {"name": "x"}
    assert all(np.array_equal(a, b) for a, b in zip(g.blocks, back.frame.blocks))


def test_emission_is_deterministic():
    g, _ = paper_catalog("dual-ii")
    assert emit_instance(g) == emit_instance(g)
    assert fingerprint(g) == fingerprint(GFrame(g.space_dim, g.blocks))


def test_bilateral_origin_roundtrip():
    g, _ = paper_catalog("no-rep-Z")
    assert loads_instance(emit_instance(g)).frame.index_origin == -3


def test_parse_error_has_location():
    with pytest.raises(ParseError, match="line 1"):
        loads_instance("{\"space_dim\": 2,")


@pytest.mark.parametrize(
    "text, where",
    [
        (doc(space_dim=0), "space_dim"),
        (doc(operators=[]), "operators"),
        (doc(operators=[{"rows": 1, "cols": 3, "re": [1, 0, 0], "im": [0, 0, 0]}]), "operators[0].cols"),
        (doc(operators=[{"rows": 1, "cols": 2, "re": [1], "im": [0, 0]}]), "operators[0].re"),
        (doc(operators=[{"rows": 1, "cols": 2, "re": [1, "a"], "im": [0, 0]}]), "operators[0].re[1]"),
        (doc(operators=[{"rows": 1, "cols": 2, "re": [1, 0]}]), "operators[0]: missing im"),
        (doc(index_origin=-1), "needs 3 blocks"),
        (doc(metadata=[1]), "metadata"),
    ],
)
def test_validation_names_field(text, where):
    with pytest.raises(ValidationError) as info:
        loads_instance(text)
    assert where in str(info.value)


def test_nan_literal_rejected():
    with pytest.raises(ValidationError, match="non-finite"):
        loads_instance(doc().replace("0.5", "NaN"))


def test_load_from_stream():
    assert load_instance(io.StringIO(doc())).frame.space_dim == 2


def test_dumps_non_finite_as_strings():
    assert dumps({"a": float("inf"), "b": [1.0, 2]}) == '{\n  "a": "inf",\n  "b": [1, 2]\n}'


@given(st.lists(st.floats(allow_nan=False, allow_infinity=False, width=64), min_size=2, max_size=2))
def test_float_roundtrip(vals):
    text = doc(operators=[{"rows": 1, "cols": 2, "re": vals, "im": [0.0, 0.0]}])
    g = loads_instance(text).frame
    assert list(loads_instance(emit_instance(g)).frame.blocks[0][0].real) == vals
