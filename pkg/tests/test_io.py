import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from orthotrig import ParamsPQR, DwtParams, build, build_new_dct, gram_report
from orthotrig import io as tio
from orthotrig.types import TransformFamily


def test_format_float_matches_documented_form():
    assert tio.format_float(-1.0) == "-1.00000000000000000"
    assert tio.format_float(0.5) == "0.50000000000000000"


@pytest.mark.parametrize(
    "family, n, params",
    [
        ("gen-dct3", 8, ParamsPQR(1, 1, 1)),
        ("new-sct", 5, None),
        ("dwt-unified", 7, DwtParams("1/4", "1/3", 3)),
        ("dct1", 6, None),
    ],
)
def test_csv_roundtrip_byte_identical(family, n, params):
    text = tio.matrix_to_csv(build(family, n, params))
    assert tio.matrix_to_csv(tio.parse_matrix_csv(text)) == text


@given(st.lists(st.floats(-2, 2, allow_nan=False), min_size=1, max_size=20))
def test_vector_roundtrip_stable(values):
    text = tio.vector_to_csv(values)
    again = tio.vector_to_csv(tio.parse_vector_csv(text))
    assert again == text
    np.testing.assert_allclose(tio.parse_vector_csv(text), values, rtol=0, atol=5e-17 + 1e-16)


def test_parse_rejects_ragged():
    with pytest.raises(tio.FormatError):
        tio.parse_matrix_csv("1,2\n3\n")
    with pytest.raises(tio.FormatError):
        tio.parse_matrix_csv("")
    with pytest.raises(tio.FormatError):
        tio.parse_matrix_csv("1,abc\n")


def test_write_read_with_sidecar(tmp_path):
    m = build("gen-dwt4", 5, ParamsPQR(3, 2, 5))
    path = tmp_path / "m.csv"
    tio.write_matrix(path, m)
    meta = json.loads((tmp_path / "m.json").read_text())
    assert meta == {"family": "gen-dwt4", "n": 5, "params": {"p": 3, "q": 2, "r": 5}}
    back = tio.read_matrix(path)
    assert back.family is TransformFamily.GEN_DWT4 and back.params == ParamsPQR(3, 2, 5)
    np.testing.assert_array_equal(back.entries, m.entries)


def test_report_shape():
    m = build_new_dct(4)
    rep = tio.make_report(m, gram_report(m), None, 1e-10)
    assert list(rep) == [
        "family", "n", "params", "condition_satisfied",
        "max_offdiag", "max_diag_dev", "orthogonal", "tolerance",
    ]
    assert rep["orthogonal"] is True and rep["params"] is None


def test_dwt_params_json_roundtrip():
    p = DwtParams("1/2", "-3/4", 6)
    assert tio.params_from_json(json.loads(json.dumps(tio.params_to_json(p)))) == p
