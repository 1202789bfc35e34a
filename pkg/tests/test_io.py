import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdrazin import GaussianRational, Matrix
from gdrazin.io import (
    MatrixFormatError,
    dumps,
    format_scalar,
    load_matrix,
    matrix_from_obj,
    matrix_to_obj,
    parse_scalar,
    save_matrix,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
scalars = st.builds(GaussianRational, rationals, rationals)


@pytest.mark.parametrize(
    "text,re,im",
    [("0", 0, 0), ("3", 3, 0), ("-1/2", "-1/2", 0), ("0+1i", 0, 1), ("1/2-3/4i", "1/2", "-3/4"), ("-2+5/3i", -2, "5/3")],
)
def test_canonical_round_trip(text, re, im):
    z = parse_scalar(text)
    assert z == GaussianRational(re, im)
    assert format_scalar(z) == text


def test_json_integers_and_nonreduced_input():
    assert parse_scalar(7) == GaussianRational(7)
    assert format_scalar(parse_scalar("4/8")) == "1/2"
    assert format_scalar(parse_scalar("+2-0i")) == "2"


@pytest.mark.parametrize("bad", ["", "i", "1i", "1.5", "1/0", "2+i", "1++2i", "a", "1/2/3", None, 1.0, True, [1]])
def test_invalid_entries(bad):
    with pytest.raises(MatrixFormatError):
        parse_scalar(bad)


@given(scalars)
def test_scalar_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(scalars, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_matrix_round_trip(rows):
    M = Matrix(rows)
    obj = json.loads(dumps(matrix_to_obj(M)))
    assert matrix_from_obj(obj) == M
    assert dumps(matrix_to_obj(matrix_from_obj(obj))) == dumps(matrix_to_obj(M))


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"rows": 2, "cols": 2},
        {"rows": 2, "cols": 2, "data": [["1", "2"]]},
        {"rows": 1, "cols": 2, "data": [["1"]]},
        {"rows": 0, "cols": 0, "data": []},
        {"rows": "1", "cols": 1, "data": [["1"]]},
    ],
)
def test_bad_matrix_objects(obj):
    with pytest.raises(MatrixFormatError):
        matrix_from_obj(obj)


def test_dumps_layout():
    text = dumps(matrix_to_obj(Matrix([[1, "1/2"], [complex(0, 1), 0]])))
    assert text == '{\n  "rows": 2,\n  "cols": 2,\n  "data": [\n    ["1", "1/2"],\n    ["0+1i", "0"]\n  ]\n}\n'


def test_load_and_save(tmp_path, monkeypatch):
    M = Matrix([[1, 2], [3, complex(4, -1)]])
    path = tmp_path / "m.json"
    save_matrix(M, path)
    assert load_matrix(path) == M
    monkeypatch.setenv("DRAZIN_MAX_N", "1")
    with pytest.raises(MatrixFormatError, match="DRAZIN_MAX_N"):
        load_matrix(path)


def test_load_errors(tmp_path):
    with pytest.raises(MatrixFormatError):
        load_matrix(tmp_path / "missing.json")
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(MatrixFormatError):
        load_matrix(p)
    p.write_text(dumps(matrix_to_obj(Matrix.zeros(2, 3))))
    with pytest.raises(MatrixFormatError, match="square"):
        load_matrix(p)
    assert load_matrix(p, square=False).shape == (2, 3)
