import json
import math

import numpy as np
import pytest

from wignercert.report import dumps, exit_code, format_float, status_of


def test_dumps_round_trips_exactly():
    obj = {"b": 0.1, "a": [1.0 / 3.0, 2, True, None], "c": {"z": np.float64(math.pi), "m": np.arange(3)}}
    text = dumps(obj)
    back = json.loads(text)
    assert list(back) == ["b", "a", "c"]
    assert back["a"][0] == 1.0 / 3.0
    assert back["c"]["z"] == math.pi
    assert back["c"]["m"] == [0, 1, 2]
    assert dumps(obj) == text


def test_non_finite_floats_are_strings():
    assert format_float(float("nan")) == '"nan"'
    assert format_float(float("inf")) == '"inf"'
    assert format_float(-float("inf")) == '"-inf"'
    assert json.loads(dumps({"x": float("nan")}))["x"] == "nan"


def test_empty_containers():
    assert json.loads(dumps({"a": [], "b": {}})) == {"a": [], "b": {}}


@pytest.mark.parametrize("verdicts,errors,status", [
    (["pass", "pass"], [], "pass"),
    (["pass", "indeterminate"], [], "indeterminate"),
    (["indeterminate", "fail"], [], "fail"),
    (["pass"], ["boom"], "error"),
    ([], [], "pass"),
])
def test_status_precedence(verdicts, errors, status):
    assert status_of(verdicts, errors) == status


def test_exit_codes():
    assert [exit_code(s) for s in ("pass", "fail", "indeterminate", "error")] == [0, 1, 2, 3]
