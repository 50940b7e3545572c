import json
import math

import numpy as np
import pytest

from spherekern.fileio import (
    SCHEMA,
    FileFormatError,
    dumps_report,
    load_scheme,
    parse_point,
    read_points,
    save_scheme,
    scheme_from_dict,
    scheme_to_dict,
    write_points,
)
from spherekern.harmonics import random_points, to_cartesian
from spherekern.kernels import CoefficientScheme, Rule


def test_parse_point_forms():
    p = parse_point("polar:0.5,1.0")
    assert p.theta == (0.5, 1.0)
    q = parse_point("cart:0,0,1")
    np.testing.assert_allclose(to_cartesian(q), [0, 0, 1], atol=1e-15)
    with pytest.raises(FileFormatError):
        parse_point("sph:1,2")
    with pytest.raises(FileFormatError):
        parse_point("polar:1,x")
    with pytest.raises(FileFormatError):
        parse_point("polar:1,2,3", d=3)


@pytest.mark.parametrize("kind", ["polar", "cart"])
def test_points_round_trip(tmp_path, kind):
    pts = random_points(4, 6, seed=3)
    path = tmp_path / "pts.csv"
    write_points(path, pts, kind)
    d, back = read_points(path)
    assert d == 4
    for a, b in zip(pts, back):
        np.testing.assert_allclose(to_cartesian(a), to_cartesian(b), atol=1e-12)


@pytest.mark.parametrize("body,where", [
    ("", "empty"),
    ("d=3\npolar,0,1\n", ":1:"),
    ("# d=3, repr=polar\npolar,0,1\ncart,1,0,0\n", ":3:"),
    ("# d=3, repr=polar\npolar,0,1,2\n", ":2:"),
    ("# d=3, repr=polar\npolar,0,4.0\n", ":2:"),
    ("# d=3, repr=cart\ncart,1,1,0\n", ":2:"),
])
def test_points_errors_name_line(tmp_path, body, where):
    path = tmp_path / "bad.csv"
    path.write_text(body)
    with pytest.raises(FileFormatError, match=where):
        read_points(path)


def test_missing_points_file(tmp_path):
    with pytest.raises(FileFormatError, match="cannot read"):
        read_points(tmp_path / "nope.csv")


SCHEMES = [
    CoefficientScheme(4, 6),
    CoefficientScheme(4, 6, rule=Rule.JZERO, j=2, exclude={3: [(0, 0, 3)]}),
    CoefficientScheme(3, 8, rule=Rule.EVEN, weights=("geometric", 0.5)),
    CoefficientScheme(3, 3, rule=Rule.CUSTOM, custom={1: [(0, 1)], 2: [(-1, 2)]},
                      weights={(0, 1): 2.0}),
    CoefficientScheme(5, 4, degrees=[0, 2, 3]),
]


@pytest.mark.parametrize("s", SCHEMES)
def test_scheme_round_trip(tmp_path, s):
    path = tmp_path / "s.json"
    save_scheme(path, s)
    back = load_scheme(path)
    assert scheme_to_dict(back) == scheme_to_dict(s)
    assert back.active_set() == s.active_set()
    for a in s.active_set():
        assert back.weight(a) == s.weight(a)


@pytest.mark.parametrize("data,field", [
    ({"k_max": 3}, "'d'"),
    ({"d": 3, "k_max": "x"}, "'k_max'"),
    ({"d": 3, "k_max": 3, "rule": "bogus"}, "'rule'"),
    ({"d": 3, "k_max": 3, "weights": "geometric:abc"}, "'weights'"),
    ({"d": 3, "k_max": 3, "exclude": [[1]]}, "'exclude'"),
    ({"d": 3, "k_max": 3, "rule": "jzero"}, "invalid scheme"),
])
def test_scheme_errors_name_field(data, field):
    with pytest.raises(FileFormatError, match=field):
        scheme_from_dict(data)


def test_scheme_bad_json(tmp_path):
    path = tmp_path / "s.json"
    path.write_text("{\n  \"d\": 3,\n")
    with pytest.raises(FileFormatError, match="invalid JSON"):
        load_scheme(path)
    with pytest.raises(FileFormatError, match="cannot read"):
        load_scheme(tmp_path / "missing.json")


def test_report_schema_and_determinism():
    payload = {"b": np.float64(1.5), "a": np.arange(3), "c": math.inf}
    text = dumps_report(payload)
    assert text == dumps_report(payload)
    data = json.loads(text)
    assert data["schema"] == SCHEMA and data["a"] == [0, 1, 2]
