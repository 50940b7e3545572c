"""Point-set CSV, scheme JSON and report serialisation.

Point files::

    # d=3, repr=polar
    polar,0.0,1.2
    polar,3.1,0.4

or ``repr=cart`` with rows ``cart,x_1,...,x_d``. Scheme files are JSON
objects with keys d, k_max, rule, j, exclude, custom, degrees, weights.
"""
from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .harmonics import PolarPoint, from_cartesian
from .kernels import CoefficientScheme, Rule
from .special_fn import DomainError

SCHEMA = "spherekern/1"

_HEADER = re.compile(r"#\s*d\s*=\s*(\d+)\s*,\s*repr\s*=\s*(polar|cart)\s*$")


class FileFormatError(ValueError):
    """Malformed input file; the message names the line or field."""


def parse_point(text: str, d: int | None = None) -> PolarPoint:
    """Parse ``polar:t1,...`` / ``cart:x1,...`` (or the comma-led CSV form)."""
    kind, _, rest = text.replace(":", ",", 1).partition(",")
    kind = kind.strip()
    try:
        values = [float(v) for v in rest.split(",") if v.strip()]
    except ValueError as exc:
        raise FileFormatError(f"non-numeric coordinate in {text!r}") from exc
    if kind == "polar":
        if d is not None and len(values) != d - 1:
            raise FileFormatError(f"expected {d - 1} angles, got {len(values)}")
        return PolarPoint(tuple(values))
    if kind == "cart":
        if d is not None and len(values) != d:
            raise FileFormatError(f"expected {d} coordinates, got {len(values)}")
        return from_cartesian(np.array(values))
    raise FileFormatError(f"unknown point representation {kind!r} (use polar or cart)")


def read_points(path) -> tuple[int, list[PolarPoint]]:
    """Read a point-set CSV; returns (d, points)."""
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise FileFormatError(f"cannot read points file {path}: {exc.strerror}") from exc
    if not lines:
        raise FileFormatError(f"{path}: empty file")
    m = _HEADER.match(lines[0].strip())
    if not m:
        raise FileFormatError(f"{path}:1: header must read '# d=<int>, repr=<polar|cart>'")
    d, kind = int(m.group(1)), m.group(2)
    points = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if not line.startswith(kind + ","):
            raise FileFormatError(f"{path}:{lineno}: row must start with '{kind},'")
        try:
            points.append(parse_point(line, d))
        except (FileFormatError, DomainError) as exc:
            raise FileFormatError(f"{path}:{lineno}: {exc}") from exc
    return d, points


def write_points(path, points, repr: str = "polar") -> None:
    points = list(points)
    d = points[0].d
    rows = [f"# d={d}, repr={repr}"]
    for p in points:
        vals = p.theta if repr == "polar" else p.cartesian()
        rows.append(",".join([repr] + [repr_float(v) for v in vals]))
    Path(path).write_text("\n".join(rows) + "\n")


def repr_float(v) -> str:
    return repr(float(v))


def _index_key(a) -> str:
    return ",".join(str(int(x)) for x in a)


def _parse_weights(w):
    if w is None or w == "unit":
        return "unit"
    if isinstance(w, str) and w.startswith("geometric:"):
        try:
            return ("geometric", float(w.split(":", 1)[1]))
        except ValueError as exc:
            raise FileFormatError(f"field 'weights': bad geometric ratio in {w!r}") from exc
    if isinstance(w, dict):
        try:
            return {tuple(int(x) for x in k.split(",")): float(v) for k, v in w.items()}
        except ValueError as exc:
            raise FileFormatError("field 'weights': keys must look like '0,1,2'") from exc
    raise FileFormatError(f"field 'weights': unrecognised value {w!r}")


def _degree_map(entries, name):
    out = {}
    try:
        for k, idx in entries:
            out.setdefault(int(k), []).extend(tuple(int(x) for x in a) for a in idx)
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"field '{name}': expected [[k, [[indices...], ...]], ...]") from exc
    return out


def scheme_from_dict(data: dict) -> CoefficientScheme:
    for key in ("d", "k_max"):
        if key not in data:
            raise FileFormatError(f"missing field '{key}'")
        if not isinstance(data[key], int):
            raise FileFormatError(f"field '{key}' must be an integer")
    rule = data.get("rule", "full")
    try:
        rule = Rule(rule)
    except ValueError as exc:
        raise FileFormatError(f"field 'rule': unknown rule {rule!r}") from exc
    kwargs = dict(d=data["d"], k_max=data["k_max"], rule=rule, j=data.get("j"),
                  exclude=_degree_map(data.get("exclude", []), "exclude"),
                  weights=_parse_weights(data.get("weights", "unit")))
    if "custom" in data:
        kwargs["custom"] = _degree_map(data["custom"], "custom")
    if data.get("degrees") is not None:
        kwargs["degrees"] = data["degrees"]
    try:
        return CoefficientScheme(**kwargs)
    except DomainError as exc:
        raise FileFormatError(f"invalid scheme: {exc}") from exc


def scheme_to_dict(s: CoefficientScheme) -> dict:
    out = {"d": s.d, "k_max": s.k_max, "rule": s.rule.value}
    if s.j is not None:
        out["j"] = s.j
    if s.exclude:
        out["exclude"] = [[k, [list(a) for a in sorted(v)]] for k, v in sorted(s.exclude.items())]
    if s.custom is not None:
        out["custom"] = [[k, [list(a) for a in sorted(v)]] for k, v in sorted(s.custom.items())]
    if s.degrees is not None:
        out["degrees"] = sorted(s.degrees)
    w = s.weights
    if w == "unit":
        out["weights"] = "unit"
    elif isinstance(w, tuple):
        out["weights"] = f"geometric:{w[1]!r}"
    elif isinstance(w, dict):
        out["weights"] = {_index_key(a): v for a, v in sorted(w.items())}
    else:
        raise DomainError("callable weights cannot be serialised")
    return out


def load_scheme(path) -> CoefficientScheme:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise FileFormatError(f"cannot read scheme file {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}:{exc.lineno}: invalid JSON ({exc.msg})") from exc
    if not isinstance(data, dict):
        raise FileFormatError(f"{path}: top level must be a JSON object")
    return scheme_from_dict(data)


def save_scheme(path, s: CoefficientScheme) -> None:
    Path(path).write_text(json.dumps(scheme_to_dict(s), indent=2, sort_keys=True) + "\n")


def _default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if hasattr(obj, "value"):
        return obj.value
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps_report(payload: dict) -> str:
    """Deterministic JSON with the schema tag on top."""
    return json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True,
                      default=_default, allow_nan=True) + "\n"
