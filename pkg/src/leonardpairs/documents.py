"""JSON interchange documents with string-encoded scalars."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import FieldError, LeonardError, LengthMismatch, DimensionMismatch
from .exactfield import parse_field
from .matrixcore import ExactMatrix, MatrixPair
from .params import ParameterArray, TddSequence
from .primary import TypeI, TypeII, TypeIIIPlus

KINDS = ("parameter_array", "tdd", "matrix_pair", "primary_data")

_PD_KEYS = {
    "I": ("q", "delta", "mu", "h", "delta_star", "mu_star", "h_star", "tau"),
    "II": ("delta", "mu", "h", "delta_star", "mu_star", "h_star", "tau"),
    "III+": ("delta", "s", "h", "delta_star", "s_star", "h_star", "tau"),
}
_PD_CLASS = {"I": TypeI, "II": TypeII, "III+": TypeIIIPlus}


class DocumentError(ValueError):
    """Malformed input document."""


@dataclass(frozen=True)
class Document:
    field: object
    d: int
    kind: str
    value: object  # ParameterArray, TddSequence, MatrixPair or primary data


def _scalars(F, seq, n, name):
    if not isinstance(seq, list) or len(seq) != n:
        raise DocumentError(f"{name} must be a list of {n} scalars")
    return [_scalar(F, v, name) for v in seq]


def _scalar(F, v, name):
    if not isinstance(v, str):
        raise DocumentError(f"{name}: scalars must be strings, got {v!r}")
    return F.parse(v)


def _matrix(F, rows, n, name):
    if not isinstance(rows, list) or len(rows) != n:
        raise DocumentError(f"{name} must have {n} rows")
    return ExactMatrix(F, [_scalars(F, r, n, name) for r in rows])


def from_obj(obj):
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    try:
        F = parse_field(obj["field"])
        d = obj["d"]
        kind = obj["kind"]
        pl = obj["payload"]
    except KeyError as exc:
        raise DocumentError(f"missing key {exc}") from None
    except (FieldError, AttributeError) as exc:
        raise DocumentError(f"bad field: {exc}") from None
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise DocumentError("d must be a positive integer")
    if kind not in KINDS or not isinstance(pl, dict):
        raise DocumentError(f"kind must be one of {KINDS} with an object payload")
    try:
        if kind == "parameter_array":
            v = ParameterArray(F, _scalars(F, pl["theta"], d + 1, "theta"),
                               _scalars(F, pl["thetastar"], d + 1, "thetastar"),
                               _scalars(F, pl["phi1"], d, "phi1"),
                               _scalars(F, pl["phi2"], d, "phi2"))
        elif kind == "tdd":
            v = TddSequence(F, _scalars(F, pl["a"], d + 1, "a"), _scalars(F, pl["x"], d, "x"),
                            _scalars(F, pl["thetastar"], d + 1, "thetastar"))
        elif kind == "matrix_pair":
            v = MatrixPair(_matrix(F, pl["A"], d + 1, "A"), _matrix(F, pl["Astar"], d + 1, "Astar"))
        else:
            tag = pl.get("type")
            if tag not in _PD_KEYS:
                raise DocumentError("primary_data type must be I, II or III+")
            v = _PD_CLASS[tag](F, *(_scalar(F, pl[k], k) for k in _PD_KEYS[tag]))
    except KeyError as exc:
        raise DocumentError(f"missing payload key {exc}") from None
    except (FieldError, LengthMismatch, DimensionMismatch, ZeroDivisionError) as exc:
        raise DocumentError(str(exc)) from None
    except ValueError as exc:  # TddSequence invariants
        if isinstance(exc, LeonardError):
            raise
        raise DocumentError(str(exc)) from None
    return Document(F, d, kind, v)


def parse(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return from_obj(obj)


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as exc:
        raise DocumentError(str(exc)) from None


def _s(seq):
    return [str(x.value) for x in seq]


def to_obj(value, d=None):
    """Build the JSON object for a ParameterArray, TddSequence, MatrixPair or primary data."""
    if isinstance(value, ParameterArray):
        kind, d = "parameter_array", value.d
        pl = {"theta": _s(value.theta), "thetastar": _s(value.thetastar),
              "phi1": _s(value.phi1), "phi2": _s(value.phi2)}
    elif isinstance(value, TddSequence):
        kind, d = "tdd", value.d
        pl = {"a": _s(value.a), "x": _s(value.x), "thetastar": _s(value.thetastar)}
    elif isinstance(value, MatrixPair):
        kind, d = "matrix_pair", value.d
        pl = {"A": [[str(v) for v in r] for r in value.A.rows],
              "Astar": [[str(v) for v in r] for r in value.Astar.rows]}
    elif getattr(value, "tag", None) in _PD_KEYS:
        if d is None:
            raise ValueError("primary data documents need d")
        kind = "primary_data"
        pl = {"type": value.tag}
        pl.update({k: str(getattr(value, k).value) for k in _PD_KEYS[value.tag]})
    else:
        raise TypeError(f"cannot serialise {type(value).__name__}")
    return {"field": str(value.field), "d": d, "kind": kind, "payload": pl}


def render(value, d=None):
    return json.dumps(to_obj(value, d), separators=(",", ":"))
