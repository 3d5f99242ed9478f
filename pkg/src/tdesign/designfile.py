"""JSON design files.

Coordinates and weights are strings: integers or ``"p/q"`` for exact
rationals, decimal/exponent notation for floats.  Floats are written with
``repr`` so they round-trip bit for bit.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .configspace import FLOAT, RATIONAL, ConfigurationError, WeightedPointSet

DESIGN_SCHEMA = "tdesign.design/1"
_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


class DesignFileError(ValueError):
    """Malformed design file."""


def _is_rational_token(tok) -> bool:
    if isinstance(tok, bool):
        return False
    if isinstance(tok, int):
        return True
    return isinstance(tok, str) and bool(_RATIONAL_RE.match(tok))


def _parse_scalar(tok, backend: str):
    if isinstance(tok, bool) or not isinstance(tok, (str, int, float)):
        raise DesignFileError(f"not a number: {tok!r}")
    try:
        if backend == RATIONAL:
            if isinstance(tok, float):
                return Fraction(tok)
            return Fraction(tok.replace(" ", "") if isinstance(tok, str) else tok)
        if isinstance(tok, str) and "/" in tok:
            return float(Fraction(tok.replace(" ", "")))
        return float(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise DesignFileError(f"not a number: {tok!r}") from exc


def format_scalar(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def design_to_dict(cfg: WeightedPointSet, source: str = "") -> dict:
    meta = {"name": cfg.name}
    if source:
        meta["source"] = source
    return {
        "schema": DESIGN_SCHEMA,
        "dimension": cfg.dimension,
        "backend": cfg.backend,
        "points": [{"coords": [format_scalar(c) for c in p], "weight": format_scalar(w)}
                   for p, w in zip(cfg.coords, cfg.weights)],
        "metadata": meta,
    }


def design_from_dict(data: dict, backend: str = "auto", tol: float | None = None) -> WeightedPointSet:
    if not isinstance(data, dict):
        raise DesignFileError("design must be a JSON object")
    try:
        n = data["dimension"]
        pts = data["points"]
    except KeyError as exc:
        raise DesignFileError(f"missing field {exc.args[0]!r}") from exc
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DesignFileError(f"dimension must be a positive integer, got {n!r}")
    if not isinstance(pts, list) or not pts:
        raise DesignFileError("points must be a non-empty list")
    raw_coords, raw_weights = [], []
    for k, item in enumerate(pts):
        if not isinstance(item, dict) or "coords" not in item or "weight" not in item:
            raise DesignFileError(f"point {k} needs 'coords' and 'weight'")
        coords = item["coords"]
        if not isinstance(coords, list) or len(coords) != n:
            raise DesignFileError(f"point {k} must have {n} coordinates")
        raw_coords.append(coords)
        raw_weights.append(item["weight"])
    if backend == "auto":
        tokens = [t for c in raw_coords for t in c] + raw_weights
        backend = RATIONAL if all(_is_rational_token(t) for t in tokens) else FLOAT
    if backend not in (RATIONAL, FLOAT):
        raise DesignFileError(f"unknown backend {backend!r}")
    coords = tuple(tuple(_parse_scalar(t, backend) for t in c) for c in raw_coords)
    weights = tuple(_parse_scalar(w, backend) for w in raw_weights)
    name = (data.get("metadata") or {}).get("name", "")
    kwargs = {} if tol is None else {"tol": tol}
    try:
        return WeightedPointSet(n, coords, weights, backend, name=name, **kwargs)
    except ConfigurationError as exc:
        raise DesignFileError(str(exc)) from exc


def load_design(path: str | Path, backend: str = "auto", tol: float | None = None) -> WeightedPointSet:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DesignFileError(f"cannot read design {path}: {exc}") from exc
    return design_from_dict(data, backend, tol)


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
