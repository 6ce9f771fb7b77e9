"""JSON matroid descriptions.

A description is an object with a ``type`` key and per-type parameters::

    {"type": "uniform", "r": 2, "n": 4}
    {"type": "gf2", "rows": ["1100", "0110"]}
    {"type": "graphic", "edges": [[0, 1], [1, 2], [2, 0]]}
    {"type": "transversal", "n": 4, "sets": [[0, 1], [1, 2, 3]]}
    {"type": "lpm", "upper": "NNEE", "lower": "EENN"}
    {"type": "wheel" | "whirl" | "necklace", "n": 5}
    {"type": "r10"}
    {"type": "dual", "of": {...}}
    {"type": "sum", "parts": [{...}, {...}]}
    {"type": "minor", "of": {...}, "contract": [0], "delete": [3]}
    {"type": "series_ext" | "parallel_ext", "of": {...}, "element": 0}
    {"type": "explicit", "n": 3, "bases": [[0, 1], [0, 2]]}

Element indices are 0-based positions.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .masks import mask_of
from .matroid import (
    ExplicitBases,
    Graphic,
    LinearGF2,
    Matroid,
    MatroidError,
    Transversal,
    Uniform,
    direct_sum,
    dual,
    minor,
    parallel_extend,
    series_extend,
)


class DescriptionError(ValueError):
    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location


def _get(d: dict, key: str, where: str, kind: type | tuple = object) -> Any:
    if key not in d:
        raise DescriptionError(f"missing key {key!r}", where)
    val = d[key]
    if kind is int and isinstance(val, bool) or not isinstance(val, kind):
        raise DescriptionError(f"{key!r} has the wrong type", f"{where}.{key}")
    return val


def _int_list(val: Any, where: str) -> list[int]:
    if not isinstance(val, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in val):
        raise DescriptionError("expected a list of integers", where)
    return val


def _bitrow(s: Any, where: str) -> int:
    if not isinstance(s, str) or set(s) - {"0", "1"}:
        raise DescriptionError("rows must be strings over {0,1}", where)
    return sum(1 << j for j, ch in enumerate(s) if ch == "1")


def _build(d: Any, where: str) -> Matroid:
    try:
        return _construct(d, where)
    except DescriptionError:
        raise
    except (MatroidError, ValueError) as exc:
        raise DescriptionError(str(exc), where) from None


def _construct(d: Any, where: str) -> Matroid:
    from . import lpm, r10, wheels

    if not isinstance(d, dict):
        raise DescriptionError("expected an object", where)
    kind = _get(d, "type", where, str)
    if kind == "uniform":
        return Uniform(_get(d, "r", where, int), _get(d, "n", where, int))
    if kind == "gf2":
        rows = _get(d, "rows", where, list)
        if not rows:
            raise DescriptionError("need at least one row", f"{where}.rows")
        width = {len(r) if isinstance(r, str) else -1 for r in rows}
        if len(width) != 1:
            raise DescriptionError("rows must have equal length", f"{where}.rows")
        return LinearGF2([_bitrow(r, f"{where}.rows[{i}]") for i, r in enumerate(rows)], width.pop())
    if kind == "graphic":
        edges = _get(d, "edges", where, list)
        for i, e in enumerate(edges):
            _int_list(e, f"{where}.edges[{i}]")
            if len(e) != 2:
                raise DescriptionError("an edge is a pair of vertex ids", f"{where}.edges[{i}]")
        return Graphic([tuple(e) for e in edges])
    if kind == "transversal":
        n = _get(d, "n", where, int)
        sets = _get(d, "sets", where, list)
        return Transversal(n, [mask_of(_int_list(s, f"{where}.sets[{i}]")) for i, s in enumerate(sets)])
    if kind == "lpm":
        pair = lpm.LatticePathPair.from_paths(_get(d, "upper", where, str), _get(d, "lower", where, str))
        return lpm.lpm_matroid(pair)
    if kind in ("wheel", "whirl"):
        return wheels.wheel_or_whirl(kind, _get(d, "n", where, int))
    if kind == "necklace":
        return wheels.necklace(_get(d, "n", where, int))
    if kind == "r10":
        return r10.r10_matroid()
    if kind == "dual":
        return dual(_build(_get(d, "of", where, dict), f"{where}.of"))
    if kind == "sum":
        parts = _get(d, "parts", where, list)
        if not parts:
            raise DescriptionError("need at least one part", f"{where}.parts")
        return direct_sum(*[_build(p, f"{where}.parts[{i}]") for i, p in enumerate(parts)])
    if kind == "minor":
        inner = _build(_get(d, "of", where, dict), f"{where}.of")
        contract = mask_of(_int_list(d.get("contract", []), f"{where}.contract"))
        delete = mask_of(_int_list(d.get("delete", []), f"{where}.delete"))
        return minor(inner, contract, delete)
    if kind in ("series_ext", "parallel_ext"):
        inner = _build(_get(d, "of", where, dict), f"{where}.of")
        e = _get(d, "element", where, int)
        return (series_extend if kind == "series_ext" else parallel_extend)(inner, e)
    if kind == "explicit":
        n = _get(d, "n", where, int)
        bases = _get(d, "bases", where, list)
        return ExplicitBases(n, [mask_of(_int_list(b, f"{where}.bases[{i}]")) for i, b in enumerate(bases)])
    raise DescriptionError(f"unknown matroid type {kind!r}", f"{where}.type")


def load_description(desc: dict | str) -> dict:
    """The description object behind a JSON string or file path."""
    if isinstance(desc, str):
        text = desc
        if not desc.lstrip().startswith("{"):
            try:
                text = Path(desc).read_text()
            except OSError as exc:
                raise DescriptionError(f"cannot read {desc!r}: {exc.strerror}") from None
        try:
            desc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DescriptionError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(desc, dict):
        raise DescriptionError("expected an object")
    return desc


def parse_matroid(desc: dict | str) -> Matroid:
    """Build a matroid from a description object, a JSON string or a file path."""
    return _build(load_description(desc), "$")
