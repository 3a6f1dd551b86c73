"""JSON formats for pencils and solve results.

Rationals are serialized as strings ("p/q" or "p"), never floats;
coefficient arrays are dense with the constant term first.  Output is
byte-reproducible: fixed key order, fixed separators, no timestamps.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import FormatError
from .hankel import LinearHankelPencil, build_pencil
from .solver import RationalParametrization


def rational_to_str(v: Fraction) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def rational_from_str(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational literal {s!r}: {exc}") from exc


def pencil_to_obj(pencil: LinearHankelPencil) -> dict:
    return {
        "m": pencil.m,
        "n": pencil.n,
        "matrices": [[rational_to_str(g) for g in h.gens] for h in pencil.mats],
    }


def pencil_from_obj(obj) -> LinearHankelPencil:
    try:
        m = int(obj["m"])
        n = int(obj["n"])
        rows = obj["matrices"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed pencil object: {exc}") from exc
    if not isinstance(rows, list):
        raise FormatError("matrices must be an array of generator rows")
    parsed = [[rational_from_str(v) for v in row] for row in rows]
    return build_pencil(m, n, parsed)


def dump_pencil(pencil: LinearHankelPencil) -> str:
    return json.dumps(pencil_to_obj(pencil), indent=2, sort_keys=True) + "\n"


def load_pencil(text: str) -> LinearHankelPencil:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"input is not valid JSON: {exc}") from exc
    return pencil_from_obj(obj)


def _coeffs_to_list(coeffs) -> list:
    return [rational_to_str(c) for c in coeffs]


def _coeffs_from_list(values) -> list:
    return [rational_from_str(v) for v in values]


def param_to_obj(p: RationalParametrization) -> dict:
    return {
        "q": _coeffs_to_list(p.q),
        "q0": _coeffs_to_list(p.q0),
        "coords": [_coeffs_to_list(c) for c in p.coords],
        "varNames": list(p.var_names),
        "separatingForm": _coeffs_to_list(p.separating),
    }


def param_from_obj(obj) -> RationalParametrization:
    try:
        return RationalParametrization(
            "t",
            _coeffs_from_list(obj["q"]),
            _coeffs_from_list(obj["q0"]),
            [_coeffs_from_list(c) for c in obj["coords"]],
            list(obj.get("varNames", [])),
            _coeffs_from_list(obj.get("separatingForm", [])),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed parametrization object: {exc}") from exc


def _trace_to_obj(trace) -> dict:
    return {
        "levels": [
            {
                "depth": lvl.depth,
                "n": lvl.n,
                "seed": lvl.seed,
                "branch": lvl.branch,
                "redraws": lvl.redraws,
                "rotatedStep4": lvl.rotated_step4,
                "alpha": lvl.draw_alpha,
                "perP": [list(t) for t in lvl.per_p],
                "degrees": list(lvl.degrees),
                "notes": list(lvl.notes),
            }
            for lvl in trace.levels
        ]
    }


def result_to_obj(result, bound: int, seed: int) -> dict:
    return {
        "params": [param_to_obj(p) for p in result.params],
        "boxes": [
            {
                "point": [
                    [rational_to_str(lo), rational_to_str(hi)]
                    for lo, hi in box.intervals
                ]
            }
            for box in result.boxes
        ],
        "trace": _trace_to_obj(result.trace),
        "totalDegree": result.total_degree,
        "bound": bound,
        "seed": seed,
    }


def dump_result(result, bound: int, seed: int) -> str:
    return json.dumps(result_to_obj(result, bound, seed), indent=2, sort_keys=True) + "\n"


def load_result(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"result file is not valid JSON: {exc}") from exc
    if "params" not in obj:
        raise FormatError("result file has no params array")
    obj["params_parsed"] = [param_from_obj(p) for p in obj["params"]]
    return obj
