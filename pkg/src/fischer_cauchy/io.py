"""JSON encoding of problems, divisors and reports.

Input polynomials are arrays of ``{"exps": [...], "coeff": {"re": [num, den],
"im": [num, den]}}``; series are arrays of ``{"degree": d, "polynomial": ...}``.
Reports render exact rationals as ``"num/den"`` strings and are written with
sorted keys so identical inputs give identical bytes.
"""
from __future__ import annotations

import hashlib
import json
import math
from fractions import Fraction

import jsonschema

from . import __version__
from .numerics import GaussianRational
from .polynomials import GradedSeries, HomPoly, LinearChange
from .solver import OperatorSpec, Problem

TOOL_NAME = "fischer-cauchy"

_RATIONAL = {
    "type": "array",
    "items": {"type": "integer"},
    "minItems": 2,
    "maxItems": 2,
}
_COEFF = {
    "type": "object",
    "properties": {"re": _RATIONAL, "im": _RATIONAL},
    "required": ["re"],
    "additionalProperties": False,
}
_POLY = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "exps": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            "coeff": _COEFF,
        },
        "required": ["exps", "coeff"],
        "additionalProperties": False,
    },
}
_SERIES = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {"degree": {"type": "integer", "minimum": 0}, "polynomial": _POLY},
        "required": ["degree", "polynomial"],
        "additionalProperties": False,
    },
}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _COEFF}}

PROBLEM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "principal": {
            "oneOf": [
                {
                    "type": "object",
                    "properties": {"laplacian_power": {"type": "integer", "minimum": 1}},
                    "required": ["laplacian_power"],
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "properties": {"symbol": _POLY},
                    "required": ["symbol"],
                    "additionalProperties": False,
                },
            ]
        },
        "lower_order": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "alpha": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "series": _SERIES,
                },
                "required": ["alpha", "series"],
                "additionalProperties": False,
            },
        },
        "divisor": _POLY,
        "rhs": _SERIES,
        "max_degree": {"type": "integer", "minimum": 0},
    },
    "required": ["n", "principal", "divisor", "rhs", "max_degree"],
    "additionalProperties": False,
}

ELLIPTICITY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "divisor": _POLY,
        "B": _MATRIX,
        "A": _MATRIX,
        "resolution": {"type": "integer", "minimum": 8},
        "imaginary_axes": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "required": ["n", "divisor"],
    "additionalProperties": False,
}

DIVISOR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "divisor": _POLY,
        "p": {"type": "integer", "minimum": 1},
    },
    "required": ["n", "divisor"],
    "additionalProperties": False,
}


class InputError(ValueError):
    """Malformed input document; the message names the failing key."""


def validate(doc, schema) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        where = "/".join(str(p) for p in err.absolute_path) or "<root>"
        raise InputError(f"invalid input at '{where}': {err.message}")


# decoding -------------------------------------------------------------------


def _rational(pair, where) -> Fraction:
    num, den = pair
    if den == 0:
        raise InputError(f"zero denominator at '{where}'")
    return Fraction(num, den)


def decode_coeff(obj, where="coeff") -> GaussianRational:
    re = _rational(obj["re"], f"{where}/re")
    im = _rational(obj["im"], f"{where}/im") if "im" in obj else Fraction(0)
    return GaussianRational(re, im)


def decode_poly(items, n: int, where: str = "polynomial", degree: int | None = None) -> HomPoly:
    terms: dict = {}
    degs = set()
    for idx, item in enumerate(items):
        exps = tuple(item["exps"])
        if len(exps) != n:
            raise InputError(f"'{where}/{idx}/exps' has length {len(exps)}, expected n={n}")
        degs.add(sum(exps))
        c = decode_coeff(item["coeff"], f"{where}/{idx}/coeff")
        terms[exps] = terms.get(exps, GaussianRational(0)) + c
    if len(degs) > 1:
        raise InputError(f"'{where}' is not homogeneous (degrees {sorted(degs)})")
    deg = degs.pop() if degs else (degree or 0)
    if degree is not None and terms and deg != degree:
        raise InputError(f"'{where}' has degree {deg}, expected {degree}")
    return HomPoly(n, deg, terms)


def decode_series(items, n: int, cutoff: int, where: str = "series") -> GradedSeries:
    parts: dict = {}
    for idx, item in enumerate(items):
        d = item["degree"]
        if d > cutoff:
            raise InputError(f"'{where}/{idx}/degree' = {d} exceeds max_degree {cutoff}")
        p = decode_poly(item["polynomial"], n, f"{where}/{idx}/polynomial", degree=d)
        if d in parts:
            p = parts[d] + p
        parts[d] = p
    return GradedSeries(n, cutoff, parts)


def decode_problem(doc, max_degree: int | None = None) -> Problem:
    """Build a :class:`Problem`.  Series are taken as exact through ``max_degree``
    (degrees not listed are zero)."""
    validate(doc, PROBLEM_SCHEMA)
    n = doc["n"]
    N = doc["max_degree"] if max_degree is None else max_degree
    principal_doc = doc["principal"]
    try:
        if "laplacian_power" in principal_doc:
            lower = _decode_lower(doc, n, N)
            op = OperatorSpec.laplacian_power(n, principal_doc["laplacian_power"], lower)
        else:
            op = OperatorSpec(n, decode_poly(principal_doc["symbol"], n, "principal/symbol"), _decode_lower(doc, n, N))
        divisor = decode_poly(doc["divisor"], n, "divisor")
        rhs = decode_series(doc["rhs"], n, max(N, _max_listed(doc["rhs"])), "rhs")
        return Problem(op, divisor, rhs, N)
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _max_listed(series_doc) -> int:
    return max((item["degree"] for item in series_doc), default=0)


def _decode_lower(doc, n, N):
    out = []
    for idx, item in enumerate(doc.get("lower_order", [])):
        alpha = tuple(item["alpha"])
        if len(alpha) != n:
            raise InputError(f"'lower_order/{idx}/alpha' has length {len(alpha)}, expected n={n}")
        cutoff = max(N, _max_listed(item["series"]))
        out.append((alpha, decode_series(item["series"], n, cutoff, f"lower_order/{idx}/series")))
    return out


def decode_matrix(rows, n: int, where: str):
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InputError(f"'{where}' must be {n} x {n}")
    return [[decode_coeff(c, f"{where}/{i}/{j}") for j, c in enumerate(row)] for i, row in enumerate(rows)]


# encoding -------------------------------------------------------------------


def encode_coeff(c: GaussianRational) -> dict:
    return {"re": [c.re.numerator, c.re.denominator], "im": [c.im.numerator, c.im.denominator]}


def encode_poly(f: HomPoly) -> list:
    return [{"exps": list(a), "coeff": encode_coeff(c)} for a, c in f.sorted_terms()]


def encode_series(s: GradedSeries) -> list:
    return [{"degree": m, "polynomial": encode_poly(s.parts[m])} for m in s.degrees()]


def encode_matrix(M) -> list:
    return [[encode_coeff(GaussianRational(v) if not isinstance(v, GaussianRational) else v) for v in row] for row in M]


def encode_problem(problem: Problem) -> dict:
    op = problem.operator
    doc = {
        "n": problem.n,
        "principal": {"symbol": encode_poly(op.principal)},
        "divisor": encode_poly(problem.divisor),
        "rhs": encode_series(problem.rhs),
        "max_degree": problem.max_degree,
    }
    if op.lower_order:
        doc["lower_order"] = [{"alpha": list(a), "series": encode_series(s)} for a, s in op.lower_order]
    return doc


def rational_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def report_coeff(c: GaussianRational) -> dict:
    return {"re": rational_str(c.re), "im": rational_str(c.im)}


def report_poly(f: HomPoly) -> list:
    return [{"exps": list(a), "coeff": report_coeff(c)} for a, c in f.sorted_terms()]


def report_series(s: GradedSeries) -> list:
    return [{"degree": m, "polynomial": report_poly(s.parts[m])} for m in s.degrees()]


def report_float(x):
    if x is None or (isinstance(x, float) and not math.isfinite(x)):
        return None
    return float(x)


def digest(doc) -> str:
    canon = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canon.encode()).hexdigest()


def envelope(command: str, input_doc) -> dict:
    return {"tool": TOOL_NAME, "version": __version__, "command": command, "input_digest": digest(input_doc)}


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n"
